#include "wasmtaint/errors.hpp"

#include <array>

namespace wasmtaint {

std::string_view decode_error_kind_name(DecodeErrorKind kind) {
    switch (kind) {
    case DecodeErrorKind::Malformed: return "malformed";
    case DecodeErrorKind::BadMagic: return "bad_magic";
    case DecodeErrorKind::UnsupportedVersion: return "unsupported_version";
    case DecodeErrorKind::Unsupported: return "unsupported";
    case DecodeErrorKind::UnknownOpcode: return "unknown_opcode";
    }
    return "unknown";
}

namespace {
std::string with_offset(const std::string& message, size_t offset) {
    if (offset == DecodeError::no_offset) {
        return message;
    }
    return message + " (at byte " + std::to_string(offset) + ")";
}
}  // namespace

DecodeError::DecodeError(DecodeErrorKind kind, const std::string& message,
                         size_t offset)
    : std::runtime_error(with_offset(message, offset)),
      kind_(kind),
      offset_(offset) {}

namespace {
struct TrapName {
    TrapReason reason;
    std::string_view name;
};

constexpr std::array<TrapName, 14> kTrapNames = {{
    {TrapReason::Unreachable, "unreachable"},
    {TrapReason::StackUnderflow, "stack_underflow"},
    {TrapReason::TypeMismatch, "type_mismatch"},
    {TrapReason::OutOfBoundsMemoryAccess, "out_of_bounds_memory_access"},
    {TrapReason::DivisionByZero, "division_by_zero"},
    {TrapReason::IntegerOverflow, "integer_overflow"},
    {TrapReason::CallStackExhausted, "call_stack_exhausted"},
    {TrapReason::UndefinedTableElement, "undefined_table_element"},
    {TrapReason::NullTableElement, "null_table_element"},
    {TrapReason::IndirectCallTypeMismatch, "indirect_call_type_mismatch"},
    {TrapReason::UnsupportedFloatOp, "unsupported_float_op"},
    {TrapReason::ImmutableGlobal, "immutable_global"},
    {TrapReason::OutOfBoundsDataSegment, "out_of_bounds_data_segment"},
    {TrapReason::OutOfBoundsElementSegment, "out_of_bounds_element_segment"},
}};
}  // namespace

std::string_view trap_reason_name(TrapReason reason) {
    for (const auto& entry : kTrapNames) {
        if (entry.reason == reason) {
            return entry.name;
        }
    }
    return "unknown";
}

std::optional<TrapReason> parse_trap_reason(std::string_view name) {
    for (const auto& entry : kTrapNames) {
        if (entry.name == name) {
            return entry.reason;
        }
    }
    return std::nullopt;
}

TrapError::TrapError(TrapReason reason, const std::string& message)
    : std::runtime_error(message), reason_(reason) {}

TrapError::TrapError(TrapReason reason)
    : std::runtime_error(std::string(trap_reason_name(reason))),
      reason_(reason) {}

std::string_view invoke_error_kind_name(InvokeErrorKind kind) {
    switch (kind) {
    case InvokeErrorKind::ExportNotFound: return "export_not_found";
    case InvokeErrorKind::ArityMismatch: return "arity_mismatch";
    case InvokeErrorKind::TypeMismatch: return "type_mismatch";
    }
    return "unknown";
}

InvokeError::InvokeError(InvokeErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

}  // namespace wasmtaint
