#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wasmtaint {

/// Failure classes raised while parsing a wasm binary.
enum class DecodeErrorKind {
    Malformed,           // truncated input, bad varint, structural violation
    BadMagic,            // first four bytes are not \0asm
    UnsupportedVersion,  // version field != 1
    Unsupported,         // recognized but deliberately unimplemented (import section)
    UnknownOpcode,       // byte outside the supported opcode set
};

std::string_view decode_error_kind_name(DecodeErrorKind kind);

class DecodeError : public std::runtime_error {
  public:
    static constexpr size_t no_offset = static_cast<size_t>(-1);

    DecodeError(DecodeErrorKind kind, const std::string& message,
                size_t offset = no_offset);

    DecodeErrorKind kind() const { return kind_; }
    /// Byte offset in the input the error was detected at, if known.
    size_t offset() const { return offset_; }

  private:
    DecodeErrorKind kind_;
    size_t offset_;
};

/// Abortive termination causes during execution or instantiation.
enum class TrapReason {
    Unreachable,
    StackUnderflow,
    TypeMismatch,
    OutOfBoundsMemoryAccess,
    DivisionByZero,
    IntegerOverflow,
    CallStackExhausted,
    UndefinedTableElement,
    NullTableElement,
    IndirectCallTypeMismatch,
    UnsupportedFloatOp,
    ImmutableGlobal,
    OutOfBoundsDataSegment,
    OutOfBoundsElementSegment,
};

std::string_view trap_reason_name(TrapReason reason);
std::optional<TrapReason> parse_trap_reason(std::string_view name);

class TrapError : public std::runtime_error {
  public:
    TrapError(TrapReason reason, const std::string& message);
    explicit TrapError(TrapReason reason);

    TrapReason reason() const { return reason_; }

  private:
    TrapReason reason_;
};

/// Errors raised when setting up an invocation, before any instruction runs.
enum class InvokeErrorKind {
    ExportNotFound,
    ArityMismatch,
    TypeMismatch,
};

std::string_view invoke_error_kind_name(InvokeErrorKind kind);

class InvokeError : public std::runtime_error {
  public:
    InvokeError(InvokeErrorKind kind, const std::string& message);

    InvokeErrorKind kind() const { return kind_; }

  private:
    InvokeErrorKind kind_;
};

}  // namespace wasmtaint
