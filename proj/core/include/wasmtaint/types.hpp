#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace wasmtaint {

/// Wasm value types, encoded with their binary-format byte values.
enum class ValType : uint8_t {
    I32 = 0x7F,
    I64 = 0x7E,
    F32 = 0x7D,
    F64 = 0x7C,
};

constexpr bool is_float_type(ValType t) {
    return t == ValType::F32 || t == ValType::F64;
}

std::string_view valtype_name(ValType t);
std::optional<ValType> parse_valtype(std::string_view name);

/// Function signature; at most one result (single-result rule).
struct FuncType {
    std::vector<ValType> params;
    std::vector<ValType> results;

    bool operator==(const FuncType&) const = default;
};

enum class ExportKind : uint8_t {
    Function = 0,
    Table = 1,
    Memory = 2,
    Global = 3,
};

std::string_view export_kind_name(ExportKind kind);

constexpr uint64_t kPageSize = 65536;
constexpr uint32_t kMaxPages = 65536;  // 4 GiB

}  // namespace wasmtaint
