#include "wasmtaint/types.hpp"

namespace wasmtaint {

std::string_view valtype_name(ValType t) {
    switch (t) {
    case ValType::I32: return "i32";
    case ValType::I64: return "i64";
    case ValType::F32: return "f32";
    case ValType::F64: return "f64";
    }
    return "unknown";
}

std::optional<ValType> parse_valtype(std::string_view name) {
    if (name == "i32") return ValType::I32;
    if (name == "i64") return ValType::I64;
    if (name == "f32") return ValType::F32;
    if (name == "f64") return ValType::F64;
    return std::nullopt;
}

std::string_view export_kind_name(ExportKind kind) {
    switch (kind) {
    case ExportKind::Function: return "function";
    case ExportKind::Table: return "table";
    case ExportKind::Memory: return "memory";
    case ExportKind::Global: return "global";
    }
    return "unknown";
}

}  // namespace wasmtaint
