#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wasmtaint/instr.hpp"
#include "wasmtaint/types.hpp"

namespace wasmtaint {

/// Run-length locals declaration as written in a code entry.
struct LocalsDecl {
    uint32_t count;
    ValType type;
};

struct FunctionDef {
    uint32_t type_index;
    std::vector<LocalsDecl> locals;
    InstrSeq body;
    // params + expanded locals, precomputed during decode
    uint64_t local_slot_count = 0;
};

struct ExportDef {
    ExportKind kind;
    uint32_t index;
};

struct MemoryDef {
    uint32_t initial_pages;
    std::optional<uint32_t> max_pages;
};

struct TableDef {
    uint8_t elem_type;  // 0x70 funcref
    uint32_t initial;
    std::optional<uint32_t> max;
};

/// Constant initializer: a single const instruction followed by `end`.
struct ConstExpr {
    ValType type;
    uint64_t bits;  // i32 payloads zero-extended
};

struct DataSegment {
    uint32_t memory_index;
    ConstExpr offset;
    std::vector<uint8_t> bytes;
};

struct ElementSegment {
    uint32_t table_index;
    ConstExpr offset;
    std::vector<uint32_t> func_indices;
};

struct GlobalDef {
    ValType type;
    bool mutable_;
    ConstExpr init;
};

/// Static image of a decoded wasm binary.
struct ModuleDef {
    std::vector<FuncType> types;
    std::vector<FunctionDef> functions;
    std::map<std::string, ExportDef> exports;
    std::vector<MemoryDef> memories;
    std::vector<DataSegment> data_segments;
    std::vector<TableDef> tables;
    std::vector<ElementSegment> element_segments;
    std::vector<GlobalDef> globals;
    std::optional<uint32_t> start;

    const FuncType& func_type(uint32_t func_index) const {
        return types[functions[func_index].type_index];
    }
};

}  // namespace wasmtaint
