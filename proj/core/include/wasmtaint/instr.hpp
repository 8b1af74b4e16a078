#pragma once

#include <cstdint>
#include <vector>

#include "wasmtaint/opcodes.hpp"

namespace wasmtaint {

/// Decoded instruction. `a`/`b`/`imm` hold the immediates, keyed by the
/// opcode's ImmKind:
///   Depth            a = label depth
///   BrTable          a = slot into InstrSeq::br_tables (default is last entry)
///   FuncIdx/LocalIdx/GlobalIdx  a = index
///   CallIndirect     a = type index
///   MemArg           a = alignment exponent (ignored at runtime), b = offset
///   ConstI32         imm = zero-extended 32-bit payload
///   ConstI64/F32/F64 imm = raw payload bits
///   BlockType        a = raw block-type byte (0x40 or a ValType byte)
///
/// Structural cursor targets precomputed at decode time:
///   block/if  match = index of the matching `end`
///   loop      match = index of the first body instruction
///   if        b     = index of `else`, or kNoElse
///   else      match = index of the matching `end`
struct Instr {
    static constexpr uint32_t kNoElse = 0xFFFFFFFFu;

    Opcode op;
    uint32_t a = 0;
    uint32_t b = 0;
    uint32_t match = 0;
    uint64_t imm = 0;
};

struct InstrSeq {
    std::vector<Instr> instrs;
    // br_table target lists; the default label is appended as the last entry
    std::vector<std::vector<uint32_t>> br_tables;

    bool empty() const { return instrs.empty(); }
    size_t size() const { return instrs.size(); }
};

}  // namespace wasmtaint
