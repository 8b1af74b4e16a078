#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "wasmtaint/module.hpp"

namespace wasmtaint {

/// Checks the magic bytes and version field. Returns the version (always 1).
/// Throws DecodeError with kind BadMagic, UnsupportedVersion, or Malformed
/// (input shorter than 8 bytes).
uint32_t validate_header(std::span<const uint8_t> bytes);

/// Decodes a whole binary into a validated ModuleDef. Single pass; structural
/// validation (section order, nesting balance, branch depths, index bounds)
/// happens here. Operand-stack typing is left to runtime traps.
ModuleDef decode_module(std::span<const uint8_t> bytes);

struct FunctionBody {
    std::vector<LocalsDecl> locals;
    InstrSeq body;
};

/// Decodes one code-section entry payload of `length` bytes starting at
/// `offset`: the locals vector followed by the instruction sequence, which
/// must end with `end` exactly at the declared length. This standalone form
/// validates structure (nesting, branch depths, immediates) but not module
/// indices; decode_module applies the index checks.
FunctionBody decode_function_body(std::span<const uint8_t> bytes,
                                  size_t offset, size_t length);

}  // namespace wasmtaint
