#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace wasmtaint {

struct UlebResult {
    uint64_t value;
    size_t consumed;
};

struct SlebResult {
    int64_t value;
    size_t consumed;
};

/// Decodes an unsigned LEB128 integer starting at `offset`.
/// Throws DecodeError(Malformed) if the encoding runs past the end of
/// `bytes`, exceeds the 10-byte cap for 64-bit values, or carries set bits
/// beyond bit 63.
UlebResult decode_uleb128(std::span<const uint8_t> bytes, size_t offset);

/// Signed counterpart; sign-extends from the final group.
SlebResult decode_sleb128(std::span<const uint8_t> bytes, size_t offset);

}  // namespace wasmtaint
