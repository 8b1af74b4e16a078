#include "wasmtaint/leb128.hpp"

#include "wasmtaint/errors.hpp"

namespace wasmtaint {

namespace {
constexpr size_t kMaxGroups = 10;  // ceil(64 / 7)
}

UlebResult decode_uleb128(std::span<const uint8_t> bytes, size_t offset) {
    uint64_t value = 0;
    size_t consumed = 0;
    unsigned shift = 0;
    while (true) {
        if (offset + consumed >= bytes.size()) {
            throw DecodeError(DecodeErrorKind::Malformed,
                              "truncated uleb128", offset + consumed);
        }
        if (consumed == kMaxGroups) {
            throw DecodeError(DecodeErrorKind::Malformed,
                              "uleb128 longer than 10 bytes", offset);
        }
        uint8_t byte = bytes[offset + consumed];
        ++consumed;
        uint64_t group = byte & 0x7Fu;
        // 10th byte holds bit 63 only
        if (shift == 63 && group > 1) {
            throw DecodeError(DecodeErrorKind::Malformed,
                              "uleb128 overflows 64 bits", offset);
        }
        value |= group << shift;
        if ((byte & 0x80u) == 0) {
            return {value, consumed};
        }
        shift += 7;
    }
}

SlebResult decode_sleb128(std::span<const uint8_t> bytes, size_t offset) {
    int64_t value = 0;
    size_t consumed = 0;
    unsigned shift = 0;
    uint8_t byte = 0;
    while (true) {
        if (offset + consumed >= bytes.size()) {
            throw DecodeError(DecodeErrorKind::Malformed,
                              "truncated sleb128", offset + consumed);
        }
        if (consumed == kMaxGroups) {
            throw DecodeError(DecodeErrorKind::Malformed,
                              "sleb128 longer than 10 bytes", offset);
        }
        byte = bytes[offset + consumed];
        ++consumed;
        if (shift < 64) {
            value |= static_cast<int64_t>(static_cast<uint64_t>(byte & 0x7Fu)
                                          << shift);
        }
        shift += 7;
        if ((byte & 0x80u) == 0) {
            break;
        }
    }
    if (shift < 64 && (byte & 0x40u) != 0) {
        value |= static_cast<int64_t>(~uint64_t{0} << shift);
    }
    return {value, consumed};
}

}  // namespace wasmtaint
