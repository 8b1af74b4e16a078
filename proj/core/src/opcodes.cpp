#include "wasmtaint/opcodes.hpp"

#include <array>

namespace wasmtaint {

namespace {

struct OpInfo {
    bool known = false;
    const char* name = "";
    ImmKind imm = ImmKind::None;
    uint8_t flags = 0;
};

constexpr std::array<OpInfo, 256> build_table() {
    std::array<OpInfo, 256> table{};
#define WASMTAINT_OPCODE_ROW(name_, byte_, mnemonic_, imm_, flags_) \
    table[byte_] = OpInfo{true, mnemonic_, ImmKind::imm_, flags_};
    WASMTAINT_FOREACH_OPCODE(WASMTAINT_OPCODE_ROW)
#undef WASMTAINT_OPCODE_ROW
    return table;
}

constexpr std::array<OpInfo, 256> kOpTable = build_table();

}  // namespace

std::optional<Opcode> opcode_from_byte(uint8_t byte) {
    if (!kOpTable[byte].known) {
        return std::nullopt;
    }
    return static_cast<Opcode>(byte);
}

std::string_view opcode_name(Opcode op) {
    return kOpTable[static_cast<uint8_t>(op)].name;
}

ImmKind opcode_imm_kind(Opcode op) {
    return kOpTable[static_cast<uint8_t>(op)].imm;
}

bool opcode_is_float(Opcode op) {
    return (kOpTable[static_cast<uint8_t>(op)].flags & kOpFlagFloat) != 0;
}

}  // namespace wasmtaint
