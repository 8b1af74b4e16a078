#include "wasmtaint/decoder.hpp"

#include <limits>
#include <string>

#include "wasmtaint/errors.hpp"
#include "wasmtaint/leb128.hpp"

namespace wasmtaint {

namespace {

[[noreturn]] void malformed(const std::string& msg,
                            size_t offset = DecodeError::no_offset) {
    throw DecodeError(DecodeErrorKind::Malformed, msg, offset);
}

/// Bounds-checked cursor over the input. `limit` caps reads to the current
/// section or code entry; positions stay absolute for error reporting.
class Reader {
  public:
    Reader(std::span<const uint8_t> bytes, size_t pos, size_t limit)
        : bytes_(bytes), pos_(pos), limit_(limit) {}

    explicit Reader(std::span<const uint8_t> bytes, size_t pos = 0)
        : Reader(bytes, pos, bytes.size()) {}

    size_t pos() const { return pos_; }
    size_t limit() const { return limit_; }
    size_t remaining() const { return limit_ - pos_; }
    bool at_end() const { return pos_ >= limit_; }

    Reader sub(size_t length) const {
        return Reader(bytes_, pos_, pos_ + length);
    }

    void seek(size_t pos) { pos_ = pos; }

    void skip(size_t n) {
        require(n, "truncated input");
        pos_ += n;
    }

    uint8_t u8() {
        require(1, "unexpected end of input");
        return bytes_[pos_++];
    }

    uint64_t leb_u64() {
        auto limited = bytes_.first(limit_);
        auto [value, consumed] = decode_uleb128(limited, pos_);
        pos_ += consumed;
        return value;
    }

    uint32_t leb_u32() {
        size_t at = pos_;
        uint64_t value = leb_u64();
        if (value > std::numeric_limits<uint32_t>::max()) {
            malformed("varint exceeds 32 bits", at);
        }
        return static_cast<uint32_t>(value);
    }

    int64_t leb_s64() {
        auto limited = bytes_.first(limit_);
        auto [value, consumed] = decode_sleb128(limited, pos_);
        pos_ += consumed;
        return value;
    }

    int32_t leb_s32() {
        size_t at = pos_;
        int64_t value = leb_s64();
        if (value < std::numeric_limits<int32_t>::min() ||
            value > std::numeric_limits<int32_t>::max()) {
            malformed("varint exceeds 32 bits", at);
        }
        return static_cast<int32_t>(value);
    }

    uint64_t fixed_le(size_t width) {
        require(width, "truncated constant payload");
        uint64_t v = 0;
        for (size_t i = 0; i < width; ++i) {
            v |= static_cast<uint64_t>(bytes_[pos_ + i]) << (8 * i);
        }
        pos_ += width;
        return v;
    }

    std::span<const uint8_t> bytes(size_t n) {
        require(n, "truncated byte vector");
        auto s = bytes_.subspan(pos_, n);
        pos_ += n;
        return s;
    }

    /// Element counts are untrusted; every element takes at least one byte.
    uint32_t vec_count(const char* what) {
        size_t at = pos_;
        uint32_t n = leb_u32();
        if (n > remaining()) {
            malformed(std::string("implausible ") + what + " count", at);
        }
        return n;
    }

  private:
    void require(size_t n, const char* msg) const {
        if (limit_ - pos_ < n) {
            malformed(msg, pos_);
        }
    }

    std::span<const uint8_t> bytes_;
    size_t pos_;
    size_t limit_;
};

ValType read_valtype(Reader& r) {
    size_t at = r.pos();
    uint8_t byte = r.u8();
    switch (byte) {
    case 0x7F: return ValType::I32;
    case 0x7E: return ValType::I64;
    case 0x7D: return ValType::F32;
    case 0x7C: return ValType::F64;
    default: malformed("invalid value type", at);
    }
}

struct Limits {
    uint32_t initial;
    std::optional<uint32_t> max;
};

Limits read_limits(Reader& r) {
    size_t at = r.pos();
    uint8_t flags = r.u8();
    if (flags > 1) {
        malformed("invalid limits flags", at);
    }
    Limits lim;
    lim.initial = r.leb_u32();
    if (flags == 1) {
        lim.max = r.leb_u32();
        if (*lim.max < lim.initial) {
            malformed("limits minimum above maximum", at);
        }
    }
    return lim;
}

ConstExpr read_const_expr(Reader& r, std::optional<ValType> expected) {
    size_t at = r.pos();
    uint8_t byte = r.u8();
    ConstExpr expr{};
    switch (byte) {
    case 0x41:  // i32.const
        expr.type = ValType::I32;
        expr.bits = static_cast<uint32_t>(r.leb_s32());
        break;
    case 0x42:  // i64.const
        expr.type = ValType::I64;
        expr.bits = static_cast<uint64_t>(r.leb_s64());
        break;
    case 0x43:  // f32.const
        expr.type = ValType::F32;
        expr.bits = r.fixed_le(4);
        break;
    case 0x44:  // f64.const
        expr.type = ValType::F64;
        expr.bits = r.fixed_le(8);
        break;
    default:
        malformed("initializer is not a constant expression", at);
    }
    if (r.u8() != 0x0B) {
        malformed("constant expression missing end", at);
    }
    if (expected && expr.type != *expected) {
        malformed("constant expression has wrong type", at);
    }
    return expr;
}

/// Index spaces visible to a function body. Checks are skipped for the
/// standalone decode_function_body entry point.
struct BodyContext {
    bool check_indices = false;
    size_t num_types = 0;
    size_t num_funcs = 0;
    size_t num_globals = 0;
    size_t num_locals = 0;
    size_t num_tables = 0;
    size_t num_memories = 0;
};

std::vector<LocalsDecl> read_locals(Reader& r, uint64_t& total_slots) {
    uint32_t decl_count = r.vec_count("locals declaration");
    std::vector<LocalsDecl> locals;
    locals.reserve(decl_count);
    for (uint32_t i = 0; i < decl_count; ++i) {
        size_t at = r.pos();
        uint32_t count = r.leb_u32();
        ValType type = read_valtype(r);
        total_slots += count;
        if (total_slots >= (uint64_t{1} << 32)) {
            malformed("too many locals", at);
        }
        locals.push_back({count, type});
    }
    return locals;
}

InstrSeq read_instrs(Reader& r, const BodyContext& ctx) {
    InstrSeq seq;
    std::vector<uint32_t> open;  // indices of unclosed block/loop/if
    size_t depth = 1;            // implicit function block

    while (true) {
        size_t at = r.pos();
        if (r.at_end()) {
            malformed("function body missing end", at);
        }
        uint8_t byte = r.u8();
        auto op = opcode_from_byte(byte);
        if (!op) {
            throw DecodeError(DecodeErrorKind::UnknownOpcode,
                              "unsupported opcode 0x" + [byte] {
                                  char buf[3];
                                  static const char* hex = "0123456789abcdef";
                                  buf[0] = hex[byte >> 4];
                                  buf[1] = hex[byte & 0xF];
                                  buf[2] = 0;
                                  return std::string(buf);
                              }(),
                              at);
        }

        Instr ins{*op};
        switch (opcode_imm_kind(*op)) {
        case ImmKind::None:
            break;
        case ImmKind::BlockType: {
            uint8_t bt = r.u8();
            if (bt != 0x40 && (bt < 0x7C || bt > 0x7F)) {
                malformed("invalid block type", at);
            }
            ins.a = bt;
            break;
        }
        case ImmKind::Depth:
            ins.a = r.leb_u32();
            if (ins.a >= depth) {
                malformed("branch depth out of range", at);
            }
            break;
        case ImmKind::BrTable: {
            uint32_t n = r.vec_count("br_table target");
            std::vector<uint32_t> targets;
            targets.reserve(static_cast<size_t>(n) + 1);
            for (uint32_t i = 0; i <= n; ++i) {  // targets then default
                uint32_t target = r.leb_u32();
                if (target >= depth) {
                    malformed("branch depth out of range", at);
                }
                targets.push_back(target);
            }
            ins.a = static_cast<uint32_t>(seq.br_tables.size());
            seq.br_tables.push_back(std::move(targets));
            break;
        }
        case ImmKind::FuncIdx:
            ins.a = r.leb_u32();
            if (ctx.check_indices && ins.a >= ctx.num_funcs) {
                malformed("function index out of range", at);
            }
            break;
        case ImmKind::CallIndirect: {
            ins.a = r.leb_u32();
            if (ctx.check_indices && ins.a >= ctx.num_types) {
                malformed("type index out of range", at);
            }
            if (r.u8() != 0) {
                malformed("nonzero call_indirect reserved byte", at);
            }
            if (ctx.check_indices && ctx.num_tables == 0) {
                malformed("call_indirect without a table", at);
            }
            break;
        }
        case ImmKind::LocalIdx:
            ins.a = r.leb_u32();
            if (ctx.check_indices && ins.a >= ctx.num_locals) {
                malformed("local index out of range", at);
            }
            break;
        case ImmKind::GlobalIdx:
            ins.a = r.leb_u32();
            if (ctx.check_indices && ins.a >= ctx.num_globals) {
                malformed("global index out of range", at);
            }
            break;
        case ImmKind::MemArg:
            ins.a = r.leb_u32();  // alignment exponent; not enforced
            ins.b = r.leb_u32();
            if (ctx.check_indices && ctx.num_memories == 0) {
                malformed("memory instruction without a memory", at);
            }
            break;
        case ImmKind::MemIdx:
            if (r.u8() != 0) {
                malformed("nonzero memory index", at);
            }
            if (ctx.check_indices && ctx.num_memories == 0) {
                malformed("memory instruction without a memory", at);
            }
            break;
        case ImmKind::ConstI32:
            ins.imm = static_cast<uint32_t>(r.leb_s32());
            break;
        case ImmKind::ConstI64:
            ins.imm = static_cast<uint64_t>(r.leb_s64());
            break;
        case ImmKind::ConstF32:
            ins.imm = r.fixed_le(4);
            break;
        case ImmKind::ConstF64:
            ins.imm = r.fixed_le(8);
            break;
        }

        uint32_t idx = static_cast<uint32_t>(seq.instrs.size());
        switch (*op) {
        case Opcode::Block:
        case Opcode::Loop:
        case Opcode::If:
            ins.b = Instr::kNoElse;
            open.push_back(idx);
            ++depth;
            break;
        case Opcode::Else: {
            if (open.empty() || seq.instrs[open.back()].op != Opcode::If) {
                malformed("else without matching if", at);
            }
            Instr& if_ins = seq.instrs[open.back()];
            if (if_ins.b != Instr::kNoElse) {
                malformed("duplicate else", at);
            }
            if_ins.b = idx;
            break;
        }
        case Opcode::End:
            --depth;
            if (depth > 0) {
                uint32_t opened = open.back();
                open.pop_back();
                Instr& header = seq.instrs[opened];
                header.match = (header.op == Opcode::Loop) ? opened + 1 : idx;
                if (header.op == Opcode::If &&
                    header.b != Instr::kNoElse) {
                    seq.instrs[header.b].match = idx;
                }
            }
            break;
        default:
            break;
        }

        seq.instrs.push_back(std::move(ins));
        if (depth == 0) {
            break;
        }
    }
    return seq;
}

FunctionBody decode_body(Reader entry, const BodyContext& base_ctx,
                         size_t param_count, uint64_t* slot_count_out) {
    FunctionBody out;
    uint64_t total_slots = param_count;
    out.locals = read_locals(entry, total_slots);

    BodyContext ctx = base_ctx;
    ctx.num_locals = static_cast<size_t>(total_slots);

    out.body = read_instrs(entry, ctx);
    if (entry.pos() != entry.limit()) {
        malformed("code entry longer than its body", entry.pos());
    }
    if (slot_count_out) {
        *slot_count_out = total_slots;
    }
    return out;
}

}  // namespace

uint32_t validate_header(std::span<const uint8_t> bytes) {
    if (bytes.size() < 8) {
        malformed("input shorter than the 8-byte header", bytes.size());
    }
    if (bytes[0] != 0x00 || bytes[1] != 0x61 || bytes[2] != 0x73 ||
        bytes[3] != 0x6D) {
        throw DecodeError(DecodeErrorKind::BadMagic, "magic bytes are not \\0asm", 0);
    }
    uint32_t version = static_cast<uint32_t>(bytes[4]) |
                       static_cast<uint32_t>(bytes[5]) << 8 |
                       static_cast<uint32_t>(bytes[6]) << 16 |
                       static_cast<uint32_t>(bytes[7]) << 24;
    if (version != 1) {
        throw DecodeError(DecodeErrorKind::UnsupportedVersion,
                          "unsupported binary version " + std::to_string(version),
                          4);
    }
    return version;
}

FunctionBody decode_function_body(std::span<const uint8_t> bytes,
                                  size_t offset, size_t length) {
    if (offset > bytes.size() || length > bytes.size() - offset) {
        malformed("code entry bounds outside input", offset);
    }
    Reader entry(bytes, offset, offset + length);
    return decode_body(entry, BodyContext{}, 0, nullptr);
}

ModuleDef decode_module(std::span<const uint8_t> bytes) {
    validate_header(bytes);

    ModuleDef mod;
    Reader r(bytes, 8);
    int last_section_id = 0;
    bool have_function_section = false;
    bool have_code_section = false;

    while (!r.at_end()) {
        size_t section_at = r.pos();
        uint8_t id = r.u8();
        uint32_t size = r.leb_u32();
        if (size > r.remaining()) {
            malformed("section length out of bounds", section_at);
        }
        Reader section = r.sub(size);
        r.skip(size);

        if (id == 0) {
            continue;  // custom sections carry no semantics
        }
        if (id == 2) {
            throw DecodeError(DecodeErrorKind::Unsupported,
                              "import section is not supported", section_at);
        }
        if (id > 11) {
            malformed("unknown section id " + std::to_string(id), section_at);
        }
        if (id <= last_section_id) {
            malformed("section out of order or duplicated", section_at);
        }
        last_section_id = id;

        switch (id) {
        case 1: {  // type
            uint32_t n = section.vec_count("type");
            mod.types.reserve(n);
            for (uint32_t i = 0; i < n; ++i) {
                size_t at = section.pos();
                if (section.u8() != 0x60) {
                    malformed("expected function type", at);
                }
                FuncType ft;
                uint32_t np = section.vec_count("parameter");
                ft.params.reserve(np);
                for (uint32_t p = 0; p < np; ++p) {
                    ft.params.push_back(read_valtype(section));
                }
                uint32_t nr = section.vec_count("result");
                if (nr > 1) {
                    malformed("more than one result", at);
                }
                for (uint32_t q = 0; q < nr; ++q) {
                    ft.results.push_back(read_valtype(section));
                }
                mod.types.push_back(std::move(ft));
            }
            break;
        }
        case 3: {  // function
            have_function_section = true;
            uint32_t n = section.vec_count("function");
            mod.functions.reserve(n);
            for (uint32_t i = 0; i < n; ++i) {
                size_t at = section.pos();
                uint32_t type_index = section.leb_u32();
                if (type_index >= mod.types.size()) {
                    malformed("type index out of range", at);
                }
                FunctionDef fn;
                fn.type_index = type_index;
                mod.functions.push_back(std::move(fn));
            }
            break;
        }
        case 4: {  // table
            uint32_t n = section.vec_count("table");
            if (n > 1) {
                malformed("at most one table is allowed", section_at);
            }
            for (uint32_t i = 0; i < n; ++i) {
                size_t at = section.pos();
                uint8_t elem_type = section.u8();
                if (elem_type != 0x70) {
                    malformed("invalid table element type", at);
                }
                Limits lim = read_limits(section);
                mod.tables.push_back({elem_type, lim.initial, lim.max});
            }
            break;
        }
        case 5: {  // memory
            uint32_t n = section.vec_count("memory");
            if (n > 1) {
                malformed("at most one memory is allowed", section_at);
            }
            for (uint32_t i = 0; i < n; ++i) {
                size_t at = section.pos();
                Limits lim = read_limits(section);
                if (lim.initial > kMaxPages ||
                    (lim.max && *lim.max > kMaxPages)) {
                    malformed("memory larger than 65536 pages", at);
                }
                mod.memories.push_back({lim.initial, lim.max});
            }
            break;
        }
        case 6: {  // global
            uint32_t n = section.vec_count("global");
            mod.globals.reserve(n);
            for (uint32_t i = 0; i < n; ++i) {
                size_t at = section.pos();
                ValType type = read_valtype(section);
                uint8_t mut = section.u8();
                if (mut > 1) {
                    malformed("invalid global mutability", at);
                }
                ConstExpr init = read_const_expr(section, type);
                mod.globals.push_back({type, mut == 1, init});
            }
            break;
        }
        case 7: {  // export
            uint32_t n = section.vec_count("export");
            for (uint32_t i = 0; i < n; ++i) {
                size_t at = section.pos();
                uint32_t name_len = section.leb_u32();
                auto name_bytes = section.bytes(name_len);
                std::string name(name_bytes.begin(), name_bytes.end());
                uint8_t kind_byte = section.u8();
                if (kind_byte > 3) {
                    malformed("invalid export kind", at);
                }
                ExportKind kind = static_cast<ExportKind>(kind_byte);
                uint32_t index = section.leb_u32();
                size_t space = 0;
                switch (kind) {
                case ExportKind::Function: space = mod.functions.size(); break;
                case ExportKind::Table: space = mod.tables.size(); break;
                case ExportKind::Memory: space = mod.memories.size(); break;
                case ExportKind::Global: space = mod.globals.size(); break;
                }
                if (index >= space) {
                    malformed("export index out of range", at);
                }
                if (!mod.exports.emplace(std::move(name), ExportDef{kind, index})
                         .second) {
                    malformed("duplicate export name", at);
                }
            }
            break;
        }
        case 8: {  // start
            size_t at = section.pos();
            uint32_t index = section.leb_u32();
            if (index >= mod.functions.size()) {
                malformed("start function index out of range", at);
            }
            const FuncType& ft = mod.types[mod.functions[index].type_index];
            if (!ft.params.empty() || !ft.results.empty()) {
                malformed("start function must have empty signature", at);
            }
            mod.start = index;
            break;
        }
        case 9: {  // element
            uint32_t n = section.vec_count("element segment");
            for (uint32_t i = 0; i < n; ++i) {
                size_t at = section.pos();
                uint32_t table_index = section.leb_u32();
                if (table_index != 0 || mod.tables.empty()) {
                    malformed("element segment references missing table", at);
                }
                ConstExpr offset = read_const_expr(section, ValType::I32);
                uint32_t count = section.vec_count("element function");
                ElementSegment seg{table_index, offset, {}};
                seg.func_indices.reserve(count);
                for (uint32_t j = 0; j < count; ++j) {
                    size_t fat = section.pos();
                    uint32_t func_index = section.leb_u32();
                    if (func_index >= mod.functions.size()) {
                        malformed("element function index out of range", fat);
                    }
                    seg.func_indices.push_back(func_index);
                }
                mod.element_segments.push_back(std::move(seg));
            }
            break;
        }
        case 10: {  // code
            have_code_section = true;
            uint32_t n = section.vec_count("code entry");
            if (n != mod.functions.size()) {
                malformed("function and code section counts differ",
                          section_at);
            }
            BodyContext ctx;
            ctx.check_indices = true;
            ctx.num_types = mod.types.size();
            ctx.num_funcs = mod.functions.size();
            ctx.num_globals = mod.globals.size();
            ctx.num_tables = mod.tables.size();
            ctx.num_memories = mod.memories.size();
            for (uint32_t i = 0; i < n; ++i) {
                size_t at = section.pos();
                uint32_t body_size = section.leb_u32();
                if (body_size > section.remaining()) {
                    malformed("code entry length out of bounds", at);
                }
                Reader entry = section.sub(body_size);
                section.skip(body_size);
                FunctionDef& fn = mod.functions[i];
                size_t param_count = mod.types[fn.type_index].params.size();
                FunctionBody parsed =
                    decode_body(entry, ctx, param_count, &fn.local_slot_count);
                fn.locals = std::move(parsed.locals);
                fn.body = std::move(parsed.body);
            }
            break;
        }
        case 11: {  // data
            uint32_t n = section.vec_count("data segment");
            for (uint32_t i = 0; i < n; ++i) {
                size_t at = section.pos();
                uint32_t memory_index = section.leb_u32();
                if (memory_index != 0 || mod.memories.empty()) {
                    malformed("data segment references missing memory", at);
                }
                ConstExpr offset = read_const_expr(section, ValType::I32);
                uint32_t len = section.leb_u32();
                auto payload = section.bytes(len);
                mod.data_segments.push_back(
                    {memory_index, offset,
                     std::vector<uint8_t>(payload.begin(), payload.end())});
            }
            break;
        }
        default:
            break;
        }

        if (!section.at_end()) {
            malformed("section shorter than its declared length",
                      section.pos());
        }
    }

    if (have_function_section && !have_code_section &&
        !mod.functions.empty()) {
        malformed("function section without code section");
    }

    return mod;
}

}  // namespace wasmtaint
