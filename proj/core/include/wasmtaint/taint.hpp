#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wasmtaint {

/// Totally ordered influence levels. NONE is never stored in a label;
/// it is represented by omission.
enum class TaintLevel : uint8_t {
    None = 0,
    Indirect = 1,
    Direct = 2,
};

std::string_view taint_level_name(TaintLevel level);
std::optional<TaintLevel> parse_taint_level(std::string_view name);

/// Sparse map from taint-source id to level, kept sorted by source id.
/// Value-semantic and cheap to copy for the handful of sources a run
/// declares. Absent sources are NONE.
class TaintLabel {
  public:
    using Entry = std::pair<uint32_t, TaintLevel>;

    TaintLabel() = default;
    TaintLabel(std::initializer_list<Entry> entries);

    /// Label of a freshly designated source value: {source: DIRECT}.
    static TaintLabel direct(uint32_t source);

    bool empty() const { return entries_.empty(); }
    size_t size() const { return entries_.size(); }

    TaintLevel level_of(uint32_t source) const;
    void set(uint32_t source, TaintLevel level);

    const std::vector<Entry>& entries() const { return entries_; }

    bool operator==(const TaintLabel&) const = default;

    /// Debug/trace rendering, e.g. "{0:D,2:I}"; "{}" when empty.
    std::string to_string() const;

  private:
    std::vector<Entry> entries_;
};

/// Point-wise max of two labels: the label of a value computed from both
/// inputs of a numeric formula.
TaintLabel merge_direct(const TaintLabel& a, const TaintLabel& b);

/// Lowers every DIRECT entry to INDIRECT. Control and address influence
/// never produces DIRECT taint.
TaintLabel cap_indirect(const TaintLabel& a);

/// Label attached when a value is written to a local, global, stack slot,
/// or memory bytes: the value's own label merged with the capped control
/// context and, for indexed accesses, the capped address label.
TaintLabel assign_label(const TaintLabel& value_label,
                        const TaintLabel& context,
                        const TaintLabel* address_label = nullptr);

}  // namespace wasmtaint
