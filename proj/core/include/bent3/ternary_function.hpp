#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bent3/field.hpp"

namespace bent3 {

/// One term coef * x^exponent of a trace form Tr_n(sum_i coef_i x^{d_i}).
struct TraceTerm {
    FieldElem coef;
    std::uint64_t exponent = 0;

    friend bool operator==(const TraceTerm&, const TraceTerm&) = default;
};

/// Fills the value table of Tr_n(sum coef_i x^{d_i}) over all of GF(3^n).
std::vector<std::uint8_t> evaluate_trace_form(const FieldCtx& ctx, std::span<const TraceTerm> terms);

/// A function GF(3^n) -> F3 held as a full value table indexed by element code.
class TernaryFn {
public:
    /// Validates the table; when a trace form is supplied it must reproduce the table.
    TernaryFn(FieldRef ctx, std::vector<std::uint8_t> table, std::optional<std::vector<TraceTerm>> symbolic = {});

    static TernaryFn from_trace_form(FieldRef ctx, std::vector<TraceTerm> terms);
    static TernaryFn from_function(FieldRef ctx, const std::function<int(FieldElem)>& fn);
    static TernaryFn constant(FieldRef ctx, int value);

    const FieldCtx& field() const noexcept { return *ctx_; }
    const FieldRef& field_ref() const noexcept { return ctx_; }
    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(table_.size()); }

    std::uint8_t operator()(FieldElem x) const { return table_[x.code]; }
    std::uint8_t at(std::uint32_t code) const { return table_[code]; }
    std::span<const std::uint8_t> table() const noexcept { return table_; }
    const std::optional<std::vector<TraceTerm>>& symbolic() const noexcept { return symbolic_; }

private:
    TernaryFn(FieldRef ctx, std::vector<std::uint8_t> table, std::optional<std::vector<TraceTerm>> symbolic, bool);

    FieldRef ctx_;
    std::vector<std::uint8_t> table_;
    std::optional<std::vector<TraceTerm>> symbolic_;
};

}  // namespace bent3
