#include "bent3/ternary_function.hpp"

#include <stdexcept>

#include "bent3/parallel.hpp"

namespace bent3 {

std::vector<std::uint8_t> evaluate_trace_form(const FieldCtx& ctx, std::span<const TraceTerm> terms) {
    // f(g^e) = sum_i Tr(g^{log a_i + d_i e}) since Tr is additive.
    const std::uint64_t order = ctx.order();
    struct Step {
        std::uint64_t start;
        std::uint64_t stride;
    };
    std::vector<Step> steps;
    std::uint8_t at_zero = 0;
    for (const auto& t : terms) {
        if (t.coef == FieldCtx::zero()) continue;
        const std::uint64_t la = ctx.log(t.coef);
        if (t.exponent == 0) {
            at_zero = static_cast<std::uint8_t>((at_zero + ctx.trace(t.coef)) % 3);
            steps.push_back({la, 0});
        } else {
            steps.push_back({la, t.exponent % order});
        }
    }
    const auto& tr = ctx.trace_table();
    std::vector<std::uint8_t> table(ctx.size(), 0);
    table[0] = at_zero;
    parallel_for(order, [&](std::size_t begin, std::size_t end) {
        for (std::size_t e = begin; e < end; ++e) {
            unsigned s = 0;
            for (const auto& st : steps) s += tr[ctx.exp(st.start + (st.stride * e) % order).code];
            table[ctx.exp(e).code] = static_cast<std::uint8_t>(s % 3);
        }
    });
    return table;
}

TernaryFn::TernaryFn(FieldRef ctx, std::vector<std::uint8_t> table, std::optional<std::vector<TraceTerm>> symbolic,
                     bool)
    : ctx_(std::move(ctx)), table_(std::move(table)), symbolic_(std::move(symbolic)) {}

TernaryFn::TernaryFn(FieldRef ctx, std::vector<std::uint8_t> table, std::optional<std::vector<TraceTerm>> symbolic)
    : ctx_(std::move(ctx)), table_(std::move(table)), symbolic_(std::move(symbolic)) {
    if (!ctx_) throw std::invalid_argument("TernaryFn: missing field");
    if (table_.size() != ctx_->size()) throw std::invalid_argument("TernaryFn: table length must be 3^n");
    for (auto v : table_)
        if (v > 2) throw std::invalid_argument("TernaryFn: table values must lie in {0,1,2}");
    if (symbolic_ && evaluate_trace_form(*ctx_, *symbolic_) != table_)
        throw std::invalid_argument("TernaryFn: trace form does not reproduce the table");
}

TernaryFn TernaryFn::from_trace_form(FieldRef ctx, std::vector<TraceTerm> terms) {
    auto table = evaluate_trace_form(*ctx, terms);
    return TernaryFn(std::move(ctx), std::move(table), std::move(terms), true);
}

TernaryFn TernaryFn::from_function(FieldRef ctx, const std::function<int(FieldElem)>& fn) {
    std::vector<std::uint8_t> table(ctx->size());
    for (std::uint32_t x = 0; x < ctx->size(); ++x) table[x] = static_cast<std::uint8_t>(((fn(FieldElem{x}) % 3) + 3) % 3);
    return TernaryFn(std::move(ctx), std::move(table), std::nullopt, true);
}

TernaryFn TernaryFn::constant(FieldRef ctx, int value) {
    std::vector<std::uint8_t> table(ctx->size(), static_cast<std::uint8_t>(((value % 3) + 3) % 3));
    return TernaryFn(std::move(ctx), std::move(table), std::nullopt, true);
}

}  // namespace bent3
