#include "bent3/subspace.hpp"

#include <stdexcept>

#include "bent3/int_math.hpp"

namespace bent3 {

namespace {

// Columns are the coordinate vectors of the given elements.
F3Matrix column_matrix(const FieldCtx& ctx, const std::vector<FieldElem>& cols) {
    F3Matrix m(ctx.degree(), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        const auto t = ctx.trits(cols[j]);
        for (int i = 0; i < m.rows(); ++i) m.at(i, j) = t[i];
    }
    return m;
}

FieldElem combine(const FieldCtx& ctx, const std::vector<FieldElem>& basis, const std::uint8_t* coeffs) {
    FieldElem acc = FieldCtx::zero();
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeffs[i]) acc = ctx.add(acc, ctx.scale(basis[i], coeffs[i]));
    return acc;
}

}  // namespace

Subspace coset_subspace(const FieldCtx& ctx, FieldElem c, int m) {
    if (c == FieldCtx::zero()) throw std::invalid_argument("coset_subspace: zero representative");
    Subspace s;
    s.kind = Subspace::Kind::MultiplicativeCoset;
    s.coset_rep = c;
    s.subfield_m = m;
    for (FieldElem b : ctx.subfield_basis(m)) s.basis.push_back(ctx.mul(c, b));
    return s;
}

Subspace span_of(const FieldCtx& ctx, const std::vector<FieldElem>& generators) {
    Subspace s;
    int rank = 0;
    for (FieldElem g : generators) {
        auto trial = s.basis;
        trial.push_back(g);
        const int r = column_matrix(ctx, trial).rank();
        if (r > rank) {
            s.basis = std::move(trial);
            rank = r;
        }
    }
    return s;
}

std::vector<FieldElem> elements(const FieldCtx& ctx, const Subspace& v) {
    std::vector<FieldElem> out(pow3(v.dim()), FieldCtx::zero());
    for (int i = 0; i < v.dim(); ++i) {
        const auto p = static_cast<std::uint32_t>(pow3(i));
        const FieldElem step[3] = {FieldCtx::zero(), v.basis[i], ctx.scale(v.basis[i], 2)};
        for (std::uint32_t j = p; j < 3 * p; ++j) out[j] = ctx.add(out[j % p], step[j / p]);
    }
    return out;
}

bool contains(const FieldCtx& ctx, const Subspace& v, FieldElem x) {
    auto cols = v.basis;
    cols.push_back(x);
    return column_matrix(ctx, cols).rank() == v.dim();
}

F3Matrix trace_gram(const FieldCtx& ctx, const Subspace& v, const Subspace& w) {
    F3Matrix g(v.dim(), w.dim());
    for (int i = 0; i < v.dim(); ++i)
        for (int j = 0; j < w.dim(); ++j) g.at(i, j) = ctx.trace(ctx.mul(v.basis[i], w.basis[j]));
    return g;
}

Subspace orthogonal(const FieldCtx& ctx, const Subspace& v) {
    const int n = ctx.degree();
    // Row j: y -> Tr(y v_j) in polynomial coordinates of y.
    F3Matrix a(v.dim(), n);
    for (int j = 0; j < v.dim(); ++j)
        for (int i = 0; i < n; ++i)
            a.at(j, i) = ctx.trace(ctx.mul(v.basis[j], FieldElem{static_cast<std::uint32_t>(pow3(i))}));
    Subspace out;
    for (const auto& y : a.nullspace()) out.basis.push_back(ctx.from_trits(y));
    return out;
}

Subspace complement(const FieldCtx& ctx, const Subspace& v) {
    auto cols = v.basis;
    Subspace out;
    int rank = column_matrix(ctx, cols).rank();
    for (int i = 0; i < ctx.degree() && rank < ctx.degree(); ++i) {
        const FieldElem e{static_cast<std::uint32_t>(pow3(i))};
        cols.push_back(e);
        const int r = column_matrix(ctx, cols).rank();
        if (r > rank) {
            out.basis.push_back(e);
            rank = r;
        } else {
            cols.pop_back();
        }
    }
    return out;
}

bool meets_trivially(const FieldCtx& ctx, const Subspace& v, const Subspace& w) {
    auto cols = v.basis;
    cols.insert(cols.end(), w.basis.begin(), w.basis.end());
    return column_matrix(ctx, cols).rank() == v.dim() + w.dim();
}

bool is_self_orthogonal(const FieldCtx& ctx, const Subspace& v) { return trace_gram(ctx, v, v).is_zero(); }

DirectSum::DirectSum(const FieldCtx& ctx, Subspace v, Subspace w) : ctx_(ctx), v_(std::move(v)), w_(std::move(w)) {
    if (v_.dim() + w_.dim() != ctx.degree()) throw std::invalid_argument("DirectSum: dimensions do not add up to n");
    auto cols = v_.basis;
    cols.insert(cols.end(), w_.basis.begin(), w_.basis.end());
    auto inv = column_matrix(ctx, cols).inverse();
    if (!inv) throw std::invalid_argument("DirectSum: subspaces intersect nontrivially");
    inverse_ = std::move(*inv);
}

std::vector<std::uint8_t> DirectSum::coordinates(FieldElem x) const { return inverse_.apply(ctx_.trits(x)); }

FieldElem DirectSum::v_part(FieldElem x) const {
    const auto c = coordinates(x);
    return combine(ctx_, v_.basis, c.data());
}

FieldElem DirectSum::w_part(FieldElem x) const {
    const auto c = coordinates(x);
    return combine(ctx_, w_.basis, c.data() + v_.dim());
}

}  // namespace bent3
