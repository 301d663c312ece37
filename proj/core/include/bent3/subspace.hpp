#pragma once

// F3-subspaces of GF(3^n), held as explicit bases.

#include <cstdint>
#include <vector>

#include "bent3/field.hpp"
#include "bent3/linalg.hpp"

namespace bent3 {

struct Subspace {
    enum class Kind { ExplicitBasis, MultiplicativeCoset };

    Kind kind = Kind::ExplicitBasis;
    FieldElem coset_rep{};  // c in c * GF(3^m), coset kind only
    int subfield_m = 0;
    std::vector<FieldElem> basis;  // F3-independent

    int dim() const noexcept { return static_cast<int>(basis.size()); }
};

/// c * GF(3^m) with basis c * gamma^i, gamma = subfield_generator(m).
Subspace coset_subspace(const FieldCtx& ctx, FieldElem c, int m);

/// Span of arbitrary generators; the basis keeps the independent ones in order.
Subspace span_of(const FieldCtx& ctx, const std::vector<FieldElem>& generators);

/// All 3^dim elements; element j is sum_i digit_i(j) * basis_i.
std::vector<FieldElem> elements(const FieldCtx& ctx, const Subspace& v);

bool contains(const FieldCtx& ctx, const Subspace& v, FieldElem x);

/// Tr(v_i w_j).
F3Matrix trace_gram(const FieldCtx& ctx, const Subspace& v, const Subspace& w);

/// {y : Tr(yv) = 0 for all v in V}.
Subspace orthogonal(const FieldCtx& ctx, const Subspace& v);

/// A coordinate complement of V spanned by polynomial basis vectors.
Subspace complement(const FieldCtx& ctx, const Subspace& v);

bool meets_trivially(const FieldCtx& ctx, const Subspace& v, const Subspace& w);
bool is_self_orthogonal(const FieldCtx& ctx, const Subspace& v);

/// Splits x = v + w for GF(3^n) = V (+) W.
class DirectSum {
public:
    DirectSum(const FieldCtx& ctx, Subspace v, Subspace w);

    /// Coordinates of x in basis(V) followed by basis(W).
    std::vector<std::uint8_t> coordinates(FieldElem x) const;
    FieldElem v_part(FieldElem x) const;
    FieldElem w_part(FieldElem x) const;

private:
    const FieldCtx& ctx_;
    Subspace v_, w_;
    F3Matrix inverse_;
};

}  // namespace bent3
