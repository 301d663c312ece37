#pragma once

// Four-variable form Tr_k(P(x0, x1, x2, x3)) of a trace function on
// GF(3^{4k}) = GF(3^k)[a], obtained by substituting x = x0 + x1 a + x2 a^2 + x3 a^3.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bent3/families.hpp"
#include "bent3/ternary_function.hpp"

namespace bent3 {

using Monomial = std::array<std::uint8_t, 4>;  // exponents of x0..x3, unreduced

struct MultivariatePoly {
    int k = 0;
    FieldRef coef_field;  // field holding the coefficients
    std::map<Monomial, FieldElem> terms;

    /// Every coefficient lies in F3.
    bool over_prime_field() const;
    /// "Tr_k(x0^4 + x0*x1^3 - ...)"; non-F3 coefficients print in log form.
    std::string to_string() const;
};

/// Same monomials with the same F3 coefficients; both must be over F3.
bool same_f3_polynomial(const MultivariatePoly& p, const MultivariatePoly& q);

/// Expansion engine. ctx is either GF(3^{4k}) or GF(81) (formal route, where
/// x^{3^{jk}} acts on F81 through k mod 4 alone); a generates ctx over the
/// relevant GF(3^k) and has degree 4. Exponent digits must sit at multiples of k.
MultivariatePoly expand_quartic(const FieldRef& ctx, FieldElem a, int k, std::span<const TraceTerm> terms);

/// Expands a function with a trace form; n = 4k, a = embedded root of the quartic.
MultivariatePoly multivariate_expand(const TernaryFn& f, int k, std::span<const int, 5> quartic);

/// Formal expansion of a quartic-root family (T3 or the exceptional ones)
/// for any odd k, computed entirely in GF(81).
MultivariatePoly expand_family_formal(Family family, int k, std::optional<ExceptionalCase> which = std::nullopt);

/// The quartic whose root parametrises the family.
std::span<const int, 5> family_quartic(Family family);

/// Table of x -> Tr_k(P(x0, ..., x3)) on GF(3^{4k}) with x = sum x_i a^i and
/// k = n/4. A polynomial over F3 may be realized for any k.
TernaryFn realize(const MultivariatePoly& p, FieldRef ctx, FieldElem a);

/// Formal expansions agree over F3 for every k in ks.
bool exceptionality_check(Family family, std::optional<ExceptionalCase> which, std::span<const int> ks);

}  // namespace bent3
