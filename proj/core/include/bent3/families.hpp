#pragma once

// Generators for the binomial, trinomial and exceptional bent families and
// the coefficient formulas they depend on.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bent3/eisenstein.hpp"
#include "bent3/field.hpp"
#include "bent3/ternary_function.hpp"

namespace bent3 {

enum class Family { BinomialGeneral, BinomialT3, Trinomial, ExceptionalT7, ExceptionalT8, Baseline };
enum class ExceptionalCase { T7Case1, T7Case3, T8 };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
std::string_view exceptional_name(ExceptionalCase c);
std::optional<ExceptionalCase> parse_exceptional(std::string_view name);

/// Extension degree n of the field a family lives in: 4k, or 2k for the trinomial.
int family_field_degree(Family f, int k);

// Exponents. All are computed in 128 bits and must fit in 64.
std::uint64_t binomial_d1(int k);    // 2(3^k + 1)
std::uint64_t binomial_d2(int k);    // (3^k + 1)^2
std::uint64_t trinomial_d1(int k);   // 2 * 3^k + 4
std::uint64_t trinomial_d2(int k);   // 3^k + 5
std::uint64_t baseline_exponent(int k);  // 3^{3k} + 3^{2k} - 3^k + 1

/// Second binomial coefficient from a nonsquare a1 (n = 4k).
FieldElem coeff_a2(const FieldCtx& ctx, int k, FieldElem a1, int sign);

struct TrinomialCoefficients {
    FieldElem a1, a2, a3;
};

/// Coefficients for n = 2k, k > 1; k even uses alpha = generator().
TrinomialCoefficients trinomial_coefficients(const FieldCtx& ctx, int k, int sign);

// Monic quartics over F3, constant term first.
inline constexpr std::array<int, 5> kQuarticT3{2, 1, 0, 0, 1};           // x^4 + x - 1
inline constexpr std::array<int, 5> kQuarticExceptional{2, 0, 2, 0, 1};  // x^4 - x^2 - 1

/// Root of the quartic inside the embedded GF(81) with the smallest discrete log.
FieldElem embedded_quartic_root(const FieldCtx& ctx, std::span<const int, 5> quartic);

/// Coefficients (a1, a2) of the exceptional binomials in terms of a root a of x^4 - x^2 - 1.
std::array<FieldElem, 2> exceptional_coefficients(const FieldCtx& ctx, FieldElem a, ExceptionalCase which);

TernaryFn make_binomial_general(FieldRef ctx, int k, FieldElem a1, int sign);
TernaryFn make_binomial_T3(FieldRef ctx, int k);
TernaryFn make_trinomial(FieldRef ctx, int k, int sign);
TernaryFn make_exceptional(FieldRef ctx, int k, ExceptionalCase which);
TernaryFn make_baseline(FieldRef ctx, int k);

struct FamilySpec {
    Family family = Family::BinomialGeneral;
    int k = 1;
    std::optional<FieldElem> a1;
    int sign = 1;
    std::optional<ExceptionalCase> which;  // T7 case; derived from k when absent
};

/// Non-fatal remarks about parameters outside a theorem's stated range.
std::vector<std::string> family_warnings(const FamilySpec& spec);
TernaryFn make_family(FieldRef ctx, const FamilySpec& spec);

/// Coordinates over GF(3^k) in the basis {1, a, a^2, a^3} of GF(3^{4k}), k odd.
class QuarticBasis {
public:
    QuarticBasis(const FieldCtx& ctx, int k, FieldElem a);

    std::array<FieldElem, 4> decompose(FieldElem b) const;
    FieldElem compose(const std::array<FieldElem, 4>& coords) const;
    int k() const noexcept { return k_; }
    FieldElem root() const noexcept { return powers_[1]; }

private:
    const FieldCtx& ctx_;
    int k_;
    std::array<FieldElem, 4> powers_{};
    std::array<FieldElem, 4> dual_{};  // Tr^n_k(a^i dual_j) = delta_ij
};

/// S_f(b) for the four-variable form of the x^4 + x - 1 binomial, from the
/// closed-form Walsh evaluation; n = 4k, k odd. Uses the library sign
/// convention S_f(b) = sum w^{f(x) - Tr(bx)}.
EisensteinInt dual_T3_closed_form(const FieldCtx& ctx, int k, FieldElem b);

}  // namespace bent3
