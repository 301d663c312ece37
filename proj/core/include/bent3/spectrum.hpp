#pragma once

// Walsh coefficients S_f(b) = sum_x w^{f(x) - Tr(bx)}.

#include <cstdint>
#include <vector>

#include "bent3/eisenstein.hpp"
#include "bent3/ternary_function.hpp"

namespace bent3 {

/// Coefficients indexed by the canonical code of b.
struct WalshSpectrum {
    std::vector<EisensteinInt> coeffs;

    const EisensteinInt& operator[](std::uint32_t b) const { return coeffs[b]; }
    std::size_t size() const noexcept { return coeffs.size(); }
    friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

/// Largest n for which spectrum_naive runs without force.
inline constexpr int kNaiveSpectrumLimit = 8;

/// Table of x -> Tr(b x) over all codes x.
std::vector<std::uint8_t> linear_form_table(const FieldCtx& ctx, FieldElem b);

EisensteinInt walsh_at(const TernaryFn& f, FieldElem b);

/// Point-by-point evaluation, O(9^n). Refuses n > kNaiveSpectrumLimit unless forced.
WalshSpectrum spectrum_naive(const TernaryFn& f, bool force = false);

/// Radix-3 transform over (Z/3)^n in the trace-dual coordinates, O(n 3^n).
WalshSpectrum spectrum_fast(const TernaryFn& f);

/// {b*_j} with Tr(beta_i b*_j) = delta_ij for the polynomial basis beta_i = x^i.
std::vector<FieldElem> dual_basis(const FieldCtx& ctx);

/// Inverse transform: returns w^{f(x)} for every x, recovered as
/// 3^{-n} sum_b S(b) w^{Tr(bx)}. Throws if the division is not exact.
std::vector<EisensteinInt> inverse_transform(const FieldCtx& ctx, const WalshSpectrum& spectrum);

/// sum_b |S(b)|^2; equals 9^n for every function.
std::int64_t parseval_sum(const WalshSpectrum& spectrum);

}  // namespace bent3
