#include "bent3/spectrum.hpp"

#include <array>
#include <stdexcept>

#include "bent3/int_math.hpp"
#include "bent3/linalg.hpp"
#include "bent3/parallel.hpp"

namespace bent3 {

namespace {

// x -> sum_i x_i w_i mod 3 for all codes x, filled one digit at a time.
std::vector<std::uint8_t> coordinate_form(int n, const std::vector<std::uint8_t>& weights) {
    std::vector<std::uint8_t> out(pow3(n), 0);
    for (int i = 0; i < n; ++i) {
        const auto p = static_cast<std::uint32_t>(pow3(i));
        for (std::uint32_t j = p; j < 3 * p; ++j) out[j] = static_cast<std::uint8_t>((out[j % p] + (j / p) * weights[i]) % 3);
    }
    return out;
}

// y -> code of sum_i y_i v_i for all codes y.
std::vector<std::uint32_t> coordinate_map(const FieldCtx& ctx, const std::vector<FieldElem>& v) {
    const int n = ctx.degree();
    std::vector<std::uint32_t> out(ctx.size(), 0);
    for (int i = 0; i < n; ++i) {
        const auto p = static_cast<std::uint32_t>(pow3(i));
        const std::array<FieldElem, 3> step{FieldCtx::zero(), v[i], ctx.scale(v[i], 2)};
        for (std::uint32_t j = p; j < 3 * p; ++j) out[j] = ctx.add(FieldElem{out[j % p]}, step[j / p]).code;
    }
    return out;
}

// In-place transform along every coordinate with kernel w^{sign * x * y}.
void radix3_transform(std::vector<EisensteinInt>& buf, int n, bool inverse) {
    std::uint32_t stride = 1;
    for (int stage = 0; stage < n; ++stage, stride *= 3) {
        const std::uint32_t block = 3 * stride;
        for (std::uint32_t base = 0; base < buf.size(); base += block) {
            for (std::uint32_t j = 0; j < stride; ++j) {
                EisensteinInt& p0 = buf[base + j];
                EisensteinInt& p1 = buf[base + j + stride];
                EisensteinInt& p2 = buf[base + j + 2 * stride];
                const EisensteinInt a0 = p0, a1 = p1, a2 = p2;
                // forward: out1 = a0 + w^2 a1 + w a2, out2 = a0 + w a1 + w^2 a2
                const EisensteinInt w1 = inverse ? mul_omega(a1) : mul_omega2(a1);
                const EisensteinInt w2 = inverse ? mul_omega2(a2) : mul_omega(a2);
                const EisensteinInt v1 = inverse ? mul_omega2(a1) : mul_omega(a1);
                const EisensteinInt v2 = inverse ? mul_omega(a2) : mul_omega2(a2);
                p0 = {a0.u + a1.u + a2.u, a0.v + a1.v + a2.v};
                p1 = {a0.u + w1.u + w2.u, a0.v + w1.v + w2.v};
                p2 = {a0.u + v1.u + v2.u, a0.v + v1.v + v2.v};
            }
        }
    }
}

}  // namespace

std::vector<std::uint8_t> linear_form_table(const FieldCtx& ctx, FieldElem b) {
    std::vector<std::uint8_t> weights(ctx.degree());
    for (int i = 0; i < ctx.degree(); ++i)
        weights[i] = ctx.trace(ctx.mul(b, FieldElem{static_cast<std::uint32_t>(pow3(i))}));
    return coordinate_form(ctx.degree(), weights);
}

EisensteinInt walsh_at(const TernaryFn& f, FieldElem b) {
    const auto lin = linear_form_table(f.field(), b);
    std::array<std::int64_t, 3> counts{};
    for (std::uint32_t x = 0; x < f.size(); ++x) ++counts[(f.at(x) + 3 - lin[x]) % 3];
    return from_counts(counts[0], counts[1], counts[2]);
}

WalshSpectrum spectrum_naive(const TernaryFn& f, bool force) {
    const FieldCtx& ctx = f.field();
    if (ctx.degree() > kNaiveSpectrumLimit && !force)
        throw std::invalid_argument("spectrum_naive: n = " + std::to_string(ctx.degree()) +
                                    " exceeds the naive limit; pass force to override");
    WalshSpectrum out;
    out.coeffs.resize(ctx.size());
    parallel_for(ctx.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t b = begin; b < end; ++b) out.coeffs[b] = walsh_at(f, FieldElem{static_cast<std::uint32_t>(b)});
    });
    return out;
}

std::vector<FieldElem> dual_basis(const FieldCtx& ctx) {
    const int n = ctx.degree();
    std::vector<FieldElem> basis(n);
    for (int i = 0; i < n; ++i) basis[i] = FieldElem{static_cast<std::uint32_t>(pow3(i))};
    F3Matrix gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram.at(i, j) = ctx.trace(ctx.mul(basis[i], basis[j]));
    const auto inv = gram.inverse();
    if (!inv) throw std::logic_error("trace Gram matrix is singular");
    std::vector<FieldElem> dual(n, FieldCtx::zero());
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) dual[j] = ctx.add(dual[j], ctx.scale(basis[l], inv->at(j, l)));
    return dual;
}

WalshSpectrum spectrum_fast(const TernaryFn& f) {
    const FieldCtx& ctx = f.field();
    std::vector<EisensteinInt> buf(ctx.size());
    for (std::uint32_t x = 0; x < ctx.size(); ++x) buf[x] = omega_power(f.at(x));
    radix3_transform(buf, ctx.degree(), false);

    // buf is indexed by y with y_i = Tr(b x^i); b = sum_i y_i b*_i.
    const auto to_b = coordinate_map(ctx, dual_basis(ctx));
    WalshSpectrum out;
    out.coeffs.resize(ctx.size());
    for (std::uint32_t y = 0; y < ctx.size(); ++y) out.coeffs[to_b[y]] = buf[y];
    return out;
}

std::vector<EisensteinInt> inverse_transform(const FieldCtx& ctx, const WalshSpectrum& spectrum) {
    if (spectrum.size() != ctx.size()) throw std::invalid_argument("inverse_transform: size mismatch");
    const auto to_b = coordinate_map(ctx, dual_basis(ctx));
    std::vector<EisensteinInt> buf(ctx.size());
    for (std::uint32_t y = 0; y < ctx.size(); ++y) buf[y] = spectrum.coeffs[to_b[y]];
    radix3_transform(buf, ctx.degree(), true);
    const auto scale = static_cast<std::int64_t>(ctx.size());
    for (auto& v : buf) {
        if (v.u % scale != 0 || v.v % scale != 0) throw std::domain_error("inverse_transform: inexact division");
        v = {v.u / scale, v.v / scale};
    }
    return buf;
}

std::int64_t parseval_sum(const WalshSpectrum& spectrum) {
    std::int64_t s = 0;
    for (const auto& c : spectrum.coeffs) s += eis_norm(c);
    return s;
}

}  // namespace bent3
