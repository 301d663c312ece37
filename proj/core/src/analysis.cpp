#include "bent3/analysis.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "bent3/int_math.hpp"

namespace bent3 {

std::string_view regularity_name(Regularity r) {
    switch (r) {
        case Regularity::Regular: return "regular";
        case Regularity::WeaklyRegularMinus: return "weak-minus";
        default: return "none";
    }
}

Certificate check_bent(const TernaryFn& f) { return check_bent(f, spectrum_fast(f)); }

Certificate check_bent(const TernaryFn& f, const WalshSpectrum& spectrum) {
    const FieldCtx& ctx = f.field();
    const int n = ctx.degree();
    const auto target = static_cast<std::int64_t>(ctx.size());

    Certificate cert;
    cert.degree = algebraic_degree(f);
    cert.is_bent = true;
    for (std::uint32_t b = 0; b < spectrum.size(); ++b) {
        const std::int64_t nb = eis_norm(spectrum[b]);
        if (nb != target) {
            cert.is_bent = false;
            cert.counterexample = FieldElem{b};
            cert.counterexample_norm = nb;
            break;
        }
    }
    if (!cert.is_bent) {
        cert.regularity = Regularity::NotBent;
        return cert;
    }
    if (n % 2 != 0) {
        cert.regularity = Regularity::NotWeaklyRegular;
        cert.notes.push_back("odd n: 3^{n/2} is not an integer, regularity is not decided in Z[w]");
        return cert;
    }

    const auto magnitude = static_cast<std::int64_t>(pow3(n / 2));
    for (int unit : {1, -1}) {
        std::vector<std::uint8_t> dual(spectrum.size());
        bool ok = true;
        for (std::uint32_t b = 0; b < spectrum.size() && ok; ++b) {
            const auto rm = as_root_multiple(spectrum[b], magnitude);
            if (!rm || rm->sign != unit) {
                ok = false;
                break;
            }
            dual[b] = static_cast<std::uint8_t>(rm->j);
        }
        if (ok) {
            cert.unit = unit;
            cert.regularity = unit == 1 ? Regularity::Regular : Regularity::WeaklyRegularMinus;
            cert.dual.emplace(f.field_ref(), std::move(dual));
            return cert;
        }
    }
    cert.regularity = Regularity::NotWeaklyRegular;
    for (std::uint32_t b = 0; b < spectrum.size(); ++b) {
        if (!as_root_multiple(spectrum[b], magnitude)) {
            cert.notes.push_back("non-Eisenstein unit at b=" + std::to_string(b) + ": S=" + to_string(spectrum[b]));
            break;
        }
    }
    if (cert.notes.empty()) cert.notes.push_back("unit sign changes across b");
    return cert;
}

int algebraic_degree(const TernaryFn& f) {
    const int n = f.field().degree();
    std::vector<std::uint8_t> c(f.table().begin(), f.table().end());
    // Per-axis interpolation: f(t) = c0 + c1 t + c2 t^2 with
    // c0 = f(0), c1 = f(2) - f(1), c2 = -(f(0) + f(1) + f(2)).
    std::uint32_t stride = 1;
    for (int axis = 0; axis < n; ++axis, stride *= 3) {
        for (std::uint32_t base = 0; base < c.size(); base += 3 * stride) {
            for (std::uint32_t j = 0; j < stride; ++j) {
                const int f0 = c[base + j], f1 = c[base + j + stride], f2 = c[base + j + 2 * stride];
                c[base + j + stride] = static_cast<std::uint8_t>((f2 - f1 + 3) % 3);
                c[base + j + 2 * stride] = static_cast<std::uint8_t>((6 - f0 - f1 - f2) % 3);
            }
        }
    }
    std::vector<std::uint8_t> weight(c.size(), 0);
    int degree = c[0] ? 0 : -1;
    for (int i = 0; i < n; ++i) {
        const auto p = static_cast<std::uint32_t>(pow3(i));
        for (std::uint32_t j = p; j < 3 * p; ++j) {
            weight[j] = static_cast<std::uint8_t>(weight[j % p] + j / p);
            if (c[j]) degree = std::max<int>(degree, weight[j]);
        }
    }
    return std::max(degree, 0);
}

int univariate_degree_bound(const TernaryFn& f) {
    if (!f.symbolic()) throw std::domain_error("univariate_degree_bound: no trace form");
    const std::uint64_t order = f.field().order();
    int bound = 0;
    for (const auto& t : *f.symbolic()) {
        if (t.coef == FieldCtx::zero() || t.exponent == 0) continue;
        std::uint64_t d = t.exponent % order;
        if (d == 0) d = order;
        bound = std::max(bound, digit_sum3(d));
    }
    return bound;
}

bool is_balanced(const TernaryFn& g) {
    std::array<std::uint32_t, 3> counts{};
    for (auto v : g.table()) ++counts[v];
    const std::uint32_t third = g.size() / 3;
    return g.size() % 3 == 0 && counts[0] == third && counts[1] == third && counts[2] == third;
}

TernaryFn dual_of(const Certificate& cert) {
    if (!cert.is_bent) throw std::domain_error("dual_of: function is not bent");
    if (!cert.dual) throw std::domain_error("dual_of: function is not weakly regular");
    return *cert.dual;
}

}  // namespace bent3
