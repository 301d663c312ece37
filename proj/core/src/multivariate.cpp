#include "bent3/multivariate.hpp"

#include <stdexcept>

#include "bent3/int_math.hpp"

namespace bent3 {

namespace {

using Poly = std::map<Monomial, FieldElem>;

Poly multiply(const FieldCtx& ctx, const Poly& p, const Poly& q) {
    Poly out;
    for (const auto& [mp, cp] : p) {
        for (const auto& [mq, cq] : q) {
            Monomial m{};
            for (int i = 0; i < 4; ++i) m[i] = static_cast<std::uint8_t>(mp[i] + mq[i]);
            auto [it, fresh] = out.try_emplace(m, FieldCtx::zero());
            it->second = ctx.add(it->second, ctx.mul(cp, cq));
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == FieldCtx::zero(); });
    return out;
}

std::string monomial_string(const Monomial& m) {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

bool MultivariatePoly::over_prime_field() const {
    for (const auto& [m, c] : terms)
        if (c.code > 2) return false;
    return true;
}

std::string MultivariatePoly::to_string() const {
    std::string body;
    // Highest x0 power first, then x1, ..., so the output reads like x0^4 + x0*x1^3 + ...
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [m, c] = *it;
        const std::string mono = monomial_string(m);
        if (c.code <= 2) {
            const bool minus = c.code == 2;
            if (body.empty())
                body += minus ? "-" : "";
            else
                body += minus ? " - " : " + ";
            body += mono;
        } else {
            body += (body.empty() ? "" : " + ") + coef_field->format_log(c) + "*" + mono;
        }
    }
    return "Tr_k(" + (body.empty() ? std::string("0") : body) + ")";
}

bool same_f3_polynomial(const MultivariatePoly& p, const MultivariatePoly& q) {
    if (!p.over_prime_field() || !q.over_prime_field()) return false;
    if (p.terms.size() != q.terms.size()) return false;
    for (auto a = p.terms.begin(), b = q.terms.begin(); a != p.terms.end(); ++a, ++b)
        if (a->first != b->first || a->second.code != b->second.code) return false;
    return true;
}

MultivariatePoly expand_quartic(const FieldRef& ctx_ref, FieldElem a, int k, std::span<const TraceTerm> terms) {
    const FieldCtx& ctx = *ctx_ref;
    if (k < 1) throw std::invalid_argument("expand_quartic: k must be positive");

    // L_j = x^{3^{jk}} = sum_i x_i a^{i 3^{jk}}, j = 0..3.
    std::array<Poly, 4> linear;
    for (int j = 0; j < 4; ++j) {
        const FieldElem aj = ctx.frobenius(a, j * k);
        FieldElem coef = FieldCtx::one();
        for (int i = 0; i < 4; ++i) {
            Monomial m{};
            m[i] = 1;
            linear[j][m] = coef;
            coef = ctx.mul(coef, aj);
        }
    }

    Poly total;
    for (const auto& term : terms) {
        if (term.coef == FieldCtx::zero()) continue;
        Poly prod{{Monomial{}, term.coef}};
        std::uint64_t d = term.exponent;
        for (int pos = 0; d > 0; ++pos, d /= 3) {
            const auto digit = static_cast<int>(d % 3);
            if (digit == 0) continue;
            if (pos % k != 0)
                throw std::domain_error("expand_quartic: exponent " + std::to_string(term.exponent) +
                                        " has a base-3 digit off the multiples of k");
            for (int r = 0; r < digit; ++r) prod = multiply(ctx, prod, linear[(pos / k) % 4]);
        }
        for (const auto& [m, c] : prod) {
            auto [it, fresh] = total.try_emplace(m, FieldCtx::zero());
            it->second = ctx.add(it->second, c);
        }
    }

    MultivariatePoly out;
    out.k = k;
    out.coef_field = ctx_ref;
    for (const auto& [m, c] : total) {
        FieldElem t = FieldCtx::zero();
        for (int j = 0; j < 4; ++j) t = ctx.add(t, ctx.frobenius(c, j * k));
        if (t != FieldCtx::zero()) out.terms[m] = t;
    }
    return out;
}

MultivariatePoly multivariate_expand(const TernaryFn& f, int k, std::span<const int, 5> quartic) {
    if (!f.symbolic()) throw std::domain_error("multivariate_expand: function has no trace form");
    if (f.field().degree() != 4 * k) throw std::invalid_argument("multivariate_expand: n must equal 4k");
    const FieldElem a = embedded_quartic_root(f.field(), quartic);
    return expand_quartic(f.field_ref(), a, k, *f.symbolic());
}

std::span<const int, 5> family_quartic(Family family) {
    switch (family) {
        case Family::BinomialT3: return kQuarticT3;
        case Family::ExceptionalT7:
        case Family::ExceptionalT8: return kQuarticExceptional;
        default: throw std::invalid_argument("family_quartic: family has no quartic parameter");
    }
}

MultivariatePoly expand_family_formal(Family family, int k, std::optional<ExceptionalCase> which) {
    if (k < 1 || k % 2 == 0) throw std::domain_error("expand_family_formal: k must be odd");
    const auto quartic = family_quartic(family);
    const FieldRef f81 = FieldCtx::create(4, std::vector<int>(quartic.begin(), quartic.end()));
    const FieldElem a = f81->root();

    std::array<FieldElem, 2> coef;
    if (family == Family::BinomialT3) {
        coef = {a, f81->inv(a)};
    } else {
        ExceptionalCase c = family == Family::ExceptionalT8
                                ? ExceptionalCase::T8
                                : which.value_or(k % 4 == 3 ? ExceptionalCase::T7Case3 : ExceptionalCase::T7Case1);
        if ((c == ExceptionalCase::T7Case3) != (k % 4 == 3))
            throw std::domain_error("expand_family_formal: case does not match k mod 4");
        coef = exceptional_coefficients(*f81, a, c);
    }
    const std::vector<TraceTerm> terms{{coef[0], binomial_d1(k)}, {coef[1], binomial_d2(k)}};
    return expand_quartic(f81, a, k, terms);
}

TernaryFn realize(const MultivariatePoly& p, FieldRef ctx_ref, FieldElem a) {
    const FieldCtx& ctx = *ctx_ref;
    if (ctx.degree() % 4 != 0) throw std::invalid_argument("realize: n must be a multiple of 4");
    const int k = ctx.degree() / 4;
    const bool same_field = p.coef_field.get() == ctx_ref.get() && p.k == k;
    if (!same_field && !p.over_prime_field())
        throw std::invalid_argument("realize: coefficients outside F3 need the polynomial's own field");

    std::vector<std::pair<Monomial, FieldElem>> terms;
    for (const auto& [m, c] : p.terms) terms.emplace_back(m, same_field ? c : ctx.constant(static_cast<int>(c.code)));

    const auto sub = ctx.subfield_elements(k);
    const std::size_t q = sub.size();
    std::vector<std::array<FieldElem, 5>> powers(q);
    for (std::size_t i = 0; i < q; ++i) {
        powers[i][0] = FieldCtx::one();
        for (int e = 1; e < 5; ++e) powers[i][e] = ctx.mul(powers[i][e - 1], sub[i]);
    }
    std::array<FieldElem, 4> apow{FieldCtx::one(), a, ctx.mul(a, a), ctx.pow(a, 3)};
    std::array<std::vector<FieldElem>, 4> scaled;
    for (int j = 0; j < 4; ++j)
        for (FieldElem s : sub) scaled[j].push_back(ctx.mul(s, apow[j]));

    std::vector<std::uint8_t> table(ctx.size(), 0);
    std::vector<bool> seen(ctx.size(), false);
    std::array<std::size_t, 4> idx{};
    for (std::size_t count = 0; count < ctx.size(); ++count) {
        FieldElem x = FieldCtx::zero();
        for (int j = 0; j < 4; ++j) x = ctx.add(x, scaled[j][idx[j]]);
        FieldElem value = FieldCtx::zero();
        for (const auto& [m, c] : terms) {
            FieldElem t = c;
            for (int j = 0; j < 4; ++j) {
                if (m[j] > 4) throw std::invalid_argument("realize: exponent above 4");
                if (m[j]) t = ctx.mul(t, powers[idx[j]][m[j]]);
            }
            value = ctx.add(value, t);
        }
        if (seen[x.code]) throw std::invalid_argument("realize: {1, a, a^2, a^3} is not a basis");
        seen[x.code] = true;
        table[x.code] = ctx.trace_sub(value, k);
        for (int j = 0; j < 4 && ++idx[j] == q; ++j) idx[j] = 0;
    }
    return TernaryFn(ctx_ref, std::move(table));
}

bool exceptionality_check(Family family, std::optional<ExceptionalCase> which, std::span<const int> ks) {
    if (ks.empty()) return true;
    const MultivariatePoly first = expand_family_formal(family, ks[0], which);
    for (std::size_t i = 1; i < ks.size(); ++i)
        if (!same_f3_polynomial(first, expand_family_formal(family, ks[i], which))) return false;
    return first.over_prime_field();
}

}  // namespace bent3
