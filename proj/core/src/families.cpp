#include "bent3/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "bent3/errors.hpp"
#include "bent3/int_math.hpp"
#include "bent3/linalg.hpp"

namespace bent3 {

namespace {

std::uint64_t narrow_exponent(u128 e, const char* what) {
    if (e > static_cast<u128>(UINT64_MAX)) throw std::overflow_error(std::string(what) + ": exponent exceeds 64 bits");
    return static_cast<std::uint64_t>(e);
}

void require_degree(const FieldCtx& ctx, int expected, const char* what) {
    if (ctx.degree() != expected)
        throw std::invalid_argument(std::string(what) + ": field degree " + std::to_string(ctx.degree()) +
                                    " does not match n = " + std::to_string(expected));
}

void require_k(int k, const char* what) {
    if (k < 1) throw std::invalid_argument(std::string(what) + ": k must be positive");
}

// a1^e for a possibly negative or very large e, via the log table.
FieldElem pow_wide(const FieldCtx& ctx, FieldElem x, i128 e) {
    const std::uint64_t order = ctx.order();
    const std::uint64_t l = ctx.log(x);
    return ctx.exp(mul_mod(l, reduce_mod(e, order), order));
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::BinomialGeneral: return "binomial-general";
        case Family::BinomialT3: return "binomial-k3mod4";
        case Family::Trinomial: return "trinomial";
        case Family::ExceptionalT7: return "exceptional-T7";
        case Family::ExceptionalT8: return "exceptional-T8";
        case Family::Baseline: return "baseline";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    if (name == "binomial-general") return Family::BinomialGeneral;
    if (name == "binomial-k3mod4" || name == "T3") return Family::BinomialT3;
    if (name == "trinomial") return Family::Trinomial;
    if (name == "exceptional-T7" || name == "T7") return Family::ExceptionalT7;
    if (name == "exceptional-T8" || name == "T8") return Family::ExceptionalT8;
    if (name == "baseline" || name == "baseline-known") return Family::Baseline;
    return std::nullopt;
}

std::string_view exceptional_name(ExceptionalCase c) {
    switch (c) {
        case ExceptionalCase::T7Case1: return "T7-case1";
        case ExceptionalCase::T7Case3: return "T7-case3";
        case ExceptionalCase::T8: return "T8";
    }
    return "?";
}

std::optional<ExceptionalCase> parse_exceptional(std::string_view name) {
    if (name == "T7-case1") return ExceptionalCase::T7Case1;
    if (name == "T7-case3") return ExceptionalCase::T7Case3;
    if (name == "T8") return ExceptionalCase::T8;
    return std::nullopt;
}

int family_field_degree(Family f, int k) { return f == Family::Trinomial ? 2 * k : 4 * k; }

std::uint64_t binomial_d1(int k) { return narrow_exponent(2 * (pow3_wide(k) + 1), "binomial_d1"); }

std::uint64_t binomial_d2(int k) {
    const std::uint64_t q = narrow_exponent(pow3_wide(k) + 1, "binomial_d2");
    return narrow_exponent(static_cast<u128>(q) * q, "binomial_d2");
}

std::uint64_t trinomial_d1(int k) { return narrow_exponent(2 * pow3_wide(k) + 4, "trinomial_d1"); }
std::uint64_t trinomial_d2(int k) { return narrow_exponent(pow3_wide(k) + 5, "trinomial_d2"); }

std::uint64_t baseline_exponent(int k) {
    return narrow_exponent(pow3_wide(3 * k) + pow3_wide(2 * k) - pow3_wide(k) + 1, "baseline_exponent");
}

FieldElem coeff_a2(const FieldCtx& ctx, int k, FieldElem a1, int sign) {
    require_k(k, "coeff_a2");
    require_degree(ctx, 4 * k, "coeff_a2");
    if (sign != 1 && sign != -1) throw std::invalid_argument("coeff_a2: sign must be +1 or -1");
    if (a1 == FieldCtx::zero() || ctx.is_square(a1)) throw std::domain_error("coeff_a2: a1 must be a nonsquare");

    const u128 q = pow3_wide(k);
    const auto e1 = static_cast<i128>((q + 1) / 2);
    const auto e2 = static_cast<i128>((q - 1) * (q * q + 1) / 4);
    FieldElem hi = pow_wide(ctx, a1, e1 + e2);
    const FieldElem lo = pow_wide(ctx, a1, e1 - e2);
    if (k % 2) hi = ctx.neg(hi);
    const FieldElem bracket = ctx.add(hi, lo);
    if (bracket == FieldCtx::zero()) throw ConsistencyError("coeff_a2: vanishing bracket");

    const FieldElem ik = ctx.exp(static_cast<std::uint64_t>(ctx.order() / 4) * static_cast<std::uint64_t>(k % 4));
    FieldElem a2 = ctx.mul(ik, bracket);
    if (sign < 0) a2 = ctx.neg(a2);
    if (ctx.is_square(a2)) throw ConsistencyError("coeff_a2: a2 is a square");
    return a2;
}

TrinomialCoefficients trinomial_coefficients(const FieldCtx& ctx, int k, int sign) {
    require_k(k, "trinomial_coefficients");
    require_degree(ctx, 2 * k, "trinomial_coefficients");
    if (k <= 1) throw std::domain_error("trinomial: k must exceed 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("trinomial: sign must be +1 or -1");

    const FieldElem i = ctx.fourth_root_of_unity();
    const FieldElem si = sign > 0 ? i : ctx.neg(i);
    if (k % 2) return {FieldCtx::one(), si, FieldCtx::one()};

    const auto q = static_cast<i128>(pow3_wide(k));
    const FieldElem alpha = ctx.generator();
    const FieldElem a1 = pow_wide(ctx, alpha, q + 2);
    const FieldElem a2 = ctx.mul(si, pow_wide(ctx, a1, -(q - 3) / 2));
    const FieldElem check = ctx.neg(ctx.mul(si, pow_wide(ctx, alpha, (q + 5) / 2)));
    if (a2 != check) throw ConsistencyError("trinomial a2 double identity");
    return {a1, a2, alpha};
}

FieldElem embedded_quartic_root(const FieldCtx& ctx, std::span<const int, 5> quartic) {
    if (ctx.degree() % 4 != 0) throw std::domain_error("embedded_quartic_root: 4 does not divide n");
    std::optional<FieldElem> best;
    for (FieldElem x : ctx.subfield_elements(4)) {
        if (x == FieldCtx::zero()) continue;
        FieldElem acc = FieldCtx::zero();
        for (int i = 4; i >= 0; --i) acc = ctx.add(ctx.mul(acc, x), ctx.constant(quartic[i]));
        if (acc == FieldCtx::zero() && (!best || ctx.log(x) < ctx.log(*best))) best = x;
    }
    if (!best) throw ConsistencyError("quartic has no root in the embedded GF(81)");
    return *best;
}

std::array<FieldElem, 2> exceptional_coefficients(const FieldCtx& ctx, FieldElem a, ExceptionalCase which) {
    const FieldElem a5 = ctx.pow(a, 5);
    switch (which) {
        case ExceptionalCase::T7Case1: return {a, a5};
        case ExceptionalCase::T7Case3: return {a5, a};
        case ExceptionalCase::T8: return {a5, ctx.inv(a5)};
    }
    throw std::invalid_argument("exceptional_coefficients: unknown case");
}

TernaryFn make_binomial_general(FieldRef ctx, int k, FieldElem a1, int sign) {
    const FieldElem a2 = coeff_a2(*ctx, k, a1, sign);
    return TernaryFn::from_trace_form(ctx, {{a1, binomial_d1(k)}, {a2, binomial_d2(k)}});
}

TernaryFn make_binomial_T3(FieldRef ctx, int k) {
    require_k(k, "make_binomial_T3");
    require_degree(*ctx, 4 * k, "make_binomial_T3");
    if (k % 2 == 0) throw std::domain_error("make_binomial_T3: k must be odd");
    const FieldElem a = embedded_quartic_root(*ctx, kQuarticT3);
    return TernaryFn::from_trace_form(ctx, {{a, binomial_d1(k)}, {ctx->inv(a), binomial_d2(k)}});
}

TernaryFn make_trinomial(FieldRef ctx, int k, int sign) {
    require_k(k, "make_trinomial");
    if (k <= 1) throw std::domain_error("make_trinomial: k must exceed 1");
    if (k % 4 == 0)
        throw std::domain_error("make_trinomial: k = " + std::to_string(k) + " is divisible by four; k must be not divisible by four");
    const auto c = trinomial_coefficients(*ctx, k, sign);
    return TernaryFn::from_trace_form(ctx, {{c.a1, trinomial_d1(k)}, {c.a2, trinomial_d2(k)}, {c.a3, 2}});
}

TernaryFn make_exceptional(FieldRef ctx, int k, ExceptionalCase which) {
    require_k(k, "make_exceptional");
    require_degree(*ctx, 4 * k, "make_exceptional");
    if (k % 2 == 0) throw std::domain_error("make_exceptional: k must be odd");
    const bool one_mod_4 = k % 4 == 1;
    if ((which == ExceptionalCase::T7Case3) == one_mod_4)
        throw std::domain_error(std::string("make_exceptional: ") + std::string(exceptional_name(which)) +
                                (one_mod_4 ? " requires k = 3 (mod 4)" : " requires k = 1 (mod 4)"));
    const FieldElem a = embedded_quartic_root(*ctx, kQuarticExceptional);
    const auto [a1, a2] = exceptional_coefficients(*ctx, a, which);
    return TernaryFn::from_trace_form(ctx, {{a1, binomial_d1(k)}, {a2, binomial_d2(k)}});
}

TernaryFn make_baseline(FieldRef ctx, int k) {
    require_k(k, "make_baseline");
    require_degree(*ctx, 4 * k, "make_baseline");
    return TernaryFn::from_trace_form(ctx, {{FieldCtx::one(), baseline_exponent(k)}, {FieldCtx::one(), 2}});
}

std::vector<std::string> family_warnings(const FamilySpec& spec) {
    std::vector<std::string> out;
    if (spec.family == Family::BinomialT3 && spec.k % 4 == 1)
        out.push_back("k = 1 (mod 4) lies outside k = 3 (mod 4); bentness of the univariate form is not guaranteed");
    return out;
}

TernaryFn make_family(FieldRef ctx, const FamilySpec& spec) {
    switch (spec.family) {
        case Family::BinomialGeneral:
            return make_binomial_general(ctx, spec.k, spec.a1.value_or(ctx->generator()), spec.sign);
        case Family::BinomialT3: return make_binomial_T3(ctx, spec.k);
        case Family::Trinomial: return make_trinomial(ctx, spec.k, spec.sign);
        case Family::ExceptionalT7: {
            const auto which = spec.which.value_or(spec.k % 4 == 3 ? ExceptionalCase::T7Case3 : ExceptionalCase::T7Case1);
            if (which == ExceptionalCase::T8) throw std::invalid_argument("exceptional-T7: case T8 belongs to exceptional-T8");
            return make_exceptional(ctx, spec.k, which);
        }
        case Family::ExceptionalT8: return make_exceptional(ctx, spec.k, ExceptionalCase::T8);
        case Family::Baseline: return make_baseline(ctx, spec.k);
    }
    throw std::invalid_argument("make_family: unknown family");
}

QuarticBasis::QuarticBasis(const FieldCtx& ctx, int k, FieldElem a) : ctx_(ctx), k_(k) {
    require_degree(ctx, 4 * k, "QuarticBasis");
    if (k % 2 == 0) throw std::invalid_argument("QuarticBasis: k must be odd");
    powers_[0] = FieldCtx::one();
    for (int i = 1; i < 4; ++i) powers_[i] = ctx.mul(powers_[i - 1], a);

    // For odd k the relative traces of a^i are the absolute traces over GF(81), so lie in F3.
    F3Matrix gram(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const FieldElem t = ctx.trace_rel(ctx.mul(powers_[i], powers_[j]), k);
            if (t.code > 2) throw ConsistencyError("relative trace of a power of a is outside F3");
            gram.at(i, j) = static_cast<std::uint8_t>(t.code);
        }
    const auto inv = gram.inverse();
    if (!inv) throw ConsistencyError("{1, a, a^2, a^3} is not a basis");
    for (int j = 0; j < 4; ++j) {
        dual_[j] = FieldCtx::zero();
        for (int l = 0; l < 4; ++l) dual_[j] = ctx.add(dual_[j], ctx.scale(powers_[l], inv->at(j, l)));
    }
}

std::array<FieldElem, 4> QuarticBasis::decompose(FieldElem b) const {
    std::array<FieldElem, 4> out{};
    for (int j = 0; j < 4; ++j) out[j] = ctx_.trace_rel(ctx_.mul(b, dual_[j]), k_);
    return out;
}

FieldElem QuarticBasis::compose(const std::array<FieldElem, 4>& coords) const {
    FieldElem acc = FieldCtx::zero();
    for (int j = 0; j < 4; ++j) acc = ctx_.add(acc, ctx_.mul(coords[j], powers_[j]));
    return acc;
}

EisensteinInt dual_T3_closed_form(const FieldCtx& ctx, int k, FieldElem b) {
    const QuarticBasis basis(ctx, k, embedded_quartic_root(ctx, kQuarticT3));
    // The derivation sums w^{f(x) + Tr(bx)}; evaluate it at -b.
    const auto [b0, b1, b2, b3] = basis.decompose(ctx.neg(b));
    const auto& F = ctx;
    const FieldElem s = F.add(b0, b2);

    std::uint8_t value;
    if (s == FieldCtx::zero()) {
        const FieldElem root = F.frobenius(F.sub(b0, b3), k - 1);
        value = F.trace_sub(F.mul(root, F.add(F.sub(b1, b0), b3)), k);
    } else {
        const FieldElem r = F.div(F.sub(b3, b0), s);
        const FieldElem t = F.mul(r, r);
        const FieldElem x1 = F.neg(F.frobenius(F.div(s, F.add(t, FieldCtx::one())), k - 1));
        const FieldElem x3 = F.mul(x1, F.sub(r, FieldCtx::one()));
        const FieldElem x1s = F.mul(x1, x1), x3s = F.mul(x3, x3);
        FieldElem h = F.mul(x3s, x1s);
        h = F.add(h, F.mul(x1, F.mul(x3s, x3)));
        h = F.sub(h, F.mul(x3s, x3s));
        h = F.add(h, F.mul(x1, b3));
        h = F.add(h, F.mul(x3, b1));
        value = F.trace_sub(h, k);
    }
    return eis_scale(omega_power(value), static_cast<std::int64_t>(pow3(2 * k)));
}

}  // namespace bent3
