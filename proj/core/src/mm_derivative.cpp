#include "bent3/mm_derivative.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "bent3/errors.hpp"
#include "bent3/int_math.hpp"
#include "bent3/parallel.hpp"

namespace bent3 {

bool Transcript::check(const std::string& name, bool ok, const std::string& witness) {
    if (!ok) {
        ++failures_;
        if (failures_ > kMaxFailures) return ok;
    }
    std::string line = "CHECK " + name + (ok ? " PASS" : " FAIL");
    if (!witness.empty()) line += " " + witness;
    lines_.push_back(std::move(line));
    return ok;
}

void Transcript::note(const std::string& text) { lines_.push_back("NOTE " + text); }

void Transcript::append(const Transcript& other) {
    lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
    failures_ += other.failures_;
}

std::string Transcript::str() const {
    std::string out;
    for (const auto& l : lines_) out += l + "\n";
    if (failures_ > kMaxFailures) out += "NOTE " + std::to_string(failures_ - kMaxFailures) + " further failures omitted\n";
    return out;
}

TernaryFn d1(const TernaryFn& f, FieldElem c) {
    std::vector<std::uint8_t> out(f.size());
    f.field().translation(c).for_each(
        [&](std::uint32_t x, std::uint32_t xc) { out[x] = static_cast<std::uint8_t>((f.at(xc) + 3 - f.at(x)) % 3); });
    return TernaryFn(f.field_ref(), std::move(out));
}

TernaryFn d2(const TernaryFn& f, FieldElem c, FieldElem d) {
    const FieldCtx& ctx = f.field();
    const Translation tc = ctx.translation(c), td = ctx.translation(d), tcd = ctx.translation(ctx.add(c, d));
    std::vector<std::uint8_t> out(f.size());
    for (std::uint32_t x = 0; x < f.size(); ++x)
        out[x] = static_cast<std::uint8_t>((f.at(tcd(x)) + 6 - f.at(tc(x)) - f.at(td(x)) + f.at(x)) % 3);
    return TernaryFn(f.field_ref(), std::move(out));
}

namespace {

constexpr std::int64_t kNoFailure = -1;

// For each coset rep, the index of the first element of V where f stops
// being affine on w + V, or kNoFailure.
std::vector<std::int64_t> affine_failures(const TernaryFn& f, const std::vector<FieldElem>& reps, const Subspace& v) {
    const FieldCtx& ctx = f.field();
    const auto vel = elements(ctx, v);
    std::vector<std::int64_t> fail(reps.size(), kNoFailure);
    parallel_for(reps.size(), [&](std::size_t begin, std::size_t end) {
        std::vector<std::uint8_t> pred(vel.size());
        std::vector<std::uint8_t> s(v.dim());
        for (std::size_t r = begin; r < end; ++r) {
            const FieldElem w = reps[r];
            const std::uint8_t base = f(w);
            for (int i = 0; i < v.dim(); ++i) s[i] = static_cast<std::uint8_t>((f(ctx.add(w, v.basis[i])) + 3 - base) % 3);
            pred[0] = base;
            for (int i = 0; i < v.dim(); ++i) {
                const auto p = static_cast<std::uint32_t>(pow3(i));
                for (std::uint32_t j = p; j < 3 * p; ++j) pred[j] = static_cast<std::uint8_t>((pred[j % p] + (j / p) * s[i]) % 3);
            }
            for (std::size_t j = 0; j < vel.size(); ++j) {
                if (f(ctx.add(w, vel[j])) != pred[j]) {
                    fail[r] = static_cast<std::int64_t>(j);
                    break;
                }
            }
        }
    });
    return fail;
}

std::string elem(const FieldCtx& ctx, FieldElem x) { return ctx.format_log(x); }

// f(v + w) = Tr(v pi(w)) + g(w) over all v in V, w in W.
bool reproduces(const TernaryFn& f, const std::vector<FieldElem>& vel, const MMWitness& wit, std::string& witness) {
    const FieldCtx& ctx = f.field();
    for (std::size_t i = 0; i < wit.w_elements.size(); ++i) {
        for (FieldElem v : vel) {
            const int expect = (ctx.trace(ctx.mul(v, wit.pi[i])) + wit.g[i]) % 3;
            if (f(ctx.add(v, wit.w_elements[i])) != expect) {
                witness = "v=" + elem(ctx, v) + " w=" + elem(ctx, wit.w_elements[i]);
                return false;
            }
        }
    }
    return true;
}

bool all_distinct(std::vector<FieldElem> xs) {
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

// Solves M mu = s and returns sum_j mu_j basis_j.
FieldElem solve_into(const FieldCtx& ctx, const F3Matrix& m_inv, const std::vector<std::uint8_t>& s,
                     const std::vector<FieldElem>& basis) {
    const auto mu = m_inv.apply(s);
    FieldElem acc = FieldCtx::zero();
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (mu[j]) acc = ctx.add(acc, ctx.scale(basis[j], mu[j]));
    return acc;
}

std::vector<std::uint8_t> slopes(const TernaryFn& f, FieldElem w, const Subspace& v) {
    const FieldCtx& ctx = f.field();
    std::vector<std::uint8_t> s(v.dim());
    for (int i = 0; i < v.dim(); ++i) s[i] = static_cast<std::uint8_t>((f(ctx.add(w, v.basis[i])) + 3 - f(w)) % 3);
    return s;
}

FieldElem pow_u128(const FieldCtx& ctx, FieldElem x, u128 e) {
    if (x == FieldCtx::zero()) return e == 0 ? FieldCtx::one() : FieldCtx::zero();
    return ctx.pow(x, static_cast<std::int64_t>(e % ctx.order()));
}

}  // namespace

bool d2_vanishes_on(const TernaryFn& f, const Subspace& v, Transcript* transcript) {
    const FieldCtx& ctx = f.field();
    const auto reps = elements(ctx, complement(ctx, v));
    const auto fail = affine_failures(f, reps, v);
    const auto vel = elements(ctx, v);
    bool ok = true;
    for (std::size_t r = 0; r < reps.size(); ++r) {
        if (fail[r] == kNoFailure) continue;
        ok = false;
        if (!transcript) break;
        transcript->check("d2-vanishes", false, "w=" + elem(ctx, reps[r]) + " v=" + elem(ctx, vel[fail[r]]));
    }
    if (ok && transcript) transcript->check("d2-vanishes", true, "cosets=" + std::to_string(reps.size()));
    return ok;
}

bool derivative_balanced(const TernaryFn& f, FieldElem c) {
    std::array<std::uint32_t, 3> hist{};
    f.field().translation(c).for_each([&](std::uint32_t x, std::uint32_t xc) { ++hist[(f.at(xc) + 3 - f.at(x)) % 3]; });
    return hist[0] == hist[1] && hist[1] == hist[2];
}

MMResult check_thm2(const TernaryFn& f, const Subspace& v) {
    const FieldCtx& ctx = f.field();
    if (2 * v.dim() != ctx.degree()) throw std::invalid_argument("check_thm2: dim V must be n/2");
    MMResult res;
    Transcript& t = res.transcript;

    const bool supplementary = t.check("orthogonal-supplementary", trace_gram(ctx, v, v).rank() == v.dim());
    const bool flat = d2_vanishes_on(f, v, &t);

    const auto vel = elements(ctx, v);
    std::vector<std::uint8_t> balanced(vel.size(), 1);
    parallel_for(vel.size() - 1, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin + 1; j < end + 1; ++j) balanced[j] = derivative_balanced(f, vel[j]);
    });
    bool all_balanced = true;
    for (std::size_t j = 1; j < vel.size(); ++j) {
        if (balanced[j]) continue;
        all_balanced = false;
        t.check("d1-balanced", false, "c=" + elem(ctx, vel[j]));
    }
    if (all_balanced) t.check("d1-balanced", true, "directions=" + std::to_string(vel.size() - 1));

    if (!(supplementary && flat && all_balanced)) return res;

    MMWitness wit;
    wit.mode = MMWitness::Mode::Thm2;
    wit.v = v;
    wit.w = orthogonal(ctx, v);
    wit.w_elements = elements(ctx, wit.w);
    const auto g_inv = trace_gram(ctx, v, v).inverse();
    if (!g_inv) throw ConsistencyError("check_thm2: Gram matrix lost rank");
    for (FieldElem w : wit.w_elements) {
        wit.pi.push_back(solve_into(ctx, *g_inv, slopes(f, w, v), v.basis));
        wit.g.push_back(f(w));
    }
    const bool bijective = t.check("pi-bijective", all_distinct(wit.pi), "|W|=" + std::to_string(wit.pi.size()));
    std::string witness;
    const bool exact = t.check("mm-form-reproduces-f", reproduces(f, vel, wit, witness), witness);
    res.passed = bijective && exact;
    if (res.passed) res.witness = std::move(wit);
    return res;
}

MMResult check_prop3(const TernaryFn& f, const Subspace& v, const Subspace& w) {
    const FieldCtx& ctx = f.field();
    if (2 * v.dim() != ctx.degree() || v.dim() != w.dim())
        throw std::invalid_argument("check_prop3: dim V and dim W must both be n/2");
    if (!meets_trivially(ctx, v, w)) throw std::invalid_argument("check_prop3: V and W intersect nontrivially");
    if (!is_self_orthogonal(ctx, v))
        throw std::invalid_argument("check_prop3: V is not self-orthogonal; use check_thm2");

    MMResult res;
    Transcript& t = res.transcript;
    t.check("self-orthogonal", true);
    if (!d2_vanishes_on(f, v, &t)) return res;

    const auto h_inv = trace_gram(ctx, v, w).inverse();
    if (!t.check("pairing-nondegenerate", h_inv.has_value())) return res;

    MMWitness wit;
    wit.mode = MMWitness::Mode::Prop3;
    wit.v = v;
    wit.w = w;
    wit.w_elements = elements(ctx, w);
    for (FieldElem x : wit.w_elements) {
        wit.pi.push_back(solve_into(ctx, *h_inv, slopes(f, x, v), w.basis));
        wit.g.push_back(f(x));
    }
    const bool perm = t.check("pi-permutes-W", all_distinct(wit.pi), "|W|=" + std::to_string(wit.pi.size()));
    std::string witness;
    const bool exact = t.check("mm-form-reproduces-f", reproduces(f, elements(ctx, v), wit, witness), witness);
    res.passed = perm && exact;
    if (res.passed) res.witness = std::move(wit);
    return res;
}

bool prop1_given_V(const TernaryFn& f, const Subspace& v, Transcript* transcript) {
    return d2_vanishes_on(f, v, transcript);
}

LemmaSubspace build_V_binomial(const FieldCtx& ctx, int k, FieldElem a1, int sign, std::size_t verify_limit) {
    const FieldElem a2 = coeff_a2(ctx, k, a1, sign);
    const u128 q = pow3_wide(k);
    const u128 e = q * q - 1;
    const FieldElem i = ctx.fourth_root_of_unity();
    const FieldElem rhs = pow_u128(ctx, a2, q * e / 2);

    const auto eq1 = [&](FieldElem c) {
        return ctx.trace_rel(ctx.mul(a2, pow_u128(ctx, c, 2 * q)), 2 * k) == FieldCtx::zero();
    };
    const auto eq2 = [&](FieldElem c) {
        return ctx.trace_rel(ctx.mul(a1, pow_u128(ctx, c, 2 * (q + 1))), 2 * k) == FieldCtx::zero();
    };
    const auto eq3 = [&](FieldElem c) {
        const FieldElem ce = pow_u128(ctx, c, e);
        FieldElem br = ctx.add(a1, ctx.mul(pow_u128(ctx, a1, q), ctx.mul(ce, ce)));
        br = ctx.add(br, ctx.mul(a2, ce));
        return ctx.mul(ctx.mul(c, c), br) == FieldCtx::zero();
    };
    const auto eq4 = [&](FieldElem c) {
        const FieldElem ce = pow_u128(ctx, c, e);
        FieldElem br = ctx.neg(ctx.mul(pow_u128(ctx, a1, q), ce));
        br = ctx.add(br, a2);
        br = ctx.add(br, ctx.mul(pow_u128(ctx, a2, q), pow_u128(ctx, c, (q + 1) * e)));
        return ctx.mul(pow_u128(ctx, c, q + 1), br) == FieldCtx::zero();
    };

    LemmaSubspace out;
    out.coefficients = {a1, a2};
    Transcript& t = out.transcript;
    std::optional<FieldElem> chosen;
    for (int s = 0; s < 2; ++s) {
        const FieldElem target = ctx.mul(s == 0 ? i : ctx.neg(i), rhs);
        const auto c = ctx.solve_coset(2 * k, target);
        const std::string tag = s == 0 ? "+I" : "-I";
        if (!t.check("coset-solvable " + tag, c.has_value())) continue;
        t.check("eq1-on-coset " + tag, eq1(*c), "c=" + elem(ctx, *c));
        out.sign_selected[s] = eq3(*c);
        t.note("eq3 selects " + tag + ": " + (out.sign_selected[s] ? "yes" : "no"));
        if (out.sign_selected[s]) chosen = c;
    }
    if (out.sign_selected[0] == out.sign_selected[1])
        throw ConsistencyError("build_V_binomial: " + std::string(out.sign_selected[0] ? "both" : "neither") +
                               " coset sign satisfies the selection identity");
    t.check("unique-selection", true);
    out.v = coset_subspace(ctx, *chosen, 2 * k);

    const auto vel = elements(ctx, out.v);
    const std::size_t total = vel.size() - 1;
    const std::size_t count = verify_limit == 0 ? total : std::min(total, verify_limit);
    const std::size_t stride = std::max<std::size_t>(1, total / count);
    std::array<std::size_t, 4> bad{};
    std::array<std::optional<FieldElem>, 4> first_bad{};
    std::size_t checked = 0;
    for (std::size_t j = 1; j < vel.size() && checked < count; j += stride, ++checked) {
        const std::array<bool, 4> ok{eq1(vel[j]), eq2(vel[j]), eq3(vel[j]), eq4(vel[j])};
        for (int q4 = 0; q4 < 4; ++q4)
            if (!ok[q4] && bad[q4]++ == 0) first_bad[q4] = vel[j];
    }
    for (int q4 = 0; q4 < 4; ++q4) {
        const std::string name = "identity-" + std::to_string(q4 + 1);
        t.check(name, bad[q4] == 0,
                bad[q4] ? "c=" + elem(ctx, *first_bad[q4]) : "checked=" + std::to_string(checked));
    }
    t.check("V-meets-Vperp-trivially", trace_gram(ctx, out.v, out.v).rank() == out.v.dim());
    out.verified = t.all_passed();
    return out;
}

LemmaSubspace build_V_trinomial(const FieldCtx& ctx, int k, int sign) {
    if (k % 4 == 0)
        throw std::domain_error("build_V_trinomial: k = " + std::to_string(k) + " is divisible by four");
    const auto co = trinomial_coefficients(ctx, k, sign);
    LemmaSubspace out;
    out.coefficients = {co.a1, co.a2, co.a3};
    Transcript& t = out.transcript;

    const auto c = ctx.solve_coset(k, ctx.div(co.a2, co.a1));
    if (!c) throw ConsistencyError("build_V_trinomial: a2/a1 is not a (3^k - 1)-th power");
    out.v = coset_subspace(ctx, *c, k);

    const u128 q = pow3_wide(k);
    std::array<std::size_t, 4> bad{};
    const auto vel = elements(ctx, out.v);
    for (std::size_t j = 1; j < vel.size(); ++j) {
        const FieldElem x = vel[j];
        const FieldElem x2 = ctx.mul(x, x);
        bad[0] += ctx.mul(co.a1, pow_u128(ctx, x, q - 1)) != co.a2;
        bad[1] += ctx.trace_rel(ctx.mul(co.a1, x2), k) != FieldCtx::zero();
        bad[2] += ctx.trace_rel(ctx.mul(co.a2, ctx.mul(x2, x2)), k) != FieldCtx::zero();
        bad[3] += ctx.trace_rel(ctx.mul(co.a3, x2), k) != FieldCtx::zero();
    }
    const char* names[] = {"coset-equation", "trace-a1c2", "trace-a2c4", "trace-a3c2"};
    for (int i = 0; i < 4; ++i) t.check(names[i], bad[i] == 0, "violations=" + std::to_string(bad[i]));

    Subspace sub;
    sub.basis = ctx.subfield_basis(k);
    t.check("V-meets-subfield-trivially", meets_trivially(ctx, out.v, sub));
    if (k % 2)
        t.check("V-self-orthogonal", is_self_orthogonal(ctx, out.v));
    else
        t.check("V-meets-Vperp-trivially", trace_gram(ctx, out.v, out.v).rank() == out.v.dim());
    out.verified = t.all_passed();
    return out;
}

}  // namespace bent3
