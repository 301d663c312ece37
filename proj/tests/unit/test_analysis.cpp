#include <gtest/gtest.h>

#include <cstdio>
#include <random>

#include "bent3/analysis.hpp"
#include "bent3/families.hpp"
#include "oracle.hpp"

using namespace bent3;

namespace {

int digit_sum3(std::uint64_t d) {
    int s = 0;
    for (; d; d /= 3) s += static_cast<int>(d % 3);
    return s;
}

TernaryFn add_tables(const TernaryFn& f, const std::vector<std::uint8_t>& g) {
    std::vector<std::uint8_t> t(f.size());
    for (std::uint32_t x = 0; x < f.size(); ++x) t[x] = static_cast<std::uint8_t>((f.at(x) + g[x]) % 3);
    return TernaryFn(f.field_ref(), std::move(t));
}

// f(lambda x + mu) + Tr(c x) + e
TernaryFn ea_move(const TernaryFn& f, FieldElem lambda, FieldElem mu, FieldElem c, int e) {
    const FieldCtx& F = f.field();
    return TernaryFn::from_function(f.field_ref(), [&](FieldElem x) {
        return f(F.add(F.mul(lambda, x), mu)) + F.trace(F.mul(c, x)) + e;
    });
}

}  // namespace

TEST(Analysis, QuadraticTraceIsBent) {
    auto f = FieldCtx::create(4);
    const auto q = TernaryFn::from_trace_form(f, {{FieldCtx::one(), 2}});
    const auto cert = check_bent(q);
    EXPECT_TRUE(cert.is_bent);
    EXPECT_FALSE(cert.counterexample);
    EXPECT_EQ(cert.degree, 2);
    ASSERT_TRUE(cert.dual);

    // Regularity verdict agrees with a direct reading of the oracle coefficients.
    oracle::Field F(*f);
    const auto table = oracle::to_vector(q);
    int unit = 0;
    for (std::uint32_t b = 0; b < 81; ++b) {
        const auto [u, v] = oracle::walsh(F, table, b);
        EXPECT_EQ(u * u - u * v + v * v, 81);
        for (int s : {1, -1})
            for (int j = 0; j < 3; ++j) {
                const auto w = omega_power(j);
                if (u == 9 * s * w.u && v == 9 * s * w.v) {
                    if (unit == 0) unit = s;
                    EXPECT_EQ(unit, s);
                    EXPECT_EQ(cert.dual->at(b), j);
                }
            }
    }
    EXPECT_EQ(cert.unit, unit);
}

TEST(Analysis, ZeroFunctionIsNotBent) {
    for (int n : {2, 4}) {
        auto f = FieldCtx::create(n);
        const auto cert = check_bent(TernaryFn::constant(f, 0));
        EXPECT_FALSE(cert.is_bent);
        EXPECT_EQ(cert.regularity, Regularity::NotBent);
        ASSERT_TRUE(cert.counterexample);
        EXPECT_EQ(*cert.counterexample, FieldCtx::zero());
        EXPECT_EQ(cert.counterexample_norm, static_cast<std::int64_t>(f->size()) * f->size());
        EXPECT_THROW(dual_of(cert), std::domain_error);
    }
}

TEST(Analysis, OddDegreeBentHasNoRegularityVerdict) {
    auto f = FieldCtx::create(3);
    const auto cert = check_bent(TernaryFn::from_trace_form(f, {{FieldCtx::one(), 2}}));
    EXPECT_TRUE(cert.is_bent);
    EXPECT_EQ(cert.regularity, Regularity::NotWeaklyRegular);
    EXPECT_FALSE(cert.notes.empty());
    EXPECT_THROW(dual_of(cert), std::domain_error);
}

TEST(Analysis, BinomialGeneratorAtDegreeFour) {
    auto f = FieldCtx::create(4);
    const auto cert = check_bent(make_binomial_general(f, 1, f->generator(), 1));
    EXPECT_TRUE(cert.is_bent);
    EXPECT_EQ(cert.regularity, Regularity::Regular);
    EXPECT_EQ(cert.unit, 1);
    EXPECT_EQ(cert.degree, 4);
}

TEST(Analysis, DegreeOfConstantsAndQuadratics) {
    auto f = FieldCtx::create(4);
    for (int c = 0; c < 3; ++c) EXPECT_EQ(algebraic_degree(TernaryFn::constant(f, c)), 0);
    EXPECT_EQ(algebraic_degree(TernaryFn::from_trace_form(f, {{FieldCtx::one(), 2}})), 2);
    EXPECT_EQ(algebraic_degree(TernaryFn::from_trace_form(f, {{f->generator(), 1}})), 1);
}

TEST(Analysis, DegreeOfTraceMonomialsIsDigitSum) {
    for (int n : {3, 4}) {
        auto f = FieldCtx::create(n);
        for (std::uint64_t d = 1; d < f->order(); ++d) {
            const auto g = TernaryFn::from_trace_form(f, {{f->generator(), d}});
            bool zero = true;
            for (auto v : g.table()) zero = zero && v == 0;
            if (zero) continue;
            EXPECT_EQ(algebraic_degree(g), digit_sum3(d)) << "n=" << n << " d=" << d;
            EXPECT_EQ(univariate_degree_bound(g), digit_sum3(d));
        }
    }
}

TEST(Analysis, DegreeIgnoresAffineTerms) {
    auto f = FieldCtx::create(4);
    std::mt19937_64 rng(31);
    const auto base = make_binomial_general(f, 1, f->generator(), 1);
    const auto quad = TernaryFn::from_trace_form(f, {{FieldCtx::one(), 2}});
    for (int i = 0; i < 20; ++i) {
        const FieldElem c{static_cast<std::uint32_t>(rng() % 81)};
        auto lin = linear_form_table(*f, c);
        for (auto& v : lin) v = static_cast<std::uint8_t>((v + i) % 3);
        EXPECT_EQ(algebraic_degree(add_tables(base, lin)), 4);
        EXPECT_EQ(algebraic_degree(add_tables(quad, lin)), 2);
    }
}

TEST(Analysis, Balancedness) {
    auto f = FieldCtx::create(4);
    for (std::uint32_t c = 1; c < 81; ++c) EXPECT_TRUE(is_balanced(TernaryFn::from_trace_form(f, {{{c}, 1}})));
    EXPECT_FALSE(is_balanced(TernaryFn::constant(f, 0)));
    EXPECT_FALSE(is_balanced(TernaryFn::from_trace_form(f, {{FieldCtx::one(), 2}})));
}

TEST(Analysis, DualOfQuadraticIsQuadraticAndBent) {
    auto f = FieldCtx::create(4);
    const auto cert = check_bent(TernaryFn::from_trace_form(f, {{FieldCtx::one(), 2}}));
    const auto dual = dual_of(cert);
    EXPECT_EQ(algebraic_degree(dual), 2);
    EXPECT_TRUE(check_bent(dual).is_bent);
}

TEST(Analysis, DualReproducesSpectrum) {
    auto f = FieldCtx::create(4);
    for (std::uint32_t e : {1u, 3u, 7u}) {
        const auto g = make_binomial_general(f, 1, f->exp(e), -1);
        const auto s = spectrum_fast(g);
        const auto cert = check_bent(g, s);
        const auto dual = dual_of(cert);
        for (std::uint32_t b = 0; b < 81; ++b)
            ASSERT_EQ(s[b], eis_scale(omega_power(dual.at(b)), 9 * cert.unit));
        EXPECT_TRUE(check_bent(dual).is_bent);
    }
}

TEST(Analysis, BentnessIsInvariantUnderExtendedAffineMoves) {
    for (int n : {4, 6}) {
        auto f = FieldCtx::create(n);
        std::mt19937_64 rng(40 + n);
        const auto bent = TernaryFn::from_trace_form(f, {{f->generator(), 2}, {FieldCtx::one(), 4}});
        const bool base_bent = check_bent(bent).is_bent;
        const auto other = oracle::random_function(f, rng);
        for (int i = 0; i < 10; ++i) {
            const FieldElem lambda{1 + static_cast<std::uint32_t>(rng() % (f->size() - 1))};
            const FieldElem mu{static_cast<std::uint32_t>(rng() % f->size())};
            const FieldElem c{static_cast<std::uint32_t>(rng() % f->size())};
            const int e = static_cast<int>(rng() % 3);
            EXPECT_EQ(check_bent(ea_move(bent, lambda, mu, c, e)).is_bent, base_bent);
            EXPECT_FALSE(check_bent(ea_move(other, lambda, mu, c, e)).is_bent);
        }
    }
}

// The relation between f** and f is recorded, not asserted.
TEST(Analysis, DoubleDualIsReported) {
    auto f = FieldCtx::create(4);
    int same = 0, reflected = 0, total = 0;
    for (std::uint32_t e = 1; e < 80; e += 2)
        for (int sign : {1, -1}) {
            const auto g = make_binomial_general(f, 1, f->exp(e), sign);
            const auto dd = dual_of(check_bent(dual_of(check_bent(g))));
            bool eq = true, refl = true;
            for (std::uint32_t x = 0; x < 81; ++x) {
                eq = eq && dd.at(x) == g.at(x);
                refl = refl && dd.at(x) == g(f->neg({x}));
            }
            same += eq;
            reflected += refl;
            ++total;
        }
    RecordProperty("double_dual_equals_f", same);
    RecordProperty("double_dual_equals_f_of_minus_x", reflected);
    std::printf("f** = f for %d/%d, f** = f(-x) for %d/%d\n", same, total, reflected, total);
    EXPECT_EQ(total, 80);
}
