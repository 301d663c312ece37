#include <gtest/gtest.h>

#include "bent3/analysis.hpp"
#include "bent3/families.hpp"
#include "bent3/multivariate.hpp"
#include "printed_forms.hpp"

using namespace bent3;
using namespace printed;

TEST(Multivariate, QuarticRootFamilyMatchesPrintedForm) {
    for (int k : {3, 7, 11}) {
        const auto p = expand_family_formal(Family::BinomialT3, k);
        EXPECT_TRUE(same_f3_polynomial(p, quartic_root_form(k))) << k << ": " << p.to_string();
    }
    EXPECT_EQ(quartic_root_form(3).terms.size(), 19u);
}

TEST(Multivariate, ExceptionalFamiliesMatchPrintedForms) {
    for (int k : {1, 5, 9})
        EXPECT_TRUE(same_f3_polynomial(expand_family_formal(Family::ExceptionalT7, k), t7_case1(k))) << k;
    for (int k : {3, 7})
        EXPECT_TRUE(same_f3_polynomial(expand_family_formal(Family::ExceptionalT7, k), t7_case3(k))) << k;
    for (int k : {1, 5})
        EXPECT_TRUE(same_f3_polynomial(expand_family_formal(Family::ExceptionalT8, k), t8(k))) << k;
}

TEST(Multivariate, ExpansionOfTablesAtDegreeFour) {
    auto f = FieldCtx::create(4);
    for (auto [which, printed] : {std::pair{ExceptionalCase::T7Case1, t7_case1(1)}, std::pair{ExceptionalCase::T8, t8(1)}}) {
        const auto g = make_exceptional(f, 1, which);
        const auto p = multivariate_expand(g, 1, kQuarticExceptional);
        EXPECT_TRUE(same_f3_polynomial(p, printed)) << p.to_string();
        const auto back = realize(p, f, embedded_quartic_root(*f, kQuarticExceptional));
        EXPECT_TRUE(std::ranges::equal(back.table(), g.table()));
    }
}

TEST(Multivariate, ExpansionOfTablesAtDegreeTwelve) {
    auto f = FieldCtx::create(12);
    const auto g = make_binomial_T3(f, 3);
    const auto p = multivariate_expand(g, 3, kQuarticT3);
    EXPECT_TRUE(same_f3_polynomial(p, quartic_root_form(3))) << p.to_string();
    const auto back = realize(p, f, embedded_quartic_root(*f, kQuarticT3));
    EXPECT_TRUE(std::ranges::equal(back.table(), g.table()));

    const auto e = make_exceptional(f, 3, ExceptionalCase::T7Case3);
    const auto pe = multivariate_expand(e, 3, kQuarticExceptional);
    EXPECT_TRUE(same_f3_polynomial(pe, t7_case3(3))) << pe.to_string();
    EXPECT_TRUE(std::ranges::equal(realize(pe, f, embedded_quartic_root(*f, kQuarticExceptional)).table(), e.table()));
}

TEST(Multivariate, ExceptionalityCheck) {
    const std::vector<int> k15{1, 5}, k37{3, 7}, k13{1, 3};
    EXPECT_TRUE(exceptionality_check(Family::ExceptionalT7, ExceptionalCase::T7Case1, k15));
    EXPECT_TRUE(exceptionality_check(Family::ExceptionalT8, ExceptionalCase::T8, k15));
    EXPECT_TRUE(exceptionality_check(Family::ExceptionalT7, ExceptionalCase::T7Case3, k37));
    EXPECT_TRUE(exceptionality_check(Family::BinomialT3, std::nullopt, k37));
    // The quartic-root binomial has one form for k = 1 (mod 4) and another for k = 3 (mod 4).
    EXPECT_TRUE(exceptionality_check(Family::BinomialT3, std::nullopt, k15));
    EXPECT_FALSE(exceptionality_check(Family::BinomialT3, std::nullopt, k13));
}

TEST(Multivariate, GeneralBinomialDependsOnCoefficient) {
    auto f = FieldCtx::create(4);
    const auto p1 = multivariate_expand(make_binomial_general(f, 1, f->exp(1), 1), 1, kQuarticT3);
    const auto p3 = multivariate_expand(make_binomial_general(f, 1, f->exp(3), 1), 1, kQuarticT3);
    EXPECT_TRUE(p1.over_prime_field());
    EXPECT_FALSE(same_f3_polynomial(p1, p3));
}

TEST(Multivariate, Errors) {
    auto f = FieldCtx::create(4);
    EXPECT_THROW(multivariate_expand(TernaryFn::constant(f, 0), 1, kQuarticT3), std::domain_error);
    EXPECT_THROW(multivariate_expand(make_baseline(f, 1), 2, kQuarticT3), std::invalid_argument);
    EXPECT_THROW(expand_family_formal(Family::BinomialT3, 2), std::domain_error);
    EXPECT_THROW(expand_family_formal(Family::ExceptionalT7, 1, ExceptionalCase::T7Case3), std::domain_error);
    EXPECT_THROW(family_quartic(Family::Trinomial), std::invalid_argument);
}

TEST(Multivariate, TextForm) {
    EXPECT_EQ(t8(1).to_string(), "Tr_k(x0^3*x1 - x0^2*x1*x2 - x0^2*x2*x3 - x0*x2^2*x3 - x1*x2^3 + x2^3*x3)");
    EXPECT_EQ(poly(1, {}).to_string(), "Tr_k(0)");
}
