#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bent3/subspace.hpp"

using namespace bent3;

TEST(Subspace, CosetOfSubfield) {
    auto f = FieldCtx::create(6);
    const FieldElem c = f->exp(5);
    const auto v = coset_subspace(*f, c, 3);
    EXPECT_EQ(v.kind, Subspace::Kind::MultiplicativeCoset);
    EXPECT_EQ(v.dim(), 3);
    const auto elems = elements(*f, v);
    ASSERT_EQ(elems.size(), 27u);
    std::set<FieldElem> set(elems.begin(), elems.end());
    EXPECT_EQ(set.size(), 27u);
    for (FieldElem s : f->subfield_elements(3)) EXPECT_TRUE(set.count(f->mul(c, s)));
    for (FieldElem x : elems)
        for (FieldElem y : elems) ASSERT_TRUE(set.count(f->sub(x, y)));
}

TEST(Subspace, SpanDropsDependentGenerators) {
    auto f = FieldCtx::create(4);
    const FieldElem a = f->exp(1), b = f->exp(2);
    const auto v = span_of(*f, {a, f->scale(a, 2), b, f->add(a, b), FieldCtx::zero()});
    EXPECT_EQ(v.dim(), 2);
    EXPECT_TRUE(contains(*f, v, f->sub(a, b)));
    int members = 0;
    for (std::uint32_t x = 0; x < 81; ++x) members += contains(*f, v, {x});
    EXPECT_EQ(members, 9);
}

TEST(Subspace, OrthogonalComplement) {
    auto f = FieldCtx::create(6);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<FieldElem> gens;
        for (int i = 0; i < 1 + trial % 4; ++i) gens.push_back({static_cast<std::uint32_t>(rng() % f->size())});
        const auto v = span_of(*f, gens);
        const auto perp = orthogonal(*f, v);
        EXPECT_EQ(v.dim() + perp.dim(), 6);
        EXPECT_TRUE(trace_gram(*f, v, perp).is_zero());
        const auto comp = complement(*f, v);
        EXPECT_EQ(comp.dim(), 6 - v.dim());
        EXPECT_TRUE(meets_trivially(*f, v, comp));
    }
}

TEST(Subspace, SelfOrthogonality) {
    auto f = FieldCtx::create(2, std::vector<int>{1, 0, 1});
    // Tr(x^2) on GF(9) with x^2 = -1: Tr(1) = 2, Tr(x^2) = -2 = 1, Tr((1 + x)^2) = Tr(2x) = 0.
    const auto iso = span_of(*f, {f->add(FieldCtx::one(), f->root())});
    EXPECT_TRUE(is_self_orthogonal(*f, iso));
    EXPECT_FALSE(is_self_orthogonal(*f, span_of(*f, {FieldCtx::one()})));
}

TEST(Subspace, DirectSumDecomposition) {
    auto f = FieldCtx::create(4);
    const auto v = coset_subspace(*f, f->exp(3), 2);
    const auto w = complement(*f, v);
    DirectSum ds(*f, v, w);
    for (std::uint32_t x = 0; x < 81; ++x) {
        const FieldElem vp = ds.v_part({x}), wp = ds.w_part({x});
        ASSERT_TRUE(contains(*f, v, vp));
        ASSERT_TRUE(contains(*f, w, wp));
        ASSERT_EQ(f->add(vp, wp), FieldElem{x});
        ASSERT_EQ(ds.coordinates({x}).size(), 4u);
    }
    EXPECT_ANY_THROW(DirectSum(*f, v, v));
}
