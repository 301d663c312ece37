#pragma once

// Four-variable forms of the quartic-root families, entered by hand.

#include <initializer_list>

#include "bent3/multivariate.hpp"

namespace printed {

using bent3::FieldCtx;
using bent3::FieldElem;
using bent3::Monomial;
using bent3::MultivariatePoly;

struct Term {
    int coef;  // +1 or -1
    Monomial m;
};

inline MultivariatePoly poly(int k, std::initializer_list<Term> terms) {
    MultivariatePoly p;
    p.k = k;
    p.coef_field = FieldCtx::create(1);
    for (const auto& t : terms) p.terms[t.m] = FieldElem{t.coef > 0 ? 1u : 2u};
    return p;
}

// x0^4 + x0 x1^3 + x0^3 x2 + x1^3 x2 - x0 x2^3 - x2^4 - x0^3 x3 + x0^2 x1 x3 - x0 x1^2 x3
// - x0^2 x2 x3 - x0 x1 x2 x3 - x0 x2^2 x3 + x0^2 x3^2 - x0 x1 x3^2 + x1^2 x3^2 - x0 x2 x3^2
// - x1 x2 x3^2 + x1 x3^3 - x3^4
inline MultivariatePoly quartic_root_form(int k) {
    return poly(k, {{1, {4, 0, 0, 0}},  {1, {1, 3, 0, 0}},  {1, {3, 0, 1, 0}},  {1, {0, 3, 1, 0}},
                    {-1, {1, 0, 3, 0}}, {-1, {0, 0, 4, 0}}, {-1, {3, 0, 0, 1}}, {1, {2, 1, 0, 1}},
                    {-1, {1, 2, 0, 1}}, {-1, {2, 0, 1, 1}}, {-1, {1, 1, 1, 1}}, {-1, {1, 0, 2, 1}},
                    {1, {2, 0, 0, 2}},  {-1, {1, 1, 0, 2}}, {1, {0, 2, 0, 2}},  {-1, {1, 0, 1, 2}},
                    {-1, {0, 1, 1, 2}}, {1, {0, 1, 0, 3}},  {-1, {0, 0, 0, 4}}});
}

// -x1 (x0^3 + x0 x2^2 + x2^3) + x3 (x0^3 - x0^2 x2 - x2^3)
inline MultivariatePoly t7_case1(int k) {
    return poly(k, {{-1, {3, 1, 0, 0}}, {-1, {1, 1, 2, 0}}, {-1, {0, 1, 3, 0}},
                    {1, {3, 0, 0, 1}},  {-1, {2, 0, 1, 1}}, {-1, {0, 0, 3, 1}}});
}

// x0 (-x1^3 + x1^2 x3 + x3^3) + x2 (x1^2 x3 + x1 x3^2 - x3^3)
inline MultivariatePoly t7_case3(int k) {
    return poly(k, {{-1, {1, 3, 0, 0}}, {1, {1, 2, 0, 1}}, {1, {1, 0, 0, 3}},
                    {1, {0, 2, 1, 1}},  {1, {0, 1, 1, 2}}, {-1, {0, 0, 1, 3}}});
}

// x1 (x0^3 - x0^2 x2 - x2^3) - x3 (x0^2 x2 + x0 x2^2 - x2^3)
inline MultivariatePoly t8(int k) {
    return poly(k, {{1, {3, 1, 0, 0}},  {-1, {2, 1, 1, 0}}, {-1, {0, 1, 3, 0}},
                    {-1, {2, 0, 1, 1}}, {-1, {1, 0, 2, 1}}, {1, {0, 0, 3, 1}}});
}

}  // namespace printed
