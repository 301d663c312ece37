#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bent3/spectrum.hpp"
#include "bent3/ternary_function.hpp"

namespace bent3 {

enum class Regularity {
    Regular,             // S_f(b) = 3^{n/2} w^{f*(b)}
    WeaklyRegularMinus,  // S_f(b) = -3^{n/2} w^{f*(b)}
    NotWeaklyRegular,
    NotBent,
};

/// "regular", "weak-minus" or "none".
std::string_view regularity_name(Regularity r);

struct Certificate {
    bool is_bent = false;
    Regularity regularity = Regularity::NotBent;
    int unit = 0;  // +1 or -1 when a dual exists
    std::optional<TernaryFn> dual;
    int degree = 0;
    std::optional<FieldElem> counterexample;
    std::int64_t counterexample_norm = 0;
    std::vector<std::string> notes;
    std::vector<std::string> transcripts;
};

/// Exact bentness and regularity verdict from the full spectrum.
Certificate check_bent(const TernaryFn& f);
Certificate check_bent(const TernaryFn& f, const WalshSpectrum& spectrum);

/// Total degree of the reduced multivariate representation over F3.
int algebraic_degree(const TernaryFn& f);

/// Max 3-weight over the exponents of the trace form; an upper bound on the
/// algebraic degree. Requires a symbolic form.
int univariate_degree_bound(const TernaryFn& f);

bool is_balanced(const TernaryFn& g);

/// f* with S_f(b) = u 3^{n/2} w^{f*(b)}; domain_error unless bent and weakly regular.
TernaryFn dual_of(const Certificate& cert);

}  // namespace bent3
