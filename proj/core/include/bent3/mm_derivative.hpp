#pragma once

// Derivatives, the lemma subspaces, and the Maiorana-McFarland criteria.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bent3/families.hpp"
#include "bent3/subspace.hpp"
#include "bent3/ternary_function.hpp"

namespace bent3 {

/// "CHECK <name> PASS|FAIL [witness]" lines; keeps at most kMaxFailures failures.
class Transcript {
public:
    static constexpr std::size_t kMaxFailures = 10;

    /// Returns ok.
    bool check(const std::string& name, bool ok, const std::string& witness = {});
    void note(const std::string& text);
    void append(const Transcript& other);

    bool all_passed() const noexcept { return failures_ == 0; }
    std::size_t failures() const noexcept { return failures_; }
    const std::vector<std::string>& lines() const noexcept { return lines_; }
    std::string str() const;

private:
    std::vector<std::string> lines_;
    std::size_t failures_ = 0;
};

TernaryFn d1(const TernaryFn& f, FieldElem c);
TernaryFn d2(const TernaryFn& f, FieldElem c, FieldElem d);

/// True iff every D_{c,d} f with c, d in V vanishes, tested as "f is affine on
/// every coset w + V".
bool d2_vanishes_on(const TernaryFn& f, const Subspace& v, Transcript* transcript = nullptr);

/// D_c f is balanced, computed without materialising the derivative.
bool derivative_balanced(const TernaryFn& f, FieldElem c);

struct MMWitness {
    enum class Mode { Thm2, Prop3 };

    Mode mode = Mode::Thm2;
    Subspace v;
    Subspace w;
    std::vector<FieldElem> w_elements;  // enumeration order of W
    std::vector<FieldElem> pi;          // pi[i] = pi(w_elements[i])
    std::vector<std::uint8_t> g;        // g[i] = f(w_elements[i])
};

struct MMResult {
    bool passed = false;
    std::optional<MMWitness> witness;
    Transcript transcript;
};

MMResult check_thm2(const TernaryFn& f, const Subspace& v);
MMResult check_prop3(const TernaryFn& f, const Subspace& v, const Subspace& w);
bool prop1_given_V(const TernaryFn& f, const Subspace& v, Transcript* transcript = nullptr);

struct LemmaSubspace {
    Subspace v;
    std::vector<FieldElem> coefficients;  // (a1, a2) or (a1, a2, a3)
    std::array<bool, 2> sign_selected{};  // Lemma 1: which of +I, -I passed selection
    bool verified = false;
    Transcript transcript;
};

/// Coset c * GF(3^{2k}) for the binomial with nonsquare a1; n = 4k.
/// verify_limit bounds how many coset elements are checked (0 = all).
LemmaSubspace build_V_binomial(const FieldCtx& ctx, int k, FieldElem a1, int sign, std::size_t verify_limit = 0);

/// Coset c * GF(3^k) for the trinomial; n = 2k, k > 1, 4 does not divide k.
LemmaSubspace build_V_trinomial(const FieldCtx& ctx, int k, int sign);

}  // namespace bent3
