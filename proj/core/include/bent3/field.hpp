#pragma once

// Arithmetic in GF(3^n) with a polynomial basis over F3.
//
// Elements are stored as their canonical index: the coordinate vector
// (t_0, ..., t_{n-1}) in the basis {1, x, ..., x^{n-1}} read as a
// little-endian base-3 integer. Multiplicative operations go through
// discrete-log tables built once per context; additions are trit-wise.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bent3 {

struct FieldElem {
    std::uint32_t code = 0;

    friend constexpr bool operator==(FieldElem, FieldElem) = default;
    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// Raised by FieldCtx::create for a reducible modulus.
class ReducibleModulus : public std::invalid_argument {
public:
    explicit ReducibleModulus(int factor_degree);
    int factor_degree() const noexcept { return factor_degree_; }

private:
    int factor_degree_;
};

/// Largest n accepted without an explicit override. Honours BENT3_MAX_N.
int default_max_degree();

/// Hard limit imposed by the 32-bit element index.
inline constexpr int kHardMaxDegree = 16;

class FieldCtx;
using FieldRef = std::shared_ptr<const FieldCtx>;

/// Precomputed x -> x + c on element indices.
class Translation {
public:
    Translation(std::uint32_t stride, std::vector<std::uint32_t> lo, std::vector<std::uint32_t> hi)
        : stride_(stride), lo_(std::move(lo)), hi_(std::move(hi)) {}

    std::uint32_t operator()(std::uint32_t x) const { return lo_[x % stride_] + stride_ * hi_[x / stride_]; }

    /// Calls fn(x, x + c) for every x in index order.
    template <class Fn>
    void for_each(Fn&& fn) const {
        std::uint32_t x = 0;
        for (std::uint32_t h : hi_) {
            const std::uint32_t base = stride_ * h;
            for (std::uint32_t l : lo_) fn(x++, base + l);
        }
    }

private:
    std::uint32_t stride_;
    std::vector<std::uint32_t> lo_;
    std::vector<std::uint32_t> hi_;
};

class FieldCtx {
public:
    /// Builds GF(3^n). The modulus is a coefficient list, constant term first,
    /// monic of degree n; entries are read mod 3 so -1 may be written as 2 or -1.
    /// Without a modulus the lexicographically smallest monic irreducible is used.
    /// max_degree <= 0 means default_max_degree().
    static FieldRef create(int n, std::optional<std::vector<int>> modulus = std::nullopt, int max_degree = 0);

    /// Lexicographically smallest (constant term first) monic irreducible of degree n.
    static std::vector<int> default_modulus(int n);

    /// Smallest degree of an irreducible factor of a monic polynomial over F3.
    static int smallest_factor_degree(std::span<const int> monic);

    int degree() const noexcept { return n_; }
    std::uint32_t size() const noexcept { return size_; }
    std::uint32_t order() const noexcept { return size_ - 1; }
    const std::vector<std::uint8_t>& modulus() const noexcept { return modulus_; }
    FieldElem generator() const noexcept { return generator_; }
    /// The class of x in F3[x]/(modulus); zero when n = 1.
    FieldElem root() const noexcept { return FieldElem{n_ > 1 ? 3u : 0u}; }

    static constexpr FieldElem zero() noexcept { return {0}; }
    static constexpr FieldElem one() noexcept { return {1}; }
    FieldElem constant(int c) const noexcept;

    FieldElem from_trits(std::span<const std::uint8_t> trits) const;
    std::vector<std::uint8_t> trits(FieldElem x) const;
    std::uint8_t trit(FieldElem x, int i) const;

    /// generator^e.
    FieldElem exp(std::uint64_t e) const noexcept { return FieldElem{exp_[e % order()]}; }
    /// Discrete log to base generator(); domain_error on zero.
    std::uint32_t log(FieldElem x) const;

    FieldElem add(FieldElem x, FieldElem y) const noexcept;
    FieldElem sub(FieldElem x, FieldElem y) const noexcept { return add(x, neg(y)); }
    FieldElem neg(FieldElem x) const noexcept;
    FieldElem scale(FieldElem x, int c) const noexcept;
    FieldElem mul(FieldElem x, FieldElem y) const noexcept;
    FieldElem inv(FieldElem x) const;
    FieldElem div(FieldElem x, FieldElem y) const { return mul(x, inv(y)); }
    /// Negative exponents invert; 0^0 = 1; 0^e for e < 0 is a domain error.
    FieldElem pow(FieldElem x, std::int64_t e) const;
    /// x^(3^j).
    FieldElem frobenius(FieldElem x, int j) const noexcept;

    /// Absolute trace, 0..2.
    std::uint8_t trace(FieldElem x) const noexcept { return trace_[x.code]; }
    /// Tr^n_k(x) = sum_{i < n/k} x^(3^(ik)). Requires k | n.
    FieldElem trace_rel(FieldElem x, int k) const;
    /// Absolute trace of an element of the embedded GF(3^k).
    std::uint8_t trace_sub(FieldElem x, int k) const;
    const std::vector<std::uint8_t>& trace_table() const noexcept { return trace_; }

    /// x^((3^n-1)/2) == 1. Zero is rejected.
    bool is_square(FieldElem x) const;
    /// generator^((3^n-1)/4); domain_error unless 4 | 3^n - 1.
    FieldElem fourth_root_of_unity() const;
    /// Some c with c^(3^m - 1) = t, or nothing; all solutions are c * GF(3^m)^*.
    std::optional<FieldElem> solve_coset(int m, FieldElem t) const;

    /// generator^((3^n-1)/(3^m-1)), a primitive element of the embedded GF(3^m).
    FieldElem subfield_generator(int m) const;
    bool in_subfield(FieldElem x, int m) const;
    /// F3-basis {1, gamma, ..., gamma^(m-1)} of the embedded GF(3^m).
    std::vector<FieldElem> subfield_basis(int m) const;
    std::vector<FieldElem> subfield_elements(int m) const;

    Translation translation(FieldElem c) const;

    /// "g^k" (zero prints as "0").
    std::string format_log(FieldElem x) const;
    /// "t0t1...t_{n-1}".
    std::string format_trits(FieldElem x) const;
    /// Accepts "g^<k>", "t:<trits>" or a single digit 0/1/2.
    FieldElem parse_element(std::string_view text) const;
    std::string modulus_string() const;

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

private:
    FieldCtx() = default;
    void require_divisor(int k, const char* what) const;

    int n_ = 0;
    std::uint32_t size_ = 0;
    std::vector<std::uint8_t> modulus_;
    FieldElem generator_{};
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint8_t> trace_;
};

/// Parses "c0,c1,...,cn" into a coefficient list.
std::vector<int> parse_modulus(std::string_view text);

}  // namespace bent3
