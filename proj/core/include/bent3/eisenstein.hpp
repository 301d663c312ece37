#pragma once

// Exact arithmetic in Z[w], w = exp(2 pi i / 3), with 1 + w + w^2 = 0.

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bent3/int_math.hpp"

namespace bent3 {

struct EisensteinInt {
    std::int64_t u = 0;  // u + v*w
    std::int64_t v = 0;

    friend constexpr bool operator==(EisensteinInt, EisensteinInt) = default;
};

namespace detail {
inline std::int64_t narrow(i128 x) {
    if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("Eisenstein integer overflow");
    return static_cast<std::int64_t>(x);
}
}  // namespace detail

inline EisensteinInt eis_add(EisensteinInt x, EisensteinInt y) {
    return {detail::narrow(static_cast<i128>(x.u) + y.u), detail::narrow(static_cast<i128>(x.v) + y.v)};
}

inline EisensteinInt eis_sub(EisensteinInt x, EisensteinInt y) {
    return {detail::narrow(static_cast<i128>(x.u) - y.u), detail::narrow(static_cast<i128>(x.v) - y.v)};
}

inline EisensteinInt eis_neg(EisensteinInt x) { return {-x.u, -x.v}; }

// (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w
inline EisensteinInt eis_mul(EisensteinInt x, EisensteinInt y) {
    const i128 a = x.u, b = x.v, c = y.u, d = y.v;
    return {detail::narrow(a * c - b * d), detail::narrow(a * d + b * c - b * d)};
}

inline EisensteinInt eis_scale(EisensteinInt x, std::int64_t s) {
    return {detail::narrow(static_cast<i128>(x.u) * s), detail::narrow(static_cast<i128>(x.v) * s)};
}

/// |u + v w|^2 = u^2 - uv + v^2.
inline std::int64_t eis_norm(EisensteinInt x) {
    const i128 u = x.u, v = x.v;
    return detail::narrow(u * u - u * v + v * v);
}

/// Multiplication by w: (u, v) -> (-v, u - v).
constexpr EisensteinInt mul_omega(EisensteinInt x) { return {-x.v, x.u - x.v}; }
/// Multiplication by w^2: (u, v) -> (v - u, -u).
constexpr EisensteinInt mul_omega2(EisensteinInt x) { return {x.v - x.u, -x.u}; }

/// w^j for any integer j.
constexpr EisensteinInt omega_power(int j) {
    switch (((j % 3) + 3) % 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        default: return {-1, -1};
    }
}

/// n0 * 1 + n1 * w + n2 * w^2.
constexpr EisensteinInt from_counts(std::int64_t n0, std::int64_t n1, std::int64_t n2) { return {n0 - n2, n1 - n2}; }

struct RootMultiple {
    int sign = 1;  // +1 or -1
    int j = 0;     // exponent of w, 0..2

    friend constexpr bool operator==(RootMultiple, RootMultiple) = default;
};

/// Writes x = sign * M * w^j when possible.
inline std::optional<RootMultiple> as_root_multiple(EisensteinInt x, std::int64_t M) {
    if (M <= 0) throw std::invalid_argument("as_root_multiple: M must be positive");
    for (int sign : {1, -1})
        for (int j = 0; j < 3; ++j)
            if (eis_scale(omega_power(j), sign * M) == x) return RootMultiple{sign, j};
    return std::nullopt;
}

inline std::string to_string(EisensteinInt x) {
    return "(" + std::to_string(x.u) + "," + std::to_string(x.v) + ")";
}

inline std::ostream& operator<<(std::ostream& os, EisensteinInt x) { return os << to_string(x); }

}  // namespace bent3
