#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace bent3 {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

/// 3^e as a 128-bit value; throws when the result does not fit.
inline u128 pow3_wide(int e) {
    if (e < 0 || e > 80) throw std::overflow_error("pow3_wide: exponent out of range");
    u128 r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
}

inline std::uint64_t pow3(int e) {
    if (e < 0 || e > 40) throw std::overflow_error("pow3: exponent out of range");
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
}

/// Reduces a signed wide exponent into [0, m).
inline std::uint64_t reduce_mod(i128 value, std::uint64_t m) {
    i128 r = value % static_cast<i128>(m);
    if (r < 0) r += static_cast<i128>(m);
    return static_cast<std::uint64_t>(r);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

/// Distinct prime divisors of n, ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Sum of base-3 digits (the 3-weight of an exponent).
inline int digit_sum3(u128 d) {
    int s = 0;
    while (d) {
        s += static_cast<int>(d % 3);
        d /= 3;
    }
    return s;
}

}  // namespace bent3
