#include "bent3/field.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>

#include "bent3/int_math.hpp"

namespace bent3 {

namespace {

// Packed trit vector: bit i of the low half is set when t_i = 1, bit i of the
// high half when t_i = 2. Works for n <= 16.
using Packed = std::uint32_t;

constexpr std::uint32_t kChunk = 6561;  // 3^8

struct ConversionTables {
    std::array<Packed, kChunk> packed_of{};    // 8-trit index -> packed
    std::array<std::uint32_t, 256> value_of{};  // 8-bit mask -> sum of 3^i

    ConversionTables() {
        for (std::uint32_t v = 0; v < kChunk; ++v) {
            Packed p = 0;
            std::uint32_t r = v;
            for (int i = 0; i < 8; ++i) {
                const std::uint32_t t = r % 3;
                r /= 3;
                if (t == 1) p |= 1u << i;
                if (t == 2) p |= 1u << (16 + i);
            }
            packed_of[v] = p;
        }
        for (std::uint32_t m = 0; m < 256; ++m) {
            std::uint32_t v = 0, w = 1;
            for (int i = 0; i < 8; ++i, w *= 3)
                if (m & (1u << i)) v += w;
            value_of[m] = v;
        }
    }
};

const ConversionTables& tables() {
    static const ConversionTables t;
    return t;
}

inline Packed to_packed(std::uint32_t code) {
    const auto& t = tables();
    return t.packed_of[code % kChunk] | (t.packed_of[code / kChunk] << 8);
}

inline std::uint32_t mask_value(std::uint32_t m) {
    const auto& t = tables();
    return t.value_of[m & 0xFFu] + kChunk * t.value_of[(m >> 8) & 0xFFu];
}

inline std::uint32_t to_code(Packed p) { return mask_value(p & 0xFFFFu) + 2 * mask_value(p >> 16); }

inline Packed packed_add(Packed x, Packed y) {
    const std::uint32_t x1 = x & 0xFFFFu, x2 = x >> 16, y1 = y & 0xFFFFu, y2 = y >> 16;
    const std::uint32_t xz = ~(x1 | x2), yz = ~(y1 | y2);
    const std::uint32_t r1 = (x1 & yz) | (y1 & xz) | (x2 & y2);
    const std::uint32_t r2 = (x2 & yz) | (y2 & xz) | (x1 & y1);
    return (r1 & 0xFFFFu) | ((r2 & 0xFFFFu) << 16);
}

inline Packed packed_neg(Packed x) { return (x >> 16) | (x << 16); }

// Multiplication in F3[x]/(m) on packed vectors.
struct PackedRing {
    int n;
    Packed low;  // modulus without its leading term

    Packed mul_x(Packed a) const {
        const std::uint32_t one = (a & 0xFFFFu) << 1, two = (a >> 16) << 1;
        const std::uint32_t top = 1u << n;
        const std::uint32_t mask = top - 1;
        Packed r = (one & mask) | ((two & mask) << 16);
        if (one & top) r = packed_add(r, packed_neg(low));  // x^n = -low
        if (two & top) r = packed_add(r, low);
        return r;
    }

    Packed mul(Packed a, Packed b) const {
        Packed r = 0;
        for (int i = n - 1; i >= 0; --i) {
            r = mul_x(r);
            if (b & (1u << i)) r = packed_add(r, a);
            if (b & (1u << (16 + i))) r = packed_add(r, packed_neg(a));
        }
        return r;
    }

    Packed pow(Packed a, std::uint64_t e) const {
        Packed r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

// Dense polynomials over F3, index = degree.
using Poly = std::vector<int>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& m) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    const int lead_inv = m.back();  // 1 and 2 are self-inverse mod 3
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        const int q = (a.back() * lead_inv) % 3;
        for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - q * m[i]) % 3 + 3) % 3;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % 3;
    return poly_mod(std::move(r), m);
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::uint8_t> normalise_modulus(const std::vector<int>& coeffs, int n) {
    if (static_cast<int>(coeffs.size()) != n + 1)
        throw std::invalid_argument("modulus must have n+1 coefficients (degree " + std::to_string(n) + ")");
    std::vector<std::uint8_t> out(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = static_cast<std::uint8_t>(((coeffs[i] % 3) + 3) % 3);
    if (out.back() != 1) throw std::invalid_argument("modulus must be monic");
    return out;
}

}  // namespace

ReducibleModulus::ReducibleModulus(int factor_degree)
    : std::invalid_argument("modulus is reducible: it has an irreducible factor of degree " +
                            std::to_string(factor_degree)),
      factor_degree_(factor_degree) {}

int default_max_degree() {
    if (const char* env = std::getenv("BENT3_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<int>(std::min<long>(v, kHardMaxDegree));
    }
    return 14;
}

int FieldCtx::smallest_factor_degree(std::span<const int> monic) {
    Poly m(monic.begin(), monic.end());
    for (int& c : m) c = ((c % 3) + 3) % 3;
    trim(m);
    const int n = static_cast<int>(m.size()) - 1;
    if (n <= 1) return n;
    if (m[0] == 0) return 1;
    const Poly x{0, 1};
    Poly h = x;
    for (int i = 1; i <= n / 2; ++i) {
        h = poly_mulmod(h, poly_mulmod(h, h, m), m);
        Poly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + 2) % 3;
        trim(diff);
        const Poly g = poly_gcd(diff, m);
        if (g.size() > 1) return i;
    }
    return n;
}

std::vector<int> FieldCtx::default_modulus(int n) {
    if (n < 1 || n > kHardMaxDegree) throw std::invalid_argument("degree out of range");
    const std::uint64_t count = pow3(n);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<int> c(n + 1, 0);
        std::uint64_t r = idx;
        for (int j = n - 1; j >= 0; --j) {
            c[j] = static_cast<int>(r % 3);
            r /= 3;
        }
        c[n] = 1;
        if (smallest_factor_degree(c) == n) return c;
    }
    throw std::logic_error("no irreducible polynomial found");
}

FieldRef FieldCtx::create(int n, std::optional<std::vector<int>> modulus, int max_degree) {
    const int cap = max_degree > 0 ? std::min(max_degree, kHardMaxDegree) : default_max_degree();
    if (n < 1) throw std::invalid_argument("field degree must be positive");
    if (n > cap)
        throw std::invalid_argument("field degree " + std::to_string(n) + " exceeds the limit " +
                                    std::to_string(cap) + " (raise it with BENT3_MAX_N)");

    std::shared_ptr<FieldCtx> ctx(new FieldCtx());
    ctx->n_ = n;
    ctx->size_ = static_cast<std::uint32_t>(pow3(n));
    ctx->modulus_ = normalise_modulus(modulus ? *modulus : default_modulus(n), n);

    {
        std::vector<int> m(ctx->modulus_.begin(), ctx->modulus_.end());
        const int d = smallest_factor_degree(m);
        if (d != n) throw ReducibleModulus(d);
    }

    PackedRing ring{n, 0};
    for (int i = 0; i < n; ++i) {
        if (ctx->modulus_[i] == 1) ring.low |= 1u << i;
        if (ctx->modulus_[i] == 2) ring.low |= 1u << (16 + i);
    }

    const std::uint32_t order = ctx->size_ - 1;
    const auto primes = prime_divisors(order);
    auto primitive = [&](Packed g) {
        if (g == 0) return false;
        for (auto q : primes)
            if (ring.pow(g, order / q) == 1) return false;
        return true;
    };

    std::vector<std::uint32_t> candidates;
    if (n > 1) candidates.push_back(3);
    for (std::uint32_t c = 2; c < ctx->size_; ++c)
        if (c != 3 || n == 1) candidates.push_back(c);
    Packed gen = 0;
    for (auto c : candidates) {
        if (primitive(to_packed(c))) {
            gen = to_packed(c);
            ctx->generator_ = FieldElem{c};
            break;
        }
    }
    if (gen == 0) throw std::logic_error("no primitive element found");

    ctx->exp_.resize(order);
    ctx->log_.assign(ctx->size_, 0);
    Packed cur = 1;
    for (std::uint32_t e = 0; e < order; ++e) {
        const std::uint32_t code = to_code(cur);
        ctx->exp_[e] = code;
        ctx->log_[code] = e;
        cur = ring.mul(cur, gen);
    }
    if (cur != 1) throw std::logic_error("generator order mismatch");

    // Tr is F3-linear: fix it on the polynomial basis, then extend.
    std::vector<std::uint8_t> basis_trace(n);
    for (int i = 0; i < n; ++i) {
        const FieldElem beta{static_cast<std::uint32_t>(pow3(i))};
        FieldElem s = zero();
        for (int j = 0; j < n; ++j) s = ctx->add(s, ctx->frobenius(beta, j));
        if (s.code > 2) throw std::logic_error("trace left the prime field");
        basis_trace[i] = static_cast<std::uint8_t>(s.code);
    }
    ctx->trace_.assign(ctx->size_, 0);
    for (int i = 0; i < n; ++i) {
        const std::uint32_t p = static_cast<std::uint32_t>(pow3(i));
        for (std::uint32_t j = p; j < 3 * p; ++j)
            ctx->trace_[j] = static_cast<std::uint8_t>((ctx->trace_[j % p] + (j / p) * basis_trace[i]) % 3);
    }
    return ctx;
}

FieldElem FieldCtx::constant(int c) const noexcept { return FieldElem{static_cast<std::uint32_t>(((c % 3) + 3) % 3)}; }

FieldElem FieldCtx::from_trits(std::span<const std::uint8_t> trits) const {
    if (static_cast<int>(trits.size()) > n_) throw std::invalid_argument("too many coordinates");
    std::uint32_t code = 0, w = 1;
    for (auto t : trits) {
        if (t > 2) throw std::invalid_argument("coordinate out of range");
        code += t * w;
        w *= 3;
    }
    return FieldElem{code};
}

std::vector<std::uint8_t> FieldCtx::trits(FieldElem x) const {
    std::vector<std::uint8_t> out(n_);
    std::uint32_t r = x.code;
    for (int i = 0; i < n_; ++i) {
        out[i] = static_cast<std::uint8_t>(r % 3);
        r /= 3;
    }
    return out;
}

std::uint8_t FieldCtx::trit(FieldElem x, int i) const {
    return static_cast<std::uint8_t>((x.code / static_cast<std::uint32_t>(pow3(i))) % 3);
}

std::uint32_t FieldCtx::log(FieldElem x) const {
    if (x.code == 0) throw std::domain_error("log of zero");
    return log_[x.code];
}

FieldElem FieldCtx::add(FieldElem x, FieldElem y) const noexcept {
    return FieldElem{to_code(packed_add(to_packed(x.code), to_packed(y.code)))};
}

FieldElem FieldCtx::neg(FieldElem x) const noexcept { return FieldElem{to_code(packed_neg(to_packed(x.code)))}; }

FieldElem FieldCtx::scale(FieldElem x, int c) const noexcept {
    switch (((c % 3) + 3) % 3) {
        case 0: return zero();
        case 1: return x;
        default: return neg(x);
    }
}

FieldElem FieldCtx::mul(FieldElem x, FieldElem y) const noexcept {
    if (x.code == 0 || y.code == 0) return zero();
    std::uint32_t e = log_[x.code] + log_[y.code];
    if (e >= order()) e -= order();
    return FieldElem{exp_[e]};
}

FieldElem FieldCtx::inv(FieldElem x) const {
    if (x.code == 0) throw std::domain_error("inverse of zero");
    const std::uint32_t l = log_[x.code];
    return FieldElem{exp_[l == 0 ? 0 : order() - l]};
}

FieldElem FieldCtx::pow(FieldElem x, std::int64_t e) const {
    if (x.code == 0) {
        if (e == 0) return one();
        if (e < 0) throw std::domain_error("negative power of zero");
        return zero();
    }
    return FieldElem{exp_[reduce_mod(static_cast<i128>(log_[x.code]) * e, order())]};
}

FieldElem FieldCtx::frobenius(FieldElem x, int j) const noexcept {
    if (x.code == 0) return x;
    const std::uint64_t f = pow_mod(3, static_cast<std::uint64_t>(j), order());
    return FieldElem{exp_[mul_mod(log_[x.code], f, order())]};
}

void FieldCtx::require_divisor(int k, const char* what) const {
    if (k < 1 || n_ % k != 0)
        throw std::domain_error(std::string(what) + ": " + std::to_string(k) + " does not divide " + std::to_string(n_));
}

FieldElem FieldCtx::trace_rel(FieldElem x, int k) const {
    require_divisor(k, "trace_rel");
    FieldElem s = zero();
    for (int i = 0; i < n_ / k; ++i) s = add(s, frobenius(x, i * k));
    return s;
}

std::uint8_t FieldCtx::trace_sub(FieldElem x, int k) const {
    if (!in_subfield(x, k)) throw std::domain_error("trace_sub: element is not in the subfield");
    FieldElem s = zero();
    for (int j = 0; j < k; ++j) s = add(s, frobenius(x, j));
    return static_cast<std::uint8_t>(s.code);
}

bool FieldCtx::is_square(FieldElem x) const {
    if (x.code == 0) throw std::domain_error("is_square: zero is excluded");
    return log_[x.code] % 2 == 0;
}

FieldElem FieldCtx::fourth_root_of_unity() const {
    if (order() % 4 != 0) throw std::domain_error("no primitive 4th root of unity: 4 does not divide 3^n - 1");
    return exp(order() / 4);
}

std::optional<FieldElem> FieldCtx::solve_coset(int m, FieldElem t) const {
    require_divisor(m, "solve_coset");
    if (t.code == 0) throw std::domain_error("solve_coset: t must be nonzero");
    const std::uint64_t step = pow3(m) - 1;  // divides 3^n - 1 since m | n
    const std::uint32_t l = log_[t.code];
    if (l % step != 0) return std::nullopt;
    return exp(l / step);
}

FieldElem FieldCtx::subfield_generator(int m) const {
    require_divisor(m, "subfield_generator");
    return exp(order() / (pow3(m) - 1));
}

bool FieldCtx::in_subfield(FieldElem x, int m) const {
    require_divisor(m, "in_subfield");
    if (x.code == 0) return true;
    return log_[x.code] % (order() / (pow3(m) - 1)) == 0;
}

std::vector<FieldElem> FieldCtx::subfield_basis(int m) const {
    const FieldElem gamma = subfield_generator(m);
    std::vector<FieldElem> out;
    FieldElem cur = one();
    for (int i = 0; i < m; ++i) {
        out.push_back(cur);
        cur = mul(cur, gamma);
    }
    return out;
}

std::vector<FieldElem> FieldCtx::subfield_elements(int m) const {
    const FieldElem gamma = subfield_generator(m);
    std::vector<FieldElem> out{zero()};
    FieldElem cur = one();
    for (std::uint64_t i = 0; i + 1 < pow3(m); ++i) {
        out.push_back(cur);
        cur = mul(cur, gamma);
    }
    return out;
}

Translation FieldCtx::translation(FieldElem c) const {
    const int h = (n_ + 1) / 2;
    const auto stride = static_cast<std::uint32_t>(pow3(h));
    const auto hi_size = static_cast<std::uint32_t>(pow3(n_ - h));
    std::vector<std::uint32_t> lo(stride), hi(hi_size);
    const FieldElem c_lo{c.code % stride}, c_hi{c.code / stride};
    for (std::uint32_t j = 0; j < stride; ++j) lo[j] = add(FieldElem{j}, c_lo).code;
    for (std::uint32_t j = 0; j < hi_size; ++j) hi[j] = add(FieldElem{j}, c_hi).code;
    return Translation(stride, std::move(lo), std::move(hi));
}

std::string FieldCtx::format_log(FieldElem x) const {
    if (x.code == 0) return "0";
    return "g^" + std::to_string(log_[x.code]);
}

std::string FieldCtx::format_trits(FieldElem x) const {
    std::string s;
    for (auto t : trits(x)) s.push_back(static_cast<char>('0' + t));
    return s;
}

FieldElem FieldCtx::parse_element(std::string_view text) const {
    auto bad = [&] { return std::invalid_argument("cannot parse field element '" + std::string(text) + "'"); };
    if (text.size() == 1 && text[0] >= '0' && text[0] <= '2') return constant(text[0] - '0');
    if (text.rfind("g^", 0) == 0) {
        const std::string digits(text.substr(2));
        if (digits.empty()) throw bad();
        std::size_t used = 0;
        long long e = 0;
        try {
            e = std::stoll(digits, &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (used != digits.size()) throw bad();
        return pow(generator(), e);
    }
    if (text.rfind("t:", 0) == 0) {
        std::vector<std::uint8_t> t;
        for (char ch : text.substr(2)) {
            if (ch < '0' || ch > '2') throw bad();
            t.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        if (t.empty() || static_cast<int>(t.size()) > n_) throw bad();
        return from_trits(t);
    }
    throw bad();
}

std::string FieldCtx::modulus_string() const {
    std::string s;
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) s.push_back(',');
        s.push_back(static_cast<char>('0' + modulus_[i]));
    }
    return s;
}

std::vector<int> parse_modulus(std::string_view text) {
    std::vector<int> out;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad modulus coefficient '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("bad modulus coefficient '" + item + "'");
        out.push_back(v);
    }
    if (out.size() < 2) throw std::invalid_argument("modulus needs at least two coefficients");
    return out;
}

}  // namespace bent3
