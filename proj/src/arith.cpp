#include "abc/arith.hpp"

#include <charconv>
#include <numeric>

namespace abc {

const char* to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::invalid_input: return "invalid-input";
    case Errc::limit_exceeded: return "limit-exceeded";
    case Errc::degenerate_modulus: return "degenerate-modulus";
    case Errc::export_cap_exceeded: return "export-cap-exceeded";
    case Errc::overflow_of_limit: return "overflow-of-limit";
    }
    return "unknown";
}

std::string Factorization::to_string() const
{
    if (factors_.empty())
        return "1";
    std::string out;
    for (const auto& [p, e] : factors_) {
        if (!out.empty())
            out += '*';
        out += std::to_string(p);
        if (e > 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

Epsilon Epsilon::make(std::uint64_t num, std::uint64_t den)
{
    if (num == 0 || den == 0 || num >= den)
        throw Error(Errc::invalid_input,
                    "epsilon must satisfy 0 < num/den < 1, got " + std::to_string(num) + "/" +
                        std::to_string(den));
    const std::uint64_t g = std::gcd(num, den);
    return Epsilon(num / g, den / g);
}

Epsilon Epsilon::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        throw Error(Errc::invalid_input, "epsilon must be written num/den, got '" + std::string(text) + "'");

    auto parse_part = [&](std::string_view part) {
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
            throw Error(Errc::invalid_input, "malformed epsilon '" + std::string(text) + "'");
        return v;
    };
    return make(parse_part(text.substr(0, slash)), parse_part(text.substr(slash + 1)));
}

std::string Epsilon::to_string() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(u128(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1;
    base %= m;
    while (e) {
        if (e & 1)
            r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t m) noexcept
{
    if (m < 2)
        return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (m % p == 0)
            return m == p;
    }
    std::uint64_t d = m - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are sufficient for all m < 2^64.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, m);
        if (x == 1 || x == m - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, m);
            if (x == m - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Factorization factorize(std::uint64_t m, std::uint64_t limit)
{
    if (m == 0)
        throw Error(Errc::invalid_input, "cannot factorize 0");
    if (m > limit)
        throw Error(Errc::limit_exceeded,
                    std::to_string(m) + " exceeds the factorization limit " + std::to_string(limit));

    Factorization f;
    f.value_ = m;
    auto strip = [&](std::uint64_t p) {
        std::uint32_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e)
            f.factors_.push_back({p, e});
    };
    strip(2);
    strip(3);
    // 6k +- 1 wheel
    for (std::uint64_t p = 5; p <= m / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (m > 1)
        f.factors_.push_back({m, 1});
    return f;
}

std::uint64_t radical(const Factorization& f) noexcept
{
    std::uint64_t r = 1;
    for (const auto& pp : f.factors())
        r *= pp.prime;
    return r;
}

std::uint64_t radical(std::uint64_t m, std::uint64_t limit)
{
    return radical(factorize(m, limit));
}

std::uint64_t q_of(const Factorization& f) noexcept
{
    std::uint64_t q = 1;
    for (const auto& pp : f.factors())
        q *= pp.prime - 1;
    return q;
}

std::uint64_t euler_phi(const Factorization& f) noexcept
{
    std::uint64_t phi = f.value();
    for (const auto& pp : f.factors())
        phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

mpz_class big_pow(std::uint64_t base, std::uint64_t exponent)
{
    mpz_class b, r;
    mpz_import(b.get_mpz_t(), 1, 1, sizeof(base), 0, 0, &base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exponent);
    return r;
}

mpz_class phi_of_power(std::uint64_t c, std::uint32_t n)
{
    if (c < 2 || n < 1)
        throw Error(Errc::invalid_input, "phi_of_power needs c >= 2 and n >= 1");
    const auto f = factorize(c, kNoLimit);
    mpz_class phi_c;
    const std::uint64_t p = euler_phi(f);
    mpz_import(phi_c.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    return big_pow(c, n - 1) * phi_c;
}

std::uint64_t checked_pow(std::uint64_t c, std::uint32_t n, std::uint64_t limit)
{
    if (c < 2 || n < 1)
        throw Error(Errc::invalid_input, "checked_pow needs c >= 2 and n >= 1");
    u128 r = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        r *= c;
        if (r > limit)
            throw Error(Errc::overflow_of_limit, std::to_string(c) + "^" + std::to_string(n) +
                                                     " exceeds the limit " + std::to_string(limit));
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t integer_root(std::uint64_t x, std::uint32_t k) noexcept
{
    if (k <= 1 || x <= 1)
        return x;
    // r^k <= x, evaluated without overflow
    auto fits = [&](std::uint64_t r) {
        u128 acc = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
            acc *= r;
            if (acc > x)
                return false;
        }
        return true;
    };
    std::uint64_t lo = 1, hi = k >= 64 ? 2 : (std::uint64_t{1} << (64 / k + 1));
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (fits(mid))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

} // namespace abc
