#pragma once

// Exact integer primitives: factorization, radical, Euler phi, Q, checked
// powers. Everything here is a pure function and is used as the reference the
// bulk sieve and the census are tested against.

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "abc/error.hpp"

namespace abc {

using u128 = unsigned __int128;

inline constexpr std::uint64_t kDefaultFactorLimit = 1'000'000'000'000ULL;
inline constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer. Primes are strictly increasing;
/// the factorization of 1 is empty.
class Factorization {
public:
    Factorization() = default;

    std::uint64_t value() const noexcept { return value_; }
    std::span<const PrimePower> factors() const& noexcept { return factors_; }
    // a span into a temporary would dangle
    std::span<const PrimePower> factors() const&& = delete;
    std::size_t omega() const noexcept { return factors_.size(); }

    /// "2^2*3*7"; "1" for the empty product.
    std::string to_string() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    friend Factorization factorize(std::uint64_t m, std::uint64_t limit);

    std::uint64_t value_ = 1;
    std::vector<PrimePower> factors_;
};

/// Exact rational 0 < num/den < 1 kept in lowest terms.
class Epsilon {
public:
    /// 1/2
    Epsilon() = default;

    /// Reduces num/den; throws invalid_input unless 0 < num/den < 1.
    static Epsilon make(std::uint64_t num, std::uint64_t den);

    /// Accepts "num/den" (e.g. "1/2", "6/8" -> 3/4).
    static Epsilon parse(std::string_view text);

    std::uint64_t num() const noexcept { return num_; }
    std::uint64_t den() const noexcept { return den_; }
    double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    /// 1 - eps, evaluated as (den - num) / den.
    double complement() const noexcept
    {
        return static_cast<double>(den_ - num_) / static_cast<double>(den_);
    }
    std::string to_string() const;

    friend bool operator==(const Epsilon&, const Epsilon&) = default;
    friend auto operator<=>(const Epsilon& l, const Epsilon& r)
    {
        return u128(l.num_) * r.den_ <=> u128(r.num_) * l.den_;
    }

private:
    Epsilon(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {}

    std::uint64_t num_ = 1;
    std::uint64_t den_ = 2;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t m) noexcept;

/// Trial division up to sqrt(m). Throws invalid_input for m == 0 and
/// limit_exceeded for m > limit.
Factorization factorize(std::uint64_t m, std::uint64_t limit = kDefaultFactorLimit);

std::uint64_t radical(std::uint64_t m, std::uint64_t limit = kDefaultFactorLimit);
std::uint64_t radical(const Factorization& f) noexcept;

/// Product of (p - 1) over the distinct primes of f; 1 for f = 1.
std::uint64_t q_of(const Factorization& f) noexcept;

std::uint64_t euler_phi(const Factorization& f) noexcept;

/// phi(c^n) = c^(n-1) * phi(c), arbitrary precision.
mpz_class phi_of_power(std::uint64_t c, std::uint32_t n);

/// c^n when c^n <= limit, otherwise throws overflow_of_limit. The limit is
/// inclusive; results that do not fit in 64 bits also throw.
std::uint64_t checked_pow(std::uint64_t c, std::uint32_t n, std::uint64_t limit = kNoLimit);

/// Largest r with r^k <= x (k >= 1).
std::uint64_t integer_root(std::uint64_t x, std::uint32_t k) noexcept;

mpz_class big_pow(std::uint64_t base, std::uint64_t exponent);

} // namespace abc
