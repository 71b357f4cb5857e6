#include "abc/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "abc/error.hpp"

namespace abc {

std::uint64_t isqrt(std::uint64_t x) noexcept
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && r > x / r)
        --r;
    while ((r + 1) <= x / (r + 1))
        ++r;
    return r;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> primes;
    if (limit < 2)
        return primes;
    primes.push_back(2);
    // odd-only: index i stands for 2i + 1
    const std::uint64_t half = (limit - 1) / 2;
    std::vector<bool> composite(half + 1, false);
    for (std::uint64_t i = 1; i <= half; ++i) {
        if (composite[i])
            continue;
        const std::uint64_t p = 2 * i + 1;
        primes.push_back(p);
        for (std::uint64_t j = (p * p - 1) / 2; j <= half; j += p)
            composite[j] = true;
    }
    return primes;
}

namespace {

// Inverse of odd p modulo 2^64 by Newton iteration; each step doubles the
// number of correct low bits, starting from 3 (p * p == 1 mod 8).
std::uint64_t inverse_mod_2_64(std::uint64_t p) noexcept
{
    std::uint64_t x = p;
    for (int i = 0; i < 5; ++i)
        x *= 2 - p * x;
    return x;
}

} // namespace

PrimeTable::PrimeTable(std::uint64_t max_value)
    : max_value_(max_value), primes_(primes_up_to(isqrt(max_value)))
{
    inverses_.reserve(primes_.size());
    for (const std::uint64_t p : primes_)
        inverses_.push_back(p == 2 ? 0 : inverse_mod_2_64(p));
}

void RadicalSieve::fill(std::uint64_t lo, std::uint64_t hi, std::span<std::uint64_t> out)
{
    if (lo == 0 || hi <= lo)
        throw Error(Errc::invalid_input,
                    "radical segment needs 1 <= lo < hi, got [" + std::to_string(lo) + ", " + std::to_string(hi) + ")");
    if (hi - 1 > table_->max_value())
        throw Error(Errc::invalid_input, "prime table covers values up to " + std::to_string(table_->max_value()) +
                                             ", segment ends at " + std::to_string(hi - 1));
    const std::uint64_t len = hi - lo;
    if (out.size() < len)
        throw Error(Errc::invalid_input, "radical segment output buffer too small");

    cofactor_.resize(len);
    for (std::uint64_t i = 0; i < len; ++i) {
        out[i] = 1;
        cofactor_[i] = lo + i;
    }

    const std::uint64_t last = hi - 1;
    const auto primes = table_->primes();
    const auto inverses = table_->inverses();
    for (std::size_t k = 0; k < primes.size(); ++k) {
        const std::uint64_t p = primes[k];
        if (p > last / p)
            break;
        // first multiple of p that is >= lo
        const std::uint64_t first = (lo + p - 1) / p * p;
        if (p == 2) {
            for (std::uint64_t m = first; m < hi; m += 2) {
                out[m - lo] *= 2;
                cofactor_[m - lo] >>= std::countr_zero(cofactor_[m - lo]);
            }
            continue;
        }
        // Exact division by p is multiplication by its inverse mod 2^64. The
        // pass over multiples of p^j removes the j-th factor of p.
        const std::uint64_t inv = inverses[k];
        for (std::uint64_t m = first; m < hi; m += p) {
            out[m - lo] *= p;
            cofactor_[m - lo] *= inv;
        }
        for (std::uint64_t pj = p; pj <= last / p;) {
            pj *= p;
            for (std::uint64_t m = (lo + pj - 1) / pj * pj; m < hi; m += pj)
                cofactor_[m - lo] *= inv;
        }
    }
    // what survives has no prime factor <= sqrt(hi - 1), so it is 1 or prime
    for (std::uint64_t i = 0; i < len; ++i) {
        if (cofactor_[i] > 1)
            out[i] *= cofactor_[i];
    }
}

RadicalSegment radical_segment(std::uint64_t lo, std::uint64_t hi, const PrimeTable& table)
{
    if (lo == 0 || hi <= lo)
        throw Error(Errc::invalid_input, "radical segment needs 1 <= lo < hi");
    RadicalSegment seg{lo, hi, std::vector<std::uint64_t>(hi - lo)};
    RadicalSieve sieve(table);
    sieve.fill(lo, hi, seg.radicals);
    return seg;
}

RadicalSegment radical_segment(std::uint64_t lo, std::uint64_t hi)
{
    if (lo == 0 || hi <= lo)
        throw Error(Errc::invalid_input, "radical segment needs 1 <= lo < hi");
    const PrimeTable table(hi - 1);
    return radical_segment(lo, hi, table);
}

} // namespace abc
