#pragma once

// Bulk radicals over integer ranges. A PrimeTable is built once per run and
// shared read-only between segments; segments are independent.

#include <cstdint>
#include <span>
#include <vector>

namespace abc {

inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 20;

/// All primes <= limit, ascending. Empty for limit < 2.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// floor(sqrt(x)) exactly.
std::uint64_t isqrt(std::uint64_t x) noexcept;

class PrimeTable {
public:
    PrimeTable() = default;
    /// Primes up to floor(sqrt(max_value)): enough to sieve any range ending at max_value.
    explicit PrimeTable(std::uint64_t max_value);

    std::span<const std::uint64_t> primes() const noexcept { return primes_; }
    /// inverses()[i] * primes()[i] == 1 mod 2^64 for odd primes; unused for 2.
    std::span<const std::uint64_t> inverses() const noexcept { return inverses_; }
    std::uint64_t max_value() const noexcept { return max_value_; }

private:
    std::uint64_t max_value_ = 1;
    std::vector<std::uint64_t> primes_;
    std::vector<std::uint64_t> inverses_;
};

/// radicals[i] = R(lo + i) for the half-open range [lo, hi).
struct RadicalSegment {
    std::uint64_t lo = 1;
    std::uint64_t hi = 2;
    std::vector<std::uint64_t> radicals;

    std::uint64_t at(std::uint64_t m) const { return radicals.at(m - lo); }
};

/// Reusable buffers for repeated segment fills.
class RadicalSieve {
public:
    explicit RadicalSieve(const PrimeTable& table) : table_(&table) {}

    /// Fills out[i] = R(lo + i) for i < hi - lo. out must hold hi - lo entries.
    /// Throws invalid_input when lo == 0, hi <= lo or the table is too small.
    void fill(std::uint64_t lo, std::uint64_t hi, std::span<std::uint64_t> out);

private:
    const PrimeTable* table_;
    std::vector<std::uint64_t> cofactor_;
};

RadicalSegment radical_segment(std::uint64_t lo, std::uint64_t hi, const PrimeTable& table);

/// Builds its own prime table; convenient for one-off ranges.
RadicalSegment radical_segment(std::uint64_t lo, std::uint64_t hi);

} // namespace abc
