#pragma once

// Enumeration of the coprime decompositions c^n = a + b (a < b, gcd(a, b) = 1)
// and the strong abc count N(c, n) over them.

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "abc/arith.hpp"
#include "abc/sieve.hpp"

namespace abc {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000'000ULL;
/// Largest accepted enumeration limit: keeps a*b below 2^64.
inline constexpr std::uint64_t kMaxEnumerationLimit = 8'000'000'000ULL;
inline constexpr std::uint64_t kDefaultExportCap = 1'000'000ULL;
/// Log pre-filter verdicts closer than this fall through to the exact comparison.
inline constexpr double kLogMargin = 1e-9;

enum class Exactness { fast_with_exact_fallback, exact_only };

struct CensusConfig {
    std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
    std::uint64_t segment_size = kDefaultSegmentSize;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 1;
    std::uint64_t export_cap = kDefaultExportCap;
    std::uint64_t factor_limit = kDefaultFactorLimit;

    /// Throws invalid_input on out-of-range settings.
    void validate() const;
};

struct CensusQuery {
    std::uint64_t c;
    std::uint32_t n;
    Epsilon eps;
    Exactness exactness = Exactness::fast_with_exact_fallback;

    /// Returns c^n. Throws invalid_input (c < 2, n < 1), limit_exceeded
    /// (c^n above the enumeration limit) or degenerate_modulus (c^n <= 2).
    std::uint64_t modulus(const CensusConfig& config) const;
};

struct DecompositionRecord {
    std::uint64_t a;
    std::uint64_t b;
    std::uint64_t rad_a;
    std::uint64_t rad_b;
    std::uint64_t rad_ab;
    bool satisfies;

    friend bool operator==(const DecompositionRecord&, const DecompositionRecord&) = default;
};

struct CensusResult {
    CensusQuery query;
    std::uint64_t count_satisfying = 0;
    std::uint64_t total_pairs = 0;
    double ratio = 0.0;
    /// Natural-log geometric mean of R(c a b) over all pairs.
    double log_gm = 0.0;
    /// Every R(c) R(a) R(b) < R(c) c^(2n).
    bool upper_bound_ok = true;
    /// Pairs the log pre-filter could not decide (or all of them in exact-only mode).
    std::uint64_t exact_evaluations = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// The strong abc inequality for one modulus c^n at a fixed eps:
///   c^(n(den+num)) < R(c)^num * R(ab)^den
/// i.e. R(c)^(1-eps) c^(n(1+eps)) < R(c a b) with denominators cleared.
/// Ties are not satisfying.
class StrongInequality {
public:
    StrongInequality(std::uint64_t c, std::uint32_t n, std::uint64_t rad_c, Epsilon eps);

    bool holds_exact(std::uint64_t rad_ab) const;

    /// Decides by logs when the margin exceeds kLogMargin, else exactly.
    /// ln_rad_ab must be std::log(rad_ab). Sets used_exact when it fell through.
    bool holds_fast(std::uint64_t rad_ab, double ln_rad_ab, bool& used_exact) const;

    double log_threshold() const noexcept { return threshold_; }

private:
    Epsilon eps_;
    mpz_class lhs_;        // c^(n(den+num))
    mpz_class rad_c_pow_;  // R(c)^num
    double threshold_;     // n(1+eps) ln c - eps ln R(c)
};

bool strong_inequality_holds(std::uint64_t c, std::uint32_t n, std::uint64_t rad_c, std::uint64_t rad_ab,
                             Epsilon eps);

CensusResult run_census(const CensusQuery& q, const CensusConfig& config = {});

using DecompositionSink = std::function<void(const DecompositionRecord&)>;

/// Emits every record in ascending order of a. Throws export_cap_exceeded when
/// the number of pairs is above config.export_cap, before emitting anything.
void stream_decompositions(const CensusQuery& q, const DecompositionSink& sink, const CensusConfig& config = {});

struct GeneralizedSolution {
    std::uint64_t a;
    std::uint64_t b;
    bool satisfies;

    friend bool operator==(const GeneralizedSolution&, const GeneralizedSolution&) = default;
};

/// Experimental: solutions of c^r = a^p + b^q with gcd(a, b) = 1 and a^p < b^q,
/// each tested with the strong inequality at modulus c^r and R(ab) = R(a) R(b).
std::vector<GeneralizedSolution> generalized_census(std::uint64_t c, std::uint32_t r, std::uint32_t p,
                                                    std::uint32_t q, Epsilon eps,
                                                    const CensusConfig& config = {});

} // namespace abc
