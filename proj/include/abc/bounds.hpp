#pragma once

// Geometric-mean bounds on R(c a b), empirical kappa estimates and
// convergence tables for N(c, n) / (phi(c^n) / 2).

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "abc/census.hpp"

namespace abc {

struct BoundCheck {
    std::uint64_t c;
    std::uint32_t n;
    Epsilon eps;
    double log_gm;
    /// (1 - eps) ln R(c) + 2n ln c
    double log_lower_no_kappa;
    /// ln R(c) + 2n ln c
    double log_upper;
    bool upper_ok;
    /// GM / (R(c)^(1-eps) c^(2n))
    double kappa_ratio;
};

struct CensusPoint {
    std::uint64_t c;
    std::uint32_t n;

    friend auto operator<=>(const CensusPoint&, const CensusPoint&) = default;
};

struct ScanRange {
    std::uint64_t c_min;
    std::uint64_t c_max;
    std::uint32_t n_min;
    std::uint32_t n_max;

    std::string describe() const;
};

struct KappaEstimate {
    Epsilon eps;
    ScanRange scanned;
    double kappa_hat;
    CensusPoint argmin;
};

struct ConvergenceRow {
    std::uint32_t n;
    std::uint64_t count;
    std::uint64_t total;
    double ratio;
    /// May be negative for small n; clamp only for display.
    double lower_bound_ratio;
};

struct CScanRow {
    std::uint64_t c;
    std::uint64_t count;
    std::uint64_t total;
    double ratio;
};

/// (ln kappa + n(1-eps) ln c) / (eps ln R(c) + n(1-eps) ln c)
double lower_bound_ratio(std::uint64_t c, std::uint32_t n, std::uint64_t rad_c, Epsilon eps, double kappa);

/// Bound computations over census results, with results cached by (c, n, eps).
/// Safe to share between threads.
class BoundsLab {
public:
    explicit BoundsLab(CensusConfig config = {}, Exactness exactness = Exactness::fast_with_exact_fallback);

    const CensusConfig& config() const noexcept { return config_; }

    /// Cached census; computes on first request.
    CensusResult census(std::uint64_t c, std::uint32_t n, Epsilon eps);

    BoundCheck check_bounds(std::uint64_t c, std::uint32_t n, Epsilon eps);

    /// Minimum kappa_ratio over the points; ties keep the first point in
    /// (c, n) order. Throws invalid_input for an empty set.
    KappaEstimate estimate_kappa(Epsilon eps, std::span<const CensusPoint> points);
    KappaEstimate estimate_kappa(Epsilon eps, std::uint64_t c_min, std::uint64_t c_max, std::uint32_t n);
    /// Over the family {(c, n) : 1 <= n <= n_max}.
    KappaEstimate estimate_kappa_over_n(Epsilon eps, std::uint64_t c, std::uint32_t n_max);

    /// Rows n = 1..n_max. kappa must be positive.
    std::vector<ConvergenceRow> convergence_scan(std::uint64_t c, Epsilon eps, std::uint32_t n_max, double kappa);

    /// n = 1 census for every c in [c_min, c_max].
    std::vector<CScanRow> scan_over_c(Epsilon eps, std::uint64_t c_min, std::uint64_t c_max);

    std::size_t cached_results() const;
    void clear_cache();

private:
    using Key = std::tuple<std::uint64_t, std::uint32_t, std::uint64_t, std::uint64_t>;

    // Fills the cache for all points, spreading points over workers when there
    // are several of them.
    void prefetch(std::span<const CensusPoint> points, Epsilon eps);

    CensusConfig config_;
    Exactness exactness_;
    mutable std::mutex mutex_;
    std::map<Key, CensusResult> cache_;
};

} // namespace abc
