#include "abc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "detail/parallel.hpp"

namespace abc {

std::string ScanRange::describe() const
{
    return "c in [" + std::to_string(c_min) + ", " + std::to_string(c_max) + "], n in [" + std::to_string(n_min) +
           ", " + std::to_string(n_max) + "]";
}

double lower_bound_ratio(std::uint64_t c, std::uint32_t n, std::uint64_t rad_c, Epsilon eps, double kappa)
{
    const double growth = static_cast<double>(n) * eps.complement() * std::log(static_cast<double>(c));
    return (std::log(kappa) + growth) / (eps.value() * std::log(static_cast<double>(rad_c)) + growth);
}

BoundsLab::BoundsLab(CensusConfig config, Exactness exactness) : config_(config), exactness_(exactness)
{
    config_.validate();
}

CensusResult BoundsLab::census(std::uint64_t c, std::uint32_t n, Epsilon eps)
{
    const Key key{c, n, eps.num(), eps.den()};
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
    }
    auto result = run_census(CensusQuery{c, n, eps, exactness_}, config_);
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(key, result).first->second;
}

void BoundsLab::prefetch(std::span<const CensusPoint> points, Epsilon eps)
{
    std::vector<CensusPoint> missing;
    {
        std::lock_guard lock(mutex_);
        for (const auto& pt : points) {
            if (!cache_.contains(Key{pt.c, pt.n, eps.num(), eps.den()}))
                missing.push_back(pt);
        }
    }
    if (missing.size() < 2 || detail::resolve_threads(config_.threads) < 2)
        return;

    // one census per worker; each census runs single-threaded
    CensusConfig single = config_;
    single.threads = 1;
    std::vector<CensusResult> results(missing.size());
    detail::parallel_for(missing.size(), config_.threads, [&](std::size_t i) {
        results[i] = run_census(CensusQuery{missing[i].c, missing[i].n, eps, exactness_}, single);
    });
    std::lock_guard lock(mutex_);
    for (std::size_t i = 0; i < missing.size(); ++i)
        cache_.try_emplace(Key{missing[i].c, missing[i].n, eps.num(), eps.den()}, results[i]);
}

BoundCheck BoundsLab::check_bounds(std::uint64_t c, std::uint32_t n, Epsilon eps)
{
    const CensusResult r = census(c, n, eps);
    const double ln_c = std::log(static_cast<double>(c));
    const double ln_rad_c = std::log(static_cast<double>(radical(c, kNoLimit)));

    BoundCheck b{c, n, eps, r.log_gm, 0.0, 0.0, false, 0.0};
    b.log_lower_no_kappa = eps.complement() * ln_rad_c + 2.0 * n * ln_c;
    b.log_upper = ln_rad_c + 2.0 * n * ln_c;
    b.upper_ok = b.log_gm < b.log_upper;
    b.kappa_ratio = std::exp(b.log_gm - b.log_lower_no_kappa);
    return b;
}

KappaEstimate BoundsLab::estimate_kappa(Epsilon eps, std::span<const CensusPoint> points)
{
    if (points.empty())
        throw Error(Errc::invalid_input, "kappa estimate over an empty range");

    std::vector<CensusPoint> ordered(points.begin(), points.end());
    std::sort(ordered.begin(), ordered.end());
    prefetch(ordered, eps);

    KappaEstimate est{eps, ScanRange{ordered.front().c, ordered.front().c, ordered.front().n, ordered.front().n},
                      std::numeric_limits<double>::infinity(), ordered.front()};
    for (const auto& pt : ordered) {
        const double ratio = check_bounds(pt.c, pt.n, eps).kappa_ratio;
        if (ratio < est.kappa_hat) {
            est.kappa_hat = ratio;
            est.argmin = pt;
        }
        est.scanned.c_min = std::min(est.scanned.c_min, pt.c);
        est.scanned.c_max = std::max(est.scanned.c_max, pt.c);
        est.scanned.n_min = std::min(est.scanned.n_min, pt.n);
        est.scanned.n_max = std::max(est.scanned.n_max, pt.n);
    }
    return est;
}

KappaEstimate BoundsLab::estimate_kappa(Epsilon eps, std::uint64_t c_min, std::uint64_t c_max, std::uint32_t n)
{
    if (c_min > c_max)
        throw Error(Errc::invalid_input, "empty c range [" + std::to_string(c_min) + ", " + std::to_string(c_max) + "]");
    std::vector<CensusPoint> points;
    for (std::uint64_t c = c_min; c <= c_max; ++c)
        points.push_back({c, n});
    return estimate_kappa(eps, points);
}

KappaEstimate BoundsLab::estimate_kappa_over_n(Epsilon eps, std::uint64_t c, std::uint32_t n_max)
{
    if (n_max < 1)
        throw Error(Errc::invalid_input, "n_max must be at least 1");
    std::vector<CensusPoint> points;
    for (std::uint32_t n = 1; n <= n_max; ++n)
        points.push_back({c, n});
    return estimate_kappa(eps, points);
}

std::vector<ConvergenceRow> BoundsLab::convergence_scan(std::uint64_t c, Epsilon eps, std::uint32_t n_max,
                                                         double kappa)
{
    if (n_max < 1)
        throw Error(Errc::invalid_input, "n_max must be at least 1");
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw Error(Errc::invalid_input, "kappa must be a positive finite number");

    std::vector<CensusPoint> points;
    for (std::uint32_t n = 1; n <= n_max; ++n)
        points.push_back({c, n});
    prefetch(points, eps);

    std::vector<ConvergenceRow> rows;
    for (const auto& pt : points) {
        const CensusResult r = census(pt.c, pt.n, eps);
        rows.push_back({pt.n, r.count_satisfying, r.total_pairs, r.ratio,
                        lower_bound_ratio(c, pt.n, radical(c, kNoLimit), eps, kappa)});
    }
    return rows;
}

std::vector<CScanRow> BoundsLab::scan_over_c(Epsilon eps, std::uint64_t c_min, std::uint64_t c_max)
{
    if (c_min > c_max)
        throw Error(Errc::invalid_input, "empty c range [" + std::to_string(c_min) + ", " + std::to_string(c_max) + "]");
    std::vector<CensusPoint> points;
    for (std::uint64_t c = c_min; c <= c_max; ++c)
        points.push_back({c, 1});
    prefetch(points, eps);

    std::vector<CScanRow> rows;
    for (const auto& pt : points) {
        const CensusResult r = census(pt.c, 1, eps);
        rows.push_back({pt.c, r.count_satisfying, r.total_pairs, r.ratio});
    }
    return rows;
}

std::size_t BoundsLab::cached_results() const
{
    std::lock_guard lock(mutex_);
    return cache_.size();
}

void BoundsLab::clear_cache()
{
    std::lock_guard lock(mutex_);
    cache_.clear();
}

} // namespace abc
