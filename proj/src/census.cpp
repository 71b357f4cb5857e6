#include "abc/census.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

#include "detail/exact_log_sum.hpp"
#include "detail/parallel.hpp"

namespace abc {

void CensusConfig::validate() const
{
    if (enumeration_limit < 3 || enumeration_limit > kMaxEnumerationLimit)
        throw Error(Errc::invalid_input, "enumeration limit must lie in [3, " + std::to_string(kMaxEnumerationLimit) +
                                             "], got " + std::to_string(enumeration_limit));
    if (segment_size == 0 || segment_size > (std::uint64_t{1} << 32))
        throw Error(Errc::invalid_input, "segment size must lie in [1, 2^32], got " + std::to_string(segment_size));
    if (factor_limit == 0)
        throw Error(Errc::invalid_input, "factorization limit must be positive");
}

std::uint64_t CensusQuery::modulus(const CensusConfig& config) const
{
    if (c < 2)
        throw Error(Errc::invalid_input, "c must be at least 2, got " + std::to_string(c));
    if (n < 1)
        throw Error(Errc::invalid_input, "n must be at least 1");
    std::uint64_t m = 0;
    try {
        m = checked_pow(c, n, config.enumeration_limit);
    } catch (const Error&) {
        throw Error(Errc::limit_exceeded, std::to_string(c) + "^" + std::to_string(n) +
                                              " exceeds the enumeration limit " +
                                              std::to_string(config.enumeration_limit));
    }
    if (m <= 2)
        throw Error(Errc::degenerate_modulus,
                    std::to_string(c) + "^" + std::to_string(n) + " <= 2 has no decomposition with a < b");
    return m;
}

StrongInequality::StrongInequality(std::uint64_t c, std::uint32_t n, std::uint64_t rad_c, Epsilon eps)
    : eps_(eps)
{
    lhs_ = big_pow(c, std::uint64_t{n} * (eps.den() + eps.num()));
    rad_c_pow_ = big_pow(rad_c, eps.num());
    const double exponent = static_cast<double>(n) * static_cast<double>(eps.den() + eps.num()) /
                            static_cast<double>(eps.den());
    threshold_ = exponent * std::log(static_cast<double>(c)) - eps.value() * std::log(static_cast<double>(rad_c));
}

bool StrongInequality::holds_exact(std::uint64_t rad_ab) const
{
    mpz_class rhs = big_pow(rad_ab, eps_.den());
    rhs *= rad_c_pow_;
    return lhs_ < rhs;
}

bool StrongInequality::holds_fast(std::uint64_t rad_ab, double ln_rad_ab, bool& used_exact) const
{
    const double margin = ln_rad_ab - threshold_;
    if (margin > kLogMargin)
        return true;
    if (margin < -kLogMargin)
        return false;
    used_exact = true;
    return holds_exact(rad_ab);
}

bool strong_inequality_holds(std::uint64_t c, std::uint32_t n, std::uint64_t rad_c, std::uint64_t rad_ab,
                             Epsilon eps)
{
    return StrongInequality(c, n, rad_c, eps).holds_exact(rad_ab);
}

namespace {

// Shared, read-only state for one enumeration of c^n = a + b.
struct Enumeration {
    std::uint64_t modulus;
    std::uint64_t half;  // a ranges over [1, half]
    std::uint64_t rad_c;
    std::vector<std::uint64_t> c_primes;
    PrimeTable table;
    std::uint64_t segment_size;

    Enumeration(const CensusQuery& q, const CensusConfig& config)
        : modulus(q.modulus(config)), half((modulus - 1) / 2), table(modulus - 1), segment_size(config.segment_size)
    {
        const auto fc = factorize(q.c, kNoLimit);
        rad_c = radical(fc);
        for (const auto& pp : fc.factors())
            c_primes.push_back(pp.prime);
    }

    std::size_t chunk_count() const { return static_cast<std::size_t>((half + segment_size - 1) / segment_size); }

    // Calls visit(a, b, rad_a, rad_b) for every a in chunk k coprime to c, ascending.
    template <class Visit>
    void for_each_pair(std::size_t k, Visit&& visit) const
    {
        const std::uint64_t a_lo = 1 + k * segment_size;
        const std::uint64_t a_hi = std::min(a_lo + segment_size, half + 1);
        const std::uint64_t len = a_hi - a_lo;

        // per-thread scratch, reused across chunks
        thread_local std::vector<std::uint64_t> rad_a, rad_b;
        thread_local std::vector<char> shares_factor;
        if (rad_a.size() < len) {
            rad_a.resize(len);
            rad_b.resize(len);
            shares_factor.resize(len);
        }
        const std::span<std::uint64_t> ra(rad_a.data(), len), rb(rad_b.data(), len);
        RadicalSieve sieve(table);
        sieve.fill(a_lo, a_hi, ra);
        // b = modulus - a runs over [modulus - a_hi + 1, modulus - a_lo + 1), mirrored
        sieve.fill(modulus - a_hi + 1, modulus - a_lo + 1, rb);

        std::fill_n(shares_factor.begin(), len, char{0});
        for (const std::uint64_t p : c_primes) {
            for (std::uint64_t m = (a_lo + p - 1) / p * p; m < a_hi; m += p)
                shares_factor[m - a_lo] = 1;
        }

        for (std::uint64_t i = 0; i < len; ++i) {
            if (shares_factor[i])
                continue;
            const std::uint64_t a = a_lo + i;
            visit(a, modulus - a, rad_a[i], rad_b[len - 1 - i]);
        }
    }
};

struct ChunkTally {
    std::uint64_t pairs = 0;
    std::uint64_t satisfying = 0;
    std::uint64_t exact = 0;
    bool upper_ok = true;
    detail::ExactLogSum log_sum;
};

} // namespace

CensusResult run_census(const CensusQuery& q, const CensusConfig& config)
{
    const auto start = std::chrono::steady_clock::now();
    config.validate();
    const Enumeration en(q, config);
    const StrongInequality inequality(q.c, q.n, en.rad_c, q.eps);
    const double ln_rad_c = std::log(static_cast<double>(en.rad_c));
    const u128 upper = u128(en.modulus) * en.modulus;
    const bool exact_only = q.exactness == Exactness::exact_only;

    std::vector<ChunkTally> tallies(en.chunk_count());
    detail::parallel_for(tallies.size(), config.threads, [&](std::size_t k) {
        ChunkTally t;
        en.for_each_pair(k, [&](std::uint64_t, std::uint64_t, std::uint64_t rad_a, std::uint64_t rad_b) {
            const std::uint64_t rad_ab = rad_a * rad_b;
            const double ln_rad_ab = std::log(static_cast<double>(rad_ab));
            bool satisfies;
            if (exact_only) {
                satisfies = inequality.holds_exact(rad_ab);
                ++t.exact;
            } else {
                bool used_exact = false;
                satisfies = inequality.holds_fast(rad_ab, ln_rad_ab, used_exact);
                t.exact += used_exact;
            }
            t.satisfying += satisfies;
            ++t.pairs;
            t.log_sum.add(ln_rad_c + ln_rad_ab);
            if (u128(rad_ab) >= upper)
                t.upper_ok = false;
        });
        tallies[k] = t;
    });

    CensusResult r;
    r.query = q;
    detail::ExactLogSum total;
    for (const auto& t : tallies) {
        r.total_pairs += t.pairs;
        r.count_satisfying += t.satisfying;
        r.exact_evaluations += t.exact;
        r.upper_bound_ok = r.upper_bound_ok && t.upper_ok;
        total.merge(t.log_sum);
    }

    const mpz_class phi_half = phi_of_power(q.c, q.n) / 2;
    if (phi_half != mpz_class(static_cast<unsigned long>(r.total_pairs)))
        throw std::logic_error("enumerated pair count " + std::to_string(r.total_pairs) +
                               " disagrees with phi(c^n)/2 = " + phi_half.get_str());

    r.ratio = r.total_pairs ? static_cast<double>(r.count_satisfying) / static_cast<double>(r.total_pairs) : 0.0;
    r.log_gm = total.mean(r.total_pairs);
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

void stream_decompositions(const CensusQuery& q, const DecompositionSink& sink, const CensusConfig& config)
{
    config.validate();
    q.modulus(config);
    const mpz_class pairs = phi_of_power(q.c, q.n) / 2;
    if (pairs > mpz_class(static_cast<unsigned long>(config.export_cap)))
        throw Error(Errc::export_cap_exceeded, std::to_string(q.c) + "^" + std::to_string(q.n) + " has " +
                                                   pairs.get_str() + " decompositions, above the export cap " +
                                                   std::to_string(config.export_cap));

    const Enumeration en(q, config);
    const StrongInequality inequality(q.c, q.n, en.rad_c, q.eps);
    const bool exact_only = q.exactness == Exactness::exact_only;
    for (std::size_t k = 0; k < en.chunk_count(); ++k) {
        en.for_each_pair(k, [&](std::uint64_t a, std::uint64_t b, std::uint64_t rad_a, std::uint64_t rad_b) {
            const std::uint64_t rad_ab = rad_a * rad_b;
            bool used_exact = false;
            const bool satisfies =
                exact_only ? inequality.holds_exact(rad_ab)
                           : inequality.holds_fast(rad_ab, std::log(static_cast<double>(rad_ab)), used_exact);
            sink(DecompositionRecord{a, b, rad_a, rad_b, rad_ab, satisfies});
        });
    }
}

std::vector<GeneralizedSolution> generalized_census(std::uint64_t c, std::uint32_t r, std::uint32_t p,
                                                    std::uint32_t q, Epsilon eps, const CensusConfig& config)
{
    config.validate();
    if (c < 2 || r < 1 || p < 1 || q < 1)
        throw Error(Errc::invalid_input, "generalized census needs c >= 2 and r, p, q >= 1");
    std::uint64_t modulus = 0;
    try {
        modulus = checked_pow(c, r, config.enumeration_limit);
    } catch (const Error&) {
        throw Error(Errc::limit_exceeded, std::to_string(c) + "^" + std::to_string(r) +
                                              " exceeds the enumeration limit " +
                                              std::to_string(config.enumeration_limit));
    }

    const std::uint64_t rad_c = radical(c, kNoLimit);
    const StrongInequality inequality(c, r, rad_c, eps);
    std::vector<GeneralizedSolution> out;

    auto power = [](std::uint64_t base, std::uint32_t e) {
        u128 v = 1;
        for (std::uint32_t i = 0; i < e && v <= kNoLimit; ++i)
            v *= base;
        return v;
    };

    for (std::uint64_t a = 1;; ++a) {
        const u128 ap = power(a, p);
        if (ap >= modulus)
            break;
        const std::uint64_t rest = modulus - static_cast<std::uint64_t>(ap);
        const std::uint64_t b = integer_root(rest, q);
        if (power(b, q) != rest || ap >= rest || std::gcd(a, b) != 1)
            continue;
        if (out.size() >= config.export_cap)
            throw Error(Errc::export_cap_exceeded, "generalized census found more than " +
                                                       std::to_string(config.export_cap) + " solutions");
        const std::uint64_t rad_ab = radical(a, config.factor_limit) * radical(b, config.factor_limit);
        out.push_back({a, b, inequality.holds_exact(rad_ab)});
    }
    return out;
}

} // namespace abc
