#include "abc_census.h"

#include <cmath>
#include <memory>
#include <new>
#include <string>

#include "abc/bounds.hpp"
#include "abc/census.hpp"

#ifndef ABC_CENSUS_VERSION
#define ABC_CENSUS_VERSION "0.0.0"
#endif

struct abc_context {
    abc::CensusConfig config;
    abc::Exactness exactness = abc::Exactness::fast_with_exact_fallback;
    std::unique_ptr<abc::BoundsLab> lab = std::make_unique<abc::BoundsLab>(config, exactness);

    void reconfigure(const abc::CensusConfig& next)
    {
        next.validate();
        lab = std::make_unique<abc::BoundsLab>(next, exactness);
        config = next;
    }
    abc::CensusQuery query(uint64_t c, uint32_t n, abc::Epsilon eps) const { return {c, n, eps, exactness}; }
};

namespace {

thread_local std::string last_error;

struct Cancelled {};

abc_status status_of(abc::Errc code)
{
    switch (code) {
    case abc::Errc::invalid_input: return ABC_ERR_INVALID_INPUT;
    case abc::Errc::limit_exceeded: return ABC_ERR_LIMIT_EXCEEDED;
    case abc::Errc::degenerate_modulus: return ABC_ERR_DEGENERATE_MODULUS;
    case abc::Errc::export_cap_exceeded: return ABC_ERR_EXPORT_CAP_EXCEEDED;
    case abc::Errc::overflow_of_limit: return ABC_ERR_OVERFLOW_OF_LIMIT;
    }
    return ABC_ERR_INTERNAL;
}

template <class Fn>
abc_status guarded(Fn&& fn)
{
    last_error.clear();
    try {
        fn();
        return ABC_OK;
    } catch (const abc::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const Cancelled&) {
        last_error = "stopped by sink";
        return ABC_ERR_CANCELLED;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return ABC_ERR_LIMIT_EXCEEDED;
    } catch (const std::exception& e) {
        last_error = e.what();
        return ABC_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return ABC_ERR_INTERNAL;
    }
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw abc::Error(abc::Errc::invalid_input, what);
}

abc::Epsilon to_eps(abc_epsilon e) { return abc::Epsilon::make(e.num, e.den); }
abc_epsilon from_eps(abc::Epsilon e) { return {e.num(), e.den()}; }

void fill_kappa(const abc::KappaEstimate& k, abc_kappa_estimate* out)
{
    *out = abc_kappa_estimate{from_eps(k.eps), k.scanned.c_min, k.scanned.c_max, k.scanned.n_min,
                              k.scanned.n_max,  k.kappa_hat,     k.argmin.c,      k.argmin.n};
}

} // namespace

extern "C" {

const char* abc_version(void) { return ABC_CENSUS_VERSION; }

const char* abc_status_string(abc_status status)
{
    switch (status) {
    case ABC_OK: return "ok";
    case ABC_ERR_INVALID_INPUT: return "invalid-input";
    case ABC_ERR_LIMIT_EXCEEDED: return "limit-exceeded";
    case ABC_ERR_DEGENERATE_MODULUS: return "degenerate-modulus";
    case ABC_ERR_EXPORT_CAP_EXCEEDED: return "export-cap-exceeded";
    case ABC_ERR_OVERFLOW_OF_LIMIT: return "overflow-of-limit";
    case ABC_ERR_CANCELLED: return "cancelled";
    case ABC_ERR_INTERNAL: return "internal-error";
    }
    return "unknown-status";
}

const char* abc_last_error(void) { return last_error.c_str(); }

abc_status abc_context_create(abc_context** out)
{
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        *out = new abc_context();
    });
}

void abc_context_destroy(abc_context* ctx) { delete ctx; }

abc_status abc_context_set_enumeration_limit(abc_context* ctx, uint64_t limit)
{
    return guarded([&] {
        require(ctx != nullptr, "null context");
        auto next = ctx->config;
        next.enumeration_limit = limit;
        ctx->reconfigure(next);
    });
}

abc_status abc_context_set_segment_size(abc_context* ctx, uint64_t segment_size)
{
    return guarded([&] {
        require(ctx != nullptr, "null context");
        auto next = ctx->config;
        next.segment_size = segment_size;
        ctx->reconfigure(next);
    });
}

abc_status abc_context_set_threads(abc_context* ctx, unsigned threads)
{
    return guarded([&] {
        require(ctx != nullptr, "null context");
        auto next = ctx->config;
        next.threads = threads;
        ctx->reconfigure(next);
    });
}

abc_status abc_context_set_export_cap(abc_context* ctx, uint64_t cap)
{
    return guarded([&] {
        require(ctx != nullptr, "null context");
        auto next = ctx->config;
        next.export_cap = cap;
        ctx->reconfigure(next);
    });
}

abc_status abc_context_set_exact_only(abc_context* ctx, int exact_only)
{
    return guarded([&] {
        require(ctx != nullptr, "null context");
        ctx->exactness = exact_only ? abc::Exactness::exact_only : abc::Exactness::fast_with_exact_fallback;
        ctx->reconfigure(ctx->config);
    });
}

uint64_t abc_context_enumeration_limit(const abc_context* ctx) { return ctx ? ctx->config.enumeration_limit : 0; }

uint64_t abc_context_segment_size(const abc_context* ctx) { return ctx ? ctx->config.segment_size : 0; }

abc_status abc_epsilon_parse(const char* text, abc_epsilon* out)
{
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = from_eps(abc::Epsilon::parse(text));
    });
}

abc_status abc_arith(const abc_context* ctx, uint64_t m, abc_arith_info* out)
{
    return guarded([&] {
        require(ctx != nullptr && out != nullptr, "null argument");
        const auto f = abc::factorize(m, ctx->config.factor_limit);
        abc_arith_info info{};
        info.value = f.value();
        info.radical = abc::radical(f);
        info.phi = abc::euler_phi(f);
        info.q = abc::q_of(f);
        info.factor_count = f.omega();
        for (std::size_t i = 0; i < f.omega(); ++i)
            info.factors[i] = {f.factors()[i].prime, f.factors()[i].exponent};
        *out = info;
    });
}

abc_status abc_census(abc_context* ctx, uint64_t c, uint32_t n, abc_epsilon eps, abc_census_result* out)
{
    return guarded([&] {
        require(ctx != nullptr && out != nullptr, "null argument");
        const auto r = ctx->lab->census(c, n, to_eps(eps));
        *out = abc_census_result{c,
                                 n,
                                 from_eps(r.query.eps),
                                 r.count_satisfying,
                                 r.total_pairs,
                                 r.ratio,
                                 r.log_gm,
                                 r.upper_bound_ok ? 1 : 0,
                                 r.exact_evaluations,
                                 std::chrono::duration<double>(r.elapsed).count()};
    });
}

abc_status abc_decompositions(abc_context* ctx, uint64_t c, uint32_t n, abc_epsilon eps, abc_decomposition_sink sink,
                              void* user)
{
    return guarded([&] {
        require(ctx != nullptr && sink != nullptr, "null argument");
        abc::stream_decompositions(
            ctx->query(c, n, to_eps(eps)),
            [&](const abc::DecompositionRecord& r) {
                const abc_decomposition rec{r.a, r.b, r.rad_a, r.rad_b, r.rad_ab, r.satisfies ? 1 : 0};
                if (sink(&rec, user) != 0)
                    throw Cancelled{};
            },
            ctx->config);
    });
}

abc_status abc_generalized(abc_context* ctx, uint64_t c, uint32_t r, uint32_t p, uint32_t q, abc_epsilon eps,
                           abc_generalized_sink sink, void* user)
{
    return guarded([&] {
        require(ctx != nullptr && sink != nullptr, "null argument");
        for (const auto& s : abc::generalized_census(c, r, p, q, to_eps(eps), ctx->config)) {
            const abc_generalized_solution sol{s.a, s.b, s.satisfies ? 1 : 0};
            if (sink(&sol, user) != 0)
                throw Cancelled{};
        }
    });
}

abc_status abc_check_bounds(abc_context* ctx, uint64_t c, uint32_t n, abc_epsilon eps, abc_bound_check* out)
{
    return guarded([&] {
        require(ctx != nullptr && out != nullptr, "null argument");
        const auto b = ctx->lab->check_bounds(c, n, to_eps(eps));
        *out = abc_bound_check{b.c,          b.n, from_eps(b.eps), b.log_gm, b.log_lower_no_kappa, b.log_upper,
                               b.upper_ok ? 1 : 0, b.kappa_ratio};
    });
}

abc_status abc_estimate_kappa(abc_context* ctx, abc_epsilon eps, uint64_t c_min, uint64_t c_max, uint32_t n,
                              abc_kappa_estimate* out)
{
    return guarded([&] {
        require(ctx != nullptr && out != nullptr, "null argument");
        fill_kappa(ctx->lab->estimate_kappa(to_eps(eps), c_min, c_max, n), out);
    });
}

abc_status abc_estimate_kappa_over_n(abc_context* ctx, abc_epsilon eps, uint64_t c, uint32_t n_max,
                                     abc_kappa_estimate* out)
{
    return guarded([&] {
        require(ctx != nullptr && out != nullptr, "null argument");
        fill_kappa(ctx->lab->estimate_kappa_over_n(to_eps(eps), c, n_max), out);
    });
}

abc_status abc_convergence_scan(abc_context* ctx, uint64_t c, abc_epsilon eps, uint32_t n_max, const double* kappa,
                                double* kappa_used, abc_convergence_sink sink, void* user)
{
    return guarded([&] {
        require(ctx != nullptr && sink != nullptr, "null argument");
        const auto e = to_eps(eps);
        const double k = kappa ? *kappa : ctx->lab->estimate_kappa_over_n(e, c, n_max).kappa_hat;
        const auto rows = ctx->lab->convergence_scan(c, e, n_max, k);
        if (kappa_used)
            *kappa_used = k;
        for (const auto& r : rows) {
            const abc_convergence_row row{r.n, r.count, r.total, r.ratio, r.lower_bound_ratio};
            if (sink(&row, user) != 0)
                throw Cancelled{};
        }
    });
}

abc_status abc_scan_over_c(abc_context* ctx, abc_epsilon eps, uint64_t c_min, uint64_t c_max, abc_c_scan_sink sink,
                           void* user)
{
    return guarded([&] {
        require(ctx != nullptr && sink != nullptr, "null argument");
        for (const auto& r : ctx->lab->scan_over_c(to_eps(eps), c_min, c_max)) {
            const abc_c_scan_row row{r.c, r.count, r.total, r.ratio};
            if (sink(&row, user) != 0)
                throw Cancelled{};
        }
    });
}

} // extern "C"
