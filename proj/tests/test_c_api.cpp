// Exercises the shared library strictly through abc_census.h.
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "abc_census.h"

namespace {

struct Ctx {
    Ctx() { REQUIRE(abc_context_create(&p) == ABC_OK); }
    ~Ctx() { abc_context_destroy(p); }
    abc_context* p = nullptr;
};

const abc_epsilon half{1, 2};

} // namespace

TEST_CASE("context lifecycle and configuration")
{
    Ctx ctx;
    CHECK(abc_context_enumeration_limit(ctx.p) == 1'000'000'000ULL);
    CHECK(abc_context_segment_size(ctx.p) == (1ULL << 20));
    CHECK(abc_context_set_segment_size(ctx.p, 1000) == ABC_OK);
    CHECK(abc_context_segment_size(ctx.p) == 1000);
    CHECK(abc_context_set_segment_size(ctx.p, 0) == ABC_ERR_INVALID_INPUT);
    CHECK(std::strlen(abc_last_error()) > 0);
    CHECK(abc_context_segment_size(ctx.p) == 1000);
    CHECK(abc_context_set_enumeration_limit(ctx.p, 9'000'000'000ULL) == ABC_ERR_INVALID_INPUT);
    CHECK(abc_context_set_threads(ctx.p, 3) == ABC_OK);
    CHECK(abc_context_set_exact_only(ctx.p, 1) == ABC_OK);
    CHECK(abc_context_create(nullptr) == ABC_ERR_INVALID_INPUT);
    abc_context_destroy(nullptr);
    CHECK(std::strcmp(abc_status_string(ABC_ERR_DEGENERATE_MODULUS), "degenerate-modulus") == 0);
    CHECK(std::strlen(abc_version()) > 0);
}

TEST_CASE("epsilon parsing")
{
    abc_epsilon e{};
    CHECK(abc_epsilon_parse("2/4", &e) == ABC_OK);
    CHECK(e.num == 1);
    CHECK(e.den == 2);
    CHECK(abc_epsilon_parse("1/1", &e) == ABC_ERR_INVALID_INPUT);
    CHECK(abc_epsilon_parse(nullptr, &e) == ABC_ERR_INVALID_INPUT);
    CHECK(std::strlen(abc_last_error()) > 0);
}

TEST_CASE("arith info")
{
    Ctx ctx;
    abc_arith_info info{};
    REQUIRE(abc_arith(ctx.p, 84, &info) == ABC_OK);
    CHECK(info.radical == 42);
    CHECK(info.phi == 24);
    CHECK(info.q == 12);
    REQUIRE(info.factor_count == 3);
    CHECK(info.factors[0].prime == 2);
    CHECK(info.factors[0].exponent == 2);
    CHECK(info.factors[2].prime == 7);

    REQUIRE(abc_arith(ctx.p, 1, &info) == ABC_OK);
    CHECK(info.factor_count == 0);
    CHECK(info.radical == 1);
    CHECK(abc_arith(ctx.p, 0, &info) == ABC_ERR_INVALID_INPUT);

    REQUIRE(abc_arith(ctx.p, 200'560'490'130ULL, &info) == ABC_OK);  // 2*3*...*31
    CHECK(info.factor_count == 11);
    CHECK(info.radical == 200'560'490'130ULL);
    CHECK(abc_arith(ctx.p, 1'000'000'000'001ULL, &info) == ABC_ERR_LIMIT_EXCEEDED);
}

TEST_CASE("census through the C API")
{
    Ctx ctx;
    abc_census_result r{};
    REQUIRE(abc_census(ctx.p, 5, 2, half, &r) == ABC_OK);
    CHECK(r.count == 4);
    CHECK(r.total == 10);
    CHECK(r.upper_ok == 1);
    CHECK(r.eps.num == 1);
    CHECK(r.eps.den == 2);

    CHECK(abc_census(ctx.p, 2, 1, half, &r) == ABC_ERR_DEGENERATE_MODULUS);
    CHECK(abc_census(ctx.p, 1, 1, half, &r) == ABC_ERR_INVALID_INPUT);
    CHECK(abc_census(ctx.p, 10, 10, half, &r) == ABC_ERR_LIMIT_EXCEEDED);
    CHECK(abc_census(ctx.p, 5, 2, abc_epsilon{2, 2}, &r) == ABC_ERR_INVALID_INPUT);
    CHECK(abc_census(nullptr, 5, 2, half, &r) == ABC_ERR_INVALID_INPUT);

    REQUIRE(abc_context_set_exact_only(ctx.p, 1) == ABC_OK);
    REQUIRE(abc_census(ctx.p, 5, 2, half, &r) == ABC_OK);
    CHECK(r.exact_evaluations == 10);
}

TEST_CASE("decomposition sink and cancellation")
{
    Ctx ctx;
    std::vector<abc_decomposition> got;
    auto collect = [](const abc_decomposition* d, void* user) -> int {
        static_cast<std::vector<abc_decomposition>*>(user)->push_back(*d);
        return 0;
    };
    REQUIRE(abc_decompositions(ctx.p, 5, 1, half, collect, &got) == ABC_OK);
    REQUIRE(got.size() == 2);
    CHECK((got[0].a == 1 && got[0].b == 4 && got[0].rad_ab == 2 && got[0].satisfies == 0));
    CHECK((got[1].a == 2 && got[1].b == 3 && got[1].rad_ab == 6 && got[1].satisfies == 1));

    int seen = 0;
    auto stop_after_three = [](const abc_decomposition*, void* user) -> int { return ++*static_cast<int*>(user) >= 3; };
    CHECK(abc_decompositions(ctx.p, 5, 2, half, stop_after_three, &seen) == ABC_ERR_CANCELLED);
    CHECK(seen == 3);

    REQUIRE(abc_context_set_export_cap(ctx.p, 5) == ABC_OK);
    got.clear();
    CHECK(abc_decompositions(ctx.p, 5, 2, half, collect, &got) == ABC_ERR_EXPORT_CAP_EXCEEDED);
    CHECK(got.empty());
}

TEST_CASE("generalized solutions")
{
    Ctx ctx;
    std::vector<abc_generalized_solution> got;
    auto collect = [](const abc_generalized_solution* s, void* user) -> int {
        static_cast<std::vector<abc_generalized_solution>*>(user)->push_back(*s);
        return 0;
    };
    REQUIRE(abc_generalized(ctx.p, 3, 2, 3, 1, half, collect, &got) == ABC_OK);
    REQUIRE(got.size() == 1);
    CHECK((got[0].a == 1 && got[0].b == 8 && got[0].satisfies == 0));
    got.clear();
    REQUIRE(abc_generalized(ctx.p, 2, 4, 1, 2, half, collect, &got) == ABC_OK);
    REQUIRE(got.size() == 1);
    CHECK((got[0].a == 7 && got[0].b == 3 && got[0].satisfies == 0));
}

TEST_CASE("bounds, kappa and scans")
{
    Ctx ctx;
    abc_bound_check b{};
    REQUIRE(abc_check_bounds(ctx.p, 5, 1, half, &b) == ABC_OK);
    CHECK(b.kappa_ratio == doctest::Approx(std::sqrt(60.0) / 25.0));
    CHECK(b.upper_ok == 1);

    abc_kappa_estimate k{};
    REQUIRE(abc_estimate_kappa(ctx.p, half, 3, 5, 1, &k) == ABC_OK);
    CHECK(k.argmin_c == 4);
    CHECK(k.argmin_n == 1);
    CHECK(k.c_min == 3);
    CHECK(k.c_max == 5);
    CHECK(abc_estimate_kappa(ctx.p, half, 5, 3, 1, &k) == ABC_ERR_INVALID_INPUT);

    abc_kappa_estimate kn{};
    REQUIRE(abc_estimate_kappa_over_n(ctx.p, half, 5, 4, &kn) == ABC_OK);
    CHECK(kn.n_min == 1);
    CHECK(kn.n_max == 4);

    std::vector<abc_convergence_row> rows;
    auto collect = [](const abc_convergence_row* r, void* user) -> int {
        static_cast<std::vector<abc_convergence_row>*>(user)->push_back(*r);
        return 0;
    };
    double used = 0.0;
    REQUIRE(abc_convergence_scan(ctx.p, 5, half, 4, nullptr, &used, collect, &rows) == ABC_OK);
    CHECK(used == kn.kappa_hat);
    REQUIRE(rows.size() == 4);
    CHECK((rows[2].count == 29 && rows[2].total == 50));
    CHECK((rows[3].count == 182 && rows[3].total == 250));

    const double bad_kappa = -1.0;
    CHECK(abc_convergence_scan(ctx.p, 5, half, 4, &bad_kappa, nullptr, collect, &rows) == ABC_ERR_INVALID_INPUT);

    std::vector<abc_c_scan_row> crows;
    auto collect_c = [](const abc_c_scan_row* r, void* user) -> int {
        static_cast<std::vector<abc_c_scan_row>*>(user)->push_back(*r);
        return 0;
    };
    REQUIRE(abc_scan_over_c(ctx.p, half, 3, 5, collect_c, &crows) == ABC_OK);
    REQUIRE(crows.size() == 3);
    CHECK((crows[2].c == 5 && crows[2].count == 1 && crows[2].total == 2));
}
