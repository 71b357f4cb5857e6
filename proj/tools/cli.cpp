#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abc_census.h"

namespace abc::cli {

namespace {

using Json = nlohmann::ordered_json;

// A failed C API call, carried up to run() where it becomes an exit code.
struct CommandError : std::runtime_error {
    CommandError(abc_status s, const std::string& what) : std::runtime_error(what), status(s) {}
    abc_status status;
};

void check(abc_status s)
{
    if (s != ABC_OK)
        throw CommandError(s, std::string(abc_status_string(s)) + ": " + abc_last_error());
}

int exit_code_for(abc_status s)
{
    switch (s) {
    case ABC_OK: return kSuccess;
    case ABC_ERR_INVALID_INPUT:
    case ABC_ERR_DEGENERATE_MODULUS: return kInvalidInput;
    case ABC_ERR_LIMIT_EXCEEDED:
    case ABC_ERR_EXPORT_CAP_EXCEEDED:
    case ABC_ERR_OVERFLOW_OF_LIMIT: return kResourceLimit;
    default: return kFailure;
    }
}

struct ContextDeleter {
    void operator()(abc_context* ctx) const noexcept { abc_context_destroy(ctx); }
};
using Context = std::unique_ptr<abc_context, ContextDeleter>;

enum class Format { human, csv, json };

struct Settings {
    std::string emit = "human";
    std::string output;
    unsigned threads = 1;
    std::string limit;
    std::string segment_size;
    std::string export_cap;
    bool exact_only = false;

    std::string eps = "1/2";
    std::uint64_t c = 0;
    std::uint32_t n = 1;
    std::uint32_t n_max = 1;
    std::optional<double> kappa;
    std::uint64_t c_min = 0;
    std::uint64_t c_max = 0;
    std::uint32_t r = 1, p = 1, q = 1;
    std::string m;

    Format format() const
    {
        if (emit == "csv")
            return Format::csv;
        if (emit == "json")
            return Format::json;
        return Format::human;
    }
};

std::string eps_string(abc_epsilon e)
{
    return std::to_string(e.num) + "/" + std::to_string(e.den);
}

const char* bool_string(int v) { return v ? "true" : "false"; }

Json json_real(double x)
{
    if (!std::isfinite(x))
        return nullptr;
    return std::stod(format_real(x));
}

std::string join(std::initializer_list<std::string> fields)
{
    std::string line;
    for (const auto& f : fields) {
        if (!line.empty())
            line += ',';
        line += f;
    }
    return line;
}

abc_epsilon parse_eps(const Settings& s)
{
    abc_epsilon e{};
    check(abc_epsilon_parse(s.eps.c_str(), &e));
    return e;
}

// Table output for row-producing commands. Rows are written as they arrive;
// the header (or JSON preamble) goes out on the first row, so a command that
// fails before producing anything leaves the destination empty.
class TableWriter {
public:
    TableWriter(std::ostream& os, Format format, std::string csv_header, Json meta)
        : os_(os), format_(format), header_(std::move(csv_header)), meta_(std::move(meta))
    {
    }

    void row(const std::vector<std::string>& csv, const Json& json, const std::string& human)
    {
        begin();
        switch (format_) {
        case Format::csv: {
            std::string line;
            for (const auto& f : csv) {
                if (!line.empty())
                    line += ',';
                line += f;
            }
            os_ << line << '\n';
            break;
        }
        case Format::json:
            os_ << (rows_ ? ",\n    " : "\n    ") << json.dump();
            break;
        case Format::human:
            os_ << human << '\n';
            break;
        }
        ++rows_;
    }

    void finish()
    {
        begin();
        if (format_ == Format::json)
            os_ << (rows_ ? "\n  ]\n}\n" : "]\n}\n");
    }

    void set_human_header(std::string h) { human_header_ = std::move(h); }

private:
    void begin()
    {
        if (started_)
            return;
        started_ = true;
        switch (format_) {
        case Format::csv: os_ << header_ << '\n'; break;
        case Format::json:
            os_ << "{\n";
            for (const auto& [key, value] : meta_.items())
                os_ << "  " << Json(key).dump() << ": " << value.dump() << ",\n";
            os_ << "  \"rows\": [";
            break;
        case Format::human:
            if (!human_header_.empty())
                os_ << human_header_ << '\n';
            break;
        }
    }

    std::ostream& os_;
    Format format_;
    std::string header_;
    Json meta_;
    std::string human_header_;
    bool started_ = false;
    std::size_t rows_ = 0;
};

void cmd_radical(abc_context* ctx, const Settings& s, std::ostream& os)
{
    const std::uint64_t m = parse_count(s.m);
    abc_arith_info info{};
    check(abc_arith(ctx, m, &info));

    std::string fact;
    for (std::size_t i = 0; i < info.factor_count; ++i) {
        if (i)
            fact += '*';
        fact += std::to_string(info.factors[i].prime);
        if (info.factors[i].exponent > 1)
            fact += '^' + std::to_string(info.factors[i].exponent);
    }
    if (fact.empty())
        fact = "1";

    switch (s.format()) {
    case Format::csv:
        os << "m,radical,phi,q,factorization\n"
           << join({std::to_string(info.value), std::to_string(info.radical), std::to_string(info.phi),
                    std::to_string(info.q), fact})
           << '\n';
        break;
    case Format::json: {
        Json j;
        j["m"] = info.value;
        j["radical"] = info.radical;
        j["phi"] = info.phi;
        j["q"] = info.q;
        j["factorization"] = fact;
        os << j.dump(2) << '\n';
        break;
    }
    case Format::human:
        os << "m=" << info.value << "\nfactorization=" << fact << "\nR=" << info.radical << "\nphi=" << info.phi
           << "\nQ=" << info.q << '\n';
        break;
    }
}

void cmd_census(abc_context* ctx, const Settings& s, std::ostream& os)
{
    abc_census_result r{};
    check(abc_census(ctx, s.c, s.n, parse_eps(s), &r));

    switch (s.format()) {
    case Format::csv:
        os << "c,n,eps,count,total,ratio,log_gm,upper_ok\n"
           << join({std::to_string(r.c), std::to_string(r.n), eps_string(r.eps), std::to_string(r.count),
                    std::to_string(r.total), format_real(r.ratio), format_real(r.log_gm), bool_string(r.upper_ok)})
           << '\n';
        break;
    case Format::json: {
        Json j;
        j["c"] = r.c;
        j["n"] = r.n;
        j["eps"] = eps_string(r.eps);
        j["count"] = r.count;
        j["total"] = r.total;
        j["ratio"] = json_real(r.ratio);
        j["log_gm"] = json_real(r.log_gm);
        j["upper_ok"] = r.upper_ok != 0;
        os << j.dump(2) << '\n';
        break;
    }
    case Format::human:
        os << "c=" << r.c << " n=" << r.n << " eps=" << eps_string(r.eps) << "\ncount=" << r.count
           << "\ntotal=" << r.total << "\nratio=" << format_real(r.ratio) << "\nlog_gm=" << format_real(r.log_gm)
           << "\nupper_ok=" << bool_string(r.upper_ok) << "\nexact_evaluations=" << r.exact_evaluations
           << "\nelapsed_s=" << format_real(r.elapsed_seconds) << '\n';
        break;
    }
}

void cmd_bounds(abc_context* ctx, const Settings& s, std::ostream& os)
{
    abc_bound_check b{};
    check(abc_check_bounds(ctx, s.c, s.n, parse_eps(s), &b));

    switch (s.format()) {
    case Format::csv:
        os << "c,n,eps,log_gm,log_lower_no_kappa,log_upper,upper_ok,kappa_ratio\n"
           << join({std::to_string(b.c), std::to_string(b.n), eps_string(b.eps), format_real(b.log_gm),
                    format_real(b.log_lower_no_kappa), format_real(b.log_upper), bool_string(b.upper_ok),
                    format_real(b.kappa_ratio)})
           << '\n';
        break;
    case Format::json: {
        Json j;
        j["c"] = b.c;
        j["n"] = b.n;
        j["eps"] = eps_string(b.eps);
        j["log_gm"] = json_real(b.log_gm);
        j["log_lower_no_kappa"] = json_real(b.log_lower_no_kappa);
        j["log_upper"] = json_real(b.log_upper);
        j["upper_ok"] = b.upper_ok != 0;
        j["kappa_ratio"] = json_real(b.kappa_ratio);
        os << j.dump(2) << '\n';
        break;
    }
    case Format::human:
        os << "c=" << b.c << " n=" << b.n << " eps=" << eps_string(b.eps) << "\nlog_gm=" << format_real(b.log_gm)
           << "\nlog_lower_no_kappa=" << format_real(b.log_lower_no_kappa)
           << "\nlog_upper=" << format_real(b.log_upper) << "\nupper_ok=" << bool_string(b.upper_ok)
           << "\nkappa_ratio=" << format_real(b.kappa_ratio) << '\n';
        break;
    }
}

void cmd_kappa(abc_context* ctx, const Settings& s, std::ostream& os)
{
    abc_kappa_estimate k{};
    check(abc_estimate_kappa(ctx, parse_eps(s), s.c_min, s.c_max, s.n, &k));

    switch (s.format()) {
    case Format::csv:
        os << "eps,c_min,c_max,n,kappa_hat,argmin_c,argmin_n\n"
           << join({eps_string(k.eps), std::to_string(k.c_min), std::to_string(k.c_max), std::to_string(s.n),
                    format_real(k.kappa_hat), std::to_string(k.argmin_c), std::to_string(k.argmin_n)})
           << '\n';
        break;
    case Format::json: {
        Json j;
        j["eps"] = eps_string(k.eps);
        j["c_min"] = k.c_min;
        j["c_max"] = k.c_max;
        j["n"] = s.n;
        j["kappa_hat"] = json_real(k.kappa_hat);
        j["argmin_c"] = k.argmin_c;
        j["argmin_n"] = k.argmin_n;
        os << j.dump(2) << '\n';
        break;
    }
    case Format::human:
        os << "eps=" << eps_string(k.eps) << "\nscanned=c in [" << k.c_min << ", " << k.c_max << "], n=" << s.n
           << "\nkappa_hat=" << format_real(k.kappa_hat) << "\nargmin=(" << k.argmin_c << ", " << k.argmin_n
           << ")\n";
        break;
    }
}

struct ScanState {
    TableWriter* writer;
    std::exception_ptr error;
};

void cmd_scan(abc_context* ctx, const Settings& s, std::ostream& os)
{
    const abc_epsilon eps = parse_eps(s);
    if (s.kappa && !(*s.kappa > 0.0))
        throw CommandError(ABC_ERR_INVALID_INPUT, "invalid-input: --kappa must be positive");

    // kappa is needed before the first row (it is part of the JSON preamble)
    double kappa = 0.0;
    if (s.kappa) {
        kappa = *s.kappa;
    } else {
        abc_kappa_estimate k{};
        check(abc_estimate_kappa_over_n(ctx, eps, s.c, s.n_max, &k));
        kappa = k.kappa_hat;
    }

    Json meta;
    meta["c"] = s.c;
    meta["eps"] = eps_string(eps);
    meta["n_max"] = s.n_max;
    meta["kappa"] = json_real(kappa);
    meta["kappa_source"] = s.kappa ? "user" : "kappa_hat";
    TableWriter w(os, s.format(), "n,count,total,ratio,lower_bound_ratio", meta);
    {
        std::ostringstream h;
        h << "c=" << s.c << " eps=" << eps_string(eps) << " kappa=" << format_real(kappa)
          << (s.kappa ? " (user)" : " (kappa_hat over n=1.." + std::to_string(s.n_max) + ")") << '\n'
          << std::left << std::setw(4) << "n" << std::setw(14) << "count" << std::setw(14) << "total"
          << std::setw(16) << "ratio"
          << "lower_bound_ratio";
        w.set_human_header(h.str());
    }

    ScanState state{&w, nullptr};
    auto sink = [](const abc_convergence_row* row, void* user) -> int {
        auto* st = static_cast<ScanState*>(user);
        try {
            Json j;
            j["n"] = row->n;
            j["count"] = row->count;
            j["total"] = row->total;
            j["ratio"] = json_real(row->ratio);
            j["lower_bound_ratio"] = json_real(row->lower_bound_ratio);
            std::ostringstream h;
            h << std::left << std::setw(4) << row->n << std::setw(14) << row->count << std::setw(14) << row->total
              << std::setw(16) << format_real(row->ratio) << format_real(std::max(0.0, row->lower_bound_ratio));
            st->writer->row({std::to_string(row->n), std::to_string(row->count), std::to_string(row->total),
                             format_real(row->ratio), format_real(row->lower_bound_ratio)},
                            j, h.str());
        } catch (...) {
            st->error = std::current_exception();
            return 1;
        }
        return 0;
    };
    const abc_status st = abc_convergence_scan(ctx, s.c, eps, s.n_max, &kappa, nullptr, sink, &state);
    if (state.error)
        std::rethrow_exception(state.error);
    check(st);
    w.finish();
}

void cmd_scan_c(abc_context* ctx, const Settings& s, std::ostream& os)
{
    const abc_epsilon eps = parse_eps(s);
    Json meta;
    meta["eps"] = eps_string(eps);
    meta["c_min"] = s.c_min;
    meta["c_max"] = s.c_max;
    TableWriter w(os, s.format(), "c,count,total,ratio", meta);
    w.set_human_header("eps=" + eps_string(eps) + " n=1\nc count total ratio");

    ScanState state{&w, nullptr};
    auto sink = [](const abc_c_scan_row* row, void* user) -> int {
        auto* st = static_cast<ScanState*>(user);
        try {
            Json j;
            j["c"] = row->c;
            j["count"] = row->count;
            j["total"] = row->total;
            j["ratio"] = json_real(row->ratio);
            const std::vector<std::string> csv{std::to_string(row->c), std::to_string(row->count),
                                               std::to_string(row->total), format_real(row->ratio)};
            st->writer->row(csv, j, csv[0] + " " + csv[1] + " " + csv[2] + " " + csv[3]);
        } catch (...) {
            st->error = std::current_exception();
            return 1;
        }
        return 0;
    };
    const abc_status st = abc_scan_over_c(ctx, eps, s.c_min, s.c_max, sink, &state);
    if (state.error)
        std::rethrow_exception(state.error);
    check(st);
    w.finish();
}

void cmd_decompositions(abc_context* ctx, const Settings& s, std::ostream& os)
{
    const abc_epsilon eps = parse_eps(s);
    Json meta;
    meta["c"] = s.c;
    meta["n"] = s.n;
    meta["eps"] = eps_string(eps);
    TableWriter w(os, s.format(), "a,b,rad_a,rad_b,rad_ab,satisfies", meta);
    w.set_human_header("c=" + std::to_string(s.c) + " n=" + std::to_string(s.n) + " eps=" + eps_string(eps) +
                       "\na b rad_a rad_b rad_ab satisfies");

    ScanState state{&w, nullptr};
    auto sink = [](const abc_decomposition* rec, void* user) -> int {
        auto* st = static_cast<ScanState*>(user);
        try {
            Json j;
            j["a"] = rec->a;
            j["b"] = rec->b;
            j["rad_a"] = rec->rad_a;
            j["rad_b"] = rec->rad_b;
            j["rad_ab"] = rec->rad_ab;
            j["satisfies"] = rec->satisfies != 0;
            const std::vector<std::string> csv{std::to_string(rec->a),     std::to_string(rec->b),
                                               std::to_string(rec->rad_a), std::to_string(rec->rad_b),
                                               std::to_string(rec->rad_ab), bool_string(rec->satisfies)};
            st->writer->row(csv, j,
                            csv[0] + " " + csv[1] + " " + csv[2] + " " + csv[3] + " " + csv[4] + " " + csv[5]);
        } catch (...) {
            st->error = std::current_exception();
            return 1;
        }
        return 0;
    };
    const abc_status st = abc_decompositions(ctx, s.c, s.n, eps, sink, &state);
    if (state.error)
        std::rethrow_exception(state.error);
    check(st);
    w.finish();
}

void cmd_generalized(abc_context* ctx, const Settings& s, std::ostream& os)
{
    const abc_epsilon eps = parse_eps(s);
    Json meta;
    meta["experimental"] = true;
    meta["c"] = s.c;
    meta["r"] = s.r;
    meta["p"] = s.p;
    meta["q"] = s.q;
    meta["eps"] = eps_string(eps);
    TableWriter w(os, s.format(), "a,b,satisfies", meta);
    w.set_human_header("# experimental: solutions of c^r = a^p + b^q with gcd(a, b) = 1, a^p < b^q\n"
                       "c=" + std::to_string(s.c) + " r=" + std::to_string(s.r) + " p=" + std::to_string(s.p) +
                       " q=" + std::to_string(s.q) + " eps=" + eps_string(eps) + "\na b satisfies");

    ScanState state{&w, nullptr};
    auto sink = [](const abc_generalized_solution* sol, void* user) -> int {
        auto* st = static_cast<ScanState*>(user);
        try {
            Json j;
            j["a"] = sol->a;
            j["b"] = sol->b;
            j["satisfies"] = sol->satisfies != 0;
            const std::vector<std::string> csv{std::to_string(sol->a), std::to_string(sol->b),
                                               bool_string(sol->satisfies)};
            st->writer->row(csv, j, csv[0] + " " + csv[1] + " " + csv[2]);
        } catch (...) {
            st->error = std::current_exception();
            return 1;
        }
        return 0;
    };
    const abc_status st = abc_generalized(ctx, s.c, s.r, s.p, s.q, eps, sink, &state);
    if (state.error)
        std::rethrow_exception(state.error);
    check(st);
    w.finish();
}

void configure(abc_context* ctx, const Settings& s)
{
    if (!s.limit.empty())
        check(abc_context_set_enumeration_limit(ctx, parse_count(s.limit)));
    if (!s.segment_size.empty())
        check(abc_context_set_segment_size(ctx, parse_count(s.segment_size)));
    if (!s.export_cap.empty())
        check(abc_context_set_export_cap(ctx, parse_count(s.export_cap)));
    check(abc_context_set_threads(ctx, s.threads));
    check(abc_context_set_exact_only(ctx, s.exact_only ? 1 : 0));
}

} // namespace

std::string format_real(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::uint64_t parse_count(std::string_view text)
{
    auto whole = [&](std::string_view part) {
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
            throw CommandError(ABC_ERR_INVALID_INPUT, "invalid-input: not a non-negative integer: '" +
                                                          std::string(text) + "'");
        return v;
    };
    auto scaled = [&](std::uint64_t mantissa, std::uint64_t base, std::uint64_t exponent) {
        unsigned __int128 v = mantissa;
        for (std::uint64_t i = 0; i < exponent; ++i) {
            v *= base;
            if (v > UINT64_MAX)
                throw CommandError(ABC_ERR_INVALID_INPUT, "invalid-input: value too large: '" + std::string(text) + "'");
        }
        return static_cast<std::uint64_t>(v);
    };

    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos)
        return scaled(whole(text.substr(0, e)), 10, whole(text.substr(e + 1)));
    if (const auto caret = text.find('^'); caret != std::string_view::npos)
        return scaled(1, whole(text.substr(0, caret)), whole(text.substr(caret + 1)));
    return whole(text);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Settings s;
    CLI::App app{"Census of coprime decompositions c^n = a + b under the strong abc inequality", "abc-census"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(abc_version()));

    app.add_option("--emit", s.emit, "Output format")->check(CLI::IsMember({"human", "csv", "json"}));
    app.add_option("-o,--output", s.output, "Write to this file instead of standard output");
    app.add_option("--threads", s.threads, "Worker threads (0 = all cores); results do not depend on it");
    app.add_option("--limit", s.limit, "Enumeration cap on c^n (default 1e9)")->envname("ABC_LIMIT");
    app.add_option("--seed-segment-size,--segment-size", s.segment_size, "Sieve segment length (default 2^20)")
        ->envname("ABC_SEGMENT_SIZE");
    app.add_option("--export-cap", s.export_cap, "Largest number of records 'decompositions' will emit");
    app.add_flag("--exact-only", s.exact_only, "Decide every pair with exact integer arithmetic");

    auto eps_opt = [&](CLI::App* sub) { sub->add_option("--eps", s.eps, "Epsilon as num/den (default 1/2)"); };

    auto* radical = app.add_subcommand("radical", "Factorization, radical, phi and Q of m");
    radical->add_option("m", s.m, "Positive integer")->required();

    auto* census = app.add_subcommand("census", "Count N(c, n) over all coprime decompositions of c^n");
    census->add_option("-c", s.c, "Base c")->required();
    census->add_option("-n", s.n, "Exponent n")->required();
    eps_opt(census);

    auto* bounds = app.add_subcommand("bounds", "Geometric-mean bounds and kappa ratio at (c, n)");
    bounds->add_option("-c", s.c, "Base c")->required();
    bounds->add_option("-n", s.n, "Exponent n")->required();
    eps_opt(bounds);

    auto* scan = app.add_subcommand("scan", "Convergence table for n = 1..n_max");
    scan->add_option("-c", s.c, "Base c")->required();
    scan->add_option("--n-max", s.n_max, "Largest exponent")->required();
    scan->add_option("--kappa", s.kappa, "Constant for the lower-bound column (default: kappa_hat of the scan)");
    eps_opt(scan);

    auto* scan_c = app.add_subcommand("scan-c", "n = 1 census for every c in [c_min, c_max]");
    scan_c->add_option("--c-min", s.c_min)->required();
    scan_c->add_option("--c-max", s.c_max)->required();
    eps_opt(scan_c);

    auto* kappa = app.add_subcommand("kappa", "Empirical kappa over c in [c_min, c_max] at fixed n");
    kappa->add_option("--c-min", s.c_min)->required();
    kappa->add_option("--c-max", s.c_max)->required();
    kappa->add_option("-n", s.n, "Exponent n (default 1)");
    eps_opt(kappa);

    auto* decomp = app.add_subcommand("decompositions", "Every coprime decomposition of c^n with its verdict");
    decomp->add_option("-c", s.c, "Base c")->required();
    decomp->add_option("-n", s.n, "Exponent n")->required();
    eps_opt(decomp);

    auto* gen = app.add_subcommand("generalized", "Experimental: solutions of c^r = a^p + b^q");
    gen->add_option("-c", s.c, "Base c")->required();
    gen->add_option("-r", s.r, "Exponent of c")->required();
    gen->add_option("-p", s.p, "Exponent of a")->required();
    gen->add_option("-q", s.q, "Exponent of b")->required();
    eps_opt(gen);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInvalidInput;
    }

    const std::vector<std::pair<CLI::App*, std::function<void(abc_context*, const Settings&, std::ostream&)>>>
        commands{{radical, cmd_radical}, {census, cmd_census},         {bounds, cmd_bounds},
                 {scan, cmd_scan},       {scan_c, cmd_scan_c},         {kappa, cmd_kappa},
                 {decomp, cmd_decompositions}, {gen, cmd_generalized}};

    try {
        abc_context* raw = nullptr;
        check(abc_context_create(&raw));
        const Context ctx(raw);
        configure(ctx.get(), s);

        std::ofstream file;
        std::ostream* os = &out;
        if (!s.output.empty()) {
            file.open(s.output, std::ios::binary | std::ios::trunc);
            if (!file) {
                err << "error: cannot open " << s.output << " for writing\n";
                return kResourceLimit;
            }
            os = &file;
        }
        for (const auto& [sub, fn] : commands) {
            if (sub->parsed()) {
                fn(ctx.get(), s, *os);
                break;
            }
        }
        os->flush();
        if (!*os) {
            err << "error: write failed\n";
            return kResourceLimit;
        }
    } catch (const CommandError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.status);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kSuccess;
}

} // namespace abc::cli
