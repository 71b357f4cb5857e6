#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "abc-census");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = abc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        parts.push_back(cur);
    if (!s.empty() && s.back() == sep)
        parts.push_back("");
    return parts;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        rows.push_back(split(line, ','));
    return rows;
}

// Every CSV cell equals the JSON value under the same column name.
void check_same_values(const std::vector<std::string>& args)
{
    auto csv_args = args;
    csv_args.insert(csv_args.end(), {"--emit", "csv"});
    auto json_args = args;
    json_args.insert(json_args.end(), {"--emit", "json"});
    const auto csv = run(csv_args);
    const auto js = run(json_args);
    REQUIRE(csv.code == 0);
    REQUIRE(js.code == 0);

    const auto rows = csv_rows(csv.out);
    REQUIRE(rows.size() >= 2);
    const auto doc = nlohmann::json::parse(js.out);
    std::vector<nlohmann::json> objects;
    if (doc.contains("rows"))
        objects.assign(doc["rows"].begin(), doc["rows"].end());
    else
        objects.push_back(doc);
    REQUIRE(objects.size() == rows.size() - 1);

    const auto& header = rows[0];
    for (std::size_t r = 1; r < rows.size(); ++r) {
        REQUIRE(rows[r].size() == header.size());
        const auto& obj = objects[r - 1];
        for (std::size_t col = 0; col < header.size(); ++col) {
            CAPTURE(header[col]);
            REQUIRE(obj.contains(header[col]));
            const auto& v = obj[header[col]];
            const std::string& cell = rows[r][col];
            if (v.is_boolean())
                CHECK(cell == (v.get<bool>() ? "true" : "false"));
            else if (v.is_number_integer())
                CHECK(std::stoull(cell) == v.get<std::uint64_t>());
            else if (v.is_number())
                CHECK(std::stod(cell) == v.get<double>());
            else
                CHECK(cell == v.get<std::string>());
        }
    }
}

} // namespace

TEST_CASE("format helpers")
{
    CHECK(abc::cli::format_real(0.4) == "0.4");
    CHECK(abc::cli::format_real(2.0 / 3.0) == "0.666666666667");
    CHECK(abc::cli::format_real(123456789012345.0) == "1.23456789012e+14");
    CHECK(abc::cli::parse_count("1e9") == 1'000'000'000ULL);
    CHECK(abc::cli::parse_count("10^12") == 1'000'000'000'000ULL);
    CHECK(abc::cli::parse_count("12345") == 12345);
    CHECK_THROWS(abc::cli::parse_count("1e30"));
    CHECK_THROWS(abc::cli::parse_count("x"));
}

TEST_CASE("radical command")
{
    auto r = run({"radical", "84"});
    CHECK(r.code == 0);
    CHECK(r.out.find("R=42") != std::string::npos);
    CHECK(r.out.find("phi=24") != std::string::npos);
    CHECK(r.out.find("Q=12") != std::string::npos);

    r = run({"radical", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("R=1\nphi=1\nQ=1") != std::string::npos);

    CHECK(run({"radical", "0"}).code == 2);
    CHECK(run({"radical", "abc"}).code == 2);
    CHECK(run({"radical", "84", "--emit", "csv"}).out == "m,radical,phi,q,factorization\n84,42,24,12,2^2*3*7\n");
}

TEST_CASE("census command")
{
    auto r = run({"census", "-c", "5", "-n", "2", "--eps", "1/2", "--emit", "csv"});
    CHECK(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"c", "n", "eps", "count", "total", "ratio", "log_gm", "upper_ok"});
    CHECK(rows[1][3] == "4");
    CHECK(rows[1][4] == "10");
    CHECK(rows[1][5] == "0.4");
    CHECK(rows[1][7] == "true");

    r = run({"census", "-c", "3", "-n", "1", "--eps", "1/2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("count=0\ntotal=1\n") != std::string::npos);

    r = run({"census", "-c", "2", "-n", "1", "--eps", "1/2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("degenerate-modulus") != std::string::npos);

    CHECK(run({"census", "-c", "10", "-n", "10"}).code == 3);
    CHECK(run({"census", "-c", "10", "-n", "3", "--limit", "999"}).code == 3);
    CHECK(run({"census", "-c", "10", "-n", "3", "--limit", "1000"}).code == 0);
    CHECK(run({"census", "-c", "10", "-n", "3", "--limit", "1e10"}).code == 2);  // above the 8e9 ceiling
    CHECK(run({"census", "-c", "5", "-n", "2", "--eps", "0.5"}).code == 2);
    CHECK(run({"census", "-c", "5"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("scan command")
{
    auto r = run({"scan", "-c", "5", "--eps", "1/2", "--n-max", "4", "--emit", "csv"});
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == std::vector<std::string>{"n", "count", "total", "ratio", "lower_bound_ratio"});
    CHECK(rows[1][3] == "0.5");
    CHECK(rows[2][3] == "0.4");
    CHECK(rows[3][1] == "29");
    CHECK(rows[4][1] == "182");
    CHECK(std::stod(rows[4][3]) >= 0.4);

    r = run({"scan", "-c", "5", "--eps", "1/2", "--n-max", "1", "--emit", "csv"});
    rows = csv_rows(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][3] == "0.5");

    // lower_bound_ratio is reported unclamped in data files
    r = run({"scan", "-c", "5", "--n-max", "2", "--kappa", "0.3098", "--emit", "csv"});
    rows = csv_rows(r.out);
    CHECK(std::stod(rows[1][4]) == doctest::Approx(-0.228).epsilon(2e-3));
    CHECK(std::stod(rows[2][4]) == doctest::Approx(0.181).epsilon(2e-3));

    CHECK(run({"scan", "-c", "1", "--n-max", "2"}).code == 2);
    CHECK(run({"scan", "-c", "5", "--n-max", "2", "--kappa", "0"}).code == 2);
}

TEST_CASE("kappa command")
{
    auto r = run({"kappa", "--eps", "1/2", "--c-min", "3", "--c-max", "5", "-n", "1", "--emit", "csv"});
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"eps", "c_min", "c_max", "n", "kappa_hat", "argmin_c", "argmin_n"});
    CHECK(rows[1][5] == "4");
    CHECK(rows[1][6] == "1");

    r = run({"kappa", "--eps", "1/2", "--c-min", "5", "--c-max", "5", "-n", "1", "--emit", "csv"});
    rows = csv_rows(r.out);
    CHECK(std::stod(rows[1][4]) == doctest::Approx(0.3098).epsilon(1e-3));

    CHECK(run({"kappa", "--c-min", "5", "--c-max", "3", "-n", "1"}).code == 2);
}

TEST_CASE("decompositions command")
{
    auto r = run({"decompositions", "-c", "5", "-n", "1", "--eps", "1/2", "--emit", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "a,b,rad_a,rad_b,rad_ab,satisfies\n1,4,1,2,2,false\n2,3,2,3,6,true\n");

    r = run({"decompositions", "-c", "5", "-n", "2", "--eps", "1/2", "--emit", "csv"});
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 11);
    int satisfied = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        satisfied += rows[i][5] == "true";
    CHECK(satisfied == 4);

    r = run({"decompositions", "-c", "5", "-n", "2", "--emit", "csv", "--export-cap", "9"});
    CHECK(r.code == 3);
    CHECK(r.out.empty());
}

TEST_CASE("generalized command")
{
    auto r = run({"generalized", "-c", "3", "-r", "2", "-p", "3", "-q", "1", "--eps", "1/2", "--emit", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "a,b,satisfies\n1,8,false\n");

    r = run({"generalized", "-c", "2", "-r", "4", "-p", "1", "-q", "2", "--eps", "1/2", "--emit", "csv"});
    CHECK(r.out == "a,b,satisfies\n7,3,false\n");

    r = run({"generalized", "-c", "5", "-r", "2", "-p", "1", "-q", "1", "--eps", "1/2", "--emit", "json"});
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["experimental"] == true);
    std::vector<std::uint64_t> sat;
    for (const auto& row : doc["rows"])
        if (row["satisfies"].get<bool>())
            sat.push_back(row["a"]);
    CHECK(sat == std::vector<std::uint64_t>{3, 6, 11, 12});

    r = run({"generalized", "-c", "3", "-r", "2", "-p", "3", "-q", "1"});
    CHECK(r.out.find("experimental") != std::string::npos);
}

TEST_CASE("csv and json carry identical values")
{
    check_same_values({"radical", "360"});
    check_same_values({"census", "-c", "7", "-n", "4", "--eps", "1/3"});
    check_same_values({"bounds", "-c", "12", "-n", "2"});
    check_same_values({"scan", "-c", "6", "--n-max", "5", "--eps", "3/4"});
    check_same_values({"scan-c", "--c-min", "3", "--c-max", "30"});
    check_same_values({"kappa", "--c-min", "3", "--c-max", "25", "-n", "2"});
    check_same_values({"decompositions", "-c", "13", "-n", "2"});
    check_same_values({"generalized", "-c", "2", "-r", "10", "-p", "1", "-q", "2"});
}

TEST_CASE("output does not depend on --threads")
{
    const std::vector<std::string> base{"census", "-c", "7", "-n", "6", "--emit", "csv", "--segment-size", "1000"};
    auto with = [&](const char* threads) {
        auto args = base;
        args.insert(args.end(), {"--threads", threads});
        return run(args);
    };
    const auto one = with("1");
    REQUIRE(one.code == 0);
    CHECK(with("2").out == one.out);
    CHECK(with("8").out == one.out);
    CHECK(with("0").out == one.out);
}

TEST_CASE("environment variables and file output")
{
    ::setenv("ABC_LIMIT", "100", 1);
    CHECK(run({"census", "-c", "11", "-n", "2"}).code == 3);
    ::unsetenv("ABC_LIMIT");
    CHECK(run({"census", "-c", "11", "-n", "2"}).code == 0);

    ::setenv("ABC_SEGMENT_SIZE", "0", 1);
    CHECK(run({"census", "-c", "11", "-n", "2"}).code == 2);
    ::unsetenv("ABC_SEGMENT_SIZE");

    const auto path = std::filesystem::temp_directory_path() / "abc_cli_test_output.csv";
    const auto r = run({"census", "-c", "5", "-n", "2", "--emit", "csv", "-o", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str().rfind("c,n,eps,count,total,ratio,log_gm,upper_ok\n5,2,1/2,4,10,0.4,", 0) == 0);
    std::filesystem::remove(path);

    CHECK(run({"census", "-c", "5", "-n", "2", "-o", "/nonexistent-dir/x.csv"}).code == 3);
}
