#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = asianpath::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

const std::vector<std::string> kAsset = {"--mu", "0.03", "--sigma", "0.25", "--s0", "100", "--T", "1"};
const std::vector<std::string> kControl = {"--nu",  "0.03", "--xi",      "0.25", "--s0y",
                                           "100",   "--rho", "0",        "--barrier", "150"};

std::vector<std::string> concat(std::initializer_list<std::vector<std::string>> parts)
{
    std::vector<std::string> out;
    for (const auto& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

}  // namespace

TEST(Cli, PriceJson)
{
    const auto r = run(concat({{"price", "--kind", "barrier-avg-price-call", "--r", "0.03", "--strike", "100"}, kAsset, kControl}));
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["command"], "price");
    EXPECT_NEAR(doc["value"].get<double>(), 5.4665893770226619, 1e-12);
    EXPECT_TRUE(doc["breakdown"].contains("d6"));
    EXPECT_EQ(doc["manifest"]["tool_version"], "0.1.0");
    EXPECT_TRUE(doc["manifest"]["seed"].is_null());
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    const auto missing = run({"price", "--kind", "avg-strike-call", "--mu", "0.03", "--s0", "100", "--T", "1", "--r", "0"});
    EXPECT_EQ(missing.code, 2);
    EXPECT_NE(missing.err.find("--sigma"), std::string::npos);
    const auto no_strike = run(concat({{"price", "--kind", "avg-price-call", "--r", "0"}, kAsset}));
    EXPECT_EQ(no_strike.code, 2);
    EXPECT_NE(no_strike.err.find("--strike"), std::string::npos);
    EXPECT_EQ(run(concat({{"price", "--kind", "avg-price-put", "--r", "0", "--strike", "1"}, kAsset})).code, 2);
    EXPECT_EQ(run(concat({{"price", "--kind", "avg-strike-call", "--r", "0", "--sigma", "-1"}, kAsset})).code, 2);
    EXPECT_EQ(run({"--version"}).code, 0);
}

TEST(Cli, DomainErrorsExitThree)
{
    auto control = kControl;
    control[7] = "1";  // --rho 1
    const auto r = run(concat({{"price", "--kind", "barrier-avg-price-call", "--r", "0.03", "--strike", "100"}, kAsset, control}));
    EXPECT_EQ(r.code, 3);
}

TEST(Cli, McSingleSampleHasNullError)
{
    const auto r = run(concat({{"mc", "--kind", "avg-strike-put", "--r", "0.03", "--paths", "1", "--steps", "5"}, kAsset}));
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["std_error"].is_null());
    EXPECT_FALSE(doc["warnings"].empty());
    EXPECT_EQ(doc["manifest"]["seed"], 1);
}

TEST(Cli, McIsDeterministicAcrossChunks)
{
    auto args = concat({{"mc", "--kind", "avg-price-call", "--r", "0.03", "--strike", "100", "--paths", "4096", "--steps", "16"}, kAsset});
    const auto a = nlohmann::json::parse(run(args).out);
    args.insert(args.end(), {"--chunks", "4"});
    const auto b = nlohmann::json::parse(run(args).out);
    EXPECT_EQ(a["value"].dump(), b["value"].dump());
}

TEST(Cli, SweepCsv)
{
    const auto base = concat({{"sweep", "--r", "0.03", "--strike", "100", "--param", "s0y", "--paths", "2000", "--steps", "20"},
                              kAsset, kControl});
    auto single = base;
    single.insert(single.end(), {"--from", "100", "--to", "100", "--points", "1"});
    const auto r = run(single);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], "param_value,rho,analytic_value,mc_value,mc_std_error");
    EXPECT_EQ(rows[1].rfind("100,0,5.4665893770226", 0), 0u) << rows[1];
    EXPECT_EQ(r.out.find('\r'), std::string::npos);

    auto multi = base;
    multi.insert(multi.end(), {"--from", "80", "--to", "120", "--points", "3", "--rho-list", "0,0.5"});
    EXPECT_EQ(lines(run(multi).out).size(), 7u);

    auto backwards = base;
    backwards.insert(backwards.end(), {"--from", "120", "--to", "80", "--points", "3"});
    EXPECT_EQ(run(backwards).code, 2);
}

TEST(Cli, HistogramCsvAndManifestFile)
{
    const auto path = (std::filesystem::temp_directory_path() / "asianpath_hist_test.csv").string();
    const auto r = run(concat({{"histogram", "--paths", "4000", "--steps", "20", "--bins", "12", "--out", path}, kAsset, kControl}));
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream csv(path);
    std::stringstream body;
    body << csv.rdbuf();
    const auto rows = lines(body.str());
    ASSERT_EQ(rows.size(), 13u);
    EXPECT_EQ(rows[0], "bin_left,bin_right,exact_mass,approx_mass");
    double exact = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double lo, hi, e, a;
        ASSERT_EQ(std::sscanf(rows[i].c_str(), "%lf,%lf,%lf,%lf", &lo, &hi, &e, &a), 4);
        exact += e;
    }
    EXPECT_NEAR(exact, 1.0, 1e-9);
    std::ifstream side(path + ".manifest.json");
    const auto man = nlohmann::json::parse(side);
    EXPECT_EQ(man["command"], "histogram");
    EXPECT_EQ(man["parameters"]["bins"], 12);
    std::filesystem::remove(path);
    std::filesystem::remove(path + ".manifest.json");

    EXPECT_EQ(run(concat({{"histogram", "--bins", "9"}, kAsset, kControl})).code, 2);
}

TEST(Cli, PropagatorGrid)
{
    const std::vector<std::string> grid_base = {"propagator-grid", "--mu", "0.03", "--sigma", "0.25", "--T", "1", "--nu", "0.03",
                                           "--xi", "0.25", "--s0y", "100", "--rho", "0", "--barrier", "122.14027581601698"};
    auto args = grid_base;
    args.insert(args.end(), {"--grid", "x=-0.5:0.5:11,y=-0.4:yb:9", "--xbar", "0.0"});
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 1u + 11 * 9);
    EXPECT_EQ(rows[0], "x,y,density");
    double peak = 0.0;
    double on_barrier = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double x, y, d;
        ASSERT_EQ(std::sscanf(rows[i].c_str(), "%lf,%lf,%lf", &x, &y, &d), 3);
        peak = std::max(peak, std::abs(d));
        if (i % 9 == 0) {
            on_barrier = std::max(on_barrier, std::abs(d));
        }
    }
    EXPECT_LE(on_barrier, 1e-10 * peak);

    auto above = grid_base;
    above.insert(above.end(), {"--grid", "x=-0.5:0.5:5,y=-0.4:0.3:5"});
    EXPECT_EQ(run(above).code, 3);
    auto degenerate = grid_base;
    degenerate[14] = "-1";
    degenerate.insert(degenerate.end(), {"--grid", "x=-0.5:0.5:5,xbar=-0.2:0.2:5"});
    EXPECT_EQ(run(degenerate).code, 3);
    auto bad = grid_base;
    bad.insert(bad.end(), {"--grid", "x=-0.5:0.5"});
    EXPECT_EQ(run(bad).code, 2);

    auto joint = grid_base;
    joint.insert(joint.end(), {"--density", "joint", "--grid", "x=-0.5:0.5:3,xbar=-0.2:0.2:3"});
    EXPECT_EQ(run(joint).code, 0);
}
