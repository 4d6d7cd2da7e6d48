#include <gtest/gtest.h>

#include "pqc/verify.hpp"

using namespace pqc;

namespace {

ExperimentConfig small_config() {
    ExperimentConfig c;
    c.primes = {3};
    c.max_level = {{3, 2}};
    c.ensemble = 8;
    c.stability_ensemble = 3;
    c.stability_dimension_cap = 81;
    c.log_norm_levels = 4;
    return c;
}

const Criterion& find(const VerificationReport& r, const std::string& prefix) {
    for (const auto& c : r.criteria)
        if (c.name.rfind(prefix, 0) == 0) return c;
    throw std::runtime_error("no criterion " + prefix);
}

}  // namespace

TEST(Drift, Definition) {
    EXPECT_FALSE(median_drifts({1.0, 2.0}));
    EXPECT_TRUE(median_drifts({1.0, 1.1, 1.3}));
    EXPECT_TRUE(median_drifts({3.0, 2.5, 1.5}));
    EXPECT_FALSE(median_drifts({1.0, 1.5, 1.6}));
    EXPECT_FALSE(median_drifts({1.0, 1.2, 1.1}));
    EXPECT_FALSE(median_drifts({1.0, 1.0, 1.0}));
}

TEST(Ratios, Stats) {
    const auto s = ratio_stats("x", {4.0, 1.0, 2.0, 8.0});
    EXPECT_EQ(s.count, 4);
    EXPECT_DOUBLE_EQ(s.min, 1.0);
    EXPECT_DOUBLE_EQ(s.max, 8.0);
    EXPECT_DOUBLE_EQ(s.median, 3.0);
    EXPECT_NEAR(s.spread, std::log(8.0), 1e-15);
    EXPECT_EQ(ratio_stats("y", {}).count, 0);
}

TEST(Checks, QuotedFormulasHoldAtTheFirstLevel) {
    auto c = small_config();
    c.max_level = {{3, 1}};
    EXPECT_FALSE(run_check("rank", c).hard_failed());
    EXPECT_FALSE(run_check("trace", c).hard_failed());
}

TEST(Checks, QuotedFormulasFailBeyondTheFirstLevel) {
    const auto c = small_config();
    const auto rank = run_check("rank", c);
    EXPECT_FALSE(find(rank, "exact rank of").passed);
    EXPECT_TRUE(find(rank, "exact rank equals").passed);
    EXPECT_TRUE(find(rank, "numerical rank").passed);
    const auto trace = run_check("trace", c);
    EXPECT_FALSE(find(trace, "random LC:").passed);
    EXPECT_TRUE(find(trace, "random LC with weights").passed);
}

TEST(Checks, StructuralChecksPass) {
    const auto c = small_config();
    for (const char* name : {"stability", "algebra", "fft", "kernel", "approx-chain"}) {
        const auto r = run_check(name, c);
        EXPECT_FALSE(r.hard_failed()) << name;
        EXPECT_FALSE(r.criteria.empty()) << name;
    }
}

TEST(Checks, Compactness) {
    const auto r = run_check("compactness", small_config());
    EXPECT_TRUE(find(r, "LC functions").passed);
    EXPECT_TRUE(find(r, "log_norm: ||f||_BMO").passed);
    EXPECT_FALSE(find(r, "log_norm: s_{ceil").passed);
    EXPECT_TRUE(find(r, "log_norm: count").passed);
}

TEST(Checks, UnknownName) {
    EXPECT_THROW(run_check("nope", small_config()), std::invalid_argument);
    auto c = small_config();
    c.primes.clear();
    EXPECT_THROW(run_check("fft", c), std::invalid_argument);
}

TEST(Report, JsonIndependentOfThreads) {
    auto a = small_config();
    a.threads = 1;
    auto b = a;
    b.threads = 3;
    const std::vector<std::string> names{"trace", "schatten-besov"};
    std::vector<VerificationReport> ra, rb;
    for (const auto& n : names) {
        ra.push_back(run_check(n, a));
        rb.push_back(run_check(n, b));
    }
    EXPECT_EQ(to_json(ra, a).dump(), to_json(rb, b).dump());
    EXPECT_FALSE(to_json(ra, a).dump().find("runtime") != std::string::npos);
    EXPECT_NE(to_markdown(ra, a).find("Runtime"), std::string::npos);
}

TEST(Report, SeedChangesResults) {
    auto a = small_config();
    auto b = a;
    b.seed = 7;
    const std::vector<VerificationReport> ra{run_check("trace", a)}, rb{run_check("trace", b)};
    EXPECT_NE(to_json(ra, a).at("config_hash"), to_json(rb, b).at("config_hash"));
    EXPECT_NE(to_json(ra, a).at("checks").dump(), to_json(rb, b).at("checks").dump());
}

TEST(Report, Overrides) {
    auto c = small_config();
    c.tolerance_overrides["trace"] = 1.0;
    EXPECT_FALSE(run_check("trace", c).hard_failed());
    EXPECT_DOUBLE_EQ(c.tolerance("trace", 1e-10), 1.0);
    EXPECT_DOUBLE_EQ(c.tolerance("other", 2.0), 2.0);
}
