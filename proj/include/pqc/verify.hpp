#pragma once

// Verification experiments. Exact identities are hard pass/fail checks with a
// stated tolerance; comparisons with unknown constants are informational and
// record log-ratio statistics instead.
//
// Every trial draws from its own seeded stream and writes into its own slot,
// so reports are identical for any thread count.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace pqc {

struct ExperimentConfig {
    std::vector<std::int64_t> primes{3, 5, 7};
    /// Largest level per prime; primes without an entry use 2.
    std::map<std::int64_t, int> max_level{{3, 4}, {5, 3}, {7, 2}};
    int ensemble = 100;
    /// Ensemble size for the level-stability check, which needs SVDs up to p^{n+2}.
    int stability_ensemble = 25;
    /// Largest dimension p^N the stability check embeds into.
    std::int64_t stability_dimension_cap = 729;
    std::uint64_t seed = 42;
    std::vector<double> q_list{1.0, 2.0, 4.0};
    std::vector<double> gammas{0.0, 0.5, 1.0, 2.0};
    /// log_norm levels for the BMO signature.
    int log_norm_levels = 6;
    unsigned threads = 0;
    std::map<std::string, double> tolerance_overrides;

    int level_for(std::int64_t p) const;
    double tolerance(const std::string& key, double fallback) const;
    nlohmann::json to_json() const;
};

enum class CriterionKind { hard, informational };

struct Criterion {
    std::string name;
    CriterionKind kind = CriterionKind::hard;
    bool passed = false;
    double tolerance = 0.0;
    double observed = 0.0;
    std::string detail;
};

struct RatioStats {
    std::string label;
    std::int64_t count = 0;
    double min = 0.0;
    double median = 0.0;
    double max = 0.0;
    /// log(max) - log(min).
    double spread = 0.0;
};

RatioStats ratio_stats(std::string label, std::vector<double> ratios);

struct VerificationReport {
    std::string name;
    std::vector<Criterion> criteria;
    nlohmann::json observed = nlohmann::json::object();
    nlohmann::json expected = nlohmann::json::object();
    std::vector<RatioStats> ratios;
    double runtime_seconds = 0.0;

    bool hard_failed() const;
    /// "pass", "fail" (a hard criterion failed) or "informational" when only
    /// informational criteria are present.
    std::string status() const;
};

/// True when the sequence shows a systematic trend: at least three values,
/// strictly monotone, and the last step no smaller than the first.
bool median_drifts(const std::vector<double>& medians);

VerificationReport check_rank_formula(const ExperimentConfig& config);
VerificationReport check_trace_identity(const ExperimentConfig& config);
VerificationReport check_finite_rank_stability(const ExperimentConfig& config);
VerificationReport check_operator_algebra(const ExperimentConfig& config);
VerificationReport check_fft(const ExperimentConfig& config);
VerificationReport check_hilbert_kernel_agreement(const ExperimentConfig& config);
VerificationReport check_schatten_besov(const ExperimentConfig& config);
VerificationReport check_approximation_chain(const ExperimentConfig& config);
VerificationReport check_compactness_proxy(const ExperimentConfig& config);

/// Check names accepted by run_check, in run order.
const std::vector<std::string>& check_names();
VerificationReport run_check(const std::string& name, const ExperimentConfig& config);
std::vector<VerificationReport> run_all(const ExperimentConfig& config);

/// Runtime is left out so reports compare byte for byte across runs.
nlohmann::json to_json(const std::vector<VerificationReport>& reports, const ExperimentConfig& config);
std::string to_markdown(const std::vector<VerificationReport>& reports, const ExperimentConfig& config);

}  // namespace pqc
