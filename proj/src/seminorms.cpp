#include "pqc/seminorms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pqc {

namespace {

void check_besov_ranges(double q, double r, double s) {
    if (!(q >= 1.0)) throw std::invalid_argument("Besov q must be >= 1");
    if (!(r >= 1.0)) throw std::invalid_argument("Besov r must be >= 1");
    if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("Besov s must be positive and finite");
}

double mean_deviation(const LocallyConstantFn& f, std::int64_t coset, std::int64_t stride) {
    const std::int64_t count = f.size() / stride;
    bool flat = true;
    for (std::int64_t w = 1; w < count && flat; ++w) flat = f[coset + w * stride] == f[coset];
    if (flat) return 0.0;
    Complex mean{};
    for (std::int64_t w = 0; w < count; ++w) mean += f[coset + w * stride];
    mean /= static_cast<double>(count);
    double dev = 0.0;
    for (std::int64_t w = 0; w < count; ++w) dev += std::abs(f[coset + w * stride] - mean);
    return dev / static_cast<double>(count);
}

}  // namespace

double sobolev_half_norm(const FourierSpectrum& spectrum) {
    const std::vector<std::int64_t> norms = dual_norms(spectrum.prime(), spectrum.level());
    double acc = 0.0;
    for (std::int64_t t = 0; t < spectrum.size(); ++t)
        acc += static_cast<double>(norms[t]) * std::norm(spectrum.at_bin(t));
    return std::sqrt(acc);
}

double sobolev_half_norm(const LocallyConstantFn& f) { return sobolev_half_norm(fourier_forward(f)); }

Complex disk_mean(const LocallyConstantFn& f, std::int64_t coset, int k) {
    if (k < 0) throw std::out_of_range("disk level must be non-negative");
    const std::int64_t cosets = f.prime().pow(k);
    if (coset < 0 || coset >= cosets) throw std::out_of_range("coset index outside 0 .. p^k - 1");
    if (k >= f.level()) return f[coset % f.size()];
    const std::int64_t count = f.size() / cosets;
    Complex mean{};
    for (std::int64_t w = 0; w < count; ++w) mean += f[coset + w * cosets];
    return mean / static_cast<double>(count);
}

std::vector<double> bmo_oscillation_sequence(const LocallyConstantFn& f) {
    const int m = f.level();
    std::vector<double> by_level(static_cast<std::size_t>(m) + 1, 0.0);
    for (int k = 0; k < m; ++k) {
        const std::int64_t stride = f.prime().pow(k);
        double worst = 0.0;
        for (std::int64_t c = 0; c < stride; ++c) worst = std::max(worst, mean_deviation(f, c, stride));
        by_level[k] = worst;
    }
    for (int n = m - 1; n >= 0; --n) by_level[n] = std::max(by_level[n], by_level[n + 1]);
    return by_level;
}

double bmo_seminorm(const LocallyConstantFn& f) { return bmo_oscillation_sequence(f).front(); }

double besov_seminorm_discrete(const LocallyConstantFn& f, double q, double r, double s) {
    check_besov_ranges(q, r, s);
    const double p = static_cast<double>(f.prime().value());
    double acc = 0.0;
    for (int n = 0; n < f.level(); ++n) {
        const double term = std::pow(p, n * s) * lebesgue_norm(f - conditional_expectation(f, n), q);
        if (std::isinf(r))
            acc = std::max(acc, term);
        else
            acc += std::pow(term, r);
    }
    return std::isinf(r) ? acc : std::pow(acc, 1.0 / r);
}

double besov_seminorm_integral(const LocallyConstantFn& f, double q, double r, double s) {
    check_besov_ranges(q, r, s);
    if (std::isinf(q) || std::isinf(r)) throw std::invalid_argument("integral Besov form needs finite q and r");
    const Prime p = f.prime();
    const double weight = 1.0 / static_cast<double>(f.size());
    double acc = 0.0;
    for (std::int64_t j = 1; j < f.size(); ++j) {
        const int v = valuation(j, p);
        const double diff = lebesgue_norm(f.translated(j) - f, q);
        acc += weight * std::pow(static_cast<double>(p.value()), v * (s * r + 1.0)) * std::pow(diff, r);
    }
    return std::pow(acc, 1.0 / r);
}

double besov_bmo_refined_sequence(const LocallyConstantFn& f, double q) {
    if (!(q >= 1.0) || std::isinf(q)) throw std::invalid_argument("refined sequence needs finite q >= 1");
    const double p = static_cast<double>(f.prime().value());
    double acc = 0.0;
    for (int n = 0; n < f.level(); ++n)
        acc += std::pow(std::pow(p, n / q) * bmo_seminorm(f - conditional_expectation(f, n)), q);
    return std::pow(acc, 1.0 / q);
}

SeminormReport seminorm_report(const LocallyConstantFn& f, std::vector<BesovParameters> besov) {
    if (besov.empty()) besov = {{1.0, 1.0, 1.0}, {2.0, 2.0, 0.5}, {4.0, 4.0, 0.25}};
    SeminormReport report;
    report.sobolev_half = sobolev_half_norm(f);
    report.vmo_sequence = bmo_oscillation_sequence(f);
    report.bmo = report.vmo_sequence.front();
    for (const BesovParameters& b : besov) {
        const bool integral_defined = std::isfinite(b.q) && std::isfinite(b.r);
        report.besov.push_back({b, besov_seminorm_discrete(f, b.q, b.r, b.s),
                                integral_defined ? besov_seminorm_integral(f, b.q, b.r, b.s)
                                                 : std::numeric_limits<double>::quiet_NaN()});
    }
    return report;
}

}  // namespace pqc
