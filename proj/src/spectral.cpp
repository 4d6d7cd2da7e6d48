#include "pqc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "pqc/random.hpp"

namespace pqc {

SingularSpectrum::SingularSpectrum(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_)
        if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("singular values must be finite and non-negative");
    std::sort(values_.begin(), values_.end(), std::greater<>());
}

double SingularSpectrum::approximation_number(std::int64_t n) const {
    if (n < 0) throw std::invalid_argument("approximation number index must be non-negative");
    return n < size() ? values_[static_cast<std::size_t>(n)] : 0.0;
}

double SingularSpectrum::schatten_norm(double q) const {
    if (!(q > 0.0)) throw std::invalid_argument("Schatten exponent must be positive");
    if (std::isinf(q)) return largest();
    // Scale by sigma_1 so large q does not overflow.
    const double top = largest();
    if (top == 0.0) return 0.0;
    double acc = 0.0;
    for (double v : values_) acc += std::pow(v / top, q);
    return top * std::pow(acc, 1.0 / q);
}

std::int64_t SingularSpectrum::numerical_rank(double rel_tol) const {
    const double cut = rel_tol * largest();
    return std::count_if(values_.begin(), values_.end(), [cut](double v) { return v > cut && v > 0.0; });
}

double SingularSpectrum::sum_of_squares() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0, [](double a, double v) { return a + v * v; });
}

namespace {

SingularSpectrum clamped(const Eigen::VectorXd& raw) {
    std::vector<double> v(raw.data(), raw.data() + raw.size());
    const double top = v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
    for (double& x : v)
        if (x < singular_value_floor * top) x = 0.0;
    return SingularSpectrum(std::move(v));
}

void require_finite(const Eigen::MatrixXcd& m) {
    if (!m.allFinite()) throw std::invalid_argument("matrix has non-finite entries");
}

}  // namespace

SingularSpectrum singular_values(const Eigen::MatrixXcd& m) {
    require_finite(m);
    if (m.size() == 0) return SingularSpectrum({});
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    return clamped(svd.singularValues());
}

SingularSpectrum singular_values(const DerivativeOperator& d) { return singular_values(d.matrix()); }

SingularSpectrum singular_values_from_gram(const Eigen::MatrixXcd& m) {
    require_finite(m);
    if (m.size() == 0) return SingularSpectrum({});
    const Eigen::MatrixXcd gram = m.adjoint() * m;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
    Eigen::VectorXd roots = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return clamped(roots);
}

double schatten_norm(const SingularSpectrum& spectrum, double q) { return spectrum.schatten_norm(q); }

double approximation_number(const SingularSpectrum& spectrum, std::int64_t n) {
    return spectrum.approximation_number(n);
}

LinearMap as_linear_map(MatrixFreeDerivative op) {
    auto shared = std::make_shared<const MatrixFreeDerivative>(std::move(op));
    return LinearMap{shared->dimension(),
                     [shared](std::span<const Complex> in, std::span<Complex> out) { shared->apply(in, out); },
                     [shared](std::span<const Complex> in, std::span<Complex> out) { shared->apply_adjoint(in, out); }};
}

PowerIterationResult operator_norm_power_iteration(const LinearMap& op, int iters, std::uint64_t seed,
                                                   double rel_tol) {
    if (iters < 1) throw std::invalid_argument("power iteration needs at least one iteration");
    const auto n = static_cast<std::size_t>(op.dimension);
    std::vector<Complex> x(n), y(n), z(n);
    SplitMix64 rng(derive_seed(seed, {n}));
    for (auto& c : x) c = {rng.uniform() - 0.5, rng.uniform() - 0.5};

    const auto norm = [](const std::vector<Complex>& v) {
        double s = 0.0;
        for (Complex c : v) s += std::norm(c);
        return std::sqrt(s);
    };

    PowerIterationResult result;
    double start = norm(x);
    if (start == 0.0) return result;
    for (auto& c : x) c /= start;

    double previous = -1.0;
    for (int it = 1; it <= iters; ++it) {
        op.apply(x, y);
        op.apply_adjoint(y, z);
        // Rayleigh quotient of A^H A at the unit vector x is |A x|^2.
        const double rayleigh = std::pow(norm(y), 2);
        result.sigma = std::sqrt(rayleigh);
        result.iterations = it;
        const double zn = norm(z);
        if (zn == 0.0) {
            result.sigma = 0.0;
            result.converged = true;
            return result;
        }
        if (previous >= 0.0 && std::abs(rayleigh - previous) <= rel_tol * rayleigh) {
            result.converged = true;
            return result;
        }
        previous = rayleigh;
        for (std::size_t i = 0; i < n; ++i) x[i] = z[i] / zn;
    }
    return result;
}

}  // namespace pqc
