#pragma once

// Singular values, Schatten norms and approximation numbers.
//
// s_n(K) = inf { |K - R| : rank R <= n } is the (n+1)-st singular value, so
// approximation_number(n) returns sigma_{n+1} (0-based index n).

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "pqc/operators.hpp"

namespace pqc {

class SingularSpectrum {
public:
    /// Sorts descending; rejects negative or non-finite values.
    explicit SingularSpectrum(std::vector<double> values);

    std::span<const double> values() const noexcept { return values_; }
    std::int64_t size() const noexcept { return static_cast<std::int64_t>(values_.size()); }
    double largest() const noexcept { return values_.empty() ? 0.0 : values_.front(); }

    double approximation_number(std::int64_t n) const;
    double schatten_norm(double q) const;
    /// Count of values above rel_tol * largest().
    std::int64_t numerical_rank(double rel_tol) const;
    double sum_of_squares() const;

private:
    std::vector<double> values_;
};

/// Values below this fraction of sigma_1 are set to exactly zero.
inline constexpr double singular_value_floor = 1e-13;

SingularSpectrum singular_values(const Eigen::MatrixXcd& m);
SingularSpectrum singular_values(const DerivativeOperator& d);

/// Square roots of the eigenvalues of M^H M; an independent route for checks.
SingularSpectrum singular_values_from_gram(const Eigen::MatrixXcd& m);

double schatten_norm(const SingularSpectrum& spectrum, double q);
double approximation_number(const SingularSpectrum& spectrum, std::int64_t n);

/// A matrix-free operator on C^dimension together with its adjoint.
struct LinearMap {
    std::int64_t dimension = 0;
    std::function<void(std::span<const Complex>, std::span<Complex>)> apply;
    std::function<void(std::span<const Complex>, std::span<Complex>)> apply_adjoint;
};

/// The map keeps its own copy of the operator.
LinearMap as_linear_map(MatrixFreeDerivative op);

struct PowerIterationResult {
    double sigma = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Estimates sigma_1 by power iteration on A^H A from a seeded random start.
/// Stops when the Rayleigh quotient changes by less than rel_tol in relative
/// terms; `converged` is false if `iters` runs out first.
PowerIterationResult operator_norm_power_iteration(const LinearMap& op, int iters, std::uint64_t seed,
                                                   double rel_tol = 1e-13);

}  // namespace pqc
