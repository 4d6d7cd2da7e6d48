#pragma once

// The Hilbert symmetry S and the quantum derivative df = [M_f, S] on the
// level-N character basis.
//
// S acts diagonally: S chi_alpha = sgn(alpha) chi_alpha, so S = P+ - P- and
// S annihilates constants. df maps chi_alpha to
//   sum_a fhat_a (sgn(alpha) - sgn(alpha + a)) chi_{alpha + a},
// hence the matrix entry M[beta, alpha] = fhat_{beta - alpha} (sgn alpha - sgn beta).
// For f in LC_n and N >= n the level-N matrix is the exact restriction of df:
// the remaining columns vanish because sgn(alpha + a) = sgn(alpha) once
// |alpha| > |a|.

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "pqc/function_space.hpp"
#include "pqc/padic.hpp"

namespace pqc {

/// Largest p^N for which dense matrices are built.
inline constexpr std::int64_t dense_dimension_cap = 2000;

class HilbertOperator {
public:
    HilbertOperator(Prime p, int level);

    Prime prime() const noexcept { return p_; }
    int level() const noexcept { return level_; }
    std::span<const Sign> diagonal() const noexcept { return diagonal_; }

    FourierSpectrum apply(const FourierSpectrum& spectrum) const;

private:
    Prime p_;
    int level_;
    std::vector<Sign> diagonal_;
};

/// Coefficient at alpha multiplied by sgn(alpha).
FourierSpectrum hilbert_apply(const FourierSpectrum& spectrum);

/// How the printed convolution kernel is read.
enum class KernelReading {
    sign_quotient,  // K(z) = sgn(z) / |z|_p, the reading consistent with the eigenrelation
    literal_sine,   // K(z) = sin(2 pi {z}_p) / |z|_p, which vanishes on Z_p
};

/// Principal-value convolution at resolution N:
///   (Sf)(x) = gamma^{-1} sum_{y-cosets != x-coset} K(x - y) f(y) p^{-N}.
/// An independent route to S used only to cross-check the spectral form.
LocallyConstantFn hilbert_kernel_apply(const LocallyConstantFn& f, int N, Complex gamma,
                                       KernelReading reading = KernelReading::sign_quotient);

/// gamma that makes the convolution reproduce sgn(probe) on chi_probe.
Complex calibrate_kernel_gamma(const PruferElement& probe, int N,
                               KernelReading reading = KernelReading::sign_quotient);

/// The quadratic Gauss sum normalization: sqrt(p) for p = 1 mod 4, i sqrt(p) for p = 3 mod 4.
Complex gauss_sum_gamma(Prime p);

class DerivativeOperator {
public:
    /// Dense level-N matrix of d(f) for the spectrum f; requires N >= level of the
    /// spectrum's nonzero part and p^N <= dense_dimension_cap.
    DerivativeOperator(const FourierSpectrum& symbol, int N);

    Prime prime() const noexcept { return symbol_.prime(); }
    int level() const noexcept { return level_; }
    std::int64_t dimension() const noexcept { return matrix_.rows(); }
    const FourierSpectrum& symbol() const noexcept { return symbol_; }

    /// Column-major, rows and columns in dual-enumeration order.
    const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }

    /// True when the symbol's coefficients were given exactly.
    bool exact_entries() const noexcept { return symbol_.exact(); }

    FourierSpectrum apply(const FourierSpectrum& v) const;

private:
    FourierSpectrum symbol_;
    int level_;
    Eigen::MatrixXcd matrix_;
};

DerivativeOperator derivative_matrix(const FourierSpectrum& symbol, int N);

/// Matrix-free df: M_f(S v) - S(M_f v) with the products done on the value side.
class MatrixFreeDerivative {
public:
    MatrixFreeDerivative(const LocallyConstantFn& f, int N);

    Prime prime() const noexcept { return f_.prime(); }
    int level() const noexcept { return f_.level(); }
    std::int64_t dimension() const noexcept { return f_.size(); }

    void apply(std::span<const Complex> in, std::span<Complex> out) const;
    /// (df)^H = -d(conj f).
    void apply_adjoint(std::span<const Complex> in, std::span<Complex> out) const;

private:
    void commutator(const std::vector<Complex>& values, std::span<const Complex> in, std::span<Complex> out) const;

    LocallyConstantFn f_;
    std::vector<Complex> values_;
    std::vector<Complex> conj_values_;
    std::vector<Sign> signs_;
};

FourierSpectrum derivative_apply(const LocallyConstantFn& f, const FourierSpectrum& v, int N);

/// Count of singular values above tol * sigma_max; the default tol is 1e-10 * p^N.
std::int64_t numerical_rank(const DerivativeOperator& d, std::optional<double> tol = std::nullopt);

}  // namespace pqc
