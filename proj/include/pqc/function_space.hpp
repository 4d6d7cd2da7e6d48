#pragma once

// Locally constant functions on Z_p and their Fourier spectra.
//
// A level-n function is stored by its p^n values on the cosets j + p^n Z_p.
// Spectra are indexed by the dual elements of norm <= p^n; bin t holds the
// coefficient of the character with frequency t/p^n.
//
// Normalization follows the integral convention:
//   fhat(t) = p^{-n} sum_j f(j) exp(-2 pi i t j / p^n),
//   f(j)    = sum_t fhat(t) exp(+2 pi i t j / p^n),
// so characters are orthonormal and a character's spectrum is a single 1.

#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "pqc/fft.hpp"
#include "pqc/padic.hpp"

namespace pqc {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

class LocallyConstantFn {
public:
    LocallyConstantFn(Prime p, int level, std::vector<Complex> values);

    static LocallyConstantFn constant(Prime p, int level, Complex c);

    Prime prime() const noexcept { return p_; }
    int level() const noexcept { return level_; }
    std::int64_t size() const noexcept { return static_cast<std::int64_t>(values_.size()); }
    std::span<const Complex> values() const noexcept { return values_; }
    Complex operator[](std::int64_t coset) const { return values_[static_cast<std::size_t>(coset)]; }

    bool is_real(double tol = 0.0) const;

    /// x -> f(x - u) for an integer shift u.
    LocallyConstantFn translated(std::int64_t u) const;

    LocallyConstantFn conj() const;

    /// Pointwise operations; operands are brought to the finer level first.
    friend LocallyConstantFn operator+(const LocallyConstantFn& a, const LocallyConstantFn& b);
    friend LocallyConstantFn operator-(const LocallyConstantFn& a, const LocallyConstantFn& b);
    friend LocallyConstantFn operator*(const LocallyConstantFn& a, const LocallyConstantFn& b);
    friend LocallyConstantFn operator*(Complex c, const LocallyConstantFn& f);

private:
    Prime p_;
    int level_;
    std::vector<Complex> values_;
};

class FourierSpectrum {
public:
    /// `exact` marks coefficients that were given directly rather than
    /// produced by a floating transform; exact rank computations need it.
    FourierSpectrum(Prime p, int level, std::vector<Complex> bins, bool exact = true);

    static FourierSpectrum zero(Prime p, int level);
    static FourierSpectrum from_terms(Prime p, int level,
                                      std::span<const std::pair<PruferElement, Complex>> terms);

    Prime prime() const noexcept { return p_; }
    int level() const noexcept { return level_; }
    std::int64_t size() const noexcept { return static_cast<std::int64_t>(bins_.size()); }
    bool exact() const noexcept { return exact_; }

    std::span<const Complex> bins() const noexcept { return bins_; }
    Complex at_bin(std::int64_t t) const { return bins_[static_cast<std::size_t>(t)]; }

    /// Coefficient of chi_alpha; zero when the norm of alpha exceeds p^level.
    Complex coefficient(const PruferElement& alpha) const;

    std::vector<std::pair<PruferElement, Complex>> nonzero_terms(double tol = 0.0) const;

    /// Smallest k with all coefficients of norm > p^k below tol.
    int effective_level(double tol = 0.0) const;

    friend FourierSpectrum operator+(const FourierSpectrum& a, const FourierSpectrum& b);
    friend FourierSpectrum operator-(const FourierSpectrum& a, const FourierSpectrum& b);
    friend FourierSpectrum operator*(Complex c, const FourierSpectrum& s);

private:
    Prime p_;
    int level_;
    std::vector<Complex> bins_;
    bool exact_;
};

/// chi_alpha on the coset j + p^N Z_p; requires norm(alpha) <= p^N.
Complex evaluate_character(const PruferElement& alpha, std::int64_t coset, int N);

FourierSpectrum fourier_forward(const LocallyConstantFn& f);
LocallyConstantFn fourier_inverse(const FourierSpectrum& spectrum);

/// f * Delta_k: average over the cosets of p^k Z_p (value side).
LocallyConstantFn conditional_expectation(const LocallyConstantFn& f, int k);
/// f * Delta_k on the frequency side: drops every coefficient of norm > p^k.
FourierSpectrum conditional_expectation(const FourierSpectrum& spectrum, int k);

/// L^q norm for q >= 1 or q = infinity.
double lebesgue_norm(const LocallyConstantFn& f, double q);

LocallyConstantFn promote(const LocallyConstantFn& f, int N);
FourierSpectrum promote(const FourierSpectrum& spectrum, int N);

/// Builtin test families.
namespace builtin {

/// Value placed on the zero coset of log|x|_p, where the function is unbounded.
enum class ZeroCoset {
    level,  // -N, the value at the scale of the coset
    mean,   // -(N + 1/(p-1)), the exact average of -ord(x) over p^N Z_p
};

enum class ValueDistribution { disk, real, gaussian };

LocallyConstantFn character(const PruferElement& a, int level);
LocallyConstantFn constant(Prime p, int level, Complex c);
/// Indicator of coset + p^coset_level Z_p.
LocallyConstantFn indicator(Prime p, int level, std::int64_t coset, int coset_level);
/// log_p |x|_p = -ord_p(x), truncated to level N.
LocallyConstantFn log_norm(Prime p, int level, ZeroCoset zero_coset = ZeroCoset::level);
/// i.i.d. values; `disk` is uniform on the complex unit disk.
LocallyConstantFn random_values(Prime p, int level, std::uint64_t seed,
                                ValueDistribution dist = ValueDistribution::disk);
/// fhat_a = |a|^{-gamma} g_a with g_a standard complex Gaussian and fhat_0 = 0.
/// Each coefficient has its own stream keyed by the frequency, so spectra of
/// different levels with the same seed are truncations of one another.
FourierSpectrum random_spectrum(Prime p, int level, std::uint64_t seed, double gamma);

}  // namespace builtin

}  // namespace pqc
