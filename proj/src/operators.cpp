#include "pqc/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pqc/spectral.hpp"

namespace pqc {

namespace {

// Spectrum re-expressed at level N; coefficients above p^N must vanish exactly.
FourierSpectrum at_level(const FourierSpectrum& s, int N) {
    if (s.level() <= N) return promote(s, N);
    if (s.effective_level() > N)
        throw std::invalid_argument("derivative level " + std::to_string(N) +
                                    " is below the level of the function (" + std::to_string(s.effective_level()) + ")");
    const std::int64_t step = s.prime().pow(s.level() - N);
    std::vector<Complex> bins(static_cast<std::size_t>(s.prime().pow(N)));
    for (std::size_t t = 0; t < bins.size(); ++t) bins[t] = s.at_bin(static_cast<std::int64_t>(t) * step);
    return FourierSpectrum(s.prime(), N, std::move(bins), s.exact());
}

void multiply_signs(std::span<Complex> data, std::span<const Sign> signs) {
    for (std::size_t t = 0; t < data.size(); ++t) data[t] *= static_cast<double>(to_int(signs[t]));
}

}  // namespace

HilbertOperator::HilbertOperator(Prime p, int level) : p_(p), level_(level), diagonal_(dual_signs(p, level)) {}

FourierSpectrum HilbertOperator::apply(const FourierSpectrum& spectrum) const {
    const FourierSpectrum s = at_level(spectrum, level_);
    std::vector<Complex> out(s.bins().begin(), s.bins().end());
    multiply_signs(out, diagonal_);
    return FourierSpectrum(p_, level_, std::move(out), s.exact());
}

FourierSpectrum hilbert_apply(const FourierSpectrum& spectrum) {
    return HilbertOperator(spectrum.prime(), spectrum.level()).apply(spectrum);
}

LocallyConstantFn hilbert_kernel_apply(const LocallyConstantFn& f, int N, Complex gamma, KernelReading reading) {
    if (f.level() > N) throw std::invalid_argument("kernel resolution is below the level of the function");
    const Prime p = f.prime();
    const LocallyConstantFn g = promote(f, N);
    const std::int64_t size = g.size();

    // Kernel on the nonzero differences z = d mod p^N: |z|_p = p^{-ord d}.
    std::vector<Complex> kernel(static_cast<std::size_t>(size));
    for (std::int64_t d = 1; d < size; ++d) {
        const int ord = valuation(d, p);
        const double inverse_norm = static_cast<double>(p.pow(ord));
        if (reading == KernelReading::sign_quotient) {
            kernel[d] = static_cast<double>(to_int(legendre_symbol(d / p.pow(ord), p))) * inverse_norm;
        } else {
            // {z}_p = 0 for every z in Z_p.
            const double fractional_part = 0.0;
            kernel[d] = std::sin(2.0 * std::numbers::pi * fractional_part) * inverse_norm;
        }
    }

    const double cell = 1.0 / static_cast<double>(size);
    std::vector<Complex> out(static_cast<std::size_t>(size));
    for (std::int64_t x = 0; x < size; ++x) {
        Complex acc{};
        for (std::int64_t y = 0; y < size; ++y) {
            if (y == x) continue;
            acc += kernel[(x - y + size) % size] * g[y];
        }
        out[x] = acc * cell / gamma;
    }
    return LocallyConstantFn(p, N, std::move(out));
}

Complex calibrate_kernel_gamma(const PruferElement& probe, int N, KernelReading reading) {
    if (probe.is_zero()) throw std::invalid_argument("calibration probe must be a nonzero character");
    const LocallyConstantFn response = hilbert_kernel_apply(builtin::character(probe, N), N, 1.0, reading);
    return fourier_forward(response).coefficient(probe) / static_cast<double>(to_int(probe.sign()));
}

Complex gauss_sum_gamma(Prime p) {
    const double root = std::sqrt(static_cast<double>(p.value()));
    return p.value() % 4 == 1 ? Complex(root, 0.0) : Complex(0.0, root);
}

DerivativeOperator::DerivativeOperator(const FourierSpectrum& symbol, int N)
    : symbol_(at_level(symbol, N)), level_(N) {
    const std::int64_t size = symbol_.size();
    if (size > dense_dimension_cap)
        throw std::length_error("dense derivative of dimension " + std::to_string(size) +
                                " exceeds the cap; use the matrix-free operator");
    const std::vector<Sign> signs = dual_signs(symbol_.prime(), N);
    matrix_ = Eigen::MatrixXcd::Zero(size, size);
    for (std::int64_t col = 0; col < size; ++col) {
        const int s_col = to_int(signs[col]);
        for (std::int64_t row = 0; row < size; ++row) {
            const int weight = s_col - to_int(signs[row]);
            if (weight == 0) continue;
            const Complex c = symbol_.at_bin((row - col + size) % size);
            if (c != Complex{}) matrix_(row, col) = c * static_cast<double>(weight);
        }
    }
}

FourierSpectrum DerivativeOperator::apply(const FourierSpectrum& v) const {
    const FourierSpectrum x = at_level(v, level_);
    const Eigen::Map<const Eigen::VectorXcd> in(x.bins().data(), x.size());
    const Eigen::VectorXcd out = matrix_ * in;
    return FourierSpectrum(prime(), level_, std::vector<Complex>(out.data(), out.data() + out.size()), false);
}

DerivativeOperator derivative_matrix(const FourierSpectrum& symbol, int N) { return DerivativeOperator(symbol, N); }

MatrixFreeDerivative::MatrixFreeDerivative(const LocallyConstantFn& f, int N)
    : f_(promote(f, N)), signs_(dual_signs(f.prime(), N)) {
    values_.assign(f_.values().begin(), f_.values().end());
    for (Complex z : values_) conj_values_.push_back(std::conj(z));
}

void MatrixFreeDerivative::commutator(const std::vector<Complex>& values, std::span<const Complex> in,
                                      std::span<Complex> out) const {
    const auto size = static_cast<std::size_t>(f_.size());
    if (in.size() != size || out.size() != size) throw std::invalid_argument("vector length does not match operator");
    const auto plan = FftPlan::get(f_.prime(), f_.level());
    const double scale = 1.0 / static_cast<double>(size);

    // M_f (S v)
    std::vector<Complex> a(in.begin(), in.end());
    multiply_signs(a, signs_);
    plan->execute(a, Direction::inverse);
    for (std::size_t j = 0; j < size; ++j) a[j] *= values[j] * scale;
    plan->execute(a, Direction::forward);

    // S (M_f v)
    std::vector<Complex> b(in.begin(), in.end());
    plan->execute(b, Direction::inverse);
    for (std::size_t j = 0; j < size; ++j) b[j] *= values[j] * scale;
    plan->execute(b, Direction::forward);
    multiply_signs(b, signs_);

    for (std::size_t t = 0; t < size; ++t) out[t] = a[t] - b[t];
}

void MatrixFreeDerivative::apply(std::span<const Complex> in, std::span<Complex> out) const {
    commutator(values_, in, out);
}

void MatrixFreeDerivative::apply_adjoint(std::span<const Complex> in, std::span<Complex> out) const {
    commutator(conj_values_, in, out);
    for (auto& z : out) z = -z;
}

FourierSpectrum derivative_apply(const LocallyConstantFn& f, const FourierSpectrum& v, int N) {
    const MatrixFreeDerivative op(f, N);
    const FourierSpectrum x = at_level(v, N);
    std::vector<Complex> out(static_cast<std::size_t>(x.size()));
    op.apply(x.bins(), out);
    return FourierSpectrum(f.prime(), N, std::move(out), false);
}

std::int64_t numerical_rank(const DerivativeOperator& d, std::optional<double> tol) {
    const double rel = tol.value_or(1e-10 * static_cast<double>(d.dimension()));
    return singular_values(d).numerical_rank(rel);
}

}  // namespace pqc
