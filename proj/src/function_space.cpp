#include "pqc/function_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pqc/random.hpp"

namespace pqc {

namespace {

void require_same_prime(Prime a, Prime b) {
    if (a != b) throw std::invalid_argument("operands use different primes");
}

std::pair<double, double> gaussian_pair(SplitMix64& rng) {
    const double u1 = 1.0 - rng.uniform();
    const double u2 = rng.uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

template <typename Op>
LocallyConstantFn pointwise(const LocallyConstantFn& a, const LocallyConstantFn& b, Op op) {
    require_same_prime(a.prime(), b.prime());
    const int level = std::max(a.level(), b.level());
    const LocallyConstantFn x = promote(a, level);
    const LocallyConstantFn y = promote(b, level);
    std::vector<Complex> out(static_cast<std::size_t>(x.size()));
    for (std::int64_t j = 0; j < x.size(); ++j) out[j] = op(x[j], y[j]);
    return LocallyConstantFn(a.prime(), level, std::move(out));
}

template <typename Op>
FourierSpectrum binwise(const FourierSpectrum& a, const FourierSpectrum& b, Op op) {
    require_same_prime(a.prime(), b.prime());
    const int level = std::max(a.level(), b.level());
    const FourierSpectrum x = promote(a, level);
    const FourierSpectrum y = promote(b, level);
    std::vector<Complex> out(static_cast<std::size_t>(x.size()));
    for (std::int64_t t = 0; t < x.size(); ++t) out[t] = op(x.at_bin(t), y.at_bin(t));
    return FourierSpectrum(a.prime(), level, std::move(out), a.exact() && b.exact());
}

}  // namespace

LocallyConstantFn::LocallyConstantFn(Prime p, int level, std::vector<Complex> values)
    : p_(p), level_(level), values_(std::move(values)) {
    if (level < 0) throw std::invalid_argument("level must be non-negative");
    if (static_cast<std::int64_t>(values_.size()) != p.pow(level))
        throw std::invalid_argument("a level-" + std::to_string(level) + " function needs " +
                                    std::to_string(p.pow(level)) + " values, got " + std::to_string(values_.size()));
}

LocallyConstantFn LocallyConstantFn::constant(Prime p, int level, Complex c) {
    return LocallyConstantFn(p, level, std::vector<Complex>(static_cast<std::size_t>(p.pow(level)), c));
}

bool LocallyConstantFn::is_real(double tol) const {
    return std::all_of(values_.begin(), values_.end(), [tol](Complex z) { return std::abs(z.imag()) <= tol; });
}

LocallyConstantFn LocallyConstantFn::translated(std::int64_t u) const {
    const std::int64_t n = size();
    std::int64_t shift = u % n;
    if (shift < 0) shift += n;
    std::vector<Complex> out(values_.size());
    for (std::int64_t j = 0; j < n; ++j) out[j] = values_[static_cast<std::size_t>((j - shift + n) % n)];
    return LocallyConstantFn(p_, level_, std::move(out));
}

LocallyConstantFn LocallyConstantFn::conj() const {
    std::vector<Complex> out(values_.size());
    std::transform(values_.begin(), values_.end(), out.begin(), [](Complex z) { return std::conj(z); });
    return LocallyConstantFn(p_, level_, std::move(out));
}

LocallyConstantFn operator+(const LocallyConstantFn& a, const LocallyConstantFn& b) {
    return pointwise(a, b, [](Complex x, Complex y) { return x + y; });
}
LocallyConstantFn operator-(const LocallyConstantFn& a, const LocallyConstantFn& b) {
    return pointwise(a, b, [](Complex x, Complex y) { return x - y; });
}
LocallyConstantFn operator*(const LocallyConstantFn& a, const LocallyConstantFn& b) {
    return pointwise(a, b, [](Complex x, Complex y) { return x * y; });
}
LocallyConstantFn operator*(Complex c, const LocallyConstantFn& f) {
    std::vector<Complex> out(f.values().begin(), f.values().end());
    for (auto& z : out) z *= c;
    return LocallyConstantFn(f.prime(), f.level(), std::move(out));
}

FourierSpectrum::FourierSpectrum(Prime p, int level, std::vector<Complex> bins, bool exact)
    : p_(p), level_(level), bins_(std::move(bins)), exact_(exact) {
    if (level < 0) throw std::invalid_argument("level must be non-negative");
    if (static_cast<std::int64_t>(bins_.size()) != p.pow(level))
        throw std::invalid_argument("a level-" + std::to_string(level) + " spectrum needs " +
                                    std::to_string(p.pow(level)) + " bins, got " + std::to_string(bins_.size()));
}

FourierSpectrum FourierSpectrum::zero(Prime p, int level) {
    return FourierSpectrum(p, level, std::vector<Complex>(static_cast<std::size_t>(p.pow(level))));
}

FourierSpectrum FourierSpectrum::from_terms(Prime p, int level,
                                            std::span<const std::pair<PruferElement, Complex>> terms) {
    std::vector<Complex> bins(static_cast<std::size_t>(p.pow(level)));
    for (const auto& [alpha, c] : terms) {
        require_same_prime(p, alpha.prime());
        bins[static_cast<std::size_t>(alpha.bin(level))] += c;
    }
    return FourierSpectrum(p, level, std::move(bins));
}

Complex FourierSpectrum::coefficient(const PruferElement& alpha) const {
    require_same_prime(p_, alpha.prime());
    if (alpha.level() > level_) return {};
    return bins_[static_cast<std::size_t>(alpha.bin(level_))];
}

std::vector<std::pair<PruferElement, Complex>> FourierSpectrum::nonzero_terms(double tol) const {
    std::vector<std::pair<PruferElement, Complex>> out;
    for (std::int64_t t = 0; t < size(); ++t)
        if (std::abs(bins_[t]) > tol) out.emplace_back(PruferElement::reduce(t, level_, p_), bins_[t]);
    return out;
}

int FourierSpectrum::effective_level(double tol) const {
    int level = 0;
    for (std::int64_t t = 1; t < size(); ++t)
        if (std::abs(bins_[t]) > tol) level = std::max(level, level_ - valuation(t, p_));
    return level;
}

FourierSpectrum operator+(const FourierSpectrum& a, const FourierSpectrum& b) {
    return binwise(a, b, [](Complex x, Complex y) { return x + y; });
}
FourierSpectrum operator-(const FourierSpectrum& a, const FourierSpectrum& b) {
    return binwise(a, b, [](Complex x, Complex y) { return x - y; });
}
FourierSpectrum operator*(Complex c, const FourierSpectrum& s) {
    std::vector<Complex> out(s.bins().begin(), s.bins().end());
    for (auto& z : out) z *= c;
    return FourierSpectrum(s.prime(), s.level(), std::move(out), s.exact());
}

Complex evaluate_character(const PruferElement& alpha, std::int64_t coset, int N) {
    if (alpha.level() > N)
        throw std::domain_error("character " + alpha.to_string() + " is not constant on cosets of level " +
                                std::to_string(N));
    if (alpha.is_zero()) return {1.0, 0.0};
    const std::int64_t modulus = alpha.prime().pow(alpha.level());
    std::int64_t phase = static_cast<std::int64_t>((static_cast<__int128>(alpha.numerator()) * coset) % modulus);
    if (phase < 0) phase += modulus;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(modulus);
    return {std::cos(angle), std::sin(angle)};
}

FourierSpectrum fourier_forward(const LocallyConstantFn& f) {
    std::vector<Complex> data(f.values().begin(), f.values().end());
    FftPlan::get(f.prime(), f.level())->execute(data, Direction::forward);
    const double scale = 1.0 / static_cast<double>(f.size());
    for (auto& z : data) z *= scale;
    return FourierSpectrum(f.prime(), f.level(), std::move(data), false);
}

LocallyConstantFn fourier_inverse(const FourierSpectrum& spectrum) {
    std::vector<Complex> data(spectrum.bins().begin(), spectrum.bins().end());
    FftPlan::get(spectrum.prime(), spectrum.level())->execute(data, Direction::inverse);
    return LocallyConstantFn(spectrum.prime(), spectrum.level(), std::move(data));
}

LocallyConstantFn conditional_expectation(const LocallyConstantFn& f, int k) {
    if (k < 0) throw std::invalid_argument("conditional expectation level must be non-negative");
    if (k >= f.level()) return f;
    const std::int64_t stride = f.prime().pow(k);
    const std::int64_t per_coset = f.size() / stride;
    std::vector<Complex> means(static_cast<std::size_t>(stride));
    for (std::int64_t c = 0; c < stride; ++c) {
        Complex acc{};
        for (std::int64_t w = 0; w < per_coset; ++w) acc += f[c + w * stride];
        means[c] = acc / static_cast<double>(per_coset);
    }
    std::vector<Complex> out(static_cast<std::size_t>(f.size()));
    for (std::int64_t j = 0; j < f.size(); ++j) out[j] = means[j % stride];
    return LocallyConstantFn(f.prime(), f.level(), std::move(out));
}

FourierSpectrum conditional_expectation(const FourierSpectrum& spectrum, int k) {
    if (k < 0) throw std::invalid_argument("conditional expectation level must be non-negative");
    if (k >= spectrum.level()) return spectrum;
    // Bin t has norm <= p^k exactly when p^{n-k} divides t.
    const std::int64_t step = spectrum.prime().pow(spectrum.level() - k);
    std::vector<Complex> out(static_cast<std::size_t>(spectrum.size()));
    for (std::int64_t t = 0; t < spectrum.size(); t += step) out[t] = spectrum.at_bin(t);
    return FourierSpectrum(spectrum.prime(), spectrum.level(), std::move(out), spectrum.exact());
}

double lebesgue_norm(const LocallyConstantFn& f, double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("L^q norm needs q >= 1");
    if (std::isinf(q)) {
        double m = 0.0;
        for (Complex z : f.values()) m = std::max(m, std::abs(z));
        return m;
    }
    double acc = 0.0;
    for (Complex z : f.values()) acc += std::pow(std::abs(z), q);
    return std::pow(acc / static_cast<double>(f.size()), 1.0 / q);
}

LocallyConstantFn promote(const LocallyConstantFn& f, int N) {
    if (N < f.level()) throw std::invalid_argument("cannot promote to a coarser level");
    if (N == f.level()) return f;
    const std::int64_t size = f.prime().pow(N);
    std::vector<Complex> out(static_cast<std::size_t>(size));
    for (std::int64_t j = 0; j < size; ++j) out[j] = f[j % f.size()];
    return LocallyConstantFn(f.prime(), N, std::move(out));
}

FourierSpectrum promote(const FourierSpectrum& spectrum, int N) {
    if (N < spectrum.level()) throw std::invalid_argument("cannot promote to a coarser level");
    if (N == spectrum.level()) return spectrum;
    const std::int64_t scale = spectrum.prime().pow(N - spectrum.level());
    std::vector<Complex> out(static_cast<std::size_t>(spectrum.prime().pow(N)));
    for (std::int64_t t = 0; t < spectrum.size(); ++t) out[t * scale] = spectrum.at_bin(t);
    return FourierSpectrum(spectrum.prime(), N, std::move(out), spectrum.exact());
}

namespace builtin {

LocallyConstantFn character(const PruferElement& a, int level) {
    const std::int64_t size = a.prime().pow(level);
    std::vector<Complex> values(static_cast<std::size_t>(size));
    for (std::int64_t j = 0; j < size; ++j) values[j] = evaluate_character(a, j, level);
    return LocallyConstantFn(a.prime(), level, std::move(values));
}

LocallyConstantFn constant(Prime p, int level, Complex c) { return LocallyConstantFn::constant(p, level, c); }

LocallyConstantFn indicator(Prime p, int level, std::int64_t coset, int coset_level) {
    if (coset_level < 0 || coset_level > level)
        throw std::invalid_argument("indicator coset level must lie in [0, level]");
    const std::int64_t modulus = p.pow(coset_level);
    if (coset < 0 || coset >= modulus) throw std::out_of_range("coset index out of range");
    const std::int64_t size = p.pow(level);
    std::vector<Complex> values(static_cast<std::size_t>(size));
    for (std::int64_t j = 0; j < size; ++j) values[j] = (j % modulus == coset) ? 1.0 : 0.0;
    return LocallyConstantFn(p, level, std::move(values));
}

LocallyConstantFn log_norm(Prime p, int level, ZeroCoset zero_coset) {
    const std::int64_t size = p.pow(level);
    std::vector<Complex> values(static_cast<std::size_t>(size));
    for (std::int64_t j = 1; j < size; ++j) values[j] = -static_cast<double>(valuation(j, p));
    values[0] = zero_coset == ZeroCoset::level
                    ? -static_cast<double>(level)
                    : -(static_cast<double>(level) + 1.0 / static_cast<double>(p.value() - 1));
    return LocallyConstantFn(p, level, std::move(values));
}

LocallyConstantFn random_values(Prime p, int level, std::uint64_t seed, ValueDistribution dist) {
    SplitMix64 rng(derive_seed(seed, {static_cast<std::uint64_t>(p.value()), static_cast<std::uint64_t>(level)}));
    const std::int64_t size = p.pow(level);
    std::vector<Complex> values(static_cast<std::size_t>(size));
    for (auto& z : values) {
        switch (dist) {
            case ValueDistribution::disk: {
                const double r = std::sqrt(rng.uniform());
                const double angle = 2.0 * std::numbers::pi * rng.uniform();
                z = std::polar(r, angle);
                break;
            }
            case ValueDistribution::real:
                z = 2.0 * rng.uniform() - 1.0;
                break;
            case ValueDistribution::gaussian: {
                const auto [x, y] = gaussian_pair(rng);
                z = Complex(x, y) / std::numbers::sqrt2;
                break;
            }
        }
    }
    return LocallyConstantFn(p, level, std::move(values));
}

FourierSpectrum random_spectrum(Prime p, int level, std::uint64_t seed, double gamma) {
    if (gamma < 0.0) throw std::invalid_argument("decay exponent must be non-negative");
    const std::int64_t size = p.pow(level);
    std::vector<Complex> bins(static_cast<std::size_t>(size));
    for (std::int64_t t = 1; t < size; ++t) {
        const PruferElement a = PruferElement::reduce(t, level, p);
        SplitMix64 rng(derive_seed(seed, {static_cast<std::uint64_t>(p.value()),
                                          static_cast<std::uint64_t>(a.numerator()),
                                          static_cast<std::uint64_t>(a.level())}));
        const auto [x, y] = gaussian_pair(rng);
        const double sigma = std::pow(static_cast<double>(a.norm()), -gamma);
        bins[t] = sigma * Complex(x, y) / std::numbers::sqrt2;
    }
    return FourierSpectrum(p, level, std::move(bins));
}

}  // namespace builtin

}  // namespace pqc
