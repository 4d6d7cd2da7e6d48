#include "pqc/fft.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace pqc {

FftPlan::FftPlan(Prime p, int level) : p_(p), level_(level), size_(p.pow(level)) {
    if (level < 0) throw std::invalid_argument("FFT level must be non-negative");
    roots_.resize(static_cast<std::size_t>(size_));
    for (std::int64_t k = 0; k < size_; ++k) {
        const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(size_);
        roots_[k] = {std::cos(angle), std::sin(angle)};
    }
    reversal_.resize(static_cast<std::size_t>(size_));
    const std::int64_t q = p.value();
    for (std::int64_t j = 0; j < size_; ++j) {
        std::int64_t x = j, r = 0;
        for (int d = 0; d < level; ++d) {
            r = r * q + x % q;
            x /= q;
        }
        reversal_[j] = r;
    }
}

void FftPlan::execute(std::span<Complex> data, Direction dir) const {
    if (static_cast<std::int64_t>(data.size()) != size_)
        throw std::invalid_argument("FFT input length does not match plan size");
    if (size_ == 1) return;

    for (std::int64_t j = 0; j < size_; ++j)
        if (reversal_[j] > j) std::swap(data[j], data[reversal_[j]]);

    const bool inverse = dir == Direction::inverse;
    const auto root = [&](std::int64_t e) { return inverse ? std::conj(roots_[e]) : roots_[e]; };

    const std::int64_t q = p_.value();
    std::vector<Complex> gathered(static_cast<std::size_t>(q));
    std::int64_t sub = 1;
    for (int stage = 1; stage <= level_; ++stage) {
        const std::int64_t span_len = sub * q;
        const std::int64_t twiddle_step = size_ / span_len;
        const std::int64_t unit_step = size_ / q;
        for (std::int64_t block = 0; block < size_; block += span_len) {
            for (std::int64_t k = 0; k < sub; ++k) {
                for (std::int64_t r = 0; r < q; ++r)
                    gathered[r] = data[block + r * sub + k] * root((twiddle_step * r * k) % size_);
                for (std::int64_t out = 0; out < q; ++out) {
                    Complex acc = gathered[0];
                    for (std::int64_t r = 1; r < q; ++r) acc += gathered[r] * root((unit_step * ((r * out) % q)) % size_);
                    data[block + out * sub + k] = acc;
                }
            }
        }
        sub = span_len;
    }
}

std::shared_ptr<const FftPlan> FftPlan::get(Prime p, int level) {
    static std::mutex mutex;
    static std::map<std::pair<std::int64_t, int>, std::shared_ptr<const FftPlan>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{p.value(), level}];
    if (!slot) slot = std::make_shared<const FftPlan>(p, level);
    return slot;
}

std::vector<Complex> naive_dft(std::span<const Complex> data, Direction dir) {
    const auto n = static_cast<std::int64_t>(data.size());
    const double sign = dir == Direction::forward ? -1.0 : 1.0;
    std::vector<Complex> out(data.size());
    for (std::int64_t t = 0; t < n; ++t) {
        Complex acc{};
        for (std::int64_t j = 0; j < n; ++j) {
            // Reduce t*j mod n first so the angle stays exact for large indices.
            const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>((t * j) % n) / static_cast<double>(n);
            acc += data[j] * Complex(std::cos(angle), std::sin(angle));
        }
        out[t] = acc;
    }
    return out;
}

}  // namespace pqc
