#pragma once

// Radix-p Cooley-Tukey transform on Z/p^n Z.
//
// The plan stores the p^n roots of unity and the base-p digit reversal once;
// it is immutable after construction and safe to share between threads.

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "pqc/padic.hpp"

namespace pqc {

using Complex = std::complex<double>;

enum class Direction { forward, inverse };

class FftPlan {
public:
    FftPlan(Prime p, int level);

    Prime prime() const noexcept { return p_; }
    int level() const noexcept { return level_; }
    std::int64_t size() const noexcept { return size_; }

    /// Unnormalized in-place transform:
    ///   forward: X[t] = sum_j x[j] exp(-2 pi i t j / p^n)
    ///   inverse: X[t] = sum_j x[j] exp(+2 pi i t j / p^n)
    void execute(std::span<Complex> data, Direction dir) const;

    /// Shared plan for (p, level), built on first use.
    static std::shared_ptr<const FftPlan> get(Prime p, int level);

private:
    Prime p_;
    int level_;
    std::int64_t size_;
    std::vector<Complex> roots_;          // exp(-2 pi i k / p^n)
    std::vector<std::int64_t> reversal_;  // base-p digit reversal
};

/// Direct O(p^{2n}) evaluation of the same sums, kept as a reference.
std::vector<Complex> naive_dft(std::span<const Complex> data, Direction dir);

}  // namespace pqc
