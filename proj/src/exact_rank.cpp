#include "pqc/exact_rank.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pqc {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

// __int128 that reports overflow instead of wrapping.
struct Checked {
    __int128 v = 0;

    friend Checked operator+(Checked a, Checked b) {
        Checked r;
        if (__builtin_add_overflow(a.v, b.v, &r.v)) throw Overflow{};
        return r;
    }
    friend Checked operator-(Checked a, Checked b) {
        Checked r;
        if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow{};
        return r;
    }
    friend Checked operator*(Checked a, Checked b) {
        Checked r;
        if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
        return r;
    }
    friend Checked operator/(Checked a, Checked b) { return {a.v / b.v}; }
    friend Checked operator%(Checked a, Checked b) { return {a.v % b.v}; }
    friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
    bool is_zero() const { return v == 0; }
};

inline bool is_zero(const Checked& c) { return c.is_zero(); }
inline bool is_zero(const BigInt& c) { return c.is_zero(); }

template <typename Int>
struct Gaussian {
    Int re{};
    Int im{};

    bool zero() const { return is_zero(re) && is_zero(im); }

    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        if (is_zero(a.im) && is_zero(b.im)) return {a.re * b.re, Int{}};
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }

    // Exact division; the quotient is known to lie in Z[i].
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
        if (is_zero(b.im)) {
            if (!is_zero(a.re % b.re) || !is_zero(a.im % b.re)) throw std::logic_error("inexact Bareiss division");
            return {a.re / b.re, a.im / b.re};
        }
        const Int n = b.re * b.re + b.im * b.im;
        const Int re = a.re * b.re + a.im * b.im;
        const Int im = a.im * b.re - a.re * b.im;
        if (!is_zero(re % n) || !is_zero(im % n)) throw std::logic_error("inexact Bareiss division");
        return {re / n, im / n};
    }
};

// Fraction-free row echelon reduction; columns without a pivot are skipped.
template <typename Int>
std::int64_t bareiss_rank(std::vector<Gaussian<Int>> a, std::int64_t rows, std::int64_t cols) {
    const auto at = [&](std::int64_t r, std::int64_t c) -> Gaussian<Int>& { return a[r * cols + c]; };
    Gaussian<Int> previous{Int{1}, Int{}};
    std::int64_t rank = 0;
    for (std::int64_t c = 0; c < cols && rank < rows; ++c) {
        std::int64_t pivot_row = -1;
        for (std::int64_t r = rank; r < rows; ++r)
            if (!at(r, c).zero()) {
                pivot_row = r;
                break;
            }
        if (pivot_row < 0) continue;
        if (pivot_row != rank)
            for (std::int64_t j = c; j < cols; ++j) std::swap(at(pivot_row, j), at(rank, j));

        const Gaussian<Int> pivot = at(rank, c);
        for (std::int64_t r = rank + 1; r < rows; ++r) {
            const Gaussian<Int> lead = at(r, c);
            for (std::int64_t j = c + 1; j < cols; ++j) {
                Gaussian<Int>& entry = at(r, j);
                if (lead.zero()) {
                    if (!entry.zero()) entry = (pivot * entry) / previous;
                } else {
                    entry = (pivot * entry - lead * at(rank, j)) / previous;
                }
            }
            at(r, c) = Gaussian<Int>{};
        }
        previous = pivot;
        ++rank;
    }
    return rank;
}

struct Dyadic {
    std::int64_t mantissa = 0;  // value = mantissa * 2^exponent
    int exponent = 0;
};

Dyadic to_dyadic(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("exact rank needs finite entries");
    if (x == 0.0) return {};
    int e = 0;
    const double frac = std::frexp(x, &e);
    auto mantissa = static_cast<std::int64_t>(std::ldexp(frac, 53));
    e -= 53;
    while (mantissa % 2 == 0) {
        mantissa /= 2;
        ++e;
    }
    return {mantissa, e};
}

}  // namespace

std::int64_t exact_rank(const Eigen::MatrixXcd& m) {
    const std::int64_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    std::vector<Dyadic> re(static_cast<std::size_t>(rows * cols)), im(re.size());
    int min_exp = std::numeric_limits<int>::max(), max_exp = std::numeric_limits<int>::min();
    for (std::int64_t r = 0; r < rows; ++r)
        for (std::int64_t c = 0; c < cols; ++c) {
            const std::size_t k = static_cast<std::size_t>(r * cols + c);
            re[k] = to_dyadic(m(r, c).real());
            im[k] = to_dyadic(m(r, c).imag());
            for (const Dyadic& d : {re[k], im[k]})
                if (d.mantissa != 0) {
                    min_exp = std::min(min_exp, d.exponent);
                    max_exp = std::max(max_exp, d.exponent);
                }
        }
    if (min_exp == std::numeric_limits<int>::max()) return 0;

    const auto scaled = [&](const Dyadic& d) {
        BigInt v = d.mantissa;
        return BigInt(v << (d.exponent - min_exp));
    };

    if (max_exp - min_exp <= 60) {
        std::vector<Gaussian<Checked>> a(re.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            a[k].re.v = static_cast<__int128>(re[k].mantissa) << (re[k].mantissa ? re[k].exponent - min_exp : 0);
            a[k].im.v = static_cast<__int128>(im[k].mantissa) << (im[k].mantissa ? im[k].exponent - min_exp : 0);
        }
        try {
            return bareiss_rank(std::move(a), rows, cols);
        } catch (const Overflow&) {
        }
    }
    std::vector<Gaussian<BigInt>> a(re.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (re[k].mantissa) a[k].re = scaled(re[k]);
        if (im[k].mantissa) a[k].im = scaled(im[k]);
    }
    return bareiss_rank(std::move(a), rows, cols);
}

std::int64_t exact_rank(const DerivativeOperator& d) {
    if (!d.exact_entries())
        throw std::invalid_argument("derivative entries are not exact; use numerical_rank");
    return exact_rank(d.matrix());
}

std::int64_t rank(const DerivativeOperator& d) { return d.exact_entries() ? exact_rank(d) : numerical_rank(d); }

}  // namespace pqc
