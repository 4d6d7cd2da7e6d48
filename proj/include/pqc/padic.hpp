#pragma once

// Arithmetic on the Pruefer group Q_p/Z_p (the dual of the p-adic integers),
// together with valuations, Legendre symbols and the quadratic sign character.
//
// Elements are kept in reduced form m/p^n with p not dividing m, so the norm
// and the sign can be read directly off the representation.

#include <compare>
#include <tuple>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pqc {

/// An odd prime p >= 3.
class Prime {
public:
    explicit Prime(std::int64_t p);

    std::int64_t value() const noexcept { return p_; }

    /// p^n; throws std::overflow_error when the result does not fit in 63 bits.
    std::int64_t pow(int n) const;

    friend bool operator==(Prime, Prime) = default;

private:
    std::int64_t p_;
};

enum class Sign : int { minus = -1, zero = 0, plus = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

/// Legendre symbol (t | p) by Euler's criterion. Negative t is allowed.
Sign legendre_symbol(std::int64_t t, Prime p);

/// p-adic valuation of a nonzero integer.
int valuation(std::int64_t t, Prime p);

/// Class of m/p^n modulo 1, always stored reduced.
class PruferElement {
public:
    static PruferElement zero(Prime p) { return PruferElement(p, 0, 0); }

    /// Reduced representative of (m mod p^n)/p^n.
    static PruferElement reduce(std::int64_t m, int n, Prime p);

    /// Parses "m/d" with d a power of p (also "m/p^k"), or "0".
    static PruferElement parse(std::string_view text, Prime p);

    Prime prime() const noexcept { return p_; }
    std::int64_t numerator() const noexcept { return m_; }
    int level() const noexcept { return n_; }
    bool is_zero() const noexcept { return n_ == 0; }

    /// p^level for nonzero classes, 0 for the zero class.
    std::int64_t norm() const;

    /// Legendre symbol of the leading digit; zero on the zero class.
    Sign sign() const;

    /// Index t of this element among the DFT bins of level N, i.e. t/p^N.
    std::int64_t bin(int N) const;

    /// "m/p^n" written with the denominator expanded, e.g. "2/9"; "0" for zero.
    std::string to_string() const;

    friend bool operator==(const PruferElement&, const PruferElement&) = default;
    friend auto operator<=>(const PruferElement& a, const PruferElement& b) {
        return std::tuple(a.n_, a.m_) <=> std::tuple(b.n_, b.m_);
    }

private:
    PruferElement(Prime p, std::int64_t m, int n) : p_(p), m_(m), n_(n) {}

    Prime p_;
    std::int64_t m_;
    int n_;
};

PruferElement operator+(const PruferElement& a, const PruferElement& b);
PruferElement operator-(const PruferElement& a);
PruferElement operator-(const PruferElement& a, const PruferElement& b);

inline PruferElement prufer_reduce(std::int64_t m, int n, Prime p) {
    return PruferElement::reduce(m, n, p);
}
inline std::int64_t prufer_norm(const PruferElement& a) { return a.norm(); }
inline Sign sgn(const PruferElement& a) { return a.sign(); }

/// All elements of norm <= p^N; entry t is reduce(t, N).
std::vector<PruferElement> enumerate_dual(Prime p, int N);

/// sgn of every dual element of level N, in enumeration (bin) order.
std::vector<Sign> dual_signs(Prime p, int N);

/// norm of every dual element of level N, in enumeration (bin) order.
std::vector<std::int64_t> dual_norms(Prime p, int N);

}  // namespace pqc
