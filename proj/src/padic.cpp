#include "pqc/padic.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace pqc {

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    using u128 = unsigned __int128;
    std::uint64_t result = 1 % static_cast<std::uint64_t>(mod);
    auto b = static_cast<std::uint64_t>(base);
    while (exp > 0) {
        if (exp & 1) result = static_cast<std::uint64_t>(u128(result) * b % mod);
        b = static_cast<std::uint64_t>(u128(b) * b % mod);
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d <= n / d; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Prime::Prime(std::int64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("prime must be odd and >= 3, got " + std::to_string(p));
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::int64_t Prime::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative exponent");
    std::int64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > std::numeric_limits<std::int64_t>::max() / p_)
            throw std::overflow_error("p^n overflows 64-bit integers");
        r *= p_;
    }
    return r;
}

Sign legendre_symbol(std::int64_t t, Prime p) {
    const std::int64_t q = p.value();
    std::int64_t r = t % q;
    if (r < 0) r += q;
    if (r == 0) return Sign::zero;
    return mod_pow(r, (q - 1) / 2, q) == 1 ? Sign::plus : Sign::minus;
}

int valuation(std::int64_t t, Prime p) {
    if (t == 0) throw std::domain_error("valuation of zero");
    int v = 0;
    while (t % p.value() == 0) {
        t /= p.value();
        ++v;
    }
    return v;
}

PruferElement PruferElement::reduce(std::int64_t m, int n, Prime p) {
    if (n < 0) throw std::invalid_argument("level must be non-negative");
    const std::int64_t pn = p.pow(n);
    std::int64_t r = m % pn;
    if (r < 0) r += pn;
    if (r == 0) return zero(p);
    while (r % p.value() == 0) {
        r /= p.value();
        --n;
    }
    return PruferElement(p, r, n);
}

PruferElement PruferElement::parse(std::string_view text, Prime p) {
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty Pruefer element");
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        // A bare integer is an element of Z_p, hence the zero class.
        parse_int(text, "Pruefer element");
        return zero(p);
    }
    const std::int64_t m = parse_int(trim(text.substr(0, slash)), "numerator");
    std::string_view den = trim(text.substr(slash + 1));
    int level = 0;
    if (const auto caret = den.find('^'); caret != std::string_view::npos) {
        const std::int64_t base = parse_int(trim(den.substr(0, caret)), "denominator base");
        const std::int64_t exp = parse_int(trim(den.substr(caret + 1)), "denominator exponent");
        if (base != p.value() || exp < 0 || exp > 62)
            throw std::invalid_argument("denominator must be a power of " + std::to_string(p.value()));
        level = static_cast<int>(exp);
    } else {
        std::int64_t d = parse_int(den, "denominator");
        if (d <= 0) throw std::invalid_argument("denominator must be positive");
        while (d % p.value() == 0) {
            d /= p.value();
            ++level;
        }
        if (d != 1) throw std::invalid_argument("denominator must be a power of " + std::to_string(p.value()));
    }
    return reduce(m, level, p);
}

std::int64_t PruferElement::norm() const { return is_zero() ? 0 : p_.pow(n_); }

Sign PruferElement::sign() const { return is_zero() ? Sign::zero : legendre_symbol(m_, p_); }

std::int64_t PruferElement::bin(int N) const {
    if (n_ > N)
        throw std::domain_error("element " + to_string() + " has norm above p^" + std::to_string(N));
    return m_ * p_.pow(N - n_);
}

std::string PruferElement::to_string() const {
    if (is_zero()) return "0";
    return std::to_string(m_) + "/" + std::to_string(p_.pow(n_));
}

PruferElement operator+(const PruferElement& a, const PruferElement& b) {
    if (a.prime() != b.prime()) throw std::invalid_argument("mixed primes in Pruefer addition");
    const Prime p = a.prime();
    const int n = std::max(a.level(), b.level());
    const std::int64_t pn = p.pow(n);
    const auto lift = [&](const PruferElement& x) {
        return static_cast<std::int64_t>((static_cast<__int128>(x.numerator()) * p.pow(n - x.level())) % pn);
    };
    return PruferElement::reduce((lift(a) + lift(b)) % pn, n, p);
}

PruferElement operator-(const PruferElement& a) {
    if (a.is_zero()) return a;
    return PruferElement::reduce(a.prime().pow(a.level()) - a.numerator(), a.level(), a.prime());
}

PruferElement operator-(const PruferElement& a, const PruferElement& b) { return a + (-b); }

std::vector<PruferElement> enumerate_dual(Prime p, int N) {
    const std::int64_t size = p.pow(N);
    std::vector<PruferElement> out;
    out.reserve(static_cast<std::size_t>(size));
    for (std::int64_t t = 0; t < size; ++t) out.push_back(PruferElement::reduce(t, N, p));
    return out;
}

std::vector<Sign> dual_signs(Prime p, int N) {
    const std::int64_t size = p.pow(N);
    std::vector<Sign> out(static_cast<std::size_t>(size), Sign::zero);
    // The leading digit of t/p^N is the lowest nonzero base-p digit of t.
    std::vector<Sign> residue(static_cast<std::size_t>(p.value()));
    for (std::int64_t r = 0; r < p.value(); ++r) residue[r] = legendre_symbol(r, p);
    for (std::int64_t t = 1; t < size; ++t) {
        std::int64_t u = t;
        while (u % p.value() == 0) u /= p.value();
        out[t] = residue[u % p.value()];
    }
    return out;
}

std::vector<std::int64_t> dual_norms(Prime p, int N) {
    const std::int64_t size = p.pow(N);
    std::vector<std::int64_t> out(static_cast<std::size_t>(size), 0);
    for (std::int64_t t = 1; t < size; ++t) out[t] = p.pow(N - valuation(t, p));
    return out;
}

}  // namespace pqc
