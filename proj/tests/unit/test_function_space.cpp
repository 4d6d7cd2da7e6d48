#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "pqc/function_space.hpp"

using namespace pqc;
using namespace pqc::builtin;

namespace {

const Complex i_unit(0.0, 1.0);

Complex root(double num, double den) { return std::exp(2.0 * std::numbers::pi * i_unit * num / den); }

double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
    EXPECT_EQ(a.size(), b.size());
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST(Character, Examples) {
    const Prime p(3);
    EXPECT_EQ(evaluate_character(PruferElement::zero(p), 5, 2), Complex(1.0));
    EXPECT_NEAR(std::abs(evaluate_character(PruferElement::parse("1/3", p), 1, 1) - root(1, 3)), 0, 1e-15);
    EXPECT_NEAR(std::abs(evaluate_character(PruferElement::parse("2/9", p), 3, 2) - root(6, 9)), 0, 1e-15);
    EXPECT_THROW(evaluate_character(PruferElement::parse("1/9", p), 0, 1), std::domain_error);
}

TEST(Character, OrthonormalExhaustive) {
    for (std::int64_t pv : {3, 5}) {
        const Prime p(pv);
        const int N = 2;
        const auto dual = enumerate_dual(p, N);
        const auto n = p.pow(N);
        for (const auto& a : dual)
            for (const auto& b : dual) {
                Complex acc{};
                for (std::int64_t j = 0; j < n; ++j)
                    acc += evaluate_character(a, j, N) * std::conj(evaluate_character(b, j, N));
                acc /= static_cast<double>(n);
                EXPECT_NEAR(std::abs(acc - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-12);
            }
    }
}

TEST(Fourier, ConstantAndCharacter) {
    const Prime p(3);
    const auto s = fourier_forward(constant(p, 2, 1.0));
    EXPECT_NEAR(std::abs(s.at_bin(0) - 1.0), 0, 1e-15);
    EXPECT_EQ(s.nonzero_terms(1e-12).size(), 1u);
    for (const auto& a : enumerate_dual(Prime(5), 2)) {
        const auto spec = fourier_forward(character(a, 2));
        const auto terms = spec.nonzero_terms(1e-12);
        ASSERT_EQ(terms.size(), 1u);
        EXPECT_EQ(terms[0].first, a);
        EXPECT_NEAR(std::abs(terms[0].second - 1.0), 0, 1e-12);
    }
}

TEST(Fourier, InverseExamples) {
    const Prime p(3);
    const std::pair<PruferElement, Complex> c[] = {{PruferElement::zero(p), Complex(2.5, -1)}};
    const auto f = fourier_inverse(FourierSpectrum::from_terms(p, 2, c));
    for (Complex z : f.values()) EXPECT_EQ(z, Complex(2.5, -1));
    const std::pair<PruferElement, Complex> t[] = {{PruferElement::parse("1/3", p), 1.0}};
    const auto g = fourier_inverse(FourierSpectrum::from_terms(p, 1, t));
    EXPECT_LE(max_diff(g.values(), std::vector<Complex>{1.0, root(1, 3), root(2, 3)}), 1e-15);
}

TEST(Fourier, ProductOfCharactersShiftsFrequency) {
    const Prime p(5);
    const auto dual = enumerate_dual(p, 2);
    for (const auto& a : dual)
        for (const auto& alpha : dual) {
            const auto terms = fourier_forward(character(a, 2) * character(alpha, 2)).nonzero_terms(1e-12);
            ASSERT_EQ(terms.size(), 1u);
            EXPECT_EQ(terms[0].first, a + alpha);
        }
}

TEST(Fourier, MatchesOracleAndParseval) {
    for (auto [pv, level] : {std::pair{3, 5}, {5, 4}, {7, 3}, {3, 0}}) {
        const Prime p(pv);
        const auto f = random_values(p, level, 42);
        const auto s = fourier_forward(f);
        EXPECT_FALSE(s.exact());
        const auto ref = oracle::dft(std::vector<Complex>(f.values().begin(), f.values().end()), true);
        EXPECT_LE(max_diff(s.bins(), ref), 1e-12);
        double energy = 0;
        for (Complex z : s.bins()) energy += std::norm(z);
        EXPECT_NEAR(energy, std::pow(lebesgue_norm(f, 2), 2), 1e-12);
        EXPECT_LE(max_diff(fourier_inverse(s).values(), f.values()), 1e-12);
    }
}

TEST(ConditionalExpectation, Examples) {
    const Prime p(3);
    const auto f = random_values(p, 3, 1);
    EXPECT_LE(max_diff(conditional_expectation(f, 3).values(), f.values()), 0.0);
    EXPECT_LE(max_diff(conditional_expectation(f, 5).values(), f.values()), 0.0);
    const auto chi = character(PruferElement::parse("4/27", p), 3);
    for (int k = 0; k < 3; ++k)
        EXPECT_NEAR(lebesgue_norm(conditional_expectation(chi, k), infinity), 0, 1e-14);
    const Complex mean = fourier_forward(f).at_bin(0);
    EXPECT_NEAR(lebesgue_norm(conditional_expectation(f, 0) - constant(p, 3, mean), infinity), 0, 1e-14);
    EXPECT_THROW(conditional_expectation(f, -1), std::invalid_argument);
}

TEST(ConditionalExpectation, ValueAndFrequencySidesAgree) {
    for (auto [pv, level] : {std::pair{3, 4}, {5, 3}, {7, 2}}) {
        const Prime p(pv);
        const auto f = random_values(p, level, 9);
        for (int k = 0; k <= level; ++k) {
            const auto by_values = conditional_expectation(f, k);
            const auto by_freq = fourier_inverse(conditional_expectation(fourier_forward(f), k));
            EXPECT_LE(max_diff(by_values.values(), by_freq.values()), 1e-12);
            EXPECT_LE(max_diff(conditional_expectation(by_values, k).values(), by_values.values()), 1e-15);
            for (double q : {1.0, 2.0, infinity}) EXPECT_LE(lebesgue_norm(by_values, q), lebesgue_norm(f, q) + 1e-12);
        }
    }
}

TEST(Lebesgue, Examples) {
    const Prime p(3);
    for (double q : {1.0, 1.5, 2.0, 4.0, infinity}) {
        EXPECT_NEAR(lebesgue_norm(constant(p, 2, Complex(3, 4)), q), 5.0, 1e-14);
        EXPECT_NEAR(lebesgue_norm(character(PruferElement::parse("2/9", p), 2), q), 1.0, 1e-14);
    }
    EXPECT_NEAR(lebesgue_norm(indicator(p, 3, 5, 3), 1), 1.0 / 27, 1e-16);
    EXPECT_THROW(lebesgue_norm(constant(p, 1, 1), 0.5), std::invalid_argument);
    EXPECT_THROW(lebesgue_norm(constant(p, 1, 1), std::nan("")), std::invalid_argument);
}

TEST(Promote, PreservesValuesSpectrumAndNorms) {
    const Prime p(5);
    const auto f = random_values(p, 2, 3);
    const auto g = promote(f, 4);
    EXPECT_EQ(g.level(), 4);
    for (std::int64_t j = 0; j < g.size(); ++j) EXPECT_EQ(g[j], f[j % f.size()]);
    for (double q : {1.0, 2.0, 3.0, infinity}) EXPECT_NEAR(lebesgue_norm(g, q), lebesgue_norm(f, q), 1e-14);
    const auto sf = fourier_forward(f).nonzero_terms(1e-12);
    const auto sg = fourier_forward(g).nonzero_terms(1e-12);
    ASSERT_EQ(sf.size(), sg.size());
    for (std::size_t i = 0; i < sf.size(); ++i) {
        EXPECT_EQ(sf[i].first, sg[i].first);
        EXPECT_NEAR(std::abs(sf[i].second - sg[i].second), 0, 1e-13);
    }
    EXPECT_THROW(promote(g, 2), std::invalid_argument);
    const auto c = promote(constant(p, 0, 2.0), 3);
    for (Complex z : c.values()) EXPECT_EQ(z, Complex(2.0));
}

TEST(Spectrum, Algebra) {
    const Prime p(3);
    const auto a = random_spectrum(p, 2, 1, 0.0);
    const auto b = random_spectrum(p, 2, 2, 0.0);
    EXPECT_TRUE((a + b).exact());
    EXPECT_FALSE((a + fourier_forward(constant(p, 2, 1.0))).exact());
    const auto d = (a + b) - b;
    EXPECT_LE(max_diff(d.bins(), a.bins()), 1e-15);
    EXPECT_EQ(a.coefficient(PruferElement::parse("1/27", p)), Complex{});
    EXPECT_THROW(FourierSpectrum(p, 2, std::vector<Complex>(8)), std::invalid_argument);
}

TEST(Spectrum, EffectiveLevel) {
    const Prime p(3);
    const std::pair<PruferElement, Complex> t[] = {{PruferElement::parse("1/3", p), 1.0}};
    EXPECT_EQ(FourierSpectrum::from_terms(p, 4, t).effective_level(), 1);
    EXPECT_EQ(FourierSpectrum::zero(p, 4).effective_level(), 0);
}

TEST(Builtin, CharacterAndIndicator) {
    const Prime p(3);
    const auto f = character(PruferElement::parse("1/3", p), 1);
    EXPECT_LE(max_diff(f.values(), std::vector<Complex>{1.0, root(1, 3), root(2, 3)}), 1e-15);
    const auto ind = indicator(p, 2, 1, 1);
    const std::vector<Complex> expect{0, 1, 0, 0, 1, 0, 0, 1, 0};
    EXPECT_LE(max_diff(ind.values(), expect), 0.0);
    EXPECT_THROW(indicator(p, 1, 0, 2), std::invalid_argument);
    EXPECT_THROW(indicator(p, 2, 3, 1), std::out_of_range);
}

TEST(Builtin, LogNorm) {
    const Prime p(3);
    const auto f = log_norm(p, 2);
    const std::vector<Complex> expect{-2, 0, 0, -1, 0, 0, -1, 0, 0};
    EXPECT_LE(max_diff(f.values(), expect), 0.0);
    const auto g = log_norm(p, 2, ZeroCoset::mean);
    EXPECT_DOUBLE_EQ(g[0].real(), -2.5);
    EXPECT_TRUE(g.is_real());
    // The mean variant matches the average of -ord(x) over p^N Z_p.
    for (std::int64_t pv : {3, 5, 7}) {
        const auto fine = log_norm(Prime(pv), 8);
        for (int N : {1, 2, 3}) {
            const auto coarse = log_norm(Prime(pv), N, ZeroCoset::mean);
            const auto avg = conditional_expectation(fine, N);
            EXPECT_NEAR(coarse[0].real(), avg[0].real(), std::pow(pv, N - 8) * 10.0);
        }
    }
}

TEST(Builtin, RandomValuesAreReproducible) {
    const Prime p(5);
    const auto a = random_values(p, 3, 42);
    const auto b = random_values(p, 3, 42);
    const auto c = random_values(p, 3, 43);
    EXPECT_LE(max_diff(a.values(), b.values()), 0.0);
    EXPECT_GT(max_diff(a.values(), c.values()), 0.1);
    for (Complex z : a.values()) EXPECT_LE(std::abs(z), 1.0);
    EXPECT_TRUE(random_values(p, 3, 1, ValueDistribution::real).is_real());
    const auto g = random_values(p, 3, 1, ValueDistribution::gaussian);
    EXPECT_FALSE(g.is_real());
    EXPECT_GT(lebesgue_norm(g, infinity), 1.0);
}

TEST(Builtin, RandomSpectrumTruncationsNest) {
    const Prime p(3);
    const auto coarse = random_spectrum(p, 2, 42, 1.0);
    const auto fine = random_spectrum(p, 4, 42, 1.0);
    EXPECT_TRUE(coarse.exact());
    EXPECT_EQ(fine.at_bin(0), Complex{});
    for (const auto& a : enumerate_dual(p, 2)) EXPECT_EQ(coarse.coefficient(a), fine.coefficient(a));
    EXPECT_LE(max_diff(conditional_expectation(fine, 2).bins(), promote(coarse, 4).bins()), 0.0);
    EXPECT_THROW(random_spectrum(p, 2, 1, -1.0), std::invalid_argument);
}
