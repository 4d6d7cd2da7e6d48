#include <gtest/gtest.h>

#include "pqc/seminorms.hpp"
#include "pqc/spectral.hpp"

using namespace pqc;
using namespace pqc::builtin;

TEST(Sobolev, Examples) {
    const Prime p(3);
    EXPECT_NEAR(sobolev_half_norm(constant(p, 3, 2.0)), 0.0, 1e-14);
    for (const auto& a : enumerate_dual(p, 3))
        EXPECT_NEAR(sobolev_half_norm(character(a, 3)), std::sqrt(static_cast<double>(a.norm())), 1e-12);
}

TEST(Sobolev, TraceIdentityAtFirstLevel) {
    for (std::int64_t pv : {3, 5, 7, 11}) {
        const auto f = random_values(Prime(pv), 1, 21);
        const double s = sobolev_half_norm(f);
        const double hs = singular_values(derivative_matrix(fourier_forward(f), pv == 11 ? 2 : 3)).sum_of_squares();
        EXPECT_NEAR(2 * s * s / hs, 1.0, 1e-10);
    }
}

TEST(Sobolev, TraceWeightsBeyondFirstLevel) {
    // Each coefficient contributes |fhat_a|^2 (2|a| + 2|a|/p - 2) to the trace.
    for (auto [pv, N] : {std::pair{3, 4}, {5, 3}, {7, 2}}) {
        const Prime p(pv);
        const auto f = random_values(p, N, 21);
        const auto spec = fourier_forward(f);
        double weighted = 0;
        for (const auto& [a, c] : spec.nonzero_terms())
            if (!a.is_zero()) weighted += std::norm(c) * (2.0 * a.norm() + 2.0 * a.norm() / pv - 2.0);
        const double hs = singular_values(derivative_matrix(spec, N)).sum_of_squares();
        EXPECT_NEAR(weighted / hs, 1.0, 1e-10);
        const double s = sobolev_half_norm(spec);
        EXPECT_LE(2 * s * s, hs);
        EXPECT_LE(hs, 2 * (1.0 + 1.0 / pv) * s * s);
    }
}

TEST(DiskMean, Examples) {
    const Prime p(3);
    const auto f = random_values(p, 3, 4);
    EXPECT_NEAR(std::abs(disk_mean(f, 0, 0) - fourier_forward(f).at_bin(0)), 0, 1e-15);
    EXPECT_EQ(disk_mean(f, 13, 3), f[13]);
    EXPECT_EQ(disk_mean(f, 40, 4), f[40 % 27]);
    const auto ind = indicator(p, 3, 2, 1);
    EXPECT_EQ(disk_mean(ind, 2, 1), Complex(1.0));
    EXPECT_NEAR(std::abs(disk_mean(character(PruferElement::parse("5/27", p), 3), 1, 1)), 0, 1e-15);
    EXPECT_THROW(disk_mean(f, 3, 1), std::out_of_range);
    EXPECT_THROW(disk_mean(f, -1, 1), std::out_of_range);
}

TEST(Bmo, IndicatorExample) {
    const auto ind = indicator(Prime(3), 1, 0, 1);
    const auto m = bmo_oscillation_sequence(ind);
    ASSERT_EQ(m.size(), 2u);
    EXPECT_NEAR(m[0], 4.0 / 9.0, 1e-15);
    EXPECT_EQ(m[1], 0.0);
    EXPECT_NEAR(bmo_seminorm(ind), 4.0 / 9.0, 1e-15);
}

TEST(Bmo, SequenceShapeForLocallyConstant) {
    for (auto [pv, N] : {std::pair{3, 5}, {5, 3}, {7, 2}}) {
        const Prime p(pv);
        for (int m = 0; m <= N; ++m) {
            const auto f = promote(random_values(p, m, 7), N);
            const auto seq = bmo_oscillation_sequence(f);
            ASSERT_EQ(seq.size(), static_cast<std::size_t>(N) + 1);
            for (std::size_t n = 1; n < seq.size(); ++n) EXPECT_LE(seq[n], seq[n - 1]);
            for (int n = m; n <= N; ++n) EXPECT_EQ(seq[n], 0.0);
            EXPECT_LE(seq[0], 2 * lebesgue_norm(f, infinity));
        }
        for (double m : bmo_oscillation_sequence(constant(p, N, 5.0))) EXPECT_EQ(m, 0.0);
    }
}

TEST(Bmo, LogNormMeanVariantIsLevelIndependent) {
    for (std::int64_t pv : {3, 5, 7}) {
        for (int N = 1; N <= (pv == 3 ? 6 : 3); ++N) {
            const auto seq = bmo_oscillation_sequence(log_norm(Prime(pv), N, ZeroCoset::mean));
            for (int n = 0; n < N; ++n) EXPECT_NEAR(seq[n], 2.0 / pv, 1e-12) << pv << " " << N << " " << n;
        }
    }
}

TEST(Besov, CharacterGeometricSum) {
    const Prime p(3);
    for (const auto& a : enumerate_dual(p, 3)) {
        const auto f = character(a, 3);
        for (double q : {1.0, 2.0, 4.0}) {
            double expect = 0;
            for (int n = 0; n < a.level(); ++n) expect += std::pow(3.0, n);
            EXPECT_NEAR(besov_seminorm_discrete(f, q, q, 1 / q), std::pow(expect, 1 / q), 1e-12);
        }
        double sup = a.is_zero() ? 0.0 : std::pow(3.0, (a.level() - 1) * 0.5);
        EXPECT_NEAR(besov_seminorm_discrete(f, infinity, infinity, 0.5), sup, 1e-12);
    }
}

TEST(Besov, ConstantsAndLocallyConstantTail) {
    const Prime p(5);
    const auto c = constant(p, 3, Complex(1, 2));
    EXPECT_EQ(besov_seminorm_discrete(c, 2, 2, 0.5), 0.0);
    EXPECT_EQ(besov_seminorm_integral(c, 2, 2, 0.5), 0.0);
    EXPECT_EQ(besov_bmo_refined_sequence(c, 2), 0.0);
    const auto f = random_values(p, 2, 3);
    EXPECT_NEAR(besov_seminorm_discrete(promote(f, 3), 2, 2, 0.5), besov_seminorm_discrete(f, 2, 2, 0.5), 1e-13);
    EXPECT_NEAR(besov_seminorm_integral(promote(f, 3), 2, 2, 0.5), besov_seminorm_integral(f, 2, 2, 0.5), 1e-12);
    EXPECT_NEAR(besov_bmo_refined_sequence(promote(f, 3), 2), besov_bmo_refined_sequence(f, 2), 1e-13);
}

TEST(Besov, IntegralFormOnCharacter) {
    // chi_a(x - j) - chi_a(x) has modulus |exp(-2 pi i a j) - 1| everywhere.
    const Prime p(3);
    const auto a = PruferElement::parse("1/9", p);
    const auto f = character(a, 2);
    double acc = 0;
    for (int j = 1; j < 9; ++j) {
        const int v = valuation(j, p);
        const double diff = std::abs(std::exp(Complex(0, -2 * std::numbers::pi * j / 9.0)) - 1.0);
        acc += std::pow(3.0, v * 2.0) * diff * diff / 9.0;
    }
    EXPECT_NEAR(besov_seminorm_integral(f, 2, 2, 0.5), std::sqrt(acc), 1e-12);
}

TEST(Besov, ShiftInvariance) {
    const Prime p(3);
    const auto f = random_values(p, 4, 2);
    for (std::int64_t u : {1, 5, 40}) {
        const auto g = f.translated(u);
        EXPECT_NEAR(besov_seminorm_integral(g, 2, 2, 0.5), besov_seminorm_integral(f, 2, 2, 0.5), 1e-12);
        EXPECT_NEAR(besov_seminorm_discrete(g, 1, 3, 0.7), besov_seminorm_discrete(f, 1, 3, 0.7), 1e-12);
        EXPECT_NEAR(bmo_seminorm(g), bmo_seminorm(f), 1e-12);
    }
}

TEST(Besov, Ranges) {
    const auto f = random_values(Prime(3), 2, 1);
    EXPECT_THROW(besov_seminorm_discrete(f, 0.5, 1, 1), std::invalid_argument);
    EXPECT_THROW(besov_seminorm_discrete(f, 1, 0.5, 1), std::invalid_argument);
    EXPECT_THROW(besov_seminorm_discrete(f, 1, 1, 0), std::invalid_argument);
    EXPECT_THROW(besov_seminorm_integral(f, 2, infinity, 0.5), std::invalid_argument);
    EXPECT_THROW(besov_seminorm_integral(f, infinity, 2, 0.5), std::invalid_argument);
    EXPECT_THROW(besov_bmo_refined_sequence(f, 0.5), std::invalid_argument);
    EXPECT_NO_THROW(besov_seminorm_discrete(f, infinity, infinity, 1));
}

TEST(Seminorms, AxiomsOnRandomPairs) {
    const Prime p(5);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto f = random_values(p, 3, seed);
        const auto g = random_values(p, 3, seed + 100);
        const Complex c(-1.5, 0.5);
        using Eval = std::function<double(const LocallyConstantFn&)>;
        const Eval evals[] = {
            [](const LocallyConstantFn& h) { return sobolev_half_norm(h); },
            [](const LocallyConstantFn& h) { return bmo_seminorm(h); },
            [](const LocallyConstantFn& h) { return besov_seminorm_discrete(h, 2, 2, 0.5); },
            [](const LocallyConstantFn& h) { return besov_seminorm_discrete(h, 1, infinity, 1); },
            [](const LocallyConstantFn& h) { return besov_seminorm_integral(h, 1.5, 3, 0.3); },
            [](const LocallyConstantFn& h) { return besov_bmo_refined_sequence(h, 2); },
        };
        for (const auto& e : evals) {
            EXPECT_NEAR(e(c * f), std::abs(c) * e(f), 1e-10 * (1 + e(f)));
            EXPECT_LE(e(f + g), e(f) + e(g) + 1e-10);
            EXPECT_NEAR(e(f + constant(p, 3, c)), e(f), 1e-10 * (1 + e(f)));
        }
    }
}

TEST(Seminorms, SanityBounds) {
    const Prime p(3);
    const auto f = random_values(p, 4, 8);
    for (int n = 0; n <= 4; ++n) {
        const auto tail = f - conditional_expectation(f, n);
        EXPECT_LE(bmo_seminorm(tail), 2 * lebesgue_norm(tail, infinity) + 1e-14);
    }
}

TEST(Seminorms, Report) {
    const auto f = log_norm(Prime(3), 4);
    const auto r = seminorm_report(f);
    EXPECT_GT(r.bmo, 0.0);
    EXPECT_EQ(r.vmo_sequence.size(), 5u);
    EXPECT_EQ(r.besov.size(), 3u);
    const auto r2 = seminorm_report(f, {{infinity, infinity, 0.5}});
    EXPECT_TRUE(std::isnan(r2.besov[0].integral));
}
