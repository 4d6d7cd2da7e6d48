#include <gtest/gtest.h>

#include "pqc/spectral.hpp"

using namespace pqc;
using namespace pqc::builtin;

namespace {

FourierSpectrum delta(const PruferElement& a, int level) {
    const std::pair<PruferElement, Complex> t[] = {{a, 1.0}};
    return FourierSpectrum::from_terms(a.prime(), level, t);
}

}  // namespace

TEST(SingularSpectrum, SortsAndValidates) {
    const SingularSpectrum s({1.0, 3.0, 2.0});
    EXPECT_EQ(std::vector<double>(s.values().begin(), s.values().end()), (std::vector<double>{3, 2, 1}));
    EXPECT_THROW(SingularSpectrum({1.0, -1.0}), std::invalid_argument);
    EXPECT_THROW(SingularSpectrum({std::nan("")}), std::invalid_argument);
    EXPECT_THROW(s.approximation_number(-1), std::invalid_argument);
}

TEST(SingularSpectrum, ThreeByThreeExample) {
    const auto d = derivative_matrix(delta(PruferElement::parse("1/3", Prime(3)), 1), 1);
    const auto s = singular_values(d);
    ASSERT_EQ(s.size(), 3);
    EXPECT_NEAR(s.values()[0], 2.0, 1e-14);
    EXPECT_NEAR(s.values()[1], 1.0, 1e-14);
    EXPECT_NEAR(s.values()[2], 1.0, 1e-14);
    EXPECT_DOUBLE_EQ(s.schatten_norm(infinity), s.values()[0]);
    EXPECT_NEAR(schatten_norm(s, 1), 4.0, 1e-13);
    EXPECT_NEAR(schatten_norm(s, 2), std::sqrt(6.0), 1e-13);
    EXPECT_DOUBLE_EQ(approximation_number(s, 0), s.largest());
    EXPECT_EQ(approximation_number(s, 3), 0.0);
    EXPECT_THROW(s.schatten_norm(0.0), std::invalid_argument);
    EXPECT_THROW(s.schatten_norm(-1.0), std::invalid_argument);
}

TEST(SingularSpectrum, ZeroOperator) {
    const auto s = singular_values(derivative_matrix(FourierSpectrum::zero(Prime(5), 2), 2));
    for (double v : s.values()) EXPECT_EQ(v, 0.0);
    EXPECT_EQ(s.schatten_norm(1), 0.0);
    EXPECT_EQ(s.numerical_rank(1e-10), 0);
}

TEST(SingularSpectrum, CharacterClosedForm) {
    for (std::int64_t pv : {3, 5, 7}) {
        const Prime p(pv);
        for (const auto& a : enumerate_dual(p, 2)) {
            if (a.is_zero()) continue;
            const auto s = singular_values(derivative_matrix(delta(a, 2), 3));
            const std::int64_t twos = (a.norm() - 1) / 2 + (a.norm() / pv - 1) / 2;
            for (std::int64_t i = 0; i < s.size(); ++i) {
                const double expect = i < twos ? 2.0 : (i < twos + 2 ? 1.0 : 0.0);
                EXPECT_NEAR(s.values()[i], expect, 1e-12);
            }
            EXPECT_NEAR(s.schatten_norm(1), static_cast<double>(2 * twos + 2), 1e-10);
            EXPECT_NEAR(s.sum_of_squares(), static_cast<double>(4 * twos + 2), 1e-10);
            if (a.norm() == pv) EXPECT_NEAR(s.sum_of_squares(), 2.0 * static_cast<double>(a.norm()), 1e-10);
            EXPECT_EQ(s.approximation_number(twos + 2), 0.0);
        }
    }
}

TEST(SingularSpectrum, GramRouteAndFrobenius) {
    const auto f = random_values(Prime(5), 3, 12);
    const auto d = derivative_matrix(fourier_forward(f), 3);
    const auto a = singular_values(d);
    const auto b = singular_values_from_gram(d.matrix());
    for (std::int64_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a.values()[i], b.values()[i], 1e-7 * a.largest());
    EXPECT_NEAR(a.sum_of_squares(), d.matrix().squaredNorm(), 1e-10 * a.sum_of_squares());
}

TEST(SingularSpectrum, SvdBackwardCheck) {
    const auto f = random_values(Prime(3), 4, 6);
    const Eigen::MatrixXcd m = derivative_matrix(fourier_forward(f), 4).matrix();
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinV);
    const Eigen::VectorXd s2 = svd.singularValues().array().square();
    const Eigen::MatrixXcd gram = svd.matrixV() * s2.asDiagonal() * svd.matrixV().adjoint();
    const Eigen::MatrixXcd ref = m.adjoint() * m;
    EXPECT_LE((gram - ref).norm() / ref.norm(), 1e-8);
}

TEST(SingularSpectrum, SchattenNormsAreNested) {
    const auto s = singular_values(derivative_matrix(fourier_forward(random_values(Prime(3), 3, 1)), 3));
    const double qs[] = {0.5, 1, 1.5, 2, 3, 4, 8};
    for (std::size_t i = 1; i < std::size(qs); ++i) EXPECT_GE(s.schatten_norm(qs[i - 1]), s.schatten_norm(qs[i]) - 1e-12);
    EXPECT_GE(s.schatten_norm(8), s.schatten_norm(infinity));
}

TEST(SingularSpectrum, DyadicSubsequenceTracksFullSum) {
    // On a finite spectrum both sides are finite; check they stay within the
    // elementary two-sided bound that monotonicity gives.
    const Prime p(3);
    const auto s = singular_values(derivative_matrix(random_spectrum(p, 4, 3, 1.0), 4));
    for (double q : {1.0, 2.0}) {
        double dyadic = 0;
        for (int n = 0; n <= 4; ++n) dyadic += std::pow(p.value(), n) * std::pow(s.approximation_number(p.pow(n)), q);
        const double full = std::pow(s.schatten_norm(q), q);
        EXPECT_LE(dyadic, p.value() * full + 1e-12);
    }
}

TEST(PowerIteration, AgreesWithDense) {
    for (auto [pv, N] : {std::pair{3, 2}, {5, 2}, {7, 2}, {3, 4}}) {
        const Prime p(pv);
        const auto f = random_values(p, N, 77);
        const MatrixFreeDerivative op(f, N);
        const auto est = operator_norm_power_iteration(as_linear_map(op), 5000, 1);
        const double dense = singular_values(derivative_matrix(fourier_forward(f), N)).largest();
        EXPECT_TRUE(est.converged);
        EXPECT_NEAR(est.sigma / dense, 1.0, 1e-6) << pv << " " << N;
    }
}

TEST(PowerIteration, CharacterAndZero) {
    const Prime p(5);
    const auto chi = character(PruferElement::parse("3/25", p), 2);
    const auto est = operator_norm_power_iteration(as_linear_map(MatrixFreeDerivative(chi, 3)), 2000, 9);
    EXPECT_NEAR(est.sigma, 2.0, 1e-6);
    const auto zero = operator_norm_power_iteration(as_linear_map(MatrixFreeDerivative(constant(p, 2, 0.0), 2)), 10, 9);
    EXPECT_EQ(zero.sigma, 0.0);
    EXPECT_TRUE(zero.converged);
    const auto flat = operator_norm_power_iteration(as_linear_map(MatrixFreeDerivative(constant(p, 2, 3.0), 2)), 10, 9);
    EXPECT_LE(flat.sigma, 1e-14);
    EXPECT_THROW(operator_norm_power_iteration(as_linear_map(MatrixFreeDerivative(chi, 2)), 0, 1), std::invalid_argument);
}

TEST(PowerIteration, IsSeeded) {
    const auto f = random_values(Prime(3), 3, 5);
    const auto map = as_linear_map(MatrixFreeDerivative(f, 3));
    const auto a = operator_norm_power_iteration(map, 7, 3);
    const auto b = operator_norm_power_iteration(map, 7, 3);
    EXPECT_EQ(a.sigma, b.sigma);
    EXPECT_EQ(a.iterations, 7);
}
