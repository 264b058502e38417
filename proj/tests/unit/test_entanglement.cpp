#include <cmath>

#include <gtest/gtest.h>

#include "ftomo/entanglement.hpp"
#include "ftomo/verification.hpp"

using namespace ftomo;

namespace {

// 1 - Tr rho^2 as the literal quadruple sum over n, m, p, k.
double quadruple_sum_entropy(double a1, double a2, const DeformationSpec& spec, std::size_t n_max) {
    const auto lff = log_f_factorials(spec, 2 * n_max);
    auto b = [&](std::size_t n, std::size_t k) {
        return std::exp(n * std::log(a1) + k * std::log(a2) - 0.5 * (std::lgamma(n + 1.0) + std::lgamma(k + 1.0)) -
                        lff[n + k]);
    };
    double norm = 0.0, sum = 0.0;
    for (std::size_t n = 0; n <= n_max; ++n)
        for (std::size_t k = 0; k <= n_max; ++k) norm += b(n, k) * b(n, k);
    for (std::size_t n = 0; n <= n_max; ++n)
        for (std::size_t m = 0; m <= n_max; ++m)
            for (std::size_t p = 0; p <= n_max; ++p)
                for (std::size_t k = 0; k <= n_max; ++k) sum += b(n, k) * b(p, k) * b(p, m) * b(n, m);
    return 1.0 - sum / (norm * norm);
}

}  // namespace

TEST(ReducedDensity, Validation) {
    Eigen::MatrixXcd bad(2, 2);
    bad << 0.5, 0.1, 0.0, 0.5;
    EXPECT_THROW(ReducedDensity{bad}, std::invalid_argument);
    EXPECT_THROW(ReducedDensity{Eigen::MatrixXcd::Identity(2, 2)}, std::invalid_argument);
}

TEST(ReducedDensity, ProductAndBell) {
    const auto product = two_mode_f_coherent_total(0.7, 0.4, DeformationSpec::identity());
    const auto rho = reduce_mode2(product);
    EXPECT_NEAR(linear_entropy(rho), 0.0, 1e-12);
    EXPECT_TRUE(rho.positive_semidefinite());

    const double r = 1.0 / std::sqrt(2.0);
    const TwoModeAmplitudes bell(2, 2, {0.0, r, r, 0.0});
    const auto rb = reduce_mode2(bell);
    EXPECT_NEAR(rb.matrix()(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(rb.matrix()(0, 1)), 0.0, 1e-15);
    EXPECT_NEAR(linear_entropy(rb), 0.5, 1e-15);
}

TEST(ReducedDensity, RandomTraceIsOne) {
    std::vector<complex> c(36);
    const auto src = random_state(36, 99);
    for (std::size_t i = 0; i < 36; ++i) c[i] = src[i];
    const auto rho = reduce_mode2(TwoModeAmplitudes(6, 6, c));
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-14);
    EXPECT_GE(rho.min_eigenvalue(), -1e-12);
}

TEST(Series, FrozenKerrValue) {
    EXPECT_NEAR(linear_entropy_series(1.0, 1.0, DeformationSpec::kerr(1.0)), 0.026120025236090644, 1e-12);
}

TEST(Series, MatchesLiteralQuadrupleSum) {
    for (double lam : {0.3, 2.0}) {
        const auto spec = DeformationSpec::kerr(lam);
        EXPECT_NEAR(linear_entropy_series(0.5, 0.8, spec), quadruple_sum_entropy(0.5, 0.8, spec, 14), 1e-12);
    }
    const auto q = DeformationSpec::qosc(0.4);
    EXPECT_NEAR(linear_entropy_series(0.6, 0.6, q), quadruple_sum_entropy(0.6, 0.6, q, 14), 1e-12);
}

TEST(Series, MatchesPartialTrace) {
    for (double lam : {0.2, 1.0, 5.0}) {
        const auto spec = DeformationSpec::kerr(lam);
        const double trace = linear_entropy(reduce_mode2(two_mode_f_coherent_total(complex{0.0, 2.0}, 0.5, spec)));
        EXPECT_NEAR(linear_entropy_series(complex{0.0, 2.0}, 0.5, spec), trace, 1e-8);
    }
}

TEST(Series, SymmetryIdentityAndRange) {
    const auto spec = DeformationSpec::kerr(0.8);
    EXPECT_NEAR(linear_entropy_series(0.5, 2.0, spec), linear_entropy_series(2.0, 0.5, spec), 1e-12);
    EXPECT_NEAR(linear_entropy_series(1.3, 0.7, DeformationSpec::identity()), 0.0, 1e-12);
    for (double a : {0.0, 0.5, 3.0}) {
        const double s = linear_entropy_series(a, 1.0, DeformationSpec::kerr(0.1));
        EXPECT_GE(s, -1e-15);
        EXPECT_LE(s, 1.0);
    }
}

TEST(Series, DivergentTruncationReported) {
    EXPECT_THROW(linear_entropy_series(20.0, 20.0, DeformationSpec::identity()), TailNotConverged);
}

TEST(Cat, SeriesMatchesPartialTrace) {
    for (int sign : {+1, -1}) {
        for (double lam : {0.3, 1.0, 4.0}) {
            const auto spec = DeformationSpec::kerr(lam);
            const double trace = linear_entropy(reduce_mode2(cat_superposition(1.2, spec, sign)));
            EXPECT_NEAR(cat_linear_entropy(1.2, spec, sign), trace, 1e-8) << sign << " " << lam;
        }
    }
}

TEST(Cat, Limits) {
    EXPECT_NEAR(cat_linear_entropy(1.0, DeformationSpec::kerr(1e-5), +1), 0.0, 1e-3);
    EXPECT_NEAR(cat_linear_entropy(1.0, DeformationSpec::kerr(1e-5), -1), 0.5, 1e-3);
    EXPECT_NEAR(cat_linear_entropy(1.0, DeformationSpec::kerr(1e6), -1), 0.5, 1e-4);
    EXPECT_NEAR(cat_linear_entropy(1.0, DeformationSpec::identity(), +1), cat_entropy_identity_limit(1.0), 1e-10);
    EXPECT_THROW(cat_linear_entropy(0.0, DeformationSpec::identity(), -1), DegenerateSuperposition);
    EXPECT_THROW(cat_linear_entropy(1.0, DeformationSpec::identity(), 2), std::invalid_argument);
}

TEST(ClosedForms, IdentityCat) {
    EXPECT_NEAR(cat_entropy_identity_limit(0.0), 0.0, 1e-15);
    EXPECT_NEAR(cat_entropy_identity_limit(10.0), 0.5, 1e-15);
    EXPECT_NEAR(cat_entropy_identity_limit(1.0), 0.46467458757341777, 1e-15);
}

TEST(ClosedForms, KerrZeroLimit) {
    EXPECT_NEAR(linear_entropy_kerr_zero_limit(1.0, 1.0), 2.0 / 9.0, 1e-15);
    const double trace = linear_entropy(reduce_mode2(two_mode_kerr_zero_limit(0.5, complex{0.0, 2.0})));
    EXPECT_NEAR(linear_entropy_kerr_zero_limit(0.5, complex{0.0, 2.0}), trace, 1e-14);
    // small lambda approaches the limit, with an error of order sqrt(lambda)
    double prev = 0.0;
    for (double lam : {1e-2, 1e-4, 1e-6, 1e-8}) {
        const double s = linear_entropy_series(1.0, 1.0, DeformationSpec::kerr(lam));
        EXPECT_GT(s, prev);
        EXPECT_LT(s, 2.0 / 9.0);
        prev = s;
    }
    EXPECT_NEAR(prev, 2.0 / 9.0, 1e-4);
}
