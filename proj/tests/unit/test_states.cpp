#include <cmath>

#include <gtest/gtest.h>

#include "ftomo/states.hpp"

using namespace ftomo;

TEST(FockAmplitudes, Validation) {
    EXPECT_THROW(FockAmplitudes(std::vector<complex>{}), std::invalid_argument);
    EXPECT_THROW(FockAmplitudes({complex{0.5, 0.0}}), std::invalid_argument);
    EXPECT_THROW(FockAmplitudes::normalized({complex{}, complex{}}), std::invalid_argument);
    const auto s = FockAmplitudes::normalized({complex{3.0, 0.0}, complex{0.0, 4.0}});
    EXPECT_NEAR(s[0].real(), 0.6, 1e-15);
    EXPECT_NEAR(s[1].imag(), 0.8, 1e-15);
    EXPECT_EQ(s.at(5), complex{});
}

TEST(FockState, SingleLevel) {
    const auto s = fock_state(4);
    EXPECT_EQ(s.size(), 5u);
    EXPECT_EQ(s[4], complex(1.0));
    EXPECT_EQ(s[0], complex{});
}

TEST(Glauber, PoissonWeightsAndPhases) {
    const complex alpha = std::polar(1.7, 0.4);
    const auto s = glauber(alpha);
    const double x = std::norm(alpha);
    for (std::size_t n = 0; n < s.size(); ++n) {
        const double p = std::exp(-x + n * std::log(x) - std::lgamma(n + 1.0));
        EXPECT_NEAR(std::norm(s[n]), p, 1e-12);
        if (p > 1e-6) {
            EXPECT_NEAR(std::remainder(std::arg(s[n]) - 0.4 * n, 2 * M_PI), 0.0, 1e-10);
        }
    }
    EXPECT_LT(s.trunc_tail(), 1e-12);
}

TEST(FCoherent, FrozenKerrGroundAmplitude) {
    // Kerr(1): f(n)^2 = n, so |c_0|^2 = 1 / I_0(2|alpha|)
    const auto s = f_coherent(1.0, DeformationSpec::kerr(1.0));
    EXPECT_NEAR(s[0].real(), 0.66232641487188833, 1e-13);
}

TEST(FCoherent, IdentityEqualsGlauber) {
    const auto a = f_coherent(complex{0.3, -1.1}, DeformationSpec::identity());
    const auto b = glauber(complex{0.3, -1.1});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t n = 0; n < a.size(); ++n) EXPECT_EQ(a[n], b[n]);
}

TEST(FCoherent, TighterEpsKeepsMoreLevels) {
    const auto loose = glauber(2.0, 1e-6);
    const auto tight = glauber(2.0, 1e-14);
    EXPECT_LT(loose.size(), tight.size());
    EXPECT_LT(loose.trunc_tail(), 1e-6);
    EXPECT_LT(tight.trunc_tail(), 1e-14);
}

TEST(FCoherent, ErrorPaths) {
    EXPECT_THROW(glauber(1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(glauber(1.0, 1e-3), std::invalid_argument);
    EXPECT_THROW(glauber(40.0), TruncationOverflow);
    EXPECT_THROW(f_coherent(1.0, DeformationSpec::tabulated({1.0, 1.0, 0.0})), DeformationSingular);
}

TEST(TwoMode, IdentityFactorizes) {
    const complex a1{0.8, 0.2}, a2{-0.5, 0.9};
    const auto s = two_mode_f_coherent_total(a1, a2, DeformationSpec::identity());
    const auto g1 = glauber(a1, 1e-15);
    const auto g2 = glauber(a2, 1e-15);
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) EXPECT_NEAR(std::abs(s(i, j) - g1.at(i) * g2.at(j)), 0.0, 1e-12);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
}

TEST(TwoMode, GeneralRecurrenceMatchesTotalForm) {
    const auto spec = DeformationSpec::kerr(0.7);
    const auto f = total_number_deformation(spec);
    const auto gen = two_mode_f_coherent_general(1.2, complex{0.0, 0.9}, f, f);
    const auto tot = two_mode_f_coherent_total(1.2, complex{0.0, 0.9}, spec);
    ASSERT_EQ(gen.rows(), tot.rows());
    ASSERT_EQ(gen.cols(), tot.cols());
    for (std::size_t i = 0; i < gen.rows(); ++i)
        for (std::size_t j = 0; j < gen.cols(); ++j) EXPECT_NEAR(std::abs(gen(i, j) - tot(i, j)), 0.0, 1e-13);
}

TEST(TwoMode, GeneralRecurrenceBruteForcePathIndependence) {
    // C_{n1,n2} reached by every monotone path must agree with the closed form
    const auto spec = DeformationSpec::qosc(0.3);
    const auto f = total_number_deformation(spec);
    const auto s = two_mode_f_coherent_general(0.7, 0.6, f, f);
    const double ref00 = std::abs(s(0, 0));
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            double lc = std::log(ref00) + i * std::log(0.7) + j * std::log(0.6) -
                        0.5 * (std::lgamma(i + 1.0) + std::lgamma(j + 1.0)) - log_f_factorial(spec, i + j);
            EXPECT_NEAR(std::abs(s(i, j)), std::exp(lc), 1e-13);
        }
    }
}

TEST(TwoMode, Compatibility) {
    const auto spec = DeformationSpec::kerr(2.0);
    const auto total = total_number_deformation(spec);
    EXPECT_TRUE(check_compatibility(total, total, 10).compatible);
    EXPECT_TRUE(check_compatibility(single_mode_deformation(spec, 1), single_mode_deformation(spec, 2), 10).compatible);
    const auto bad = check_compatibility(total, single_mode_deformation(spec, 2), 10);
    ASSERT_FALSE(bad.compatible);
    EXPECT_EQ(*bad.first_violation, std::make_pair(std::size_t{1}, std::size_t{1}));
    EXPECT_THROW(two_mode_f_coherent_general(1.0, 1.0, total, single_mode_deformation(spec, 2)),
                 IncompatibleDeformation);
    EXPECT_THROW(single_mode_deformation(spec, 3), std::invalid_argument);
}

TEST(Cat, ParitySectors) {
    for (int sign : {+1, -1}) {
        const auto s = cat_superposition(1.1, DeformationSpec::kerr(1.5), sign);
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
        for (std::size_t i = 0; i < s.rows(); ++i)
            for (std::size_t j = 0; j < s.cols(); ++j)
                if ((i + j) % 2 == (sign > 0 ? 1u : 0u)) {
                    EXPECT_EQ(s(i, j), complex{});
                }
    }
}

TEST(Cat, DegenerateOddAtZero) {
    EXPECT_THROW(cat_superposition(0.0, DeformationSpec::identity(), -1), DegenerateSuperposition);
    EXPECT_THROW(cat_superposition(1.0, DeformationSpec::identity(), 0), std::invalid_argument);
}

TEST(KerrZeroLimit, ThreeTermState) {
    const auto s = two_mode_kerr_zero_limit(1.0, complex{0.0, 1.0});
    EXPECT_NEAR(std::norm(s(0, 0)), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(std::norm(s(1, 0)), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(s(0, 1).imag(), 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_EQ(s(1, 1), complex{});
}

TEST(Classical, UndeformedRotatesAtUnitFrequency) {
    const ClassicalAmplitude a0(complex{1.0, 0.5});
    const auto one = [](double) { return 1.0; };
    EXPECT_NEAR(classical_frequency(one, a0.energy()), 1.0, 1e-8);
    const complex at = classical_evolution(a0, one, 0.8);
    EXPECT_NEAR(std::abs(at - a0.alpha() * std::polar(1.0, -0.8)), 0.0, 1e-8);
    EXPECT_NEAR(std::norm(at), a0.energy(), 1e-14);
}

TEST(Classical, KerrLikeFrequencyGrowsWithEnergy) {
    // f^2(E) = 1 + k E gives omega = 1 + 2 k E
    const auto f = [](double e) { return std::sqrt(1.0 + 0.1 * e); };
    EXPECT_NEAR(classical_frequency(f, 2.0), 1.4, 1e-7);
    EXPECT_NEAR(classical_frequency(f, 0.0), 1.0, 1e-7);
}

TEST(Serialization, RoundTripAndDigest) {
    const auto s = f_coherent(complex{0.4, 0.3}, DeformationSpec::qosc(0.1));
    const nlohmann::json j = s;
    const auto back = fock_amplitudes_from_json(j);
    ASSERT_EQ(back.size(), s.size());
    for (std::size_t n = 0; n < s.size(); ++n) EXPECT_EQ(back[n], s[n]);
    EXPECT_EQ(state_digest(back), state_digest(s));
    EXPECT_EQ(state_digest(s).size(), 16u);
    EXPECT_NE(state_digest(fock_state(1)), state_digest(fock_state(2)));

    const auto t = two_mode_f_coherent_total(0.5, 0.5, DeformationSpec::kerr(1.0));
    const auto t_back = two_mode_amplitudes_from_json(nlohmann::json(t));
    EXPECT_EQ(t_back.rows(), t.rows());
    EXPECT_EQ(t_back(1, 1), t(1, 1));
    EXPECT_THROW(fock_amplitudes_from_json(nlohmann::json::parse(R"({"coeffs":[1]})")), std::invalid_argument);
}
