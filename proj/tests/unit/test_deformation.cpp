#include <cmath>

#include <gtest/gtest.h>

#include "ftomo/deformation.hpp"

using namespace ftomo;

TEST(Deformation, FrozenQOscValue) {
    EXPECT_NEAR(f_value(DeformationSpec::qosc(0.5), 3), 1.1914359557818785, 1e-15);
}

TEST(Deformation, TrivialCases) {
    EXPECT_EQ(f_value(DeformationSpec::identity(), 7), 1.0);
    EXPECT_EQ(f_value(DeformationSpec::qosc(0.0), 7), 1.0);
    EXPECT_EQ(f_value(DeformationSpec::qosc(0.3), 0), 1.0);
    for (double lam : {0.1, 1.0, 50.0}) EXPECT_NEAR(f_value(DeformationSpec::kerr(lam), 1), 1.0, 1e-15);
    EXPECT_NEAR(f_value(DeformationSpec::kerr(2.0), 5), std::sqrt(3.0), 1e-15);
}

TEST(Deformation, FactoryValidation) {
    EXPECT_THROW(DeformationSpec::kerr(0.0), std::invalid_argument);
    EXPECT_THROW(DeformationSpec::kerr(-1.0), std::invalid_argument);
    EXPECT_THROW(DeformationSpec::qosc(-0.1), std::invalid_argument);
    EXPECT_THROW(DeformationSpec::qosc(INFINITY), std::invalid_argument);
}

TEST(Deformation, SingularLevels) {
    // Kerr f(0)^2 = (lambda - 1)/lambda < 0 for lambda < 1
    EXPECT_THROW(f_value(DeformationSpec::kerr(0.5), 0), DeformationSingular);
    const auto tab = DeformationSpec::tabulated({1.0, 0.0, 2.0});
    EXPECT_EQ(f_value(tab, 2), 2.0);
    EXPECT_THROW(f_value(tab, 1), DeformationSingular);
    EXPECT_THROW(f_value(tab, 3), DeformationSingular);
}

TEST(Deformation, LargeArgumentsStayFinite) {
    EXPECT_TRUE(std::isfinite(log_f_value(DeformationSpec::qosc(1.0), 5000)));
    EXPECT_NEAR(log_f_value(DeformationSpec::qosc(1.0), 5000), 0.5 * (5000.0 - std::log(2.0) - std::log(5000.0)), 1e-9);
}

TEST(Deformation, FactorialIsRunningProduct) {
    const auto spec = DeformationSpec::qosc(0.2);
    const auto all = log_f_factorials(spec, 12);
    double prod = 1.0;
    for (std::size_t n = 1; n <= 12; ++n) {
        prod *= f_value(spec, n);
        EXPECT_NEAR(all[n], std::log(prod), 1e-13);
        EXPECT_NEAR(log_f_factorial(spec, n), all[n], 1e-13);
    }
    EXPECT_EQ(all[0], 0.0);
}

TEST(Commutator, IdentityIsOne) {
    for (std::size_t n = 0; n < 10; ++n) EXPECT_NEAR(commutator_diag(DeformationSpec::identity(), n), 1.0, 1e-15);
}

TEST(Commutator, KerrClosedForm) {
    for (double lam : {0.3, 1.0, 4.0})
        for (std::size_t n = 0; n < 12; ++n)
            EXPECT_NEAR(commutator_diag(DeformationSpec::kerr(lam), n), 1.0 + 2.0 * n / lam, 1e-12 * (1 + n / lam));
}

TEST(Commutator, QOscTelescopes) {
    for (double lam : {0.05, 0.3, 1.0})
        for (std::size_t n = 0; n < 12; ++n)
            EXPECT_NEAR(commutator_diag(DeformationSpec::qosc(lam), n),
                        (std::sinh(lam * (n + 1.0)) - std::sinh(lam * n)) / lam, 1e-10);
}

TEST(DeformationJson, RoundTrip) {
    for (const auto& spec : {DeformationSpec::identity(), DeformationSpec::kerr(0.75), DeformationSpec::qosc(0.2),
                             DeformationSpec::tabulated({1.0, 1.5, 2.0})}) {
        const nlohmann::json j = spec;
        const auto back = j.get<DeformationSpec>();
        EXPECT_EQ(back.family_name(), spec.family_name());
        EXPECT_EQ(back.parameter(), spec.parameter());
        EXPECT_EQ(nlohmann::json(back), j);
    }
    const auto described = parse_deformation(R"({"family":"kerr","lambda":2,"description":"Kerr medium"})");
    EXPECT_EQ(described.description(), "Kerr medium");
    EXPECT_EQ(nlohmann::json(described)["description"], "Kerr medium");
}

TEST(DeformationJson, Rejections) {
    EXPECT_THROW(parse_deformation(R"({"family":"kerr","lambda":1,"extra":0})"), std::invalid_argument);
    EXPECT_THROW(parse_deformation(R"({"family":"kerr"})"), std::invalid_argument);
    EXPECT_THROW(parse_deformation(R"({"family":"nope"})"), std::invalid_argument);
    EXPECT_THROW(parse_deformation(R"({"family":"kerr","lambda":-2})"), std::invalid_argument);
    EXPECT_THROW(parse_deformation("{not json"), std::invalid_argument);
}
