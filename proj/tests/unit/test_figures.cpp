#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "ftomo/csv.hpp"
#include "ftomo/figures.hpp"
#include "ftomo/parallel.hpp"
#include "ftomo/verification.hpp"

using namespace ftomo;

TEST(Csv, SeventeenSignificantDigits) {
    EXPECT_EQ(csv::format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(csv::format_double(2.0), "2");
    EXPECT_EQ(csv::format_double(1e-20), "9.9999999999999995e-21");
    std::ostringstream os;
    csv::write_row(os, {1.0, 0.5});
    EXPECT_EQ(os.str(), "1,0.5\n");
}

TEST(Parallel, OrderAndExceptions) {
    std::vector<int> out(1000);
    parallel_for(out.size(), 4, [&](std::size_t i) { out[i] = int(i * i % 97); });
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], int(i * i % 97));
    EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) { if (i == 7) throw NonConvergence("x"); }), NonConvergence);
}

TEST(Figures, Figure1Layout) {
    const auto t = figure1();
    EXPECT_EQ(t.columns, (std::vector<std::string>{"n", "x", "s", "information"}));
    EXPECT_EQ(t.rows.size(), 900u);
    for (const auto& r : t.rows) EXPECT_GE(r[3], 0.0);
    EXPECT_DOUBLE_EQ(t.rows.back()[1], 6.0);
}

TEST(Figures, EndpointsOfEntropyCurves) {
    const auto f2 = figure2();
    EXPECT_EQ(f2.rows.size(), 3u * 251u);
    EXPECT_NEAR(f2.rows[251][3], 2.0 / 9.0, 1e-15);  // (1,1) curve at lambda = 0
    const auto f4 = figure(4);
    const auto f5 = figure(5);
    for (std::size_t c = 0; c < 3; ++c) {
        EXPECT_EQ(f4.rows[c * 251][3], 0.0);
        EXPECT_EQ(f5.rows[c * 251][3], 0.5);
        EXPECT_NEAR(f5.rows[c * 251 + 250][3], 0.5, 0.05);  // lambda = 5
    }
    EXPECT_LT(f4.rows[1][3], 0.01);  // |a| = 0.5 at lambda = 0.02
    EXPECT_THROW(figure(6), std::invalid_argument);
}

TEST(Figures, ThreadCountDoesNotChangeOutput) {
    EXPECT_EQ(to_csv(figure(3, {1e-12, 1})), to_csv(figure(3, {1e-12, 3})));
    EXPECT_EQ(to_csv(figure(1, {1e-12, 1})), to_csv(figure(1, {1e-12, 2})));
}

TEST(Sweeps, LaguerreColumns) {
    const auto t = laguerre_sweep({0, 1}, {0.5, 2.0}, {2, 3});
    EXPECT_EQ(t.columns, (std::vector<std::string>{"n", "x", "s", "lhs", "holds"}));
    ASSERT_EQ(t.rows.size(), 8u);
    EXPECT_EQ(t.rows[3][0], 0.0);
    EXPECT_EQ(t.rows[3][1], 2.0);
    EXPECT_EQ(t.rows[3][2], 3.0);
    for (const auto& r : t.rows) EXPECT_EQ(r[4], 1.0);
}

TEST(Sweeps, UncertaintyCsv) {
    const auto rows = uncertainty_sweep(fock_state(0), {DeformationSpec::identity(), DeformationSpec::qosc(0.1),
                                                        DeformationSpec::kerr(1.0)});
    std::ostringstream os;
    write_uncertainty_csv(os, rows);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "lambda,family,state_digest,sigma_qq,sigma_pp,sigma_qp,sr_lhs,sr_rhs_exact,sr_rhs_small_lambda");
    std::getline(in, line);
    EXPECT_EQ(line.substr(0, 11), "0,identity,");
    EXPECT_EQ(line.substr(line.size() - 5), ",0.25");
    std::getline(in, line);
    std::getline(in, line);
    EXPECT_EQ(line.substr(line.size() - 4), ",nan");
}

TEST(Verification, NamesAndFiltering) {
    EXPECT_EQ(check_names().size(), 11u);
    VerifyOptions opt;
    opt.only = {"husimi-identity"};
    const auto r = run_verification(opt);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_TRUE(r[0].passed);
    EXPECT_THROW(run_check("nope"), std::invalid_argument);
}

TEST(Verification, PaperMomentConstantFails) {
    VerifyOptions opt;
    opt.force_paper_moment_constant = true;
    const auto r = run_check("moment-erratum", opt);
    EXPECT_FALSE(r.passed);
    EXPECT_NEAR(r.residual, 0.25, 1e-9);
    const auto report = verification_report({r}, 0.0);
    EXPECT_FALSE(report["all_passed"].get<bool>());
    EXPECT_EQ(report.begin().key(), "checks");
}
