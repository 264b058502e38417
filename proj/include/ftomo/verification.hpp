#pragma once

// The self-verification suite: one named check per acceptance criterion,
// each with its own tolerance and runtime budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ftomo/deformation.hpp"
#include "ftomo/entanglement.hpp"
#include "ftomo/entropic.hpp"
#include "ftomo/figures.hpp"
#include "ftomo/special_functions.hpp"
#include "ftomo/states.hpp"
#include "ftomo/tomography.hpp"
#include "ftomo/uncertainty.hpp"

namespace ftomo {

struct CheckResult {
    std::string name;
    bool passed = false;
    double residual = 0.0;   // worst measured deviation (meaning per check)
    double tolerance = 0.0;
    double runtime_s = 0.0;
    double runtime_limit_s = 0.0;
    std::string detail;
};

struct VerifyOptions {
    std::vector<std::string> only;  // empty: every check
    bool force_paper_moment_constant = false;
    std::size_t threads = 1;
};

/// Pseudo-random normalized state on `levels` Fock levels (fixed seed per index).
inline FockAmplitudes random_state(std::size_t levels, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<complex> c(levels);
    for (auto& v : c) v = {gauss(rng), gauss(rng)};
    return FockAmplitudes::normalized(std::move(c));
}

namespace detail {

// |psi(x, t)|^2 from raw physicists' Hermite polynomials and the e^{-i(n+1/2)t}
// phase. Used as the independent side of the tomogram comparison.
inline double evolved_density_raw_hermite(const FockAmplitudes& state, double x, double t) {
    std::vector<double> h(state.size());
    h[0] = 1.0;
    if (h.size() > 1) h[1] = 2.0 * x;
    for (std::size_t n = 1; n + 1 < h.size(); ++n) h[n + 1] = 2.0 * x * h[n] - 2.0 * static_cast<double>(n) * h[n - 1];
    complex psi{};
    for (std::size_t n = 0; n < state.size(); ++n) {
        const double norm = std::sqrt(std::pow(2.0, static_cast<double>(n)) * std::exp(log_factorial(n)) *
                                      std::sqrt(std::numbers::pi));
        const double phi_n = h[n] * std::exp(-0.5 * x * x) / norm;
        psi += state[n] * std::polar(phi_n, -(static_cast<double>(n) + 0.5) * t);
    }
    return std::norm(psi);
}

inline int count_strict_maxima(const std::vector<double>& v) {
    int count = 0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i] > v[i - 1] && v[i] > v[i + 1]) ++count;
    }
    return count;
}

struct CheckOutcome {
    bool ok;
    double residual;
    double tolerance;
    std::string detail;
};

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// 1. Symplectic tomogram against the raw-Hermite evolved density.
inline CheckOutcome check_tomogram_oracle(const VerifyOptions&) {
    const double dirs[8][2] = {{1, 0}, {0, 1}, {1, 1}, {-1, 0.5}, {0.5, -2}, {2, 0.3}, {-0.7, -0.7}, {0.25, 1.5}};
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 20; ++k) {
        const auto state = random_state(12, 1000 + k);
        for (const auto& d : dirs) {
            const double s = std::hypot(d[0], d[1]);
            const double theta = std::atan2(d[1], d[0]);
            for (int i = 0; i <= 240; ++i) {
                const double x = -6.0 + 0.05 * i;
                const double m = symplectic_tomogram(state, x, d[0], d[1]);
                const double ref = evolved_density_raw_hermite(state, x / s, theta) / s;
                worst = std::max(worst, std::abs(m - ref));
            }
        }
    }
    return {worst < 1e-8, worst, 1e-8, "max |M - |psi(X/s, theta)|^2/s| over 20 states x 8 directions"};
}

// 2. Normalization of the three tomograms.
inline CheckOutcome check_normalization(const VerifyOptions&) {
    std::vector<FockAmplitudes> states{random_state(12, 7), glauber(complex{0.8, -0.6}),
                                       f_coherent(1.0, DeformationSpec::kerr(1.0)),
                                       f_coherent(complex{0.5, 1.0}, DeformationSpec::qosc(0.2))};
    const double dirs[4][2] = {{1, 0}, {0.5, 0.5}, {0.3, -1.2}, {-2, 0.4}};
    double worst = 0.0;
    for (const auto& st : states) {
        for (const auto& d : dirs) {
            const double s = std::hypot(d[0], d[1]);
            const double integral =
                trapezoid([&](double x) { return symplectic_tomogram(st, x, d[0], d[1]); }, -12.0 * s, 12.0 * s, 4001);
            worst = std::max(worst, std::abs(integral - 1.0));
        }
        for (double theta : {0.0, 0.7, 2.0, 4.5}) {
            const double integral = trapezoid([&](double x) { return optical_tomogram(st, x, theta); }, -12.0, 12.0, 4001);
            worst = std::max(worst, std::abs(integral - 1.0));
        }
        for (double r : {0.0, 0.5, 1.0, 1.5, 2.0}) {
            for (double ph : {0.0, 1.1, 2.5, -2.0}) {
                const complex alpha = std::polar(r, ph);
                double sum = 0.0;
                for (std::size_t n = 0; n <= 128; ++n) sum += photon_tomogram(st, n, alpha);
                worst = std::max(worst, std::abs(sum - 1.0));
            }
        }
    }
    return {worst < 1e-8, worst, 1e-8, "max |integral - 1| over symplectic, optical and photon-number tomograms"};
}

// 3. Q(alpha) = W(0, -alpha).
inline CheckOutcome check_husimi_identity(const VerifyOptions&) {
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 5; ++k) {
        const auto st = random_state(10, 2000 + k);
        for (int i = 0; i <= 20; ++i) {
            for (int j = 0; j <= 20; ++j) {
                const complex alpha{-2.0 + 0.2 * i, -2.0 + 0.2 * j};
                worst = std::max(worst, std::abs(husimi(st, alpha) - photon_tomogram(st, 0, -alpha)));
            }
        }
    }
    return {worst < 1e-12, worst, 1e-12, "max |Q(alpha) - W(0, -alpha)| on a 21x21 grid, 5 states"};
}

// 4. Laguerre inequalities for s = 2, 3, 4.
inline CheckOutcome check_laguerre_inequality(const VerifyOptions&) {
    double min_lhs = std::numeric_limits<double>::infinity();
    double worst_identity = 0.0;
    for (std::size_t n = 0; n <= 5; ++n) {
        for (double x : {0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
            for (std::size_t s : {2, 3, 4}) {
                const auto r = verify_laguerre_inequality(n, x, s);
                min_lhs = std::min(min_lhs, r.lhs_value);
                worst_identity = std::max(worst_identity, std::abs(r.lhs_value - std::exp(x) * r.information));
            }
        }
    }
    const bool ok = min_lhs >= -1e-10 && worst_identity <= 1e-8;
    return {ok, worst_identity, 1e-8,
            "min lhs = " + fmt(min_lhs) + " (>= -1e-10), max |lhs - e^x I| = " + fmt(worst_identity)};
}

// 5. Shape of the Fig. 1 curves.
inline CheckOutcome check_fig1_properties(const VerifyOptions& opt) {
    const Table t = figure1({kDefaultTruncationEps, opt.threads});
    std::vector<std::vector<double>> curves(3);
    double min_i = std::numeric_limits<double>::infinity();
    for (const auto& row : t.rows) {
        curves[static_cast<std::size_t>(row[0])].push_back(row[3]);
        min_i = std::min(min_i, row[3]);
    }
    double worst_far = 0.0;
    for (std::size_t n = 0; n <= 2; ++n) worst_far = std::max(worst_far, fock_information(n, 36.0, 2));
    const int m0 = count_strict_maxima(curves[0]);
    const int m1 = count_strict_maxima(curves[1]);
    const int m2 = count_strict_maxima(curves[2]);
    const bool ok = min_i >= -1e-12 && worst_far < 5e-2 && m1 >= 2 && m2 >= 2 && m0 <= 1;
    return {ok, worst_far, 5e-2,
            "min I = " + fmt(min_i) + ", max I(n,36) = " + fmt(worst_far) + ", local maxima n=0,1,2: " +
                std::to_string(m0) + "," + std::to_string(m1) + "," + std::to_string(m2)};
}

// 6. Series entropy against the partial trace of the constructed state.
inline CheckOutcome check_entanglement_oracle(const VerifyOptions&) {
    double worst = 0.0;
    for (double lam : {0.2, 0.5, 1.0, 2.0, 5.0}) {
        const auto spec = DeformationSpec::kerr(lam);
        for (double a1 : {0.5, 1.0, 2.0}) {
            for (double a2 : {0.5, 1.0, 2.0}) {
                const double series = linear_entropy_series(a1, a2, spec);
                const double trace = linear_entropy(reduce_mode2(two_mode_f_coherent_total(a1, a2, spec)));
                worst = std::max(worst, std::abs(series - trace));
            }
        }
    }
    return {worst < 1e-8, worst, 1e-8, "max |series - partial trace| over 5 lambdas x 9 alpha pairs"};
}

// 7. Limit values of the entropies.
inline CheckOutcome check_limit_values(const VerifyOptions&) {
    double worst_small = 0.0;
    // even cats: the leading correction is 2|a|^4 lambda, so |a| = 2 sits
    // above 1e-3 at lambda = 1e-4; the check uses |a| <= 1
    for (double a : {0.5, 1.0}) {
        worst_small = std::max(worst_small, std::abs(cat_linear_entropy(a, DeformationSpec::kerr(1e-4), +1)));
    }
    for (double a : {0.5, 1.0, 2.0}) {
        worst_small = std::max(worst_small, std::abs(cat_linear_entropy(a, DeformationSpec::kerr(1e-4), -1) - 0.5));
    }
    double worst_large = 0.0;
    for (double a : {0.5, 1.0, 2.0}) {
        const auto spec = DeformationSpec::kerr(1e6);
        worst_large = std::max(worst_large, std::abs(cat_linear_entropy(a, spec, -1) - 0.5));
        worst_large = std::max(worst_large, std::abs(cat_linear_entropy(a, spec, +1) - cat_entropy_identity_limit(a)));
    }
    const double zero_series = linear_entropy_kerr_zero_limit(1.0, 1.0);
    const double zero_trace = linear_entropy(reduce_mode2(two_mode_kerr_zero_limit(1.0, 1.0)));
    const double worst_zero = std::max(std::abs(zero_series - 2.0 / 9.0), std::abs(zero_series - zero_trace));
    const bool ok = worst_small < 1e-3 && worst_large < 1e-4 && worst_zero < 1e-10;
    return {ok, worst_small, 1e-3,
            "lambda=1e-4: " + fmt(worst_small) + " (< 1e-3); lambda=1e6: " + fmt(worst_large) +
                " (< 1e-4); S_0(1,1) vs 2/9 and trace: " + fmt(worst_zero) + " (< 1e-10)"};
}

// 8. Fig. 2-3 monotonicity and peak shift.
inline CheckOutcome check_fig23_claims(const VerifyOptions&) {
    double prev = std::numeric_limits<double>::infinity();
    double worst_step = -std::numeric_limits<double>::infinity();  // max S(l+0.1) - S(l); must be < 0
    for (int i = 1; i <= 50; ++i) {
        const double s = linear_entropy_series(1.0, 1.0, DeformationSpec::kerr(0.1 * i));
        if (i > 1) worst_step = std::max(worst_step, s - prev);
        prev = s;
    }
    std::vector<double> argmax;
    for (double lam : {0.5, 1.0, 2.0}) {
        double best = -1.0, best_a = 0.0;
        for (int i = 0; i <= 80; ++i) {
            const double a1 = 0.05 * i;
            const double s = linear_entropy_series(a1, 1.0, DeformationSpec::kerr(lam));
            if (s > best) {
                best = s;
                best_a = a1;
            }
        }
        argmax.push_back(best_a);
    }
    const bool shifts = argmax[0] < argmax[1] && argmax[1] < argmax[2];
    return {worst_step < 0.0 && shifts, worst_step, 0.0,
            "max step of S_lambda(1,1) = " + fmt(worst_step) + "; argmax |a1| at lambda 0.5,1,2 = " +
                fmt(argmax[0]) + "," + fmt(argmax[1]) + "," + fmt(argmax[2])};
}

// 9. Schroedinger-Robertson inequality and the q-oscillator expansion.
inline CheckOutcome check_uncertainty(const VerifyOptions&) {
    std::vector<FockAmplitudes> states;
    for (double r : {0.0, 0.5, 1.0, 1.5, 2.0}) states.push_back(glauber(std::polar(r, 0.4)));
    for (std::size_t n = 0; n <= 10; ++n) states.push_back(fock_state(n));
    states.push_back(f_coherent(1.0, DeformationSpec::kerr(1.0)));
    states.push_back(f_coherent(complex{1.0, 1.0}, DeformationSpec::kerr(0.5)));
    std::vector<DeformationSpec> specs{DeformationSpec::identity(), DeformationSpec::qosc(0.1),
                                       DeformationSpec::qosc(0.2),  DeformationSpec::qosc(0.3),
                                       DeformationSpec::kerr(0.3),  DeformationSpec::kerr(1.0),
                                       DeformationSpec::kerr(3.0)};
    double min_residual = std::numeric_limits<double>::infinity();
    for (const auto& st : states)
        for (const auto& sp : specs) min_residual = std::min(min_residual, deformed_quadrature_stats(st, sp).sr_residual());

    double worst_vacuum = 0.0;
    for (double lam : {0.01, 0.02, 0.05, 0.1, 0.3}) {
        worst_vacuum = std::max(worst_vacuum, std::abs(qosc_small_lambda_rhs(fock_state(0), lam) -
                                                       0.25 * (1.0 + lam * lam / 3.0)));
    }

    double worst_ratio = 1.0;  // ratio furthest from 1 in the multiplicative sense
    std::vector<FockAmplitudes> small{fock_state(0), glauber(1.0), fock_state(2), glauber(2.0)};
    for (const auto& st : small) {
        auto err = [&](double lam) {
            return std::abs(deformed_quadrature_stats(st, DeformationSpec::qosc(lam)).sr_rhs -
                            qosc_small_lambda_rhs(st, lam));
        };
        const double c = err(0.1) / 1e-4;
        for (double lam : {0.05, 0.02, 0.01}) {
            const double ratio = err(lam) / (c * std::pow(lam, 4));
            if (std::abs(std::log(ratio)) > std::abs(std::log(worst_ratio))) worst_ratio = ratio;
        }
    }
    const bool ok = min_residual >= -1e-10 && worst_vacuum <= 1e-12 && worst_ratio >= 0.5 && worst_ratio <= 2.0;
    return {ok, min_residual, -1e-10,
            "min SR residual = " + fmt(min_residual) + "; vacuum bound error = " + fmt(worst_vacuum) +
                "; worst lambda^4 scaling ratio = " + fmt(worst_ratio)};
}

// 10. Tomographic moment formula with the corrected constant.
inline CheckOutcome check_moment_erratum(const VerifyOptions& opt) {
    const MomentConstant used = opt.force_paper_moment_constant ? MomentConstant::printed : MomentConstant::corrected;
    struct Case {
        FockAmplitudes state;
        double exact;
    };
    const std::vector<Case> cases{{fock_state(0), 1.0 / 3.0}, {fock_state(1), 7.0 / 3.0}, {glauber(1.0), 10.0 / 3.0}};
    double worst = 0.0, worst_shift = 0.0;
    for (const auto& c : cases) {
        const double value = moment_from_optical_tomogram(c.state, used);
        worst = std::max({worst, std::abs(value - c.exact), std::abs(value - photon_moment_combination(c.state))});
        const double shift = moment_from_optical_tomogram(c.state, MomentConstant::printed) -
                             moment_from_optical_tomogram(c.state, MomentConstant::corrected);
        worst_shift = std::max(worst_shift, std::abs(shift - 0.25));
    }
    const bool ok = worst < 1e-6 && worst_shift < 1e-12;
    return {ok, worst, 1e-6,
            std::string(opt.force_paper_moment_constant ? "printed constant +1/12" : "corrected constant -1/6") +
                ": max error = " + fmt(worst) + "; printed - corrected deviates from 1/4 by " + fmt(worst_shift)};
}

// 11. Figure output is byte-identical across runs; one full run < 2 min.
inline CheckOutcome check_determinism(const VerifyOptions& opt) {
    const FigureOptions fo{kDefaultTruncationEps, opt.threads};
    auto run_all = [&] {
        std::vector<std::string> out;
        for (int id = 1; id <= 5; ++id) out.push_back(to_csv(figure(id, fo)));
        return out;
    };
    const auto t0 = std::chrono::steady_clock::now();
    const auto first = run_all();
    const double once = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto second = run_all();
    int mismatches = 0;
    for (std::size_t i = 0; i < first.size(); ++i) mismatches += first[i] != second[i];
    return {mismatches == 0 && once < 120.0, double(mismatches), 0.0,
            std::to_string(mismatches) + " of 5 figures differ between runs; one run took " + fmt(once) + " s"};
}

struct CheckSpec {
    const char* name;
    double runtime_limit_s;
    CheckOutcome (*run)(const VerifyOptions&);
};

inline const std::vector<CheckSpec>& check_table() {
    static const std::vector<CheckSpec> table{
        {"tomogram-oracle", 5.0, check_tomogram_oracle},
        {"normalization", 5.0, check_normalization},
        {"husimi-identity", 2.0, check_husimi_identity},
        {"laguerre-inequality", 10.0, check_laguerre_inequality},
        {"fig1-properties", 10.0, check_fig1_properties},
        {"entanglement-oracle", 20.0, check_entanglement_oracle},
        {"limit-values", 10.0, check_limit_values},
        {"fig23-claims", 30.0, check_fig23_claims},
        {"uncertainty", 10.0, check_uncertainty},
        {"moment-erratum", 5.0, check_moment_erratum},
        {"determinism", 240.0, check_determinism},  // two full figure runs
    };
    return table;
}

}  // namespace detail

inline std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& c : detail::check_table()) out.emplace_back(c.name);
    return out;
}

/// Runs one check by name. Numerical exceptions inside a check count as a
/// failure with the message as detail. Exceeding the runtime budget fails.
inline CheckResult run_check(const std::string& name, const VerifyOptions& opt = {}) {
    for (const auto& c : detail::check_table()) {
        if (name != c.name) continue;
        CheckResult r;
        r.name = c.name;
        r.runtime_limit_s = c.runtime_limit_s;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const auto out = c.run(opt);
            r.passed = out.ok;
            r.residual = out.residual;
            r.tolerance = out.tolerance;
            r.detail = out.detail;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.runtime_s > r.runtime_limit_s) {
            r.passed = false;
            r.detail += "; runtime " + detail::fmt(r.runtime_s) + " s over the limit";
        }
        return r;
    }
    throw std::invalid_argument("unknown check \"" + name + "\"");
}

inline std::vector<CheckResult> run_verification(const VerifyOptions& opt = {}) {
    std::vector<CheckResult> out;
    const auto names = opt.only.empty() ? check_names() : opt.only;
    for (const auto& n : names) out.push_back(run_check(n, opt));
    return out;
}

/// Report with keys in fixed order.
inline nlohmann::ordered_json verification_report(const std::vector<CheckResult>& results, double total_runtime_s) {
    nlohmann::ordered_json j;
    bool all = true;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        nlohmann::ordered_json c;
        c["name"] = r.name;
        c["passed"] = r.passed;
        c["residual"] = r.residual;
        c["tolerance"] = r.tolerance;
        c["runtime_s"] = r.runtime_s;
        c["runtime_limit_s"] = r.runtime_limit_s;
        c["detail"] = r.detail;
        j["checks"].push_back(std::move(c));
    }
    j["all_passed"] = all;
    j["total_runtime_s"] = total_runtime_s;
    return j;
}

}  // namespace ftomo
