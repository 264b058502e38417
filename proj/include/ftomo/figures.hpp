#pragma once

// Curve families of the figures and the parameter sweeps behind the CLI,
// as plain tables ready for CSV output.

#include <cstddef>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftomo/csv.hpp"
#include "ftomo/deformation.hpp"
#include "ftomo/entanglement.hpp"
#include "ftomo/entropic.hpp"
#include "ftomo/parallel.hpp"
#include "ftomo/states.hpp"
#include "ftomo/uncertainty.hpp"

namespace ftomo {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

inline void write_csv(std::ostream& os, const Table& table) {
    csv::write_header(os, table.columns);
    for (const auto& r : table.rows) csv::write_row(os, r);
}

inline std::string to_csv(const Table& table) {
    std::ostringstream os;
    write_csv(os, table);
    return os.str();
}

struct FigureOptions {
    double eps = kDefaultTruncationEps;
    std::size_t threads = 1;
};

namespace detail {

// Evaluates row(i) for i < count into a table, in index order.
template <class Row>
Table tabulate(std::vector<std::string> columns, std::size_t count, std::size_t threads, Row&& row) {
    Table t{std::move(columns), std::vector<std::vector<double>>(count)};
    parallel_for(count, threads, [&](std::size_t i) { t.rows[i] = row(i); });
    return t;
}

inline constexpr std::size_t kLambdaSteps = 250;  // lambda = 0.02 .. 5
inline double lambda_at(std::size_t i) { return 0.02 * static_cast<double>(i + 1); }

}  // namespace detail

/// Fig. 1: Shannon information I(n, x) of the Fock-state photon-number
/// distribution for n = 0, 1, 2 and x = 0.02 .. 6, block size 2.
inline Table figure1(const FigureOptions& opt = {}) {
    constexpr std::size_t kPoints = 300;
    return detail::tabulate({"n", "x", "s", "information"}, 3 * kPoints, opt.threads, [](std::size_t i) {
        const std::size_t n = i / kPoints;
        const double x = 0.02 * static_cast<double>(i % kPoints + 1);
        return std::vector<double>{static_cast<double>(n), x, 2.0, fock_information(n, x, 2)};
    });
}

/// Fig. 2: Kerr two-mode entropy versus lambda for (|a1|, |a2|) = (2, 1),
/// (1, 1), (0.5, 1). The lambda = 0 row of each curve is the closed-form limit.
inline Table figure2(const FigureOptions& opt = {}) {
    const double pairs[3][2] = {{2.0, 1.0}, {1.0, 1.0}, {0.5, 1.0}};
    constexpr std::size_t per = detail::kLambdaSteps + 1;
    return detail::tabulate({"lambda", "abs_alpha1", "abs_alpha2", "entropy"}, 3 * per, opt.threads,
                            [&](std::size_t i) {
                                const double a1 = pairs[i / per][0];
                                const double a2 = pairs[i / per][1];
                                const std::size_t j = i % per;
                                if (j == 0) return std::vector<double>{0.0, a1, a2, linear_entropy_kerr_zero_limit(a1, a2)};
                                const double lam = detail::lambda_at(j - 1);
                                return std::vector<double>{lam, a1, a2,
                                                           linear_entropy_series(a1, a2, DeformationSpec::kerr(lam), opt.eps)};
                            });
}

/// Fig. 3: Kerr two-mode entropy versus |a1| = 0 .. 4 (step 0.02) at |a2| = 1
/// for lambda = 0.5, 1, 2.
inline Table figure3(const FigureOptions& opt = {}) {
    const double lambdas[3] = {0.5, 1.0, 2.0};
    constexpr std::size_t per = 201;
    return detail::tabulate({"lambda", "abs_alpha1", "abs_alpha2", "entropy"}, 3 * per, opt.threads,
                            [&](std::size_t i) {
                                const double lam = lambdas[i / per];
                                const double a1 = 0.02 * static_cast<double>(i % per);
                                return std::vector<double>{
                                    lam, a1, 1.0, linear_entropy_series(a1, 1.0, DeformationSpec::kerr(lam), opt.eps)};
                            });
}

/// Figs. 4 (sign = +1) and 5 (sign = -1): cat-state entropy versus lambda for
/// |a| = 0.5, 1, 2. The lambda = 0 rows are the limits 0 (even) and 1/2 (odd).
inline Table figure_cat(int sign, const FigureOptions& opt = {}) {
    const double alphas[3] = {0.5, 1.0, 2.0};
    constexpr std::size_t per = detail::kLambdaSteps + 1;
    return detail::tabulate({"lambda", "abs_alpha", "sign", "entropy"}, 3 * per, opt.threads, [&](std::size_t i) {
        const double a = alphas[i / per];
        const std::size_t j = i % per;
        if (j == 0) return std::vector<double>{0.0, a, double(sign), sign > 0 ? 0.0 : 0.5};
        const double lam = detail::lambda_at(j - 1);
        return std::vector<double>{lam, a, double(sign), cat_linear_entropy(a, DeformationSpec::kerr(lam), sign, opt.eps)};
    });
}

inline Table figure(int id, const FigureOptions& opt = {}) {
    switch (id) {
        case 1: return figure1(opt);
        case 2: return figure2(opt);
        case 3: return figure3(opt);
        case 4: return figure_cat(+1, opt);
        case 5: return figure_cat(-1, opt);
        default: throw std::invalid_argument("figure id must be 1..5");
    }
}

/// Laguerre-inequality sweep over the Cartesian product of n, x and s.
inline Table laguerre_sweep(const std::vector<std::size_t>& ns, const std::vector<double>& xs,
                            const std::vector<std::size_t>& ss, std::size_t threads = 1) {
    const std::size_t count = ns.size() * xs.size() * ss.size();
    return detail::tabulate({"n", "x", "s", "lhs", "holds"}, count, threads, [&](std::size_t i) {
        const std::size_t n = ns[i / (xs.size() * ss.size())];
        const double x = xs[(i / ss.size()) % xs.size()];
        const std::size_t s = ss[i % ss.size()];
        const auto r = verify_laguerre_inequality(n, x, s);
        return std::vector<double>{double(n), x, double(s), r.lhs_value, r.holds ? 1.0 : 0.0};
    });
}

/// Uncertainty rows for one state across a list of deformations.
/// sr_rhs_small_lambda is the q-oscillator expansion at the spec's lambda,
/// 1/4 for identity and NaN for families the expansion does not describe.
struct UncertaintyRow {
    double lambda;
    std::string family;
    std::string state_digest;
    QuadratureStats stats;
    double sr_rhs_small_lambda;
};

inline std::vector<UncertaintyRow> uncertainty_sweep(const FockAmplitudes& state,
                                                     const std::vector<DeformationSpec>& specs,
                                                     std::size_t threads = 1) {
    std::vector<UncertaintyRow> rows(specs.size());
    const std::string digest = state_digest(state);
    parallel_for(specs.size(), threads, [&](std::size_t i) {
        const auto& spec = specs[i];
        double small = std::numeric_limits<double>::quiet_NaN();
        if (spec.family_name() == "identity") small = 0.25;
        if (spec.family_name() == "qosc") small = qosc_small_lambda_rhs(state, spec.parameter());
        rows[i] = {spec.parameter(), spec.family_name(), digest, deformed_quadrature_stats(state, spec), small};
    });
    return rows;
}

inline void write_uncertainty_csv(std::ostream& os, const std::vector<UncertaintyRow>& rows) {
    csv::write_header(os, {"lambda", "family", "state_digest", "sigma_qq", "sigma_pp", "sigma_qp", "sr_lhs",
                           "sr_rhs_exact", "sr_rhs_small_lambda"});
    for (const auto& r : rows) {
        os << csv::format_double(r.lambda) << ',' << r.family << ',' << r.state_digest;
        for (double v : {r.stats.sigma_qq, r.stats.sigma_pp, r.stats.sigma_qp, r.stats.sr_lhs, r.stats.sr_rhs,
                         r.sr_rhs_small_lambda}) {
            os << ',' << csv::format_double(v);
        }
        os << '\n';
    }
}

}  // namespace ftomo
