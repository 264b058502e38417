#pragma once

// Reduced density matrices and linear entropy of two-mode states, plus the
// closed-form series for f-coherent and cat states.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ftomo/deformation.hpp"
#include "ftomo/error.hpp"
#include "ftomo/special_functions.hpp"
#include "ftomo/states.hpp"

namespace ftomo {

/// Mode-1 reduced density matrix.
class ReducedDensity {
public:
    explicit ReducedDensity(Eigen::MatrixXcd rho) : rho_(std::move(rho)) {
        if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
            throw std::invalid_argument("ReducedDensity: matrix must be square and non-empty");
        }
        if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
            throw std::invalid_argument("ReducedDensity: matrix is not Hermitian");
        }
        const double tr = rho_.trace().real();
        if (std::abs(tr - 1.0) > 1e-9) {
            throw std::invalid_argument("ReducedDensity: trace " + std::to_string(tr) + " is not 1");
        }
    }

    const Eigen::MatrixXcd& matrix() const { return rho_; }
    Eigen::Index dim() const { return rho_.rows(); }

    double min_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    }

    bool positive_semidefinite() const { return min_eigenvalue() >= -1e-10; }

private:
    Eigen::MatrixXcd rho_;
};

/// (rho_1)_{n,p} = sum_k C_{n,k} C*_{p,k}.
inline ReducedDensity reduce_mode2(const TwoModeAmplitudes& state) {
    Eigen::MatrixXcd c(state.rows(), state.cols());
    for (std::size_t i = 0; i < state.rows(); ++i)
        for (std::size_t j = 0; j < state.cols(); ++j) c(i, j) = state(i, j);
    Eigen::MatrixXcd rho = c * c.adjoint();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return ReducedDensity(std::move(rho));
}

/// S = 1 - Tr rho^2 = 1 - sum |rho_{n,p}|^2.
inline double linear_entropy(const ReducedDensity& rho) { return 1.0 - rho.matrix().cwiseAbs2().sum(); }

namespace detail {

// ln B_{n,k} = n ln|a1| + k ln|a2| - (ln n! + ln k!)/2 - ln f(n+k)!
// on an (m+1) x (m+1) grid.
inline Eigen::MatrixXd log_series_magnitudes(double abs1, double abs2, const std::vector<double>& log_ff,
                                             std::size_t m) {
    const double l1 = abs1 > 0.0 ? std::log(abs1) : -std::numeric_limits<double>::infinity();
    const double l2 = abs2 > 0.0 ? std::log(abs2) : -std::numeric_limits<double>::infinity();
    Eigen::MatrixXd out(m + 1, m + 1);
    for (std::size_t n = 0; n <= m; ++n)
        for (std::size_t k = 0; k <= m; ++k)
            out(n, k) = n_log(n, l1) + n_log(k, l2) - 0.5 * (log_factorial(n) + log_factorial(k)) - log_ff[n + k];
    return out;
}

inline constexpr std::size_t kSeriesStart = 16;

// Purity sum_{n,p} (sum_k D_nk D_pk)^2 / (sum D^2)^2 for D = weight .* B,
// growing the square index range until the mass in the outermost row and
// column is below eps of the total. Returns the purity and the unweighted
// (sum D^2) / (sum B^2) ratio for degeneracy checks.
template <class Weight>
std::pair<double, double> series_purity(double abs1, double abs2, const DeformationSpec& spec, double eps,
                                        Weight&& weight) {
    check_eps(eps);
    for (std::size_t m = kSeriesStart;; m *= 2) {
        if (m > kTwoModeCap) {
            throw TailNotConverged("linear-entropy series did not converge with indices up to " +
                                   std::to_string(kTwoModeCap));
        }
        const auto log_ff = log_f_factorials(spec, 2 * m);
        Eigen::MatrixXd lb = log_series_magnitudes(abs1, abs2, log_ff, m);
        const double top = lb.maxCoeff();
        Eigen::MatrixXd b = (lb.array() - top).exp().matrix();
        Eigen::MatrixXd d(b.rows(), b.cols());
        for (Eigen::Index n = 0; n < b.rows(); ++n)
            for (Eigen::Index k = 0; k < b.cols(); ++k)
                d(n, k) = weight(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) * b(n, k);
        const double total_b = b.squaredNorm();
        const double edge = b.row(static_cast<Eigen::Index>(m)).squaredNorm() +
                            b.col(static_cast<Eigen::Index>(m)).squaredNorm();
        if (edge >= 1e-3 * eps * total_b) continue;
        const double total = d.squaredNorm();
        if (total == 0.0) return {1.0, 0.0};
        const Eigen::MatrixXd gram = d * d.transpose();
        return {gram.squaredNorm() / (total * total), total / total_b};
    }
}

}  // namespace detail

/// Linear entropy of the two-mode f-coherent state with total-number
/// deformation from the series over four deformed factorials, evaluated in
/// Gram form: Tr rho_1^2 = sum_{n,p} (sum_k B_nk B_pk)^2 / (sum B^2)^2 with
/// B_nk = |a1|^n |a2|^k / (sqrt(n! k!) f(n+k)!). Phases cancel in |rho|^2.
inline double linear_entropy_series(complex alpha1, complex alpha2, const DeformationSpec& spec,
                                    double eps = kDefaultTruncationEps) {
    const auto [purity, ratio] =
        detail::series_purity(std::abs(alpha1), std::abs(alpha2), spec, eps, [](std::size_t, std::size_t) { return 1.0; });
    (void)ratio;
    return 1.0 - purity;
}

/// Linear entropy of the even (sign = +1) or odd (sign = -1) cat state: the
/// same series with weights 1 + sign (-1)^{n+k}.
inline double cat_linear_entropy(complex alpha, const DeformationSpec& spec, int sign,
                                 double eps = kDefaultTruncationEps) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("cat_linear_entropy: sign must be +1 or -1");
    const double a = std::abs(alpha);
    const auto [purity, ratio] = detail::series_purity(a, a, spec, eps, [sign](std::size_t n, std::size_t k) {
        return 1.0 + sign * (((n + k) % 2 == 0) ? 1.0 : -1.0);
    });
    // ratio = N^{-2} / (normalization of the base state), up to a factor 4
    if (ratio / 4.0 < kDegenerateNormSquared) {
        throw DegenerateSuperposition("cat superposition has (numerically) zero norm");
    }
    return 1.0 - purity;
}

/// Even-cat entropy in the undeformed limit,
/// 1 - 0.5 (1 + e^{-4|a|^2})^{-2} (1 + 6 e^{-4|a|^2} + e^{-8|a|^2}).
inline double cat_entropy_identity_limit(complex alpha) {
    const double e = std::exp(-4.0 * std::norm(alpha));
    return 1.0 - 0.5 * (1.0 + 6.0 * e + e * e) / ((1.0 + e) * (1.0 + e));
}

/// lambda -> 0 limit of the Kerr two-mode entropy,
/// 1 - (1 + 2x1 + 2x2 + x1^2 + x2^2) / (1 + x1 + x2)^2 with x = |a|^2.
inline double linear_entropy_kerr_zero_limit(complex alpha1, complex alpha2) {
    const double x1 = std::norm(alpha1);
    const double x2 = std::norm(alpha2);
    const double n = 1.0 + x1 + x2;
    return 1.0 - (1.0 + 2.0 * x1 + 2.0 * x2 + x1 * x1 + x2 * x2) / (n * n);
}

}  // namespace ftomo
