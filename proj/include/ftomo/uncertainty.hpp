#pragma once

// Deformed quadratures Q = (A + A^dag)/sqrt(2), P = (A - A^dag)/(i sqrt(2))
// with A = a f(n), their covariance matrix and the Schroedinger-Robertson
// bound, plus the q-oscillator small-lambda expansion and the tomographic
// moment formula.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ftomo/deformation.hpp"
#include "ftomo/states.hpp"
#include "ftomo/tomography.hpp"

namespace ftomo {

struct QuadratureStats {
    double mean_q = 0.0;
    double mean_p = 0.0;
    double sigma_qq = 0.0;
    double sigma_pp = 0.0;
    double sigma_qp = 0.0;
    complex commutator_mean;  // <[A, A^dag]>
    double sr_lhs = 0.0;      // sigma_qq sigma_pp - sigma_qp^2
    double sr_rhs = 0.0;      // |<[A, A^dag]>|^2 / 4
    bool truncation_warning = false;  // |c_N| > 1e-8 at the top retained level

    double sr_residual() const { return sr_lhs - sr_rhs; }
};

inline constexpr std::size_t kGuardLevels = 4;

/// Moments of the deformed quadratures in the state. Q psi and P psi are
/// formed in the state space plus 4 guard levels, so the second moments are
/// exact for the retained amplitudes.
inline QuadratureStats deformed_quadrature_stats(const FockAmplitudes& state, const DeformationSpec& spec) {
    const std::size_t n_state = state.size();
    const std::size_t dim = n_state + kGuardLevels;
    // A|n> = f(n) sqrt(n) |n-1>; a[n] is that matrix element for n >= 1
    std::vector<double> a(dim, 0.0);
    for (std::size_t n = 1; n < dim; ++n) a[n] = f_value(spec, n) * std::sqrt(static_cast<double>(n));

    std::vector<complex> a_psi(dim), ad_psi(dim);
    for (std::size_t n = 0; n < n_state; ++n) {
        if (n >= 1) a_psi[n - 1] += a[n] * state[n];
        ad_psi[n + 1] += a[n + 1] * state[n];
    }
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const complex i_unit{0.0, 1.0};
    std::vector<complex> q(dim), p(dim);
    for (std::size_t n = 0; n < dim; ++n) {
        q[n] = (a_psi[n] + ad_psi[n]) * inv_sqrt2;
        p[n] = (a_psi[n] - ad_psi[n]) * inv_sqrt2 / i_unit;
    }

    QuadratureStats s;
    complex mq{}, mp{}, qq{}, pp{}, qp{};
    for (std::size_t n = 0; n < dim; ++n) {
        const complex c = state.at(n);
        mq += std::conj(c) * q[n];
        mp += std::conj(c) * p[n];
        qq += std::conj(q[n]) * q[n];
        pp += std::conj(p[n]) * p[n];
        qp += std::conj(q[n]) * p[n];
    }
    s.mean_q = mq.real();
    s.mean_p = mp.real();
    s.sigma_qq = qq.real() - s.mean_q * s.mean_q;
    s.sigma_pp = pp.real() - s.mean_p * s.mean_p;
    // symmetrized covariance (QP + PQ)/2 - <Q><P>
    s.sigma_qp = qp.real() - s.mean_q * s.mean_p;

    double comm = 0.0;
    for (std::size_t n = 0; n < n_state; ++n) comm += std::norm(state[n]) * commutator_diag(spec, n);
    s.commutator_mean = comm;
    s.sr_lhs = s.sigma_qq * s.sigma_pp - s.sigma_qp * s.sigma_qp;
    s.sr_rhs = 0.25 * std::norm(s.commutator_mean);
    s.truncation_warning = std::abs(state[n_state - 1]) > 1e-8;
    return s;
}

/// <n^2 + n + 1/3> from the amplitudes.
inline double photon_moment_combination(const FockAmplitudes& state) {
    return photon_moment(state, 2) + photon_moment(state, 1) + 1.0 / 3.0;
}

/// Small-lambda form of the q-oscillator bound, (1 + lambda^2 <n^2 + n + 1/3>)/4.
inline double qosc_small_lambda_rhs(const FockAmplitudes& state, double lambda) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("qosc_small_lambda_rhs: lambda must be >= 0");
    return 0.25 * (1.0 + lambda * lambda * photon_moment_combination(state));
}

/// hbar_eff^2 / hbar^2 = 1 + lambda^2 / 3.
inline double effective_planck(double lambda) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("effective_planck: lambda must be >= 0");
    return 1.0 + lambda * lambda / 3.0;
}

enum class MomentConstant {
    corrected,  // S4/6 - 1/6
    printed,    // S4/6 + 1/12
};

/// <n^2 + n + 1/3> from fourth quadrature moments at theta = 0, pi/4, pi/2,
/// 3 pi/4. Summing the four phases cancels the e^{+-2i theta} and
/// e^{+-4i theta} terms of X_theta^4, leaving S4 = 6 <n^2 + n> + 3.
inline double moment_from_optical_tomogram(const FockAmplitudes& state,
                                           MomentConstant constant = MomentConstant::corrected) {
    constexpr double pi = std::numbers::pi;
    double s4 = 0.0;
    for (double theta : {0.0, pi / 4.0, pi / 2.0, 3.0 * pi / 4.0}) s4 += quadrature_moment(state, theta, 4);
    return s4 / 6.0 + (constant == MomentConstant::corrected ? -1.0 / 6.0 : 1.0 / 12.0);
}

}  // namespace ftomo
