#pragma once

// Special-function kernels shared by every other module: normalized
// oscillator eigenfunctions, associated Laguerre polynomials, log-factorials
// and the confluent hypergeometric limit function 0F1.
//
// Everything here is pure and reentrant.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "ftomo/error.hpp"

namespace ftomo {

/// ln Gamma(x) for x > 0.
inline double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("log_gamma: argument must be finite and > 0");
    }
    return boost::math::lgamma(x);
}

namespace detail {

inline constexpr std::size_t kLogFactorialTableSize = 1025;

inline const std::array<double, kLogFactorialTableSize>& log_factorial_table() {
    static const auto table = [] {
        std::array<double, kLogFactorialTableSize> t{};
        t[0] = 0.0;
        for (std::size_t n = 1; n < t.size(); ++n) {
            t[n] = boost::math::lgamma(static_cast<double>(n) + 1.0);
        }
        t[1] = 0.0;
        return t;
    }();
    return table;
}

// n * log(x) with the convention 0 * log(0) = 0 (so that 0^0 = 1).
inline double n_log(std::size_t n, double log_x) {
    return n == 0 ? 0.0 : static_cast<double>(n) * log_x;
}

}  // namespace detail

/// ln(n!).
inline double log_factorial(std::size_t n) {
    if (n < detail::kLogFactorialTableSize) {
        return detail::log_factorial_table()[n];
    }
    return boost::math::lgamma(static_cast<double>(n) + 1.0);
}

/// Normalized Hermite function psi_n(X) = pi^{-1/4} 2^{-n/2} (n!)^{-1/2} e^{-X^2/2} H_n(X),
/// evaluated by the normalized three-term recurrence (never forms H_n).
inline double oscillator_eigenfunction(std::size_t n, double x) {
    double prev = 0.0;
    double cur = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
    for (std::size_t k = 0; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double next = std::sqrt(2.0 / (kk + 1.0)) * x * cur - std::sqrt(kk / (kk + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// All of psi_0(X) .. psi_nmax(X) in one recurrence sweep.
inline std::vector<double> oscillator_eigenfunctions(std::size_t nmax, double x) {
    std::vector<double> out(nmax + 1);
    out[0] = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
    if (nmax >= 1) {
        out[1] = std::sqrt(2.0) * x * out[0];
    }
    for (std::size_t k = 1; k < nmax; ++k) {
        const double kk = static_cast<double>(k);
        out[k + 1] = std::sqrt(2.0 / (kk + 1.0)) * x * out[k] - std::sqrt(kk / (kk + 1.0)) * out[k - 1];
    }
    return out;
}

/// Associated Laguerre polynomial L_n^{(a)}(x) for integer a >= -n.
///
/// For a >= 0 the forward recurrence
///   (k+1) L_{k+1} = (2k+1+a-x) L_k - (k+a) L_{k-1}
/// is used. Negative a is mapped onto a positive upper index with
///   L_n^{(-k)}(x) = (-x)^k (n-k)!/n! L_{n-k}^{(k)}(x),
/// which avoids the catastrophic cancellation the recurrence suffers there.
inline double laguerre_assoc(std::size_t n, long a, double x) {
    if (a < -static_cast<long>(n)) {
        throw std::domain_error("laguerre_assoc: upper index must satisfy a >= -n");
    }
    if (!std::isfinite(x)) {
        throw std::domain_error("laguerre_assoc: x must be finite");
    }
    if (a < 0) {
        const auto k = static_cast<std::size_t>(-a);
        const double inner = laguerre_assoc(n - k, static_cast<long>(k), x);
        if (x == 0.0) {
            return 0.0;  // k >= 1 here
        }
        // sign of (-x)^k
        const double sign = (x > 0.0 && k % 2 == 1) ? -1.0 : 1.0;
        const double mag = std::exp(static_cast<double>(k) * std::log(std::abs(x)) + log_factorial(n - k) -
                                    log_factorial(n));
        return sign * mag * inner;
    }
    const double ad = static_cast<double>(a);
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = 1.0 + ad - x;
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double next = ((2.0 * kk + 1.0 + ad - x) * cur - (kk + ad) * prev) / (kk + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// ln 0F1(a; z) with 0F1(a; z) = sum_n z^n Gamma(a) / (n! Gamma(a+n)).
/// Terms are accumulated in log space so large z cannot overflow.
inline double log_hyp0f1(double a, double z) {
    if (!(a > 0.0)) {
        throw std::domain_error("hyp0f1: a must be > 0");
    }
    if (!(z >= 0.0) || !std::isfinite(z)) {
        throw std::domain_error("hyp0f1: z must be finite and >= 0");
    }
    if (z == 0.0) {
        return 0.0;
    }
    constexpr std::size_t kMaxTerms = 10000;
    const double log_z = std::log(z);
    double log_term = 0.0;  // n = 0
    double log_sum = 0.0;
    for (std::size_t n = 0; n + 1 < kMaxTerms; ++n) {
        const double nn = static_cast<double>(n);
        log_term += log_z - std::log(nn + 1.0) - std::log(a + nn);
        // log(exp(log_sum) + exp(log_term)), log_sum >= log_term once terms decay
        const double hi = std::max(log_sum, log_term);
        const double lo = std::min(log_sum, log_term);
        log_sum = hi + std::log1p(std::exp(lo - hi));
        const bool decreasing = z < (nn + 1.0) * (a + nn);
        if (decreasing && log_term - log_sum < std::log(1e-16)) {
            return log_sum;
        }
    }
    throw NonConvergence("hyp0f1: series did not converge within 10^4 terms");
}

inline double hyp0f1(double a, double z) {
    return std::exp(log_hyp0f1(a, z));
}

}  // namespace ftomo
