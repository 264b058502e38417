#pragma once

// Truncated Fock-space states: one-mode f-coherent states, two-mode
// f-coherent states (compatible pair or total-photon-number deformation),
// even/odd two-mode cat superpositions, and the classical f-oscillator
// trajectory.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ftomo/deformation.hpp"
#include "ftomo/error.hpp"
#include "ftomo/special_functions.hpp"

namespace ftomo {

using complex = std::complex<double>;

inline constexpr double kDefaultTruncationEps = 1e-12;
inline constexpr std::size_t kOneModeCap = 512;
inline constexpr std::size_t kTwoModeCap = 256;
inline constexpr double kNormTolerance = 1e-10;

/// Pure one-mode state sum_n c_n |n>, n = 0..N.
class FockAmplitudes {
public:
    FockAmplitudes() : coeffs_{complex{1.0, 0.0}} {}

    /// Takes amplitudes that are already normalized to within 1e-10.
    explicit FockAmplitudes(std::vector<complex> coeffs, double trunc_tail = 0.0)
        : coeffs_(std::move(coeffs)), trunc_tail_(trunc_tail) {
        if (coeffs_.empty()) {
            throw std::invalid_argument("FockAmplitudes: empty coefficient list");
        }
        const double n2 = norm_squared();
        if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
            throw std::invalid_argument("FockAmplitudes: coefficients not normalized (sum |c|^2 = " +
                                        std::to_string(n2) + ")");
        }
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    static FockAmplitudes normalized(std::vector<complex> coeffs, double trunc_tail = 0.0) {
        double n2 = 0.0;
        for (const auto& c : coeffs) n2 += std::norm(c);
        if (!(n2 > 0.0) || !std::isfinite(n2)) {
            throw std::invalid_argument("FockAmplitudes: cannot normalize a zero or non-finite vector");
        }
        const double s = 1.0 / std::sqrt(n2);
        for (auto& c : coeffs) c *= s;
        return FockAmplitudes(std::move(coeffs), trunc_tail);
    }

    std::size_t size() const { return coeffs_.size(); }
    /// Highest retained Fock level N.
    std::size_t max_level() const { return coeffs_.size() - 1; }
    const std::vector<complex>& coeffs() const { return coeffs_; }
    const complex& operator[](std::size_t n) const { return coeffs_[n]; }
    /// Amplitude of |n>, zero beyond the truncation.
    complex at(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : complex{}; }
    double trunc_tail() const { return trunc_tail_; }

    double norm_squared() const {
        double s = 0.0;
        for (const auto& c : coeffs_) s += std::norm(c);
        return s;
    }

private:
    std::vector<complex> coeffs_;
    double trunc_tail_ = 0.0;
};

/// Pure two-mode state sum C_{n1,n2} |n1 n2>, stored row-major (n1 major).
class TwoModeAmplitudes {
public:
    TwoModeAmplitudes(std::size_t rows, std::size_t cols, std::vector<complex> coeffs, double trunc_tail = 0.0)
        : rows_(rows), cols_(cols), coeffs_(std::move(coeffs)), trunc_tail_(trunc_tail) {
        if (rows_ == 0 || cols_ == 0 || coeffs_.size() != rows_ * cols_) {
            throw std::invalid_argument("TwoModeAmplitudes: shape does not match coefficient count");
        }
        const double n2 = norm_squared();
        if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
            throw std::invalid_argument("TwoModeAmplitudes: coefficients not normalized (sum |C|^2 = " +
                                        std::to_string(n2) + ")");
        }
    }

    static TwoModeAmplitudes normalized(std::size_t rows, std::size_t cols, std::vector<complex> coeffs,
                                        double trunc_tail = 0.0) {
        double n2 = 0.0;
        for (const auto& c : coeffs) n2 += std::norm(c);
        if (!(n2 > 0.0) || !std::isfinite(n2)) {
            throw std::invalid_argument("TwoModeAmplitudes: cannot normalize a zero or non-finite matrix");
        }
        const double s = 1.0 / std::sqrt(n2);
        for (auto& c : coeffs) c *= s;
        return TwoModeAmplitudes(rows, cols, std::move(coeffs), trunc_tail);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<complex>& coeffs() const { return coeffs_; }
    const complex& operator()(std::size_t n1, std::size_t n2) const { return coeffs_[n1 * cols_ + n2]; }
    complex at(std::size_t n1, std::size_t n2) const {
        return (n1 < rows_ && n2 < cols_) ? coeffs_[n1 * cols_ + n2] : complex{};
    }
    double trunc_tail() const { return trunc_tail_; }

    double norm_squared() const {
        double s = 0.0;
        for (const auto& c : coeffs_) s += std::norm(c);
        return s;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<complex> coeffs_;
    double trunc_tail_ = 0.0;
};

namespace detail {

inline void check_eps(double eps) {
    if (!(eps > 0.0) || eps > 1e-6) {
        throw std::invalid_argument("truncation eps must lie in (0, 1e-6]");
    }
}

inline double log_abs(complex z) {
    const double a = std::abs(z);
    return a == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(a);
}

inline double log_add(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// Geometric bound on sum_{k>n} w_k given w_n and w_{n+1} with decreasing
// ratios, in log space. Returns +inf when the ratio is not below one.
inline double log_geometric_tail(double log_w_n, double log_w_next) {
    constexpr double ninf = -std::numeric_limits<double>::infinity();
    if (log_w_next == ninf) return ninf;
    const double log_r = log_w_next - log_w_n;
    if (!(log_r < 0.0)) return std::numeric_limits<double>::infinity();
    return log_w_next - std::log(-std::expm1(log_r));
}

struct TruncatedWeights {
    std::vector<double> log_w;  // log |c_n|^2, unnormalized, n = 0..N
    double log_total;
    double tail;  // estimated discarded mass relative to the total
};

// Grows n = 0, 1, ... (calling log_weight sequentially) until the geometric
// tail estimate drops below eps. log_weight(n) is called for n = 0..N+1.
template <class LogWeight>
TruncatedWeights truncate_adaptive(LogWeight&& log_weight, double eps, std::size_t cap) {
    TruncatedWeights out;
    out.log_w.push_back(log_weight(std::size_t{0}));
    out.log_total = out.log_w[0];
    double next = log_weight(std::size_t{1});
    for (std::size_t n = 0;; ++n) {
        const double log_tail = log_geometric_tail(out.log_w[n], next);
        if (log_tail - out.log_total < std::log(eps)) {
            out.tail = std::exp(log_tail - out.log_total);
            return out;
        }
        if (n + 1 > cap) {
            throw TruncationOverflow("adaptive truncation reached the cap of " + std::to_string(cap) +
                                     " levels with tail mass above eps");
        }
        out.log_w.push_back(next);
        out.log_total = log_add(out.log_total, next);
        next = log_weight(n + 2);
    }
}

// Picks the smallest cutoff along one axis whose discarded marginal mass is
// below eps * total, given marginal masses m_0..m_M on a grid and an
// estimate of the mass beyond the grid.
inline std::pair<std::size_t, double> choose_cutoff(const std::vector<double>& marginal, double beyond,
                                                    double total, double eps) {
    double tail = beyond;
    std::size_t cut = marginal.size() - 1;
    // walk down from the top while the accumulated tail stays small
    while (cut > 0 && tail + marginal[cut] < eps * total) {
        tail += marginal[cut];
        --cut;
    }
    return {cut, tail / total};
}

inline double beyond_estimate(const std::vector<double>& marginal) {
    const std::size_t m = marginal.size() - 1;
    if (marginal[m] == 0.0) return 0.0;
    const double r = marginal[m] / marginal[m - 1];
    if (!(r < 1.0)) return std::numeric_limits<double>::infinity();
    return marginal[m] * r / (1.0 - r);
}

// Shared back end of the two-mode constructions: fill(M) returns the
// (M+1)x(M+1) row-major matrix of log|C|; phases are n1*phi1 + n2*phi2.
template <class Fill>
TwoModeAmplitudes finalize_two_mode(Fill&& fill, double phi1, double phi2, double eps) {
    for (std::size_t m = 16;; m = std::min(2 * m, kTwoModeCap)) {
        const std::vector<double> log_c = fill(m);
        const std::size_t dim = m + 1;
        const double log_max = *std::max_element(log_c.begin(), log_c.end());
        std::vector<double> rows(dim, 0.0), cols(dim, 0.0);
        double total = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                const double w = std::exp(2.0 * (log_c[i * dim + j] - log_max));
                rows[i] += w;
                cols[j] += w;
                total += w;
            }
        }
        const double beyond_rows = beyond_estimate(rows);
        const double beyond_cols = beyond_estimate(cols);
        const bool grid_ok = beyond_rows < 1e-3 * eps * total && beyond_cols < 1e-3 * eps * total;
        if (!grid_ok) {
            if (m == kTwoModeCap) {
                throw TruncationOverflow("two-mode truncation reached the cap of " + std::to_string(kTwoModeCap) +
                                         " levels per mode with tail mass above eps");
            }
            continue;
        }
        const auto [cut1, tail1] = choose_cutoff(rows, beyond_rows, total, eps);
        const auto [cut2, tail2] = choose_cutoff(cols, beyond_cols, total, eps);
        std::vector<complex> coeffs;
        coeffs.reserve((cut1 + 1) * (cut2 + 1));
        for (std::size_t i = 0; i <= cut1; ++i) {
            for (std::size_t j = 0; j <= cut2; ++j) {
                const double mag = std::exp(log_c[i * dim + j] - log_max);
                coeffs.push_back(std::polar(mag, static_cast<double>(i) * phi1 + static_cast<double>(j) * phi2));
            }
        }
        return TwoModeAmplitudes::normalized(cut1 + 1, cut2 + 1, std::move(coeffs), tail1 + tail2);
    }
}

}  // namespace detail

/// Fock state |n>.
inline FockAmplitudes fock_state(std::size_t n) {
    std::vector<complex> c(n + 1);
    c[n] = 1.0;
    return FockAmplitudes(std::move(c));
}

/// Nonlinear coherent state |alpha, f> with c_n proportional to
/// alpha^n / (sqrt(n!) f(n)!), truncated adaptively at tail mass < eps.
inline FockAmplitudes f_coherent(complex alpha, const DeformationSpec& spec, double eps = kDefaultTruncationEps) {
    detail::check_eps(eps);
    const double log_a = detail::log_abs(alpha);
    double log_ff = 0.0;  // running ln f(n)!
    auto log_weight = [&](std::size_t n) {
        if (n > 0) log_ff += log_f_value(spec, n);
        return 2.0 * (detail::n_log(n, log_a) - 0.5 * log_factorial(n) - log_ff);
    };
    const auto w = detail::truncate_adaptive(log_weight, eps, kOneModeCap);
    const double phi = std::arg(alpha);
    std::vector<complex> coeffs(w.log_w.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        coeffs[n] = std::polar(std::exp(0.5 * (w.log_w[n] - w.log_total)), static_cast<double>(n) * phi);
    }
    return FockAmplitudes::normalized(std::move(coeffs), w.tail);
}

/// Glauber coherent state |alpha>.
inline FockAmplitudes glauber(complex alpha, double eps = kDefaultTruncationEps) {
    return f_coherent(alpha, DeformationSpec::identity(), eps);
}

/// A deformation of two photon numbers, f(n1, n2) > 0.
using TwoIndexDeformation = std::function<double(std::size_t, std::size_t)>;

/// f(n1 + n2) for a one-variable deformation.
inline TwoIndexDeformation total_number_deformation(const DeformationSpec& spec) {
    return [spec](std::size_t n1, std::size_t n2) { return f_value(spec, n1 + n2); };
}

/// f(n_mode) acting on a single mode (mode = 1 or 2).
inline TwoIndexDeformation single_mode_deformation(const DeformationSpec& spec, int mode) {
    if (mode != 1 && mode != 2) throw std::invalid_argument("mode must be 1 or 2");
    return [spec, mode](std::size_t n1, std::size_t n2) { return f_value(spec, mode == 1 ? n1 : n2); };
}

struct CompatibilityReport {
    bool compatible = true;
    std::optional<std::pair<std::size_t, std::size_t>> first_violation;
    double lhs = 0.0;  // at the first violation
    double rhs = 0.0;
};

/// Checks f1(n1, n2-1) f2(n1, n2) = f1(n1, n2) f2(n1-1, n2) for
/// 1 <= n1, n2 <= n_max (relative tolerance 1e-12), scanning n1-major.
inline CompatibilityReport check_compatibility(const TwoIndexDeformation& f1, const TwoIndexDeformation& f2,
                                               std::size_t n_max) {
    CompatibilityReport report;
    for (std::size_t n1 = 1; n1 <= n_max; ++n1) {
        for (std::size_t n2 = 1; n2 <= n_max; ++n2) {
            const double lhs = f1(n1, n2 - 1) * f2(n1, n2);
            const double rhs = f1(n1, n2) * f2(n1 - 1, n2);
            const double scale = std::max(std::abs(lhs), std::abs(rhs));
            if (std::abs(lhs - rhs) > 1e-12 * scale) {
                report.compatible = false;
                report.first_violation = {n1, n2};
                report.lhs = lhs;
                report.rhs = rhs;
                return report;
            }
        }
    }
    return report;
}

/// Two-mode f-coherent state for a compatible pair (f1, f2), built from
/// C_{0,0} by the recurrences
///   C_{n1,n2} = alpha1 C_{n1-1,n2} / (sqrt(n1) f1(n1,n2))
///   C_{n1,n2} = alpha2 C_{n1,n2-1} / (sqrt(n2) f2(n1,n2)).
/// Each interior entry is reached along both and the two must agree.
inline TwoModeAmplitudes two_mode_f_coherent_general(complex alpha1, complex alpha2, const TwoIndexDeformation& f1,
                                                     const TwoIndexDeformation& f2,
                                                     double eps = kDefaultTruncationEps) {
    detail::check_eps(eps);
    constexpr double ninf = -std::numeric_limits<double>::infinity();
    const double la1 = detail::log_abs(alpha1);
    const double la2 = detail::log_abs(alpha2);
    auto log_f = [](double v, std::size_t n1, std::size_t n2) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw DeformationSingular("two-mode deformation not positive at (" + std::to_string(n1) + "," +
                                      std::to_string(n2) + ")");
        }
        return std::log(v);
    };
    auto fill = [&](std::size_t m) {
        const std::size_t dim = m + 1;
        std::vector<double> lc(dim * dim, ninf);
        lc[0] = 0.0;
        for (std::size_t n1 = 0; n1 < dim; ++n1) {
            for (std::size_t n2 = 0; n2 < dim; ++n2) {
                if (n1 == 0 && n2 == 0) continue;
                double via1 = ninf, via2 = ninf;
                if (n1 > 0) {
                    const double prev = lc[(n1 - 1) * dim + n2];
                    via1 = (prev == ninf || la1 == ninf)
                               ? ninf
                               : prev + la1 - 0.5 * std::log(static_cast<double>(n1)) - log_f(f1(n1, n2), n1, n2);
                }
                if (n2 > 0) {
                    const double prev = lc[n1 * dim + n2 - 1];
                    via2 = (prev == ninf || la2 == ninf)
                               ? ninf
                               : prev + la2 - 0.5 * std::log(static_cast<double>(n2)) - log_f(f2(n1, n2), n1, n2);
                }
                if (n1 > 0 && n2 > 0) {
                    const bool both_zero = via1 == ninf && via2 == ninf;
                    if (!both_zero && !(std::abs(via1 - via2) <= 1e-10 * std::max(1.0, std::abs(via1)))) {
                        throw IncompatibleDeformation("two-mode recurrences disagree at (" + std::to_string(n1) +
                                                      "," + std::to_string(n2) + ")");
                    }
                }
                lc[n1 * dim + n2] = n1 > 0 ? via1 : via2;
            }
        }
        return lc;
    };
    return detail::finalize_two_mode(fill, std::arg(alpha1), std::arg(alpha2), eps);
}

/// Two-mode f-coherent state with deformation of the total photon number:
/// C proportional to alpha1^n1 alpha2^n2 / (sqrt(n1! n2!) f(n1+n2)!).
inline TwoModeAmplitudes two_mode_f_coherent_total(complex alpha1, complex alpha2, const DeformationSpec& spec,
                                                   double eps = kDefaultTruncationEps) {
    detail::check_eps(eps);
    const double la1 = detail::log_abs(alpha1);
    const double la2 = detail::log_abs(alpha2);
    auto fill = [&](std::size_t m) {
        const std::size_t dim = m + 1;
        const auto log_ff = log_f_factorials(spec, 2 * m);
        std::vector<double> lc(dim * dim);
        for (std::size_t n1 = 0; n1 < dim; ++n1) {
            for (std::size_t n2 = 0; n2 < dim; ++n2) {
                lc[n1 * dim + n2] = detail::n_log(n1, la1) + detail::n_log(n2, la2) - 0.5 * log_factorial(n1) -
                                    0.5 * log_factorial(n2) - log_ff[n1 + n2];
            }
        }
        return lc;
    };
    return detail::finalize_two_mode(fill, std::arg(alpha1), std::arg(alpha2), eps);
}

inline constexpr double kDegenerateNormSquared = 1e-14;

/// Even (sign = +1) or odd (sign = -1) superposition
/// N_pm (|alpha alpha, f> pm |-alpha -alpha, f>).
inline TwoModeAmplitudes cat_superposition(complex alpha, const DeformationSpec& spec, int sign,
                                           double eps = kDefaultTruncationEps) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("cat_superposition: sign must be +1 or -1");
    detail::check_eps(eps);
    double base_eps = eps;
    for (int attempt = 0; attempt < 2; ++attempt) {
        const auto base = two_mode_f_coherent_total(alpha, alpha, spec, base_eps);
        // |-a -a> has coefficients (-1)^{n1+n2} C_{n1,n2}
        std::vector<complex> c(base.coeffs().size());
        double norm2 = 0.0;  // N_pm^{-2}
        for (std::size_t i = 0; i < base.rows(); ++i) {
            for (std::size_t j = 0; j < base.cols(); ++j) {
                const double parity = ((i + j) % 2 == 0) ? 1.0 : -1.0;
                const complex v = base(i, j) * (1.0 + sign * parity);
                c[i * base.cols() + j] = v;
                norm2 += std::norm(v);
            }
        }
        if (norm2 < kDegenerateNormSquared) {
            throw DegenerateSuperposition("cat superposition has N^-2 = " + std::to_string(norm2) +
                                          " (branches coincide)");
        }
        const double tail = base.trunc_tail() * 4.0 / norm2;
        if (tail < eps || attempt == 1) {
            return TwoModeAmplitudes::normalized(base.rows(), base.cols(), std::move(c), tail);
        }
        // the surviving parity sector is small; tighten the base truncation
        base_eps = std::max(eps * norm2 / 8.0, 1e-300);
    }
    throw std::logic_error("unreachable");
}

/// The Kerr two-mode state in its lambda -> 0 limit,
/// (|00> + alpha1 |10> + alpha2 |01>) / sqrt(1 + |alpha1|^2 + |alpha2|^2).
inline TwoModeAmplitudes two_mode_kerr_zero_limit(complex alpha1, complex alpha2) {
    return TwoModeAmplitudes::normalized(2, 2, {complex{1.0, 0.0}, alpha2, alpha1, complex{}});
}

/// Classical complex amplitude alpha = (q + i p)/sqrt(2) with its conserved energy.
class ClassicalAmplitude {
public:
    explicit ClassicalAmplitude(complex alpha) : alpha_(alpha), energy_(std::norm(alpha)) {}
    complex alpha() const { return alpha_; }
    double energy() const { return energy_; }

private:
    complex alpha_;
    double energy_;
};

/// Frequency omega(E) = d(E f^2(E))/dE by central differences.
inline double classical_frequency(const std::function<double(double)>& f, double energy) {
    auto g = [&](double e) {
        const double v = f(e);
        return e * v * v;
    };
    const double h = 1e-6 * std::max(energy, 1.0);
    if (energy >= h) {
        return (g(energy + h) - g(energy - h)) / (2.0 * h);
    }
    // one-sided second-order stencil near E = 0
    return (-3.0 * g(energy) + 4.0 * g(energy + h) - g(energy + 2.0 * h)) / (2.0 * h);
}

/// alpha(t) = alpha(0) exp(-i omega(E) t) for the classical f-oscillator with
/// H = |alpha f(|alpha|^2)|^2; f is a smooth function of continuous energy.
inline complex classical_evolution(const ClassicalAmplitude& a0, const std::function<double(double)>& f, double t) {
    if (t == 0.0) return a0.alpha();
    const double omega = classical_frequency(f, a0.energy());
    return a0.alpha() * std::polar(1.0, -omega * t);
}

// ---- serialization -------------------------------------------------------

inline void to_json(nlohmann::json& j, const FockAmplitudes& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back({c.real(), c.imag()});
    j = nlohmann::json{{"coeffs", std::move(coeffs)}, {"trunc_tail", s.trunc_tail()}};
}

inline void to_json(nlohmann::json& j, const TwoModeAmplitudes& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back({c.real(), c.imag()});
    j = nlohmann::json{{"coeffs", std::move(coeffs)},
                       {"shape", {s.rows(), s.cols()}},
                       {"trunc_tail", s.trunc_tail()}};
}

namespace detail {

inline std::vector<complex> coeffs_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
        throw std::invalid_argument("state JSON: expected an object with a \"coeffs\" array");
    }
    std::vector<complex> out;
    for (const auto& pair : j.at("coeffs")) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("state JSON: each coefficient must be [re, im]");
        }
        out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return out;
}

}  // namespace detail

inline FockAmplitudes fock_amplitudes_from_json(const nlohmann::json& j) {
    return FockAmplitudes(detail::coeffs_from_json(j), j.value("trunc_tail", 0.0));
}

inline TwoModeAmplitudes two_mode_amplitudes_from_json(const nlohmann::json& j) {
    if (!j.contains("shape") || !j.at("shape").is_array() || j.at("shape").size() != 2) {
        throw std::invalid_argument("state JSON: two-mode state needs \"shape\": [rows, cols]");
    }
    return TwoModeAmplitudes(j.at("shape")[0].get<std::size_t>(), j.at("shape")[1].get<std::size_t>(),
                             detail::coeffs_from_json(j), j.value("trunc_tail", 0.0));
}

/// Stable 64-bit FNV-1a digest of the shortest round-trip text of every
/// amplitude; identical states give identical digests on every platform.
inline std::string state_digest(const std::vector<complex>& coeffs) {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&](double v) {
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof buf, v);
        for (const char* p = buf; p != res.ptr; ++p) {
            h ^= static_cast<unsigned char>(*p);
            h *= 1099511628211ULL;
        }
        h ^= static_cast<unsigned char>(';');
        h *= 1099511628211ULL;
    };
    for (const auto& c : coeffs) {
        feed(c.real());
        feed(c.imag());
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xF];
        h >>= 4;
    }
    return out;
}

inline std::string state_digest(const FockAmplitudes& s) { return state_digest(s.coeffs()); }

}  // namespace ftomo
