#pragma once

// Symplectic, optical and photon-number tomograms, the Husimi function, and
// moments read off the tomograms, for pure one-mode states.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftomo/csv.hpp"
#include "ftomo/error.hpp"
#include "ftomo/parallel.hpp"
#include "ftomo/special_functions.hpp"
#include "ftomo/states.hpp"

namespace ftomo {

namespace detail {

// Composite trapezoid rule on [a, b] with `points` nodes.
template <class F>
double trapezoid(F&& f, double a, double b, std::size_t points) {
    const double h = (b - a) / static_cast<double>(points - 1);
    double sum = 0.5 * (f(a) + f(b));
    for (std::size_t i = 1; i + 1 < points; ++i) {
        sum += f(a + static_cast<double>(i) * h);
    }
    return sum * h;
}

inline constexpr double kQuadratureHalfWidth = 12.0;
inline constexpr std::size_t kQuadraturePoints = 4001;

}  // namespace detail

/// Optical tomogram w(X, theta) = |sum_n c_n e^{-i n theta} psi_n(X)|^2.
/// The global phase e^{-i theta/2} of the oscillator evolution drops out.
inline double optical_tomogram(const FockAmplitudes& state, double x, double theta) {
    const auto psi = oscillator_eigenfunctions(state.max_level(), x);
    complex sum{};
    for (std::size_t n = 0; n < state.size(); ++n) {
        sum += state[n] * std::polar(psi[n], -static_cast<double>(n) * theta);
    }
    return std::norm(sum);
}

/// Symplectic tomogram M(X, mu, nu) = w(X/s, theta)/s with s = sqrt(mu^2 + nu^2),
/// cos(theta) = mu/s, sin(theta) = nu/s.
inline double symplectic_tomogram(const FockAmplitudes& state, double x, double mu, double nu) {
    const double s2 = mu * mu + nu * nu;
    if (!(s2 >= 1e-300)) {
        throw DegenerateDirection("symplectic tomogram needs mu^2 + nu^2 > 0");
    }
    const double s = std::sqrt(s2);
    return optical_tomogram(state, x / s, std::atan2(nu, mu)) / s;
}

/// Photon-number tomogram W(n, alpha) = |<n| D(alpha) |psi>|^2 through the
/// associated-Laguerre form of the displacement matrix elements. Factorial
/// ratios, powers of |alpha| and e^{-|alpha|^2/2} are combined in log space.
inline double photon_tomogram(const FockAmplitudes& state, std::size_t n, complex alpha) {
    const double x = std::norm(alpha);
    const double log_a = detail::log_abs(alpha);
    const double phi = std::arg(alpha);
    const double lf_n = log_factorial(n);
    complex sum{};
    for (std::size_t m = 0; m < state.size(); ++m) {
        const complex c = state[m];
        if (c == complex{}) continue;
        if (m <= n) {
            const std::size_t k = n - m;
            const double log_mag = 0.5 * (log_factorial(m) - lf_n) + detail::n_log(k, log_a) - 0.5 * x;
            const double lag = laguerre_assoc(m, static_cast<long>(k), x);
            sum += c * std::polar(std::exp(log_mag) * lag, static_cast<double>(k) * phi);
        } else {
            // (-alpha^*)^k = |alpha|^k e^{i k (pi - phi)}
            const std::size_t k = m - n;
            const double log_mag = 0.5 * (lf_n - log_factorial(m)) + detail::n_log(k, log_a) - 0.5 * x;
            const double lag = laguerre_assoc(n, static_cast<long>(k), x);
            sum += c * std::polar(std::exp(log_mag) * lag, static_cast<double>(k) * (std::numbers::pi - phi));
        }
    }
    return std::norm(sum);
}

/// Closed form of W(n, alpha) for the Fock state |m>; symmetric in m and n.
inline double photon_tomogram_fock(std::size_t m, std::size_t n, complex alpha) {
    const double x = std::norm(alpha);
    if (x == 0.0) return m == n ? 1.0 : 0.0;
    const std::size_t lo = std::min(m, n);
    const std::size_t hi = std::max(m, n);
    const double lag = laguerre_assoc(lo, static_cast<long>(hi - lo), x);
    const double log_pref =
        log_factorial(lo) - log_factorial(hi) + static_cast<double>(hi - lo) * std::log(x) - x;
    return std::exp(log_pref) * lag * lag;
}

/// Husimi function Q(alpha) = e^{-|alpha|^2} |sum_m c_m (alpha^*)^m / sqrt(m!)|^2.
inline double husimi(const FockAmplitudes& state, complex alpha) {
    const complex ac = std::conj(alpha);
    complex term = std::exp(-0.5 * std::norm(alpha));  // (alpha^*)^m / sqrt(m!) times e^{-|alpha|^2/2}
    complex sum = state[0] * term;
    for (std::size_t m = 1; m < state.size(); ++m) {
        term *= ac / std::sqrt(static_cast<double>(m));
        sum += state[m] * term;
    }
    return std::norm(sum);
}

/// <X_theta^k> = integral of X^k w(X, theta) dX, composite trapezoid on
/// [-12, 12] with 4001 nodes. k <= 8.
inline double quadrature_moment(const FockAmplitudes& state, double theta, unsigned k) {
    if (k > 8) throw std::invalid_argument("quadrature_moment: order k must be <= 8");
    return detail::trapezoid(
        [&](double x) { return std::pow(x, static_cast<int>(k)) * optical_tomogram(state, x, theta); },
        -detail::kQuadratureHalfWidth, detail::kQuadratureHalfWidth, detail::kQuadraturePoints);
}

/// <n^k> = sum_n |c_n|^2 n^k over the retained basis. k <= 6.
inline double photon_moment(const FockAmplitudes& state, unsigned k) {
    if (k > 6) throw std::invalid_argument("photon_moment: order k must be <= 6");
    double acc = 0.0;
    for (std::size_t n = 0; n < state.size(); ++n) {
        acc += std::norm(state[n]) * std::pow(static_cast<double>(n), static_cast<int>(k));
    }
    return acc;
}

// ---- sampled grids ---------------------------------------------------------

enum class TomogramKind { symplectic, optical, photon_number, husimi };

inline std::string to_string(TomogramKind k) {
    switch (k) {
        case TomogramKind::symplectic: return "symplectic";
        case TomogramKind::optical: return "optical";
        case TomogramKind::photon_number: return "photon_number";
        case TomogramKind::husimi: return "husimi";
    }
    return "unknown";
}

struct GridAxis {
    std::string name;
    std::vector<double> values;
};

/// `count` points min, min + step, ... (no accumulated rounding).
inline GridAxis linear_axis(std::string name, double min, double step, std::size_t count) {
    GridAxis axis{std::move(name), std::vector<double>(count)};
    for (std::size_t i = 0; i < count; ++i) axis.values[i] = min + static_cast<double>(i) * step;
    return axis;
}

inline GridAxis default_quadrature_axis() { return linear_axis("X", -6.0, 0.05, 241); }
inline GridAxis default_phase_axis() { return linear_axis("theta", 0.0, 2.0 * std::numbers::pi / 360.0, 360); }

/// Tomogram values on the Cartesian product of its axes, last axis fastest.
struct TomogramGrid {
    TomogramKind kind;
    std::vector<GridAxis> axes;
    std::vector<double> values;
    std::string state_digest;
    double trunc_tail = 0.0;

    std::size_t point_count() const {
        std::size_t n = 1;
        for (const auto& a : axes) n *= a.values.size();
        return n;
    }

    /// Axis coordinates of flat index i.
    std::vector<double> coordinates(std::size_t i) const {
        std::vector<double> out(axes.size());
        for (std::size_t a = axes.size(); a-- > 0;) {
            const std::size_t len = axes[a].values.size();
            out[a] = axes[a].values[i % len];
            i /= len;
        }
        return out;
    }
};

namespace detail {

template <class Eval>
TomogramGrid sample_grid(TomogramKind kind, std::vector<GridAxis> axes, const FockAmplitudes& state,
                         std::size_t threads, Eval&& eval) {
    TomogramGrid grid{kind, std::move(axes), {}, state_digest(state), state.trunc_tail()};
    grid.values.resize(grid.point_count());
    parallel_for(grid.values.size(), threads, [&](std::size_t i) { grid.values[i] = eval(grid.coordinates(i)); });
    return grid;
}

}  // namespace detail

inline TomogramGrid optical_grid(const FockAmplitudes& state, GridAxis x_axis, GridAxis theta_axis,
                                 std::size_t threads = 1) {
    x_axis.name = "X";
    theta_axis.name = "theta";
    return detail::sample_grid(TomogramKind::optical, {std::move(x_axis), std::move(theta_axis)}, state, threads,
                               [&](const std::vector<double>& p) { return optical_tomogram(state, p[0], p[1]); });
}

inline TomogramGrid symplectic_grid(const FockAmplitudes& state, GridAxis x_axis, GridAxis mu_axis,
                                    GridAxis nu_axis, std::size_t threads = 1) {
    x_axis.name = "X";
    mu_axis.name = "mu";
    nu_axis.name = "nu";
    return detail::sample_grid(
        TomogramKind::symplectic, {std::move(x_axis), std::move(mu_axis), std::move(nu_axis)}, state, threads,
        [&](const std::vector<double>& p) { return symplectic_tomogram(state, p[0], p[1], p[2]); });
}

inline TomogramGrid photon_grid(const FockAmplitudes& state, std::size_t n_max, GridAxis re_axis, GridAxis im_axis,
                                std::size_t threads = 1) {
    re_axis.name = "re_alpha";
    im_axis.name = "im_alpha";
    return detail::sample_grid(TomogramKind::photon_number,
                               {linear_axis("n", 0.0, 1.0, n_max + 1), std::move(re_axis), std::move(im_axis)},
                               state, threads, [&](const std::vector<double>& p) {
                                   return photon_tomogram(state, static_cast<std::size_t>(p[0]), complex{p[1], p[2]});
                               });
}

inline TomogramGrid husimi_grid(const FockAmplitudes& state, GridAxis re_axis, GridAxis im_axis,
                                std::size_t threads = 1) {
    re_axis.name = "re_alpha";
    im_axis.name = "im_alpha";
    return detail::sample_grid(TomogramKind::husimi, {std::move(re_axis), std::move(im_axis)}, state, threads,
                               [&](const std::vector<double>& p) { return husimi(state, complex{p[0], p[1]}); });
}

/// Header line of axis names then "value"; one row per grid point.
inline void write_csv(std::ostream& os, const TomogramGrid& grid) {
    std::vector<std::string> header;
    for (const auto& a : grid.axes) header.push_back(a.name);
    header.push_back("value");
    csv::write_header(os, header);
    for (std::size_t i = 0; i < grid.values.size(); ++i) {
        auto row = grid.coordinates(i);
        row.push_back(grid.values[i]);
        csv::write_row(os, row);
    }
}

struct AuditEntry {
    std::string label;  // which slice was integrated
    double integral;
};

struct GridAudit {
    std::vector<AuditEntry> entries;
    double min_value = 0.0;
    double max_deviation = 0.0;  // max |integral - 1|
    bool passed(double tol) const { return min_value >= 0.0 && max_deviation <= tol; }
};

/// Normalization and positivity of an emitted grid, computed only from the
/// grid itself: trapezoid over X (optical/symplectic) for each direction,
/// the sum over n (photon) for each alpha, and the 2D trapezoid of Q/pi.
inline GridAudit audit_grid(const TomogramGrid& grid) {
    GridAudit audit;
    audit.min_value = grid.values.empty() ? 0.0 : *std::min_element(grid.values.begin(), grid.values.end());
    auto trapz = [](const std::vector<double>& xs, auto&& value_at) {
        double s = 0.0;
        for (std::size_t i = 1; i < xs.size(); ++i) s += 0.5 * (xs[i] - xs[i - 1]) * (value_at(i) + value_at(i - 1));
        return s;
    };
    const auto& ax = grid.axes;
    switch (grid.kind) {
        case TomogramKind::optical:
        case TomogramKind::symplectic: {
            const std::size_t nx = ax[0].values.size();
            const std::size_t stride = grid.values.size() / nx;
            for (std::size_t d = 0; d < stride; ++d) {
                const double integral =
                    trapz(ax[0].values, [&](std::size_t i) { return grid.values[i * stride + d]; });
                auto coords = grid.coordinates(d);
                std::string label;
                for (std::size_t a = 1; a < ax.size(); ++a) {
                    label += (a > 1 ? "," : "") + ax[a].name + "=" + csv::format_double(coords[a]);
                }
                audit.entries.push_back({label, integral});
            }
            break;
        }
        case TomogramKind::photon_number: {
            const std::size_t nn = ax[0].values.size();
            const std::size_t stride = grid.values.size() / nn;
            for (std::size_t d = 0; d < stride; ++d) {
                double s = 0.0;
                for (std::size_t i = 0; i < nn; ++i) s += grid.values[i * stride + d];
                auto coords = grid.coordinates(d);
                audit.entries.push_back({"re_alpha=" + csv::format_double(coords[1]) +
                                             ",im_alpha=" + csv::format_double(coords[2]),
                                         s});
            }
            break;
        }
        case TomogramKind::husimi: {
            const auto& re = ax[0].values;
            const auto& im = ax[1].values;
            const double integral = trapz(re, [&](std::size_t i) {
                                        return trapz(im, [&](std::size_t j) { return grid.values[i * im.size() + j]; });
                                    }) /
                                    std::numbers::pi;
            audit.entries.push_back({"all", integral});
            break;
        }
    }
    for (const auto& e : audit.entries) audit.max_deviation = std::max(audit.max_deviation, std::abs(e.integral - 1.0));
    return audit;
}

}  // namespace ftomo
