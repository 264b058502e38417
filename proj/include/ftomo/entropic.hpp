#pragma once

// Shannon entropies of discrete distributions, block regrouping into an
// artificial bipartite table, and the Laguerre-polynomial inequalities that
// follow from subadditivity for Fock-state photon-number tomograms.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftomo/error.hpp"
#include "ftomo/special_functions.hpp"

namespace ftomo {

/// Finite prefix of a distribution plus the mass not stored.
class ProbabilityVector {
public:
    explicit ProbabilityVector(std::vector<double> p, double tail_mass = 0.0)
        : p_(std::move(p)), tail_mass_(tail_mass) {
        if (!(tail_mass_ >= 0.0)) throw std::invalid_argument("ProbabilityVector: tail_mass must be >= 0");
        double total = tail_mass_;
        for (double v : p_) {
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw std::invalid_argument("ProbabilityVector: entries must be finite and >= 0");
            }
            total += v;
        }
        if (std::abs(total - 1.0) > 1e-9) {
            throw std::invalid_argument("ProbabilityVector: total mass " + std::to_string(total) + " is not 1");
        }
    }

    const std::vector<double>& values() const { return p_; }
    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t m) const { return p_[m]; }
    double tail_mass() const { return tail_mass_; }

private:
    std::vector<double> p_;
    double tail_mass_;
};

/// P(j, l) = p_{s j + l}, l = 0..s-1, zero-padded in the last row.
class RegroupedTable {
public:
    RegroupedTable(std::vector<double> flat, std::size_t source_size, std::size_t s)
        : data_(std::move(flat)), source_size_(source_size), s_(s) {}

    std::size_t block_size() const { return s_; }
    std::size_t rows() const { return data_.size() / s_; }
    double operator()(std::size_t j, std::size_t l) const { return data_[j * s_ + l]; }

    /// Pi_j = sum over l of P(j, l).
    std::vector<double> row_marginal() const {
        std::vector<double> out(rows(), 0.0);
        for (std::size_t j = 0; j < rows(); ++j)
            for (std::size_t l = 0; l < s_; ++l) out[j] += (*this)(j, l);
        return out;
    }

    /// pi_l = sum over j of P(j, l).
    std::vector<double> column_marginal() const {
        std::vector<double> out(s_, 0.0);
        for (std::size_t j = 0; j < rows(); ++j)
            for (std::size_t l = 0; l < s_; ++l) out[l] += (*this)(j, l);
        return out;
    }

    /// Inverse of regroup: the original vector without padding.
    std::vector<double> flatten() const { return {data_.begin(), data_.begin() + static_cast<long>(source_size_)}; }

private:
    std::vector<double> data_;
    std::size_t source_size_;
    std::size_t s_;
};

namespace detail {

inline double entropy_of(const std::vector<double>& p) {
    double h = 0.0;
    for (double v : p) {
        if (v > 0.0) h -= v * std::log(v);
    }
    return h;
}

}  // namespace detail

/// H = -sum p ln p with 0 ln 0 = 0, over the stored entries.
inline double shannon_entropy(const ProbabilityVector& pv) { return detail::entropy_of(pv.values()); }

inline RegroupedTable regroup(const ProbabilityVector& pv, std::size_t s) {
    if (s < 2) throw std::invalid_argument("regroup: block size s must be >= 2");
    const std::size_t rows = (pv.size() + s - 1) / s;
    std::vector<double> flat(std::max<std::size_t>(rows, 1) * s, 0.0);
    std::copy(pv.values().begin(), pv.values().end(), flat.begin());
    return RegroupedTable(std::move(flat), pv.size(), s);
}

struct InformationTerms {
    double h_rows;  // H_Pi
    double h_cols;  // H_pi
    double h_joint; // H_p
    double information() const { return h_rows + h_cols - h_joint; }
};

inline InformationTerms information_terms(const ProbabilityVector& pv, std::size_t s) {
    const auto table = regroup(pv, s);
    return {detail::entropy_of(table.row_marginal()), detail::entropy_of(table.column_marginal()),
            shannon_entropy(pv)};
}

/// Shannon (mutual) information I = H_Pi + H_pi - H_p of the s-block table.
inline double shannon_information(const ProbabilityVector& pv, std::size_t s) {
    return information_terms(pv, s).information();
}

/// ln lambda_m(n, x), where lambda_m(n, x) = e^x W_m(n, alpha), x = |alpha|^2.
/// Returns -inf where lambda vanishes.
inline double log_laguerre_lambda(std::size_t n, std::size_t m, double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw std::domain_error("laguerre_lambda: x must be finite and >= 0");
    if (x == 0.0) return m == n ? 0.0 : -std::numeric_limits<double>::infinity();
    const std::size_t lo = std::min(m, n);
    const std::size_t hi = std::max(m, n);
    const double lag = laguerre_assoc(lo, static_cast<long>(hi - lo), x);
    if (lag == 0.0) return -std::numeric_limits<double>::infinity();
    return log_factorial(lo) - log_factorial(hi) + static_cast<double>(hi - lo) * std::log(x) +
           2.0 * std::log(std::abs(lag));
}

inline double laguerre_lambda(std::size_t n, std::size_t m, double x) { return std::exp(log_laguerre_lambda(n, m, x)); }

namespace detail {

inline constexpr std::size_t kLaguerreMaxTerms = 4096;

// p_m = e^{-x} lambda_m up to the first m past the bulk (m > n + x) where
// p_m has dropped below 1e-18 and is still falling.
inline std::vector<double> fock_tomogram_probabilities(std::size_t n, double x) {
    std::vector<double> p;
    for (std::size_t m = 0; m < kLaguerreMaxTerms; ++m) {
        p.push_back(std::exp(log_laguerre_lambda(n, m, x) - x));
        const bool past_bulk = static_cast<double>(m) > static_cast<double>(n) + x;
        if (past_bulk && p[m] < 1e-18 && (m == 0 || p[m] <= p[m - 1])) return p;
    }
    throw TailNotConverged("photon-number distribution did not decay within " +
                           std::to_string(kLaguerreMaxTerms) + " terms");
}

// Geometric estimate of sum_{m > M} p_m from the last two retained terms.
inline double geometric_tail(const std::vector<double>& p) {
    const std::size_t m = p.size() - 1;
    if (m == 0 || p[m] == 0.0) return 0.0;
    const double r = p[m] / p[m - 1];
    if (!(r < 1.0)) return std::numeric_limits<double>::infinity();
    return p[m] * r / (1.0 - r);
}

}  // namespace detail

/// The distribution p_m(n, x) = W_m(n, alpha) of the Fock state |n>.
inline ProbabilityVector fock_tomogram_distribution(std::size_t n, double x) {
    auto p = detail::fock_tomogram_probabilities(n, x);
    double total = 0.0;
    for (double v : p) total += v;
    return ProbabilityVector(std::move(p), std::max(0.0, 1.0 - total));
}

/// Shannon information I(n, x) of p_m(n, x) regrouped with block size s.
inline double fock_information(std::size_t n, double x, std::size_t s = 2) {
    return shannon_information(fock_tomogram_distribution(n, x), s);
}

struct LaguerreInequalityResult {
    double lhs_value;
    bool holds;
    double information;  // I of p_m(n, x) on the same truncation
    double tail;         // estimated mass of p_m beyond m_max
    std::size_t m_max;
};

/// Evaluates the left-hand side of the Laguerre inequality in its lambda
/// form, i.e. the block, column and joint lambda-entropies plus x e^x, and
/// reports whether it is >= -1e-10. m_max = 0 selects the cutoff
/// automatically. The identity lhs = e^x I + x e^x (1 - sum p) is checked to
/// 1e-8; the correction term vanishes with the tail.
inline LaguerreInequalityResult verify_laguerre_inequality(std::size_t n, double x, std::size_t s,
                                                           std::size_t m_max = 0) {
    if (s < 2) throw std::invalid_argument("verify_laguerre_inequality: s must be >= 2");
    if (!(x >= 0.0) || !std::isfinite(x)) throw std::domain_error("verify_laguerre_inequality: x must be >= 0");
    std::vector<double> p;
    if (m_max == 0) {
        p = detail::fock_tomogram_probabilities(n, x);
    } else {
        for (std::size_t m = 0; m <= m_max; ++m) p.push_back(std::exp(log_laguerre_lambda(n, m, x) - x));
    }
    double kept = 0.0;
    for (double v : p) kept += v;
    const double tail = std::max(detail::geometric_tail(p), 1.0 - kept);
    if (!(tail < 1e-12)) {
        throw TailNotConverged("m_max = " + std::to_string(p.size() - 1) + " leaves tail mass " +
                               std::to_string(tail) + " >= 1e-12");
    }

    const double ex = std::exp(x);
    std::vector<double> lam(p.size());
    for (std::size_t m = 0; m < p.size(); ++m) lam[m] = std::exp(log_laguerre_lambda(n, m, x));
    auto neg_xlogx = [](double v) { return v > 0.0 ? -v * std::log(v) : 0.0; };
    double lhs = x * ex;
    std::vector<double> cols(s, 0.0);
    for (std::size_t j = 0; j * s < lam.size(); ++j) {
        double block = 0.0;
        for (std::size_t l = 0; l < s && j * s + l < lam.size(); ++l) {
            block += lam[j * s + l];
            cols[l] += lam[j * s + l];
        }
        lhs += neg_xlogx(block);
    }
    for (double c : cols) lhs += neg_xlogx(c);
    for (double v : lam) lhs -= neg_xlogx(v);

    ProbabilityVector pv(std::move(p), std::max(0.0, 1.0 - kept));
    const double info = shannon_information(pv, s);
    const double expected = ex * info + x * ex * (1.0 - kept);
    if (std::abs(lhs - expected) > 1e-8) {
        throw NumericalError("Laguerre inequality: lambda form " + std::to_string(lhs) +
                             " disagrees with e^x I = " + std::to_string(expected));
    }
    return {lhs, lhs >= -1e-10, info, tail, pv.size() - 1};
}

}  // namespace ftomo
