#pragma once

// Deformation function f(n) of an f-oscillator, A = a f(n).

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "ftomo/error.hpp"

namespace ftomo {

struct IdentityFamily {};

/// f(n) = sqrt((n - 1 + lambda) / lambda), lambda > 0.
struct KerrFamily {
    double lambda;
};

/// f(n) = sqrt(sinh(lambda n) / (lambda n)), lambda >= 0; f = 1 at lambda n = 0.
struct QOscFamily {
    double lambda;
};

/// f(n) = values[n]. Entries are not validated up front; zeros and spikes
/// surface as DeformationSingular when a construction reaches them.
struct TabulatedFamily {
    std::vector<double> values;
};

class DeformationSpec {
public:
    using Family = std::variant<IdentityFamily, KerrFamily, QOscFamily, TabulatedFamily>;

    DeformationSpec() = default;

    static DeformationSpec identity() { return DeformationSpec(IdentityFamily{}, "identity"); }

    static DeformationSpec kerr(double lambda) {
        if (!(lambda > 0.0) || !std::isfinite(lambda)) {
            throw std::invalid_argument("kerr deformation requires finite lambda > 0");
        }
        return DeformationSpec(KerrFamily{lambda}, "kerr");
    }

    static DeformationSpec qosc(double lambda) {
        if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
            throw std::invalid_argument("qosc deformation requires finite lambda >= 0");
        }
        return DeformationSpec(QOscFamily{lambda}, "qosc");
    }

    static DeformationSpec tabulated(std::vector<double> values) {
        return DeformationSpec(TabulatedFamily{std::move(values)}, "tabulated");
    }

    const Family& family() const { return family_; }
    const std::string& description() const { return description_; }
    DeformationSpec& set_description(std::string d) {
        description_ = std::move(d);
        return *this;
    }

    /// Short family tag as used in JSON and CSV output.
    std::string family_name() const {
        return std::visit(
            [](const auto& f) -> std::string {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, IdentityFamily>) return "identity";
                else if constexpr (std::is_same_v<T, KerrFamily>) return "kerr";
                else if constexpr (std::is_same_v<T, QOscFamily>) return "qosc";
                else return "tabulated";
            },
            family_);
    }

    /// lambda for the parametric families, 0 otherwise.
    double parameter() const {
        if (const auto* k = std::get_if<KerrFamily>(&family_)) return k->lambda;
        if (const auto* q = std::get_if<QOscFamily>(&family_)) return q->lambda;
        return 0.0;
    }

private:
    DeformationSpec(Family f, std::string d) : family_(std::move(f)), description_(std::move(d)) {}

    Family family_{IdentityFamily{}};
    std::string description_{"identity"};
};

namespace detail {

// ln sinh(y) for y >= 0, without overflow for large y.
inline double log_sinh(double y) {
    if (y > 20.0) {
        return y - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * y));
    }
    return std::log(std::sinh(y));
}

[[noreturn]] inline void singular(const DeformationSpec& spec, std::size_t n, const char* why) {
    throw DeformationSingular("deformation '" + spec.family_name() + "' singular at n=" + std::to_string(n) +
                              ": " + why);
}

}  // namespace detail

/// ln f(n). Throws DeformationSingular where f(n) is not a positive real.
inline double log_f_value(const DeformationSpec& spec, std::size_t n) {
    const double nn = static_cast<double>(n);
    return std::visit(
        [&](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, IdentityFamily>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, KerrFamily>) {
                const double r = (nn - 1.0 + f.lambda) / f.lambda;
                if (!(r > 0.0)) detail::singular(spec, n, "f^2 <= 0");
                return 0.5 * std::log(r);
            } else if constexpr (std::is_same_v<T, QOscFamily>) {
                const double y = f.lambda * nn;
                if (y == 0.0) return 0.0;
                return 0.5 * (detail::log_sinh(y) - std::log(y));
            } else {
                if (n >= f.values.size()) detail::singular(spec, n, "outside the tabulated range");
                const double v = f.values[n];
                if (!(v > 0.0) || !std::isfinite(v)) detail::singular(spec, n, "tabulated value not positive");
                return std::log(v);
            }
        },
        spec.family());
}

/// f(n).
inline double f_value(const DeformationSpec& spec, std::size_t n) {
    if (std::holds_alternative<TabulatedFamily>(spec.family())) {
        log_f_value(spec, n);  // validates
        return std::get<TabulatedFamily>(spec.family()).values[n];
    }
    return std::exp(log_f_value(spec, n));
}

/// ln f(n)! with f(n)! = f(1) f(2) ... f(n); f(0) is excluded (it is a common
/// factor of every coefficient and is imaginary for Kerr with lambda < 1).
inline double log_f_factorial(const DeformationSpec& spec, std::size_t n) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        acc += log_f_value(spec, k);
    }
    return acc;
}

/// ln f(0)! .. ln f(nmax)! as running sums.
inline std::vector<double> log_f_factorials(const DeformationSpec& spec, std::size_t nmax) {
    std::vector<double> out(nmax + 1, 0.0);
    for (std::size_t k = 1; k <= nmax; ++k) {
        out[k] = out[k - 1] + log_f_value(spec, k);
    }
    return out;
}

/// Diagonal of [A, A^dag] in the Fock basis: (n+1) f^2(n+1) - n f^2(n).
inline double commutator_diag(const DeformationSpec& spec, std::size_t n) {
    const double up = f_value(spec, n + 1);
    double value = static_cast<double>(n + 1) * up * up;
    if (n > 0) {
        const double here = f_value(spec, n);
        value -= static_cast<double>(n) * here * here;
    }
    return value;
}

// JSON: {"family": "kerr", "lambda": 0.5}, {"family": "tabulated", "values": [...]},
// optional "description".
inline void to_json(nlohmann::json& j, const DeformationSpec& spec) {
    j = nlohmann::json::object();
    j["family"] = spec.family_name();
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, KerrFamily> || std::is_same_v<T, QOscFamily>) {
                j["lambda"] = f.lambda;
            } else if constexpr (std::is_same_v<T, TabulatedFamily>) {
                j["values"] = f.values;
            }
        },
        spec.family());
    if (spec.description() != spec.family_name()) {
        j["description"] = spec.description();
    }
}

inline void from_json(const nlohmann::json& j, DeformationSpec& spec) {
    if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
        throw std::invalid_argument("deformation JSON must be an object with a string \"family\"");
    }
    const auto family = j.at("family").get<std::string>();
    auto allow = [&](std::initializer_list<const char*> keys) {
        for (const auto& [key, _] : j.items()) {
            bool ok = key == "family" || key == "description";
            for (const char* k : keys) ok = ok || key == k;
            if (!ok) throw std::invalid_argument("deformation JSON: unknown key \"" + key + "\"");
        }
    };
    auto lambda = [&] {
        if (!j.contains("lambda") || !j.at("lambda").is_number()) {
            throw std::invalid_argument("deformation JSON: family \"" + family + "\" needs numeric \"lambda\"");
        }
        return j.at("lambda").get<double>();
    };
    if (family == "identity") {
        allow({});
        spec = DeformationSpec::identity();
    } else if (family == "kerr") {
        allow({"lambda"});
        spec = DeformationSpec::kerr(lambda());
    } else if (family == "qosc") {
        allow({"lambda"});
        spec = DeformationSpec::qosc(lambda());
    } else if (family == "tabulated") {
        allow({"values"});
        if (!j.contains("values") || !j.at("values").is_array()) {
            throw std::invalid_argument("deformation JSON: tabulated family needs \"values\" array");
        }
        spec = DeformationSpec::tabulated(j.at("values").get<std::vector<double>>());
    } else {
        throw std::invalid_argument("deformation JSON: unknown family \"" + family + "\"");
    }
    if (j.contains("description")) {
        spec.set_description(j.at("description").get<std::string>());
    }
}

inline DeformationSpec parse_deformation(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("deformation JSON: ") + e.what());
    }
    return j.get<DeformationSpec>();
}

}  // namespace ftomo
