// ftomo: tomogram dumps, figure tables, inequality sweeps and the
// self-verification suite. All output is CSV or JSON.
//
// Exit codes: 0 success, 1 a verify check failed, 2 bad configuration,
// 3 numerical failure (including a failed --audit).

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ftomo/ftomo.hpp"

namespace {

using ftomo::complex;
using ojson = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string out = "-";
    double eps = ftomo::kDefaultTruncationEps;
    bool audit = false;
    std::size_t threads = 1;
    std::string config;
};

struct StateOptions {
    std::string kind = "vacuum";
    std::size_t n = 0;
    double alpha_re = 0.0;
    double alpha_im = 0.0;
    std::string deformation = R"({"family":"identity"})";
    std::string file;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--out", c.out, "Output path, '-' for stdout");
    sub->add_option("--eps", c.eps, "Truncation tolerance on discarded mass");
    sub->add_flag("--audit", c.audit, "Check normalization/positivity of the emitted data");
    sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(std::size_t{1}, std::size_t{256}));
    sub->add_option("--config", c.config, "JSON file with option values; flags take precedence");
}

void add_state(CLI::App* sub, StateOptions& s) {
    sub->add_option("--state", s.kind, "vacuum | fock | glauber | f-coherent | file")
        ->check(CLI::IsMember({"vacuum", "fock", "glauber", "f-coherent", "file"}));
    sub->add_option("--n", s.n, "Photon number for --state fock");
    sub->add_option("--alpha-re", s.alpha_re, "Re(alpha)");
    sub->add_option("--alpha-im", s.alpha_im, "Im(alpha)");
    sub->add_option("--deformation", s.deformation, "Deformation JSON for --state f-coherent");
    sub->add_option("--state-file", s.file, "JSON amplitudes {\"coeffs\": [[re, im], ...]}");
}

ftomo::FockAmplitudes build_state(const StateOptions& s, double eps) {
    const complex alpha{s.alpha_re, s.alpha_im};
    if (s.kind == "vacuum") return ftomo::fock_state(0);
    if (s.kind == "fock") return ftomo::fock_state(s.n);
    if (s.kind == "glauber") return ftomo::glauber(alpha, eps);
    if (s.kind == "f-coherent") return ftomo::f_coherent(alpha, ftomo::parse_deformation(s.deformation), eps);
    std::ifstream in(s.file);
    if (!in) throw ConfigError("cannot read state file '" + s.file + "'");
    return ftomo::fock_amplitudes_from_json(nlohmann::json::parse(in));
}

ftomo::DeformationSpec family_spec(const std::string& family, double lambda) {
    if (family == "identity") return ftomo::DeformationSpec::identity();
    if (family == "kerr") return ftomo::DeformationSpec::kerr(lambda);
    if (family == "qosc") return ftomo::DeformationSpec::qosc(lambda);
    throw ConfigError("unknown family '" + family + "' (identity, kerr, qosc)");
}

ftomo::GridAxis axis(const std::string& name, double min, double max, double step) {
    if (!(step > 0.0) || !(max >= min)) throw ConfigError("axis " + name + ": need step > 0 and max >= min");
    const auto count = static_cast<std::size_t>(std::llround((max - min) / step)) + 1;
    return ftomo::linear_axis(name, min, step, count);
}

// Loads the JSON config and feeds every key the command line left unset
// into the matching option of `sub`.
void apply_config(CLI::App* sub, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be an object");
    for (const auto& [key, value] : j.items()) {
        if (key == "command") {
            if (!value.is_string() || value.get<std::string>() != sub->get_name()) {
                throw ConfigError("config: \"command\" does not match subcommand '" + sub->get_name() + "'");
            }
            continue;
        }
        std::string flag = key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        CLI::Option* opt = sub->get_option_no_throw("--" + flag);
        if (opt == nullptr || flag == "config") throw ConfigError("config: unknown key \"" + key + "\"");
        if (opt->count() > 0) continue;  // given on the command line
        std::vector<std::string> items;
        auto text = [](const nlohmann::json& v) -> std::string {
            if (v.is_string()) return v.get<std::string>();
            if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
            if (v.is_number()) return v.dump();
            return v.dump();  // nested objects, e.g. a deformation
        };
        if (value.is_array() && opt->get_items_expected_max() > 1) {
            for (const auto& v : value) items.push_back(text(v));
        } else {
            items.push_back(text(value));
        }
        try {
            opt->add_result(items);
            opt->run_callback();
        } catch (const CLI::Error& e) {
            throw ConfigError("config key \"" + key + "\": " + e.what());
        }
    }
}

// Writes to --out, or stdout for '-'.
void emit(const std::string& out, const std::string& content) {
    if (out == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ConfigError("cannot write '" + out + "'");
    f << content;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

struct NumericFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deformed-oscillator tomography, entropic inequalities and entanglement"};
    app.require_subcommand(1);

    Common common;
    StateOptions state;

    // tomogram
    auto* tomo = app.add_subcommand("tomogram", "Sample a tomogram of a one-mode state on a grid");
    add_common(tomo, common);
    add_state(tomo, state);
    std::string kind = "optical";
    double x_min = -6.0, x_max = 6.0, x_step = 0.05;
    std::size_t theta_count = 360, n_max = 64;
    std::vector<double> mus{0.25, 0.5, 1.0}, nus{-0.5, 0.0, 0.5};
    double alpha_max = 2.0, alpha_step = 0.1, q_max = 5.0, q_step = 0.1;
    tomo->add_option("--kind", kind, "optical | symplectic | photon | husimi")
        ->check(CLI::IsMember({"optical", "symplectic", "photon", "husimi"}));
    tomo->add_option("--x-min", x_min);
    tomo->add_option("--x-max", x_max);
    tomo->add_option("--x-step", x_step);
    tomo->add_option("--theta-count", theta_count, "Phases 2 pi k / count");
    tomo->add_option("--mu", mus, "Symplectic mu values");
    tomo->add_option("--nu", nus, "Symplectic nu values");
    tomo->add_option("--n-max", n_max, "Largest photon number (photon kind)");
    tomo->add_option("--alpha-max", alpha_max, "Re/Im alpha range [-max, max] (photon kind)");
    tomo->add_option("--alpha-step", alpha_step);
    tomo->add_option("--q-max", q_max, "Re/Im alpha range [-max, max] (husimi kind)");
    tomo->add_option("--q-step", q_step);

    // figure
    auto* fig = app.add_subcommand("figure", "Emit the curve family of a figure");
    add_common(fig, common);
    int figure_id = 0;
    fig->add_option("--id", figure_id, "Figure 1..5");

    // entropy
    auto* ent = app.add_subcommand("entropy", "Laguerre-inequality sweep over n, x and s");
    add_common(ent, common);
    std::vector<std::size_t> ns{0, 1, 2, 3, 4, 5}, ss{2, 3, 4};
    std::vector<double> xs{0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
    ent->add_option("--n", ns);
    ent->add_option("--x", xs);
    ent->add_option("--s", ss);

    // entanglement
    auto* ang = app.add_subcommand("entanglement", "Linear entropy of two-mode or cat states versus lambda");
    add_common(ang, common);
    double alpha1 = 1.0, alpha2 = 1.0;
    int sign = 0;
    std::string ang_family = "kerr";
    std::vector<double> ang_lambdas{0.5, 1.0, 2.0};
    ang->add_option("--alpha1", alpha1, "|alpha1| (or |alpha| for cat states)");
    ang->add_option("--alpha2", alpha2, "|alpha2|");
    ang->add_option("--sign", sign, "0: two-mode state, +1/-1: even/odd cat")->check(CLI::IsMember({-1, 0, 1}));
    ang->add_option("--family", ang_family, "identity | kerr | qosc");
    ang->add_option("--lambda", ang_lambdas);

    // uncertainty
    auto* unc = app.add_subcommand("uncertainty", "Deformed quadrature statistics and the SR bound");
    add_common(unc, common);
    add_state(unc, state);
    std::string unc_family = "qosc";
    std::vector<double> unc_lambdas{0.0, 0.05, 0.1, 0.2, 0.3};
    unc->add_option("--family", unc_family, "identity | kerr | qosc");
    unc->add_option("--lambda", unc_lambdas);

    // verify
    auto* ver = app.add_subcommand("verify", "Run the acceptance checks and write a JSON report");
    add_common(ver, common);
    std::vector<std::string> only;
    bool force_paper = false;
    ver->add_option("--only", only, "Run only the named checks");
    ver->add_flag("--force-paper-moment-constant", force_paper, "Use the printed +1/12 moment constant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        std::cerr << "ftomo: " << e.what() << "\n";
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    try {
        if (!common.config.empty()) apply_config(sub, common.config);
        if (!(common.eps > 0.0 && common.eps <= 1e-6)) throw ConfigError("--eps must lie in (0, 1e-6]");

        if (sub == tomo) {
            const auto st = build_state(state, common.eps);
            ftomo::TomogramGrid grid;
            if (kind == "optical") {
                grid = ftomo::optical_grid(st, axis("X", x_min, x_max, x_step),
                                           ftomo::linear_axis("theta", 0.0, 2.0 * std::numbers::pi / double(theta_count),
                                                              theta_count),
                                           common.threads);
            } else if (kind == "symplectic") {
                grid = ftomo::symplectic_grid(st, axis("X", x_min, x_max, x_step), {"mu", mus}, {"nu", nus},
                                              common.threads);
            } else if (kind == "photon") {
                grid = ftomo::photon_grid(st, n_max, axis("re_alpha", -alpha_max, alpha_max, alpha_step),
                                          axis("im_alpha", -alpha_max, alpha_max, alpha_step), common.threads);
            } else {
                grid = ftomo::husimi_grid(st, axis("re_alpha", -q_max, q_max, q_step),
                                          axis("im_alpha", -q_max, q_max, q_step), common.threads);
            }
            std::ostringstream csv;
            ftomo::write_csv(csv, grid);
            emit(common.out, csv.str());

            ojson side;
            side["kind"] = ftomo::to_string(grid.kind);
            side["state_digest"] = grid.state_digest;
            side["trunc_tail"] = grid.trunc_tail;
            side["grid"] = ojson::array();
            for (const auto& a : grid.axes) {
                ojson ax;
                ax["name"] = a.name;
                ax["count"] = a.values.size();
                ax["min"] = a.values.front();
                ax["max"] = a.values.back();
                side["grid"].push_back(ax);
            }
            bool audit_ok = true;
            if (common.audit) {
                const auto audit = ftomo::audit_grid(grid);
                audit_ok = audit.passed(1e-3);
                ojson au;
                au["passed"] = audit_ok;
                au["tolerance"] = 1e-3;
                au["min_value"] = audit.min_value;
                au["max_deviation"] = audit.max_deviation;
                au["slices"] = audit.entries.size();
                side["audit"] = au;
            }
            if (common.out != "-") emit(common.out + ".json", dump(side));
            if (!audit_ok) throw NumericFailure("normalization audit failed");
            return 0;
        }

        if (sub == fig) {
            if (figure_id < 1 || figure_id > 5) throw ConfigError("--id must be 1..5");
            const auto table = ftomo::figure(figure_id, {common.eps, common.threads});
            if (common.audit) {
                const std::size_t col = table.columns.size() - 1;
                for (const auto& r : table.rows) {
                    const double v = r[col];
                    const bool bad = !std::isfinite(v) || v < -1e-12 || (figure_id > 1 && v > 1.0);
                    if (bad) throw NumericFailure("figure audit: value out of range");
                }
            }
            emit(common.out, ftomo::to_csv(table));
            return 0;
        }

        if (sub == ent) {
            const auto table = ftomo::laguerre_sweep(ns, xs, ss, common.threads);
            if (common.audit) {
                for (const auto& r : table.rows)
                    if (r[4] != 1.0) throw NumericFailure("entropy audit: inequality violated");
            }
            emit(common.out, ftomo::to_csv(table));
            return 0;
        }

        if (sub == ang) {
            ftomo::Table table;
            table.columns = sign == 0 ? std::vector<std::string>{"lambda", "abs_alpha1", "abs_alpha2", "entropy"}
                                      : std::vector<std::string>{"lambda", "abs_alpha", "sign", "entropy"};
            for (double lam : ang_lambdas) {
                double s;
                const bool kerr_zero = ang_family == "kerr" && lam == 0.0;
                if (sign == 0) {
                    s = kerr_zero ? ftomo::linear_entropy_kerr_zero_limit(alpha1, alpha2)
                                  : ftomo::linear_entropy_series(alpha1, alpha2, family_spec(ang_family, lam),
                                                                 common.eps);
                    table.rows.push_back({lam, std::abs(alpha1), std::abs(alpha2), s});
                } else {
                    s = kerr_zero ? (sign > 0 ? 0.0 : 0.5)
                                  : ftomo::cat_linear_entropy(alpha1, family_spec(ang_family, lam), sign, common.eps);
                    table.rows.push_back({lam, std::abs(alpha1), double(sign), s});
                }
            }
            emit(common.out, ftomo::to_csv(table));
            return 0;
        }

        if (sub == unc) {
            const auto st = build_state(state, common.eps);
            std::vector<ftomo::DeformationSpec> specs;
            if (unc_family == "identity") {
                specs.push_back(ftomo::DeformationSpec::identity());
            } else {
                for (double lam : unc_lambdas) specs.push_back(family_spec(unc_family, lam));
            }
            const auto rows = ftomo::uncertainty_sweep(st, specs, common.threads);
            if (common.audit) {
                for (const auto& r : rows)
                    if (r.stats.sr_residual() < -1e-10) throw NumericFailure("uncertainty audit: SR bound violated");
            }
            std::ostringstream csv;
            ftomo::write_uncertainty_csv(csv, rows);
            emit(common.out, csv.str());
            return 0;
        }

        // verify
        ftomo::VerifyOptions opt{only, force_paper, common.threads};
        const auto known = ftomo::check_names();
        for (const auto& name : only) {
            if (std::find(known.begin(), known.end(), name) == known.end()) {
                throw ConfigError("unknown check '" + name + "'");
            }
        }
        const auto t0 = std::chrono::steady_clock::now();
        const auto results = ftomo::run_verification(opt);
        const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const auto report = ftomo::verification_report(results, total);
        emit(common.out, dump(report));
        for (const auto& r : results) std::cerr << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        return report["all_passed"].get<bool>() ? 0 : 1;
    } catch (const ConfigError& e) {
        std::cerr << "ftomo: config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ftomo: config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "ftomo: config error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "ftomo: config error: " << e.what() << "\n";
        return 2;
    } catch (const ftomo::NumericalError& e) {
        std::cerr << "ftomo: numerical error: " << e.what() << "\n";
        return 3;
    } catch (const NumericFailure& e) {
        std::cerr << "ftomo: numerical error: " << e.what() << "\n";
        return 3;
    }
}
