#include "qerasure/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qerasure/dynamics.hpp"
#include "qerasure/geometry.hpp"
#include "qerasure/physics.hpp"
#include "qerasure/protocol.hpp"

namespace qerasure {

namespace {

std::string join_values(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += format_number(values[i]);
    }
    return out;
}

std::string provenance_line(const std::string& experiment,
                            const std::vector<double>& alphas,
                            const std::vector<double>& epsilons,
                            const std::vector<double>& taus, double beta, double gamma0) {
    std::ostringstream ss;
    ss << "qerasure experiment=" << experiment;
    if (!alphas.empty()) ss << " alpha=" << join_values(alphas);
    if (!epsilons.empty()) ss << " epsilon=" << join_values(epsilons);
    if (!taus.empty()) ss << " tau=" << join_values(taus);
    ss << " beta=" << format_number(beta) << " gamma0=" << format_number(gamma0);
    return ss.str();
}

}  // namespace

std::vector<double> default_epsilon_grid() { return log_grid(1e-6, 1e-1, 16); }

std::vector<double> default_tau_grid() { return log_grid(10.0, 1e4, 12); }

Table run_length_table(const std::vector<double>& alphas,
                       const std::vector<double>& epsilons, double beta, double gamma0) {
    Table t;
    t.provenance = provenance_line("length-table", alphas, epsilons, {}, beta, gamma0);
    t.columns = {"alpha", "epsilon", "f_eps", "f_zero", "length"};
    for (double alpha : alphas) {
        const double f_zero = f_alpha(0.0, alpha);
        const double pref = std::sqrt(std::pow(beta, alpha - 1.0) / gamma0);
        t.append_row({alpha, 0.0, f_zero, f_zero, pref * f_zero});
        for (double eps : epsilons) {
            const double fe = f_alpha(eps, alpha);
            t.append_row({alpha, eps, fe, f_zero, pref * fe});
        }
    }
    return t;
}

Table run_headline_bounds(const std::vector<double>& epsilons, double beta,
                          double gamma0) {
    Table t;
    t.provenance =
        provenance_line("headline-bounds", {0.0}, epsilons, {}, beta, gamma0);
    t.columns = {"alpha", "epsilon", "precise_bound_kT_per_gamma0tau"};
    const BathSpectrum spectrum(0.0, gamma0);
    for (double eps : epsilons) {
        // L^2/tau * gamma0 tau * beta = beta^alpha f^2 |_(alpha=0): tau drops out
        const ErasureTask task(beta, eps, 1.0);
        const LengthReport rep = thermodynamic_length(task, spectrum);
        t.append_row({0.0, eps, rep.precise_bound * gamma0 * task.tau * beta});
    }
    return t;
}

std::vector<SweepRecord> run_sweep(const std::vector<double>& alphas,
                                   const std::vector<double>& epsilons,
                                   const std::vector<double>& taus, double beta,
                                   double gamma0) {
    std::vector<SweepRecord> records;
    records.reserve(alphas.size() * epsilons.size() * taus.size());
    for (double alpha : alphas) {
        const BathSpectrum spectrum(alpha, gamma0);
        for (double eps : epsilons) {
            const double lambda_m = lambda_max_for_error(eps, beta);
            const ErasureTask probe(beta, eps, 1.0);
            const Protocol opt = optimal_protocol(probe, spectrum);
            const Protocol lin = linear_protocol(lambda_m);
            const Protocol quad = power_protocol(lambda_m, 2.0);
            for (double tau : taus) {
                const ErasureTask task(beta, eps, tau);
                const LengthReport rep = thermodynamic_length(task, spectrum);
                const TrajectoryResult ro = simulate(opt, task, spectrum);
                const TrajectoryResult rl = simulate(lin, task, spectrum);
                const TrajectoryResult rq = simulate(quad, task, spectrum);
                records.push_back({alpha, eps, tau, rep.f_eps, rep.length,
                                   rep.precise_bound, rep.asymptotic_bound, ro.irr_work,
                                   rl.irr_work, rq.irr_work, ro.achieved_error});
            }
        }
    }
    return records;
}

Table sweep_table(const std::vector<SweepRecord>& records, const std::string& provenance) {
    Table t;
    t.provenance = provenance;
    t.columns = {"alpha",          "epsilon",         "tau",
                 "f_eps",          "length",          "precise_bound",
                 "asymptotic_bound", "irr_work_optimal", "irr_work_linear",
                 "irr_work_quadratic", "achieved_error"};
    for (const auto& r : records) {
        t.append_row({r.alpha, r.epsilon, r.tau, r.f_eps, r.length, r.precise_bound,
                      r.asymptotic_bound, r.irr_work_optimal, r.irr_work_linear,
                      r.irr_work_quadratic, r.achieved_error});
    }
    return t;
}

Table run_wir_vs_tau(double alpha, double epsilon, const std::vector<double>& taus,
                     double beta, double gamma0) {
    auto records = run_sweep({alpha}, {epsilon}, taus, beta, gamma0);
    return sweep_table(records, provenance_line("wir-vs-tau", {alpha}, {epsilon}, taus,
                                                beta, gamma0));
}

Table run_wir_vs_epsilon(double alpha, double tau, const std::vector<double>& epsilons,
                         double beta, double gamma0) {
    Table t;
    t.provenance =
        provenance_line("wir-vs-epsilon", {alpha}, epsilons, {tau}, beta, gamma0);
    t.columns = {"alpha",         "epsilon",          "tau",
                 "irr_work_optimal", "precise_bound", "asymptotic_bound",
                 "delta_wir"};
    const BathSpectrum spectrum(alpha, gamma0);
    const double f_zero = f_alpha(0.0, alpha);
    const double pref2 = std::pow(beta, alpha - 1.0) / gamma0;
    const double wir_min_zero = pref2 * f_zero * f_zero / tau;
    for (double eps : epsilons) {
        const ErasureTask task(beta, eps, tau);
        const LengthReport rep = thermodynamic_length(task, spectrum);
        const Protocol opt = optimal_protocol(task, spectrum);
        const TrajectoryResult ro = simulate(opt, task, spectrum);
        const double f_ten = f_alpha(std::min(10.0 * eps, 0.5), alpha);
        const double delta_wir =
            (rep.f_eps * rep.f_eps - f_ten * f_ten) * pref2 / tau / wir_min_zero;
        t.append_row({alpha, eps, tau, ro.irr_work, rep.precise_bound,
                      rep.asymptotic_bound, delta_wir});
    }
    return t;
}

Table run_optimal_protocols(const std::vector<double>& alphas,
                            const std::vector<double>& epsilons, double beta,
                            double gamma0) {
    Table t;
    t.provenance =
        provenance_line("optimal-protocols", alphas, epsilons, {}, beta, gamma0);
    t.columns = {"alpha", "epsilon", "fitted_exponent", "t_tilde", "lambda",
                 "dlambda_dt_tilde"};
    for (double alpha : alphas) {
        const BathSpectrum spectrum(alpha, gamma0);
        for (double eps : epsilons) {
            const ErasureTask task(beta, eps, 1.0);
            const Protocol opt = optimal_protocol(task, spectrum);
            const double exponent = scaling_exponent_fit(opt, 1e-4, 1e-2);
            for (std::size_t i = 0; i < opt.sample_times().size(); ++i) {
                const double tt = opt.sample_times()[i];
                t.append_row({alpha, eps, exponent, tt, opt.sample_values()[i],
                              opt.derivative(tt)});
            }
        }
    }
    return t;
}

Table run_tradeoff_surface(double alpha, const std::vector<double>& epsilons,
                           const std::vector<double>& taus, double beta, double gamma0) {
    Table t;
    t.provenance =
        provenance_line("tradeoff-surface", {alpha}, epsilons, taus, beta, gamma0);
    t.columns = {"alpha",        "epsilon",          "tau",
                 "wtilde_min",   "precise_bound",    "L0_minus_L_exact",
                 "L0_minus_L_asym"};
    const BathSpectrum spectrum(alpha, gamma0);
    const double pref = std::sqrt(std::pow(beta, alpha - 1.0) / gamma0);
    for (double eps : epsilons) {
        const double tail = tail_integral(eps, alpha);
        const double l_diff_exact = pref * tail;
        const double l_diff_asym =
            pref * 2.0 * std::sqrt(eps * std::pow(std::log(1.0 / eps), -alpha));
        for (double tau : taus) {
            const ErasureTask task(beta, eps, tau);
            const LengthReport rep = thermodynamic_length(task, spectrum);
            t.append_row({alpha, eps, tau, rep.asymptotic_bound, rep.precise_bound,
                          l_diff_exact, l_diff_asym});
        }
    }
    return t;
}

Table run_delta_wir(double alpha, const std::vector<double>& epsilons, double beta,
                    double gamma0) {
    Table t;
    t.provenance = provenance_line("delta-wir", {alpha}, epsilons, {}, beta, gamma0);
    t.columns = {"alpha", "epsilon", "delta_wir"};
    const double f_zero = f_alpha(0.0, alpha);
    for (double eps : epsilons) {
        const double fe = f_alpha(eps, alpha);
        const double f_ten = f_alpha(std::min(10.0 * eps, 0.5), alpha);
        t.append_row({alpha, eps, (fe * fe - f_ten * f_ten) / (f_zero * f_zero)});
    }
    return t;
}

Table run_asymptotic_length_check(const std::vector<double>& alphas,
                                  const std::vector<double>& epsilons, double beta,
                                  double gamma0) {
    Table t;
    t.provenance = provenance_line("asymptotic-length-check", alphas, epsilons, {},
                                   beta, gamma0);
    t.columns = {"alpha", "epsilon", "L0_minus_L_exact", "L0_minus_L_asym", "rel_error"};
    for (double alpha : alphas) {
        const double pref = std::sqrt(std::pow(beta, alpha - 1.0) / gamma0);
        for (double eps : epsilons) {
            const double exact = pref * tail_integral(eps, alpha);
            const double asym =
                pref * 2.0 * std::sqrt(eps * std::pow(std::log(1.0 / eps), -alpha));
            t.append_row({alpha, eps, exact, asym, std::abs(exact - asym) / exact});
        }
    }
    return t;
}

Table run_experiment(const ExperimentConfig& cfg) {
    auto or_default = [](const std::vector<double>& v, std::vector<double> fallback) {
        return v.empty() ? std::move(fallback) : v;
    };
    const std::string& name = cfg.experiment;
    if (name == "length-table") {
        return run_length_table(or_default(cfg.alphas, {0.0, 1.0, 2.0}),
                                or_default(cfg.epsilons, default_epsilon_grid()),
                                cfg.beta, cfg.gamma0);
    }
    if (name == "headline-bounds") {
        return run_headline_bounds(or_default(cfg.epsilons, {0.01, 0.001}), cfg.beta,
                                   cfg.gamma0);
    }
    if (name == "wir-vs-tau") {
        const auto alphas = or_default(cfg.alphas, {1.0});
        const auto epsilons = or_default(cfg.epsilons, {1e-4});
        if (alphas.size() != 1 || epsilons.size() != 1) {
            throw std::invalid_argument("wir-vs-tau: needs a single alpha and epsilon");
        }
        return run_wir_vs_tau(alphas[0], epsilons[0],
                              or_default(cfg.taus, default_tau_grid()), cfg.beta,
                              cfg.gamma0);
    }
    if (name == "wir-vs-epsilon") {
        const auto alphas = or_default(cfg.alphas, {1.0});
        const auto taus = or_default(cfg.taus, {200.0});
        if (alphas.size() != 1 || taus.size() != 1) {
            throw std::invalid_argument("wir-vs-epsilon: needs a single alpha and tau");
        }
        return run_wir_vs_epsilon(alphas[0], taus[0],
                                  or_default(cfg.epsilons, default_epsilon_grid()),
                                  cfg.beta, cfg.gamma0);
    }
    if (name == "optimal-protocols") {
        return run_optimal_protocols(or_default(cfg.alphas, {1.0}),
                                     or_default(cfg.epsilons, {1e-1, 1e-2, 1e-4}),
                                     cfg.beta, cfg.gamma0);
    }
    if (name == "tradeoff-surface") {
        const auto alphas = or_default(cfg.alphas, {1.0});
        if (alphas.size() != 1) {
            throw std::invalid_argument("tradeoff-surface: needs a single alpha");
        }
        return run_tradeoff_surface(alphas[0],
                                    or_default(cfg.epsilons, default_epsilon_grid()),
                                    or_default(cfg.taus, default_tau_grid()), cfg.beta,
                                    cfg.gamma0);
    }
    if (name == "delta-wir") {
        const auto alphas = or_default(cfg.alphas, {1.0});
        if (alphas.size() != 1) {
            throw std::invalid_argument("delta-wir: needs a single alpha");
        }
        return run_delta_wir(alphas[0],
                             or_default(cfg.epsilons, log_grid(1e-6, 0.05, 16)),
                             cfg.beta, cfg.gamma0);
    }
    if (name == "asymptotic-length-check") {
        return run_asymptotic_length_check(
            or_default(cfg.alphas, {0.0, 1.0, 2.0}),
            or_default(cfg.epsilons, default_epsilon_grid()), cfg.beta, cfg.gamma0);
    }
    throw std::invalid_argument("unknown experiment: " + name);
}

}  // namespace qerasure
