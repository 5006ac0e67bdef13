// experiments.hpp — named reproduction recipes tying the library together;
// each emits a deterministic machine-readable table.

#pragma once

#include <string>
#include <vector>

#include "qerasure/table.hpp"

namespace qerasure {

// Flat configuration for the experiment runner; unset lists fall back to
// per-experiment defaults. Values must satisfy the invariants of the domain
// types they feed.
struct ExperimentConfig {
    std::string experiment;  // length-table | headline-bounds | tradeoff-surface |
                             // optimal-protocols | wir-vs-tau | wir-vs-epsilon |
                             // delta-wir | asymptotic-length-check
    std::vector<double> alphas;
    std::vector<double> epsilons;
    std::vector<double> taus;
    double beta{1.0};
    double gamma0{1.0};
    std::string output;         // path; empty = stdout
    std::string format{"csv"};  // csv | json
};

// One sweep row per (alpha, epsilon, tau) tuple.
struct SweepRecord {
    double alpha, epsilon, tau;
    double f_eps, length, precise_bound, asymptotic_bound;
    double irr_work_optimal, irr_work_linear, irr_work_quadratic;
    double achieved_error;  // optimal protocol
};

// f_alpha(0) per alpha plus f_alpha(eps) on a log grid.
Table run_length_table(const std::vector<double>& alphas,
                       const std::vector<double>& epsilons, double beta, double gamma0);

// Precise bound L^2(eps)/tau in units k_B T / (gamma0 tau) for alpha = 0.
Table run_headline_bounds(const std::vector<double>& epsilons, double beta, double gamma0);

// Per-tau irreversible work for optimal/linear/quadratic protocols plus bounds.
Table run_wir_vs_tau(double alpha, double epsilon, const std::vector<double>& taus,
                     double beta, double gamma0);

// Per-epsilon optimal-protocol irreversible work, bounds, and the
// order-of-magnitude cost Delta W_ir(eps).
Table run_wir_vs_epsilon(double alpha, double tau, const std::vector<double>& epsilons,
                         double beta, double gamma0);

// Dense optimal schedules lambda(t~) per (alpha, epsilon) with fitted
// initial-stage exponents.
Table run_optimal_protocols(const std::vector<double>& alphas,
                            const std::vector<double>& epsilons, double beta,
                            double gamma0);

// Analytic trade-off bound surface over (epsilon, tau) plus the asymptotic
// length comparison columns.
Table run_tradeoff_surface(double alpha, const std::vector<double>& epsilons,
                           const std::vector<double>& taus, double beta, double gamma0);

// Delta W_ir(eps) = [Wir_min(eps) - Wir_min(10 eps)] / Wir_min(0) from the
// precise bounds (tau cancels).
Table run_delta_wir(double alpha, const std::vector<double>& epsilons, double beta,
                    double gamma0);

// L(0) - L(eps) exactly vs its asymptotic expression, with relative error.
Table run_asymptotic_length_check(const std::vector<double>& alphas,
                                  const std::vector<double>& epsilons, double beta,
                                  double gamma0);

// Full (alpha x epsilon x tau) sweep with all three protocols.
std::vector<SweepRecord> run_sweep(const std::vector<double>& alphas,
                                   const std::vector<double>& epsilons,
                                   const std::vector<double>& taus, double beta,
                                   double gamma0);
Table sweep_table(const std::vector<SweepRecord>& records, const std::string& provenance);

// Dispatch by cfg.experiment with per-experiment default grids filled in.
Table run_experiment(const ExperimentConfig& cfg);

// Default grids: 16 log-spaced eps in [1e-6, 1e-1]; 12 log-spaced gamma0*tau
// in [10, 1e4].
std::vector<double> default_epsilon_grid();
std::vector<double> default_tau_grid();

}  // namespace qerasure
