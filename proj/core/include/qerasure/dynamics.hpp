// dynamics.hpp — exact finite-time erasure simulation: the population master
// equation driven by a Protocol, with work and irreversible-work integrals
// carried as extra state of the same integrator, plus the first-order
// slow-driving forms used for cross-checks.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qerasure/ode.hpp"
#include "qerasure/physics.hpp"
#include "qerasure/protocol.hpp"

namespace qerasure {

struct InitialState {
    double p_e0{0.5};

    InitialState() = default;
    explicit InitialState(double p) : p_e0(p) {
        if (!(p_e0 >= 0.0 && p_e0 <= 1.0)) {
            throw std::invalid_argument("InitialState: p_e0 must be in [0, 1]");
        }
    }
};

struct TrajectoryResult {
    std::vector<double> times;            // t in [0, tau]
    std::vector<double> t_tildes;         // t / tau
    std::vector<double> lambdas;          // protocol spacing
    std::vector<double> populations;      // p_e(t)
    std::vector<double> eq_populations;   // p_e^eq(lambda(t))
    std::vector<double> work_cumulative;      // drive work up to t
    std::vector<double> irr_work_cumulative;  // irreversible work up to t

    double work_drive{0.0};   // step (i): int (lambda_dot/2)(2 p_e - 1) dt
    double work_reset{0.0};   // step (ii): (p_e(tau) - 1/2)(lambda_0 - lambda_final)
    double work_total{0.0};
    double irr_work{0.0};     // int lambda_dot (p_e - p_e^eq) dt over the drive
    double achieved_error{0.0};  // p_e(tau); >= target for any finite tau
    double target_error{0.0};

    // columns: t, t_tilde, lambda, p_e, p_eq, w_cum, wir_cum
    void write_csv(std::ostream& out) const;
    std::string summary_json() const;
};

// Integrate p_e' = gamma {n - [2n+1] p_e} with lambda = protocol(t/tau).
// The drive starts once beta*lambda exceeds a small threshold (or at the
// protocol's seed time, whichever is later); before that p_e is held at p_e0,
// which is exact in the lambda -> 0 limit where the Gibbs state is maximally
// mixed. Work integrals are accumulated as additional ODE state.
TrajectoryResult simulate(const Protocol& protocol, const ErasureTask& task,
                          const BathSpectrum& spectrum, const InitialState& init = {},
                          const OdeConfig& cfg = {}, int n_samples = 513);

// First-order slow-driving population:
// p_eq(lambda) - [(1 - 2 p_eq)/gamma] dp_eq/dlambda * lambda_dot.
// Valid for gamma(lambda) tau >> 1 (not enforced).
double slow_driving_population(double lambda, double lambda_dot, const ErasureTask& task,
                               const BathSpectrum& spectrum);

// First-order irreversible power:
// (beta/gamma) (1-e^-bl) e^-bl / (1+e^-bl)^3 * lambda_dot^2, bl = beta lambda.
// Equals lambda_dot * (slow_driving_population - p_eq) identically.
double irreversible_power_slow(double lambda, double lambda_dot, const ErasureTask& task,
                               const BathSpectrum& spectrum);

}  // namespace qerasure
