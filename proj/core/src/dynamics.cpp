#include "qerasure/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace qerasure {

namespace {

// Drive onset threshold on beta*lambda. Below it the Gibbs state is maximally
// mixed to O(beta lambda) and, for alpha < 1, the relaxation rate diverges and
// would stability-limit an explicit solver; skipping [0, t_start] changes the
// work integrals by O((beta lambda)^2) ~ 1e-8.
constexpr double kOnsetBetaLambda = 1e-4;

double onset_time(const Protocol& protocol, double beta) {
    double lo = protocol.seed_time();
    if (beta * protocol.value(lo) >= kOnsetBetaLambda) {
        return lo;
    }
    if (beta * protocol.value(1.0) < kOnsetBetaLambda) {
        return 1.0;  // whole schedule is in the flat maximally-mixed regime
    }
    double hi = 1.0;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (beta * protocol.value(mid) >= kOnsetBetaLambda) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace

TrajectoryResult simulate(const Protocol& protocol, const ErasureTask& task,
                          const BathSpectrum& spectrum, const InitialState& init,
                          const OdeConfig& cfg, int n_samples) {
    if (n_samples < 2) {
        throw std::invalid_argument("simulate: n_samples must be >= 2");
    }
    const double beta = task.beta;
    const double tau = task.tau;
    const double lambda_final = protocol.value(1.0);
    if (!(protocol.value(0.0) >= 0.0) || !std::isfinite(lambda_final)) {
        throw std::invalid_argument("simulate: protocol spacing must be finite and >= 0");
    }

    const double t_start = onset_time(protocol, beta);

    // state: [p_e, drive work, irreversible work], in t~ = t/tau time
    auto rhs = [&](double t_tilde, std::span<const double> y, std::span<double> dydt) {
        const double lam = protocol.value(t_tilde);
        const double dlam = protocol.derivative(t_tilde);
        const double p = y[0];
        const double peq = equilibrium_population(lam, beta);
        const double rate = relaxation_rate(spectrum, lam, beta);
        dydt[0] = tau * rate * (peq - p);
        dydt[1] = 0.5 * dlam * (2.0 * p - 1.0);
        dydt[2] = dlam * (p - peq);
    };

    DenseSolution sol;
    const bool driven = t_start < 1.0;
    if (driven) {
        sol = solve_ivp(rhs, t_start, 1.0, {init.p_e0, 0.0, 0.0}, cfg);
    }

    TrajectoryResult result;
    result.target_error = task.epsilon;
    result.times.reserve(n_samples);
    result.t_tildes.reserve(n_samples);
    result.lambdas.reserve(n_samples);
    result.populations.reserve(n_samples);
    result.eq_populations.reserve(n_samples);
    result.work_cumulative.reserve(n_samples);
    result.irr_work_cumulative.reserve(n_samples);

    std::vector<double> y(3);
    for (int i = 0; i < n_samples; ++i) {
        const double t_tilde = static_cast<double>(i) / (n_samples - 1);
        const double lam = protocol.value(t_tilde);
        double p = init.p_e0, w = 0.0, wir = 0.0;
        if (driven && t_tilde >= t_start) {
            sol.eval(t_tilde, y);
            p = y[0];
            w = y[1];
            wir = y[2];
        }
        result.times.push_back(t_tilde * tau);
        result.t_tildes.push_back(t_tilde);
        result.lambdas.push_back(lam);
        result.populations.push_back(p);
        result.eq_populations.push_back(equilibrium_population(lam, beta));
        result.work_cumulative.push_back(w);
        result.irr_work_cumulative.push_back(wir);
    }

    double p_end = init.p_e0, w_end = 0.0, wir_end = 0.0;
    if (driven) {
        sol.eval(1.0, y);
        p_end = y[0];
        w_end = y[1];
        wir_end = y[2];
    }
    result.work_drive = w_end;
    result.irr_work = wir_end;
    result.achieved_error = p_end;
    result.work_reset = (p_end - 0.5) * (0.0 - lambda_final);
    result.work_total = result.work_drive + result.work_reset;
    return result;
}

double slow_driving_population(double lambda, double lambda_dot, const ErasureTask& task,
                               const BathSpectrum& spectrum) {
    if (!(lambda > 0.0)) {
        throw std::domain_error("slow_driving_population: lambda must be > 0");
    }
    const double beta = task.beta;
    const double peq = equilibrium_population(lambda, beta);
    const double gamma = dissipation_coefficient(spectrum, lambda);
    const double ex = std::exp(-beta * lambda);
    const double dpeq_dlambda = -beta * ex / ((1.0 + ex) * (1.0 + ex));
    return peq - (1.0 - 2.0 * peq) / gamma * dpeq_dlambda * lambda_dot;
}

double irreversible_power_slow(double lambda, double lambda_dot, const ErasureTask& task,
                               const BathSpectrum& spectrum) {
    if (!(lambda > 0.0)) {
        throw std::domain_error("irreversible_power_slow: lambda must be > 0");
    }
    const double beta = task.beta;
    const double gamma = dissipation_coefficient(spectrum, lambda);
    const double x = beta * lambda;
    const double ex = std::exp(-x);
    const double one_minus_ex = -std::expm1(-x);
    const double profile = one_minus_ex * ex / std::pow(1.0 + ex, 3);
    return beta / gamma * profile * lambda_dot * lambda_dot;
}

void TrajectoryResult::write_csv(std::ostream& out) const {
    out << "t,t_tilde,lambda,p_e,p_eq,w_cum,wir_cum\n";
    char buf[256];
    for (std::size_t i = 0; i < times.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                      times[i], t_tildes[i], lambdas[i], populations[i],
                      eq_populations[i], work_cumulative[i], irr_work_cumulative[i]);
        out << buf;
    }
}

std::string TrajectoryResult::summary_json() const {
    nlohmann::ordered_json j;
    j["work_drive"] = work_drive;
    j["work_reset"] = work_reset;
    j["work_total"] = work_total;
    j["irr_work"] = irr_work;
    j["achieved_error"] = achieved_error;
    j["target_error"] = target_error;
    j["n_samples"] = times.size();
    j["tau"] = times.empty() ? 0.0 : times.back();
    return j.dump(2);
}

}  // namespace qerasure
