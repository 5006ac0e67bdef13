// protocol.hpp — driving schedules lambda(t~) on t~ = t/tau in [0, 1]:
// closed-form ramps, sampled schedules, and the minimal-dissipation optimal
// protocol obtained by integrating the equidistance ODE from its analytic
// small-t~ seed.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "qerasure/ode.hpp"
#include "qerasure/physics.hpp"
#include "qerasure/quadrature.hpp"

namespace qerasure {

// Optimal-protocol construction failed its arrival check |lambda(1) - lambda_m|.
class ProtocolError : public std::runtime_error {
public:
    ProtocolError(const std::string& msg, double achieved, double target)
        : std::runtime_error(msg), achieved_(achieved), target_(target) {}

    double achieved_lambda() const { return achieved_; }
    double target_lambda() const { return target_; }

private:
    double achieved_;
    double target_;
};

// A driving schedule. Closed-form kinds evaluate exactly; optimal/sampled kinds
// hold a monotone sample grid with a monotone-cubic dense interpolant. Values
// are immutable after construction and safe to share across threads.
class Protocol {
public:
    enum class Kind { linear, power, optimal, sampled };

    Kind kind() const { return kind_; }
    double lambda_max() const { return lambda_max_; }

    // t~ below which the analytic seed (optimal) or first sample (sampled)
    // replaces the interpolant; 0 for closed-form kinds.
    double seed_time() const { return seed_time_; }

    double value(double t_tilde) const;
    double derivative(double t_tilde) const;
    double operator()(double t_tilde) const { return value(t_tilde); }

    bool has_samples() const { return !times_.empty(); }
    const std::vector<double>& sample_times() const { return times_; }
    const std::vector<double>& sample_values() const { return values_; }

    // columns: t_tilde, lambda, dlambda_dt_tilde
    void write_csv(std::ostream& out) const;
    static Protocol from_csv(std::istream& in);

    static Protocol make_linear(double lambda_max);
    static Protocol make_power(double lambda_max, double exponent);
    // frozen spacing lambda(t~) = lambda_c; for relaxation studies
    static Protocol constant(double lambda_c);
    static Protocol make_sampled(std::vector<double> t_tildes, std::vector<double> lambdas);

private:
    friend Protocol optimal_protocol(const ErasureTask&, const BathSpectrum&,
                                     const OdeConfig&);

    Protocol() = default;
    void build_interpolant();  // monotone cubic (Fritsch-Carlson) slopes

    Kind kind_{Kind::linear};
    double lambda_max_{0.0};
    double exponent_{1.0};   // power kind
    double seed_time_{0.0};
    double seed_coeff_{0.0};     // optimal kind: lambda = C t~^q below seed_time
    double seed_exponent_{1.0};  // q = 2/(3 - alpha)

    std::vector<double> times_;   // strictly increasing in [0, 1]
    std::vector<double> values_;  // non-decreasing
    std::vector<double> slopes_;  // interpolant node slopes
};

// lambda(t~) = lambda_m t~.
Protocol linear_protocol(double lambda_max);

// lambda(t~) = lambda_m t~^p, p > 0.
Protocol power_protocol(double lambda_max, double exponent);

inline OdeConfig optimal_protocol_ode_defaults() {
    OdeConfig cfg;
    // the arrival error amplifies like g(lambda_m)/g(lambda_seed); tight
    // tolerances keep |lambda(1) - lambda_m| far below the arrival check
    cfg.rel_tol = 1e-10;
    cfg.abs_tol = 1e-16;
    return cfg;
}

// Minimal-dissipation schedule: integrates
//   dlambda/dt~ = L(eps) [beta (1-e^-bl) e^-bl / (gamma0 lambda^alpha (1+e^-bl)^3)]^(-1/2)
// (bl = beta lambda) from the analytic seed
//   lambda(t~) = [2 (3-alpha)^2 gamma0 beta^-2 L^2(eps)]^(1/(3-alpha)) t~^(2/(3-alpha))
// at t~ = 1e-6 up to t~ = 1, then checks |lambda(1) - lambda_m| <= 1e-4 max(lambda_m, 1/beta).
// The t~-parameterized schedule is independent of tau.
Protocol optimal_protocol(const ErasureTask& task, const BathSpectrum& spectrum,
                          const OdeConfig& cfg = optimal_protocol_ode_defaults());

// Least-squares slope of ln lambda vs ln t~ over [window_lo, window_hi],
// sampled at n_points log-spaced times. Requires 0 < lo < hi and a protocol
// strictly increasing and positive on the window.
double scaling_exponent_fit(const Protocol& protocol, double window_lo, double window_hi,
                            int n_points = 33);

}  // namespace qerasure
