#include "qerasure/geometry.hpp"

#include <cmath>

namespace qerasure {

double length_integrand(double x, double alpha) {
    if (x < 0.0 || (x == 0.0 && alpha > 0.0)) {
        throw std::domain_error("length_integrand: requires x > 0 (x >= 0 for alpha = 0)");
    }
    if (x == 0.0) {
        return 0.0;  // alpha = 0 limit
    }
    if (x > 500.0) {
        // e^-x underflows inside the square root well before e^-x/2 does
        return std::exp(-0.5 * x - 0.5 * alpha * std::log(x));
    }
    const double ex = std::exp(-x);
    const double one_minus_ex = -std::expm1(-x);
    const double denom = std::pow(x, alpha) * std::pow(1.0 + ex, 3);
    return std::sqrt(one_minus_ex * ex / denom);
}

namespace {

// Split point for integrals reaching x -> 0 under the compactified rule: the
// u = e^(-x/2) substitution maps x = 0 to u = 1, where the x^(-alpha/2)
// endpoint behavior (singular for alpha > 1) cannot be resolved past the
// double grid near 1. Below x_c the quadrature runs in x-space, where the
// same endpoint sits at 0 and subdivision depth is unlimited.
constexpr double kTailSplit = 1.0;

double integrate_to_infinity(double x_min, double alpha, const QuadratureConfig& cfg) {
    auto integrand = [alpha](double x) { return length_integrand(x, alpha); };
    if (x_min >= kTailSplit) {
        return integrate_semi_infinite(integrand, x_min, cfg);
    }
    return integrate(integrand, x_min, kTailSplit, cfg) +
           integrate_semi_infinite(integrand, kTailSplit, cfg);
}

}  // namespace

double f_alpha(double epsilon, double alpha, const QuadratureConfig& cfg) {
    if (!(epsilon >= 0.0 && epsilon <= 0.5)) {
        throw std::domain_error("f_alpha: epsilon must be in [0, 1/2]");
    }
    if (!(alpha >= 0.0)) {
        throw std::domain_error("f_alpha: alpha must be >= 0");
    }
    if (epsilon == 0.0) {
        return integrate_to_infinity(0.0, alpha, cfg);
    }
    const double x_max = std::log(1.0 / epsilon - 1.0);
    if (x_max == 0.0) {
        return 0.0;
    }
    auto integrand = [alpha](double x) { return length_integrand(x, alpha); };
    return integrate(integrand, 0.0, x_max, cfg);
}

double tail_integral(double epsilon, double alpha, const QuadratureConfig& cfg) {
    if (!(epsilon > 0.0 && epsilon <= 0.5)) {
        throw std::domain_error("tail_integral: epsilon must be in (0, 1/2]");
    }
    const double x_min = std::log(1.0 / epsilon - 1.0);
    return integrate_to_infinity(x_min, alpha, cfg);
}

double tail_bound(double epsilon, double alpha) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::domain_error("tail_bound: epsilon must be in (0, 1)");
    }
    const double log_inv = std::log(1.0 / epsilon);
    if (alpha > 0.0 && !(log_inv > 0.0)) {
        throw std::domain_error("tail_bound: ln(1/eps) must be > 0 for alpha > 0");
    }
    return 2.0 * std::sqrt(epsilon) * std::pow(log_inv, -0.5 * alpha);
}

namespace {

double length_prefactor(double alpha, double beta, double gamma0) {
    return std::sqrt(std::pow(beta, alpha - 1.0) / gamma0);
}

std::string regime_warning(double epsilon) {
    if (epsilon > 0.1) {
        return "epsilon > 0.1: asymptotic form drops O(epsilon) terms and is "
               "outside its validity regime";
    }
    return {};
}

}  // namespace

LengthReport thermodynamic_length(const ErasureTask& task, const BathSpectrum& spectrum,
                                  const QuadratureConfig& cfg) {
    LengthReport report;
    report.f_eps = f_alpha(task.epsilon, spectrum.alpha, cfg);
    report.f_zero = f_alpha(0.0, spectrum.alpha, cfg);
    const double pref = length_prefactor(spectrum.alpha, task.beta, spectrum.gamma0);
    report.length = pref * report.f_eps;
    report.precise_bound = report.length * report.length / task.tau;
    report.mu_alpha = 4.0 / report.f_zero;

    const double length_zero = pref * report.f_zero;
    const double correction =
        report.mu_alpha *
        std::sqrt(task.epsilon * std::pow(std::log(1.0 / task.epsilon), -spectrum.alpha));
    report.asymptotic_bound =
        (1.0 - correction) * length_zero * length_zero / task.tau;
    report.validity_warning = regime_warning(task.epsilon);
    return report;
}

double asymptotic_length(double epsilon, double alpha, double beta, double gamma0,
                         const QuadratureConfig& cfg, std::string* warning) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::domain_error("asymptotic_length: epsilon must be in (0, 1)");
    }
    if (warning != nullptr) {
        *warning = regime_warning(epsilon);
    }
    const double f_zero = f_alpha(0.0, alpha, cfg);
    const double pref = length_prefactor(alpha, beta, gamma0);
    const double correction =
        2.0 * std::sqrt(std::pow(beta, alpha - 1.0) / gamma0 * epsilon *
                        std::pow(std::log(1.0 / epsilon), -alpha));
    return pref * f_zero - correction;
}

}  // namespace qerasure
