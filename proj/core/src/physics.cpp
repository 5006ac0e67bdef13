#include "qerasure/physics.hpp"

#include <cmath>
#include <limits>

namespace qerasure {

double equilibrium_population(double lambda, double beta) {
    if (!(lambda >= 0.0)) {
        throw std::domain_error("equilibrium_population: lambda must be >= 0");
    }
    if (!(beta > 0.0)) {
        throw std::domain_error("equilibrium_population: beta must be > 0");
    }
    const double ex = std::exp(-beta * lambda);
    return ex / (1.0 + ex);
}

double bath_occupation(double lambda, double beta) {
    if (!(lambda > 0.0)) {
        throw std::domain_error("bath_occupation: lambda must be > 0 (occupation diverges at 0)");
    }
    if (!(beta > 0.0)) {
        throw std::domain_error("bath_occupation: beta must be > 0");
    }
    return 1.0 / std::expm1(beta * lambda);
}

double dissipation_coefficient(const BathSpectrum& spectrum, double lambda) {
    if (!(lambda >= 0.0)) {
        throw std::domain_error("dissipation_coefficient: lambda must be >= 0");
    }
    if (spectrum.alpha == 0.0) {
        return spectrum.gamma0;
    }
    return spectrum.gamma0 * std::pow(lambda, spectrum.alpha);
}

double shannon_entropy(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::domain_error("shannon_entropy: epsilon must be in [0, 1]");
    }
    // continuous extension; the branch avoids 0 * log 0
    const double a = (epsilon < 1e-300) ? 0.0 : -epsilon * std::log(epsilon);
    const double onem = 1.0 - epsilon;
    const double b = (onem <= 0.0) ? 0.0 : -onem * std::log1p(-epsilon);
    return a + b;
}

double free_energy_change(const ErasureTask& task) {
    return (std::log(2.0) - shannon_entropy(task.epsilon)) / task.beta;
}

double lambda_max_for_error(double epsilon, double beta) {
    if (!(epsilon > 0.0 && epsilon <= 0.5)) {
        throw std::domain_error("lambda_max_for_error: epsilon must be in (0, 1/2]");
    }
    if (!(beta > 0.0)) {
        throw std::domain_error("lambda_max_for_error: beta must be > 0");
    }
    return std::log(1.0 / epsilon - 1.0) / beta;
}

double relaxation_rate(const BathSpectrum& spectrum, double lambda, double beta) {
    if (!(lambda >= 0.0)) {
        throw std::domain_error("relaxation_rate: lambda must be >= 0");
    }
    if (!(beta > 0.0)) {
        throw std::domain_error("relaxation_rate: beta must be > 0");
    }
    if (lambda == 0.0) {
        if (spectrum.alpha > 1.0) return 0.0;
        if (spectrum.alpha == 1.0) return 2.0 * spectrum.gamma0 / beta;
        return std::numeric_limits<double>::infinity();
    }
    const double x = beta * lambda;
    // coth(x/2) = (1 + e^-x) / (1 - e^-x); expm1 keeps the small-x limit exact
    const double coth_half = (1.0 + std::exp(-x)) / (-std::expm1(-x));
    return dissipation_coefficient(spectrum, lambda) * coth_half;
}

double ErasureTask::lambda_max() const { return lambda_max_for_error(epsilon, beta); }

double ErasureTask::delta_f() const { return free_energy_change(*this); }

}  // namespace qerasure
