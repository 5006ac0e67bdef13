// physics.hpp — closed-form two-level-system quantities: equilibrium populations,
// bath occupation, dissipation coefficient, entropy, free-energy change, and the
// error <-> level-spacing map. Units: hbar = k_B = 1.

#pragma once

#include <stdexcept>

namespace qerasure {

// Bath spectral type: dissipation coefficient gamma(lambda) = gamma0 * lambda^alpha.
// alpha in [0,1) sub-Ohmic, alpha = 1 Ohmic, alpha > 1 super-Ohmic.
struct BathSpectrum {
    double alpha{1.0};
    double gamma0{1.0};

    BathSpectrum(double alpha_, double gamma0_) : alpha(alpha_), gamma0(gamma0_) {
        if (!(alpha >= 0.0)) {
            throw std::invalid_argument("BathSpectrum: alpha must be >= 0");
        }
        if (!(gamma0 > 0.0)) {
            throw std::invalid_argument("BathSpectrum: gamma0 must be > 0");
        }
    }
};

// One erasure job: inverse temperature, target error probability, duration.
// epsilon = 1/2 means no erasure (lambda_max = 0); epsilon = 0 (perfect erasure)
// is rejected here and handled only as a limit by the geometry module.
struct ErasureTask {
    double beta{1.0};
    double epsilon{0.01};
    double tau{1.0};

    ErasureTask(double beta_, double epsilon_, double tau_)
        : beta(beta_), epsilon(epsilon_), tau(tau_) {
        if (!(beta > 0.0)) {
            throw std::invalid_argument("ErasureTask: beta must be > 0");
        }
        if (!(tau > 0.0)) {
            throw std::invalid_argument("ErasureTask: tau must be > 0");
        }
        if (!(epsilon > 0.0 && epsilon <= 0.5)) {
            throw std::invalid_argument("ErasureTask: epsilon must be in (0, 1/2]");
        }
    }

    double lambda_max() const;  // beta^-1 ln(1/epsilon - 1)
    double delta_f() const;     // beta^-1 [ln 2 - S(epsilon)]
};

// Energy level spacing, validated non-negative.
struct LevelSpacing {
    double value{0.0};

    explicit LevelSpacing(double v) : value(v) {
        if (!(value >= 0.0)) {
            throw std::invalid_argument("LevelSpacing: lambda must be >= 0");
        }
    }
};

// Excited-state population of the instantaneous Gibbs state:
// e^(-beta lambda) / (1 + e^(-beta lambda)), in (0, 1/2].
double equilibrium_population(double lambda, double beta);

// Average particle number of the bath mode at energy lambda: 1/(e^(beta lambda) - 1).
// Diverges at lambda = 0; callers needing the lambda -> 0 behavior must use the
// combined master-equation rates (relaxation_rate) instead.
double bath_occupation(double lambda, double beta);

// gamma(lambda) = gamma0 * lambda^alpha. Returns gamma0 for alpha = 0, 0 at
// lambda = 0 for alpha > 0.
double dissipation_coefficient(const BathSpectrum& spectrum, double lambda);

// Natural-log binary entropy -e ln e - (1-e) ln(1-e), continuously extended
// to S(0) = S(1) = 0.
double shannon_entropy(double epsilon);

// Free-energy change of the erasure, beta^-1 [ln 2 - S(epsilon)]: the
// quasi-static work cost. Equals the Landauer limit beta^-1 ln 2 at epsilon -> 0.
double free_energy_change(const ErasureTask& task);

// Level spacing realizing equilibrium population epsilon: beta^-1 ln(1/eps - 1).
// Inverse of equilibrium_population at fixed beta; rejects epsilon = 0.
double lambda_max_for_error(double epsilon, double beta);

// Decay rate of p_e toward equilibrium in the master equation:
// gamma(lambda) * [2 n(lambda) + 1] = gamma(lambda) * coth(beta lambda / 2).
// Evaluated cancellation-free; finite at lambda -> 0 for alpha >= 1
// (2 gamma0 / beta at alpha = 1), +inf for alpha < 1.
double relaxation_rate(const BathSpectrum& spectrum, double lambda, double beta);

}  // namespace qerasure
