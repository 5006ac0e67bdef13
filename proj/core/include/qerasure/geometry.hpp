// geometry.hpp — thermodynamic-length quantities: the dimensionless functional
// f_alpha(epsilon), the length L(epsilon), the L^2/tau bound, the tail integral
// and its analytic bound, and the asymptotic work-time-error trade-off.

#pragma once

#include <string>

#include "qerasure/physics.hpp"
#include "qerasure/quadrature.hpp"

namespace qerasure {

struct LengthReport {
    double f_eps{0.0};             // f_alpha(epsilon)
    double f_zero{0.0};            // f_alpha(0), perfect erasure
    double length{0.0};            // L(eps) = sqrt(beta^(alpha-1)/gamma0) f_alpha(eps)
    double precise_bound{0.0};     // L^2(eps)/tau
    double asymptotic_bound{0.0};  // [1 - mu_a sqrt(eps ln^-a(1/eps))] L^2(0)/tau
    double mu_alpha{0.0};          // 4 / f_alpha(0)
    // non-empty when epsilon is outside the asymptotic form's validity regime
    // (epsilon > 0.1, where the dropped O(eps) terms matter)
    std::string validity_warning;
};

// Integrand of f_alpha: sqrt[(1-e^-x) e^-x / (x^alpha (1+e^-x)^3)] at x = beta*lambda.
// Behaves as sqrt(x^(1-alpha)/8) for x -> 0+. x = 0 is allowed only for alpha = 0.
double length_integrand(double x, double alpha);

// f_alpha(eps) = int_0^ln(1/eps-1) length_integrand dx; eps = 0 integrates to
// infinity via the compactified rule, eps = 1/2 gives 0 (empty range).
double f_alpha(double epsilon, double alpha, const QuadratureConfig& cfg = {});

// Full report: length, precise bound L^2/tau and the asymptotic trade-off bound.
LengthReport thermodynamic_length(const ErasureTask& task, const BathSpectrum& spectrum,
                                  const QuadratureConfig& cfg = {});

// I_alpha(eps) = int_{ln(1/eps-1)}^inf length_integrand dx, evaluated directly by
// semi-infinite quadrature (never by subtraction); equals f_alpha(0) - f_alpha(eps).
double tail_integral(double epsilon, double alpha, const QuadratureConfig& cfg = {});

// Analytic bound on the tail: 2 sqrt(eps) [ln(1/eps)]^(-alpha/2).
double tail_bound(double epsilon, double alpha);

// L(0) - 2 sqrt(beta^(alpha-1) gamma0^-1 eps ln^-alpha(1/eps)): asymptotic
// expression of (and lower bound on) the exact L(eps). If warning is non-null
// it is set when epsilon > 0.1.
double asymptotic_length(double epsilon, double alpha, double beta, double gamma0,
                         const QuadratureConfig& cfg = {}, std::string* warning = nullptr);

}  // namespace qerasure
