// quadrature.hpp — adaptive Gauss-Kronrod quadrature. All nodes are strictly
// interior, so integrands with integrable endpoint singularities (x^-s, s < 1)
// converge; a compactifying substitution handles semi-infinite ranges.

#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace qerasure {

struct QuadratureConfig {
    double rel_tol{1e-10};
    double abs_tol{1e-12};
    int max_subdivisions{10000};
};

// Non-convergence after max_subdivisions; carries the best estimate so far
// and the remaining error bound.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& msg, double best_estimate, double error_bound)
        : std::runtime_error(msg), best_estimate_(best_estimate), error_bound_(error_bound) {}

    double best_estimate() const { return best_estimate_; }
    double error_bound() const { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

// Integral of f over [a, b] to within max(abs_tol, rel_tol * |I|).
// f may be singular (but integrable) at a and/or b: endpoints are never evaluated.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg = {});

// Integral of f over [a, inf). Substitutes y = e^-x then y = u^2, mapping to
// 2 * int_0^exp(-a/2) f(-2 ln u) / u du; requires f to decay at least
// exponentially. The u = 0 endpoint is never evaluated.
double integrate_semi_infinite(const std::function<double(double)>& f, double a,
                               const QuadratureConfig& cfg = {});

}  // namespace qerasure
