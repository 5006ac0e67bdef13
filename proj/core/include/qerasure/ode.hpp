// ode.hpp — adaptive explicit Runge-Kutta (Dormand-Prince 5(4)) with a
// continuous extension, so solutions can be queried at arbitrary times.

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qerasure {

struct OdeConfig {
    double rel_tol{1e-9};
    double abs_tol{1e-12};
    double initial_step{1e-6};      // fraction of |t1 - t0|
    double max_step_fraction{0.01}; // step cap as fraction of |t1 - t0|
    long max_steps{1'000'000};
};

// Dense solution of an IVP: piecewise-quartic interpolant between accepted
// steps. Queries exactly at accepted step times return the stored states.
// Immutable after construction; safe to share across threads.
class DenseSolution {
public:
    DenseSolution() = default;

    double t0() const { return times_.empty() ? 0.0 : times_.front(); }
    double t1() const { return times_.empty() ? 0.0 : times_.back(); }
    std::size_t dimension() const { return dim_; }
    std::size_t step_count() const { return times_.empty() ? 0 : times_.size() - 1; }
    const std::vector<double>& times() const { return times_; }

    // State component i at the accepted step node k.
    double node_state(std::size_t k, std::size_t i) const {
        return states_[k * dim_ + i];
    }

    void eval(double t, std::span<double> y) const;
    std::vector<double> eval(double t) const;
    double eval(double t, std::size_t component) const;

private:
    friend DenseSolution solve_ivp(
        const std::function<void(double, std::span<const double>, std::span<double>)>&,
        double, double, std::vector<double>, const OdeConfig&);

    std::size_t dim_{0};
    std::vector<double> times_;   // accepted step times, ascending
    std::vector<double> states_;  // (n+1) x dim
    std::vector<double> rcont_;   // n x 5 x dim interpolation coefficients

    std::size_t locate(double t) const;
};

using OdeRhs = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

// Step-size underflow or max_steps exceeded; carries the trajectory computed
// up to the failure time.
class OdeError : public std::runtime_error {
public:
    OdeError(const std::string& msg, DenseSolution partial)
        : std::runtime_error(msg),
          partial_(std::make_shared<DenseSolution>(std::move(partial))) {}

    const DenseSolution& partial() const { return *partial_; }

private:
    std::shared_ptr<const DenseSolution> partial_;
};

// Integrate y' = rhs(t, y) from t0 to t1 (t1 >= t0) with error control
// per component: |e_i| <= abs_tol + rel_tol * |y_i|.
DenseSolution solve_ivp(const OdeRhs& rhs, double t0, double t1,
                        std::vector<double> y0, const OdeConfig& cfg = {});

}  // namespace qerasure
