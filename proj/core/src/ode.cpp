#include "qerasure/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qerasure {

namespace {

// Dormand-Prince 5(4) tableau (Hairer-Norsett-Wanner DOPRI5).
constexpr double kC2 = 1.0 / 5.0, kC3 = 3.0 / 10.0, kC4 = 4.0 / 5.0, kC5 = 8.0 / 9.0;
constexpr double kA21 = 1.0 / 5.0;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0,
                 kA53 = 64448.0 / 6561.0, kA54 = -212.0 / 729.0;
constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0, kA63 = 46732.0 / 5247.0,
                 kA64 = 49.0 / 176.0, kA65 = -5103.0 / 18656.0;
constexpr double kA71 = 35.0 / 384.0, kA73 = 500.0 / 1113.0, kA74 = 125.0 / 192.0,
                 kA75 = -2187.0 / 6784.0, kA76 = 11.0 / 84.0;
// y1 - yhat1 (order-5 minus embedded order-4 solution)
constexpr double kE1 = 71.0 / 57600.0, kE3 = -71.0 / 16695.0, kE4 = 71.0 / 1920.0,
                 kE5 = -17253.0 / 339200.0, kE6 = 22.0 / 525.0, kE7 = -1.0 / 40.0;
// continuous-extension coefficients
constexpr double kD1 = -12715105075.0 / 11282082432.0;
constexpr double kD3 = 87487479700.0 / 32700410799.0;
constexpr double kD4 = -10690763975.0 / 1880347072.0;
constexpr double kD5 = 701980252875.0 / 199316789632.0;
constexpr double kD6 = -1453857185.0 / 822651844.0;
constexpr double kD7 = 69997945.0 / 29380423.0;

}  // namespace

std::size_t DenseSolution::locate(double t) const {
    // index of the step interval [times_[k], times_[k+1]] containing t
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    std::size_t k = static_cast<std::size_t>(it - times_.begin());
    if (k > 0) --k;
    if (k >= step_count() && step_count() > 0) k = step_count() - 1;
    return k;
}

void DenseSolution::eval(double t, std::span<double> y) const {
    if (times_.empty()) {
        throw std::logic_error("DenseSolution: empty solution");
    }
    if (y.size() != dim_) {
        throw std::invalid_argument("DenseSolution::eval: output span size mismatch");
    }
    if (!(t >= times_.front() && t <= times_.back())) {
        throw std::domain_error("DenseSolution::eval: t outside [t0, t1]");
    }
    // snap to stored node states so accepted step points are reproduced exactly
    auto node = std::lower_bound(times_.begin(), times_.end(), t);
    if (node != times_.end() && *node == t) {
        const std::size_t k = static_cast<std::size_t>(node - times_.begin());
        for (std::size_t i = 0; i < dim_; ++i) y[i] = states_[k * dim_ + i];
        return;
    }

    const std::size_t k = locate(t);
    const double h = times_[k + 1] - times_[k];
    const double theta = (t - times_[k]) / h;
    const double om = 1.0 - theta;
    const double* rc = &rcont_[k * 5 * dim_];
    for (std::size_t i = 0; i < dim_; ++i) {
        const double r1 = rc[0 * dim_ + i];
        const double r2 = rc[1 * dim_ + i];
        const double r3 = rc[2 * dim_ + i];
        const double r4 = rc[3 * dim_ + i];
        const double r5 = rc[4 * dim_ + i];
        y[i] = r1 + theta * (r2 + om * (r3 + theta * (r4 + om * r5)));
    }
}

std::vector<double> DenseSolution::eval(double t) const {
    std::vector<double> y(dim_);
    eval(t, y);
    return y;
}

double DenseSolution::eval(double t, std::size_t component) const {
    std::vector<double> y(dim_);
    eval(t, y);
    return y.at(component);
}

DenseSolution solve_ivp(const OdeRhs& rhs, double t0, double t1,
                        std::vector<double> y0, const OdeConfig& cfg) {
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0)) {
        throw std::invalid_argument("solve_ivp: tolerances must be > 0");
    }
    if (!(t1 >= t0)) {
        throw std::invalid_argument("solve_ivp: requires t1 >= t0");
    }
    const std::size_t dim = y0.size();
    if (dim == 0) {
        throw std::invalid_argument("solve_ivp: empty state");
    }

    DenseSolution sol;
    sol.dim_ = dim;
    sol.times_.push_back(t0);
    sol.states_.insert(sol.states_.end(), y0.begin(), y0.end());
    if (t1 == t0) {
        return sol;
    }

    const double span_len = t1 - t0;
    const double h_max = cfg.max_step_fraction * span_len;
    double h = std::clamp(cfg.initial_step * span_len,
                          std::numeric_limits<double>::min(), h_max);

    std::vector<double> y = std::move(y0);
    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim);
    std::vector<double> ytmp(dim), ynew(dim), yerr(dim);

    double t = t0;
    rhs(t, y, k1);
    bool first_same_as_last = false;

    for (long step = 0; step < cfg.max_steps; ++step) {
        if (t >= t1) {
            return sol;
        }
        h = std::min(h, t1 - t);
        if (t + h == t) {
            throw OdeError("solve_ivp: step size underflow at t = " + std::to_string(t),
                           std::move(sol));
        }
        if (first_same_as_last) {
            std::swap(k1, k7);
            first_same_as_last = false;
        }

        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * kA21 * k1[i];
        rhs(t + kC2 * h, ytmp, k2);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * (kA31 * k1[i] + kA32 * k2[i]);
        rhs(t + kC3 * h, ytmp, k3);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * (kA41 * k1[i] + kA42 * k2[i] + kA43 * k3[i]);
        rhs(t + kC4 * h, ytmp, k4);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * (kA51 * k1[i] + kA52 * k2[i] + kA53 * k3[i] + kA54 * k4[i]);
        rhs(t + kC5 * h, ytmp, k5);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] +
                      h * (kA61 * k1[i] + kA62 * k2[i] + kA63 * k3[i] + kA64 * k4[i] +
                           kA65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (std::size_t i = 0; i < dim; ++i)
            ynew[i] = y[i] +
                      h * (kA71 * k1[i] + kA73 * k3[i] + kA74 * k4[i] + kA75 * k5[i] +
                           kA76 * k6[i]);
        rhs(t + h, ynew, k7);

        double err_norm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            yerr[i] = h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] + kE5 * k5[i] +
                           kE6 * k6[i] + kE7 * k7[i]);
            const double scale =
                cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double r = yerr[i] / scale;
            err_norm += r * r;
        }
        err_norm = std::sqrt(err_norm / static_cast<double>(dim));

        if (!std::isfinite(err_norm)) {
            throw OdeError("solve_ivp: non-finite state at t = " + std::to_string(t),
                           std::move(sol));
        }
        if (err_norm <= 1.0) {
            // accept: store continuous-extension coefficients for [t, t+h],
            // laid out as 5 blocks of dim values each
            const std::size_t base = sol.rcont_.size();
            sol.rcont_.resize(base + 5 * dim);
            double* rc = sol.rcont_.data() + base;
            for (std::size_t i = 0; i < dim; ++i) {
                const double ydiff = ynew[i] - y[i];
                const double bspl = h * k1[i] - ydiff;
                rc[0 * dim + i] = y[i];
                rc[1 * dim + i] = ydiff;
                rc[2 * dim + i] = bspl;
                rc[3 * dim + i] = ydiff - h * k7[i] - bspl;
                rc[4 * dim + i] = h * (kD1 * k1[i] + kD3 * k3[i] + kD4 * k4[i] +
                                       kD5 * k5[i] + kD6 * k6[i] + kD7 * k7[i]);
            }

            t += h;
            std::swap(y, ynew);
            sol.times_.push_back(t);
            sol.states_.insert(sol.states_.end(), y.begin(), y.end());
            first_same_as_last = true;

            const double fac = 0.9 * std::pow(std::max(err_norm, 1e-10), -0.2);
            h = std::min(h * std::clamp(fac, 0.2, 5.0), h_max);
        } else {
            const double fac = 0.9 * std::pow(err_norm, -0.2);
            h *= std::clamp(fac, 0.2, 1.0);
        }
    }
    if (t >= t1) {
        return sol;
    }
    throw OdeError("solve_ivp: max_steps exceeded at t = " + std::to_string(t),
                   std::move(sol));
}

}  // namespace qerasure
