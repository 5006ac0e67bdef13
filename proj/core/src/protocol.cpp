#include "qerasure/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "qerasure/geometry.hpp"

namespace qerasure {

namespace {

constexpr double kSeedTime = 1e-6;

void check_unit_interval(double t_tilde) {
    if (!(t_tilde >= 0.0 && t_tilde <= 1.0)) {
        throw std::domain_error("Protocol: t_tilde must be in [0, 1]");
    }
}

// Hermite evaluation on [t0, t1] with node values/slopes.
double hermite_value(double t, double t0, double t1, double y0, double y1,
                     double d0, double d1) {
    const double h = t1 - t0;
    const double s = (t - t0) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    const double h10 = s3 - 2.0 * s2 + s;
    const double h01 = -2.0 * s3 + 3.0 * s2;
    const double h11 = s3 - s2;
    return h00 * y0 + h * h10 * d0 + h01 * y1 + h * h11 * d1;
}

double hermite_derivative(double t, double t0, double t1, double y0, double y1,
                          double d0, double d1) {
    const double h = t1 - t0;
    const double s = (t - t0) / h;
    const double s2 = s * s;
    const double dh00 = (6.0 * s2 - 6.0 * s) / h;
    const double dh10 = 3.0 * s2 - 4.0 * s + 1.0;
    const double dh01 = (-6.0 * s2 + 6.0 * s) / h;
    const double dh11 = 3.0 * s2 - 2.0 * s;
    return dh00 * y0 + dh10 * d0 + dh01 * y1 + dh11 * d1;
}

}  // namespace

void Protocol::build_interpolant() {
    const std::size_t n = times_.size();
    if (n < 2) {
        slopes_.assign(n, 0.0);
        return;
    }
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = times_[i + 1] - times_[i];
        if (!(h[i] > 0.0)) {
            throw std::invalid_argument("Protocol: sample times must be strictly increasing");
        }
        delta[i] = (values_[i + 1] - values_[i]) / h[i];
        if (delta[i] < 0.0) {
            throw std::invalid_argument("Protocol: sample values must be non-decreasing");
        }
    }
    slopes_.assign(n, 0.0);
    // Fritsch-Carlson monotone slopes: weighted harmonic mean at interior nodes
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            slopes_[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            slopes_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    auto endpoint_slope = [](double h0, double h1, double d0, double d1) {
        double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (d * d0 <= 0.0) {
            d = 0.0;
        } else if (d0 * d1 <= 0.0 && std::abs(d) > 3.0 * std::abs(d0)) {
            d = 3.0 * d0;
        }
        return d;
    };
    if (n == 2) {
        slopes_[0] = slopes_[1] = delta[0];
    } else {
        slopes_[0] = endpoint_slope(h[0], h[1], delta[0], delta[1]);
        slopes_[n - 1] = endpoint_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    }
}

double Protocol::value(double t_tilde) const {
    check_unit_interval(t_tilde);
    switch (kind_) {
        case Kind::linear:
            return lambda_max_ * t_tilde;
        case Kind::power:
            return lambda_max_ * std::pow(t_tilde, exponent_);
        case Kind::optimal:
            if (lambda_max_ == 0.0) return 0.0;
            if (t_tilde <= seed_time_) {
                return seed_coeff_ * std::pow(t_tilde, seed_exponent_);
            }
            break;
        case Kind::sampled:
            if (t_tilde <= times_.front()) return values_.front();
            break;
    }
    if (t_tilde >= times_.back()) {
        return values_.back();
    }
    const auto it = std::upper_bound(times_.begin(), times_.end(), t_tilde);
    const std::size_t k = static_cast<std::size_t>(it - times_.begin()) - 1;
    return hermite_value(t_tilde, times_[k], times_[k + 1], values_[k], values_[k + 1],
                         slopes_[k], slopes_[k + 1]);
}

double Protocol::derivative(double t_tilde) const {
    check_unit_interval(t_tilde);
    switch (kind_) {
        case Kind::linear:
            return lambda_max_;
        case Kind::power:
            if (exponent_ == 1.0) return lambda_max_;
            if (t_tilde == 0.0) {
                return exponent_ > 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
            }
            return exponent_ * lambda_max_ * std::pow(t_tilde, exponent_ - 1.0);
        case Kind::optimal:
            if (lambda_max_ == 0.0) return 0.0;
            if (t_tilde <= seed_time_) {
                // analytic seed derivative; diverges at t~ = 0 for alpha = 0
                if (t_tilde == 0.0 && seed_exponent_ < 1.0) {
                    return std::numeric_limits<double>::infinity();
                }
                if (t_tilde == 0.0) {
                    return seed_exponent_ == 1.0 ? seed_coeff_ : 0.0;
                }
                return seed_exponent_ * seed_coeff_ *
                       std::pow(t_tilde, seed_exponent_ - 1.0);
            }
            break;
        case Kind::sampled:
            if (t_tilde <= times_.front()) return slopes_.front();
            break;
    }
    if (t_tilde >= times_.back()) {
        return slopes_.back();
    }
    const auto it = std::upper_bound(times_.begin(), times_.end(), t_tilde);
    const std::size_t k = static_cast<std::size_t>(it - times_.begin()) - 1;
    return hermite_derivative(t_tilde, times_[k], times_[k + 1], values_[k],
                              values_[k + 1], slopes_[k], slopes_[k + 1]);
}

Protocol Protocol::make_linear(double lambda_max) {
    if (!(lambda_max >= 0.0)) {
        throw std::invalid_argument("linear_protocol: lambda_max must be >= 0");
    }
    Protocol p;
    p.kind_ = Kind::linear;
    p.lambda_max_ = lambda_max;
    return p;
}

Protocol Protocol::make_power(double lambda_max, double exponent) {
    if (!(lambda_max >= 0.0)) {
        throw std::invalid_argument("power_protocol: lambda_max must be >= 0");
    }
    if (!(exponent > 0.0)) {
        throw std::invalid_argument("power_protocol: exponent must be > 0");
    }
    Protocol p;
    p.kind_ = Kind::power;
    p.lambda_max_ = lambda_max;
    p.exponent_ = exponent;
    return p;
}

Protocol Protocol::constant(double lambda_c) {
    if (!(lambda_c >= 0.0)) {
        throw std::invalid_argument("Protocol::constant: lambda_c must be >= 0");
    }
    Protocol p;
    p.kind_ = Kind::sampled;
    p.lambda_max_ = lambda_c;
    p.times_ = {0.0, 1.0};
    p.values_ = {lambda_c, lambda_c};
    p.build_interpolant();
    return p;
}

Protocol Protocol::make_sampled(std::vector<double> t_tildes, std::vector<double> lambdas) {
    if (t_tildes.size() != lambdas.size() || t_tildes.size() < 2) {
        throw std::invalid_argument("Protocol::make_sampled: need >= 2 matching samples");
    }
    Protocol p;
    p.kind_ = Kind::sampled;
    p.times_ = std::move(t_tildes);
    p.values_ = std::move(lambdas);
    if (!(p.times_.front() >= 0.0 && p.times_.back() <= 1.0)) {
        throw std::invalid_argument("Protocol::make_sampled: t_tilde must lie in [0, 1]");
    }
    if (p.values_.front() < 0.0) {
        throw std::invalid_argument("Protocol::make_sampled: lambda must be >= 0");
    }
    p.lambda_max_ = p.values_.back();
    p.seed_time_ = p.times_.front();
    p.build_interpolant();
    return p;
}

Protocol linear_protocol(double lambda_max) { return Protocol::make_linear(lambda_max); }

Protocol power_protocol(double lambda_max, double exponent) {
    return Protocol::make_power(lambda_max, exponent);
}

namespace {

// Sample grid for the optimal protocol: log-spaced through the power-law start,
// uniform through the bulk, geometrically refined toward t~ = 1 where the
// schedule steepens like e^(beta lambda / 2).
std::vector<double> optimal_sample_grid() {
    std::vector<double> grid;
    grid.reserve(1100);
    const int n_log = 192;
    const double t_break = 0.02;
    for (int i = 0; i <= n_log; ++i) {
        const double f = static_cast<double>(i) / n_log;
        grid.push_back(kSeedTime * std::pow(t_break / kSeedTime, f));
    }
    const int n_mid = 640;
    const double t_mid_end = 0.9;
    for (int i = 1; i <= n_mid; ++i) {
        grid.push_back(t_break + (t_mid_end - t_break) * static_cast<double>(i) / n_mid);
    }
    const int n_end = 240;
    const double u_hi = 1.0 - t_mid_end;
    const double u_lo = 1e-6;
    for (int i = 1; i <= n_end; ++i) {
        const double f = static_cast<double>(i) / n_end;
        grid.push_back(1.0 - u_hi * std::pow(u_lo / u_hi, f));
    }
    grid.push_back(1.0);
    return grid;
}

}  // namespace

Protocol optimal_protocol(const ErasureTask& task, const BathSpectrum& spectrum,
                          const OdeConfig& cfg) {
    const double alpha = spectrum.alpha;
    if (!(alpha < 3.0)) {
        throw std::domain_error("optimal_protocol: alpha must be < 3 (length diverges)");
    }
    const double lambda_m = task.lambda_max();

    Protocol p;
    p.kind_ = Protocol::Kind::optimal;
    p.lambda_max_ = lambda_m;
    p.seed_time_ = kSeedTime;
    p.seed_exponent_ = 2.0 / (3.0 - alpha);

    if (lambda_m == 0.0) {  // epsilon = 1/2: nothing to drive
        p.seed_coeff_ = 0.0;
        p.times_ = {0.0, 1.0};
        p.values_ = {0.0, 0.0};
        p.build_interpolant();
        return p;
    }

    const double beta = task.beta;
    const double gamma0 = spectrum.gamma0;
    const double length =
        std::sqrt(std::pow(beta, alpha - 1.0) / gamma0) * f_alpha(task.epsilon, alpha);

    const double three_minus = 3.0 - alpha;
    p.seed_coeff_ = std::pow(
        2.0 * three_minus * three_minus * gamma0 * length * length / (beta * beta),
        1.0 / three_minus);
    const double lambda_seed = p.seed_coeff_ * std::pow(kSeedTime, p.seed_exponent_);

    // dlambda/dt~ = L / sqrt(metric); sqrt(metric) = sqrt(beta^(1+alpha)/gamma0) *
    // length_integrand(beta lambda)
    const double metric_pref = std::sqrt(std::pow(beta, 1.0 + alpha) / gamma0);
    auto rhs = [&](double, std::span<const double> y, std::span<double> dydt) {
        const double lam = std::max(y[0], 1e-300);
        dydt[0] = length / (metric_pref * length_integrand(beta * lam, alpha));
    };

    const DenseSolution sol = solve_ivp(rhs, kSeedTime, 1.0, {lambda_seed}, cfg);

    const double achieved = sol.node_state(sol.step_count(), 0);
    const double arrival_tol = 1e-4 * std::max(lambda_m, 1.0 / beta);
    if (!(std::abs(achieved - lambda_m) <= arrival_tol)) {
        throw ProtocolError(
            "optimal_protocol: lambda(1) = " + std::to_string(achieved) +
                " misses lambda_m = " + std::to_string(lambda_m) +
                " beyond tolerance (quadrature/ODE tolerance mismatch)",
            achieved, lambda_m);
    }

    p.times_ = optimal_sample_grid();
    p.values_.reserve(p.times_.size());
    for (double t : p.times_) {
        p.values_.push_back(sol.eval(t, 0));
    }
    // pin the boundary condition exactly; the arrival check above guarantees
    // the snap is far below the last sample spacing
    p.values_.back() = lambda_m;
    for (std::size_t i = 0; i + 1 < p.values_.size(); ++i) {
        if (!(p.values_[i + 1] >= p.values_[i])) {
            throw ProtocolError("optimal_protocol: non-monotone dense solution", achieved,
                                lambda_m);
        }
    }
    p.build_interpolant();
    return p;
}

double scaling_exponent_fit(const Protocol& protocol, double window_lo, double window_hi,
                            int n_points) {
    if (!(window_lo > 0.0 && window_lo < window_hi && window_hi <= 1.0)) {
        throw std::invalid_argument("scaling_exponent_fit: need 0 < lo < hi <= 1");
    }
    if (n_points < 4) {
        throw std::invalid_argument("scaling_exponent_fit: need at least 4 sample points");
    }
    std::vector<double> lx, ly;
    lx.reserve(n_points);
    ly.reserve(n_points);
    double prev = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_points; ++i) {
        const double f = static_cast<double>(i) / (n_points - 1);
        const double t = window_lo * std::pow(window_hi / window_lo, f);
        const double lam = protocol.value(t);
        if (!(lam > 0.0) || !(lam > prev)) {
            throw std::domain_error(
                "scaling_exponent_fit: protocol must be positive and strictly "
                "increasing on the window");
        }
        prev = lam;
        lx.push_back(std::log(t));
        ly.push_back(std::log(lam));
    }
    const double n = static_cast<double>(lx.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void Protocol::write_csv(std::ostream& out) const {
    std::vector<double> grid;
    if (has_samples()) {
        grid = times_;
    } else {
        grid.reserve(513);
        for (int i = 0; i <= 512; ++i) grid.push_back(static_cast<double>(i) / 512.0);
    }
    out << "t_tilde,lambda,dlambda_dt_tilde\n";
    char buf[128];
    for (double t : grid) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", t, value(t), derivative(t));
        out << buf;
    }
}

Protocol Protocol::from_csv(std::istream& in) {
    std::string line;
    std::vector<double> ts, lams;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;  // first non-comment line is the header
            continue;
        }
        std::istringstream ss(line);
        std::string cell;
        double row[2];
        for (int c = 0; c < 2; ++c) {
            if (!std::getline(ss, cell, ',')) {
                throw std::invalid_argument("Protocol::from_csv: malformed row: " + line);
            }
            row[c] = std::stod(cell);
        }
        ts.push_back(row[0]);
        lams.push_back(row[1]);
    }
    return make_sampled(std::move(ts), std::move(lams));
}

}  // namespace qerasure
