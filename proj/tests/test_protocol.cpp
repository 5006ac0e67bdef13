#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "qerasure/dynamics.hpp"
#include "qerasure/geometry.hpp"
#include "qerasure/protocol.hpp"

using namespace qerasure;

TEST_CASE("linear protocol") {
    const double lam_m = std::log(99.0);
    const Protocol p = linear_protocol(lam_m);
    CHECK(p.value(0.5) == doctest::Approx(2.29755992506).epsilon(1e-11));
    CHECK(p.value(0.0) == 0.0);
    CHECK(p.value(1.0) == lam_m);
    for (double t : {0.0, 0.3, 1.0}) {
        CHECK(p.derivative(t) == lam_m);
    }
    CHECK_THROWS_AS(p.value(1.5), std::domain_error);
    CHECK_THROWS_AS(linear_protocol(-1.0), std::invalid_argument);
}

TEST_CASE("power protocol") {
    const double lam_m = 3.0;
    const Protocol p2 = power_protocol(lam_m, 2.0);
    CHECK(p2.value(0.5) == doctest::Approx(lam_m / 4.0).epsilon(1e-14));
    CHECK(p2.derivative(1.0) == doctest::Approx(2.0 * lam_m).epsilon(1e-14));
    CHECK(p2.derivative(0.0) == 0.0);

    const Protocol p1 = power_protocol(lam_m, 1.0);
    const Protocol lin = linear_protocol(lam_m);
    for (double t : {0.0, 0.2, 0.7, 1.0}) {
        CHECK(p1.value(t) == doctest::Approx(lin.value(t)).epsilon(1e-14));
    }
    CHECK(std::isinf(power_protocol(1.0, 0.5).derivative(0.0)));
    CHECK_THROWS_AS(power_protocol(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("optimal protocol hits the boundary conditions") {
    for (double alpha : {0.0, 1.0, 2.0}) {
        const BathSpectrum spectrum(alpha, 1.0);
        for (double eps : {1e-2, 1e-4}) {
            const ErasureTask task(1.0, eps, 1.0);
            const Protocol p = optimal_protocol(task, spectrum);
            CHECK(p.value(1.0) == task.lambda_max());
            CHECK(p.value(0.0) == 0.0);
            CHECK(p.sample_times().size() >= 512);
            // strictly increasing on a dense probe grid
            double prev = -1.0;
            for (int i = 0; i <= 400; ++i) {
                const double t = 1e-6 + (1.0 - 1e-6) * i / 400.0;
                const double v = p.value(t);
                CHECK(v > prev);
                prev = v;
            }
        }
    }
}

TEST_CASE("optimal protocol is independent of tau") {
    const BathSpectrum spectrum(1.0, 1.0);
    const Protocol a = optimal_protocol(ErasureTask(1.0, 1e-4, 10.0), spectrum);
    const Protocol b = optimal_protocol(ErasureTask(1.0, 1e-4, 1000.0), spectrum);
    REQUIRE(a.sample_times().size() == b.sample_times().size());
    for (std::size_t i = 0; i < a.sample_times().size(); ++i) {
        CHECK(a.sample_values()[i] == b.sample_values()[i]);
    }
}

TEST_CASE("initial-stage scaling exponent 2/(3-alpha)") {
    struct Case {
        double alpha, expected, tol;
    };
    for (const Case c : {Case{0.0, 2.0 / 3.0, 0.02}, Case{1.0, 1.0, 0.02},
                         Case{2.0, 2.0, 0.04}}) {
        const Protocol p =
            optimal_protocol(ErasureTask(1.0, 1e-4, 1.0), BathSpectrum(c.alpha, 1.0));
        const double fitted = scaling_exponent_fit(p, 1e-4, 1e-2);
        CHECK(std::abs(fitted - c.expected) < c.tol);
    }
    // closed-form sanity: a pure power law fits exactly
    CHECK(std::abs(scaling_exponent_fit(power_protocol(2.0, 2.0), 1e-4, 1e-2) - 2.0) <
          1e-6);
}

TEST_CASE("scaling_exponent_fit rejects degenerate windows") {
    const Protocol p = power_protocol(1.0, 2.0);
    CHECK_THROWS_AS(scaling_exponent_fit(p, 0.0, 0.01), std::invalid_argument);
    CHECK_THROWS_AS(scaling_exponent_fit(p, 0.01, 0.01), std::invalid_argument);
    CHECK_THROWS_AS(scaling_exponent_fit(p, 1e-4, 1e-2, 3), std::invalid_argument);
    CHECK_THROWS_AS(scaling_exponent_fit(Protocol::constant(1.0), 1e-4, 1e-2),
                    std::domain_error);
}

TEST_CASE("seed consistency: analytic seed derivative matches the ODE right-hand side") {
    for (double alpha : {0.0, 1.0, 2.0}) {
        const ErasureTask task(1.0, 1e-4, 1.0);
        const BathSpectrum spectrum(alpha, 1.0);
        const Protocol p = optimal_protocol(task, spectrum);
        const double ts = p.seed_time();
        const double seed_deriv = p.derivative(0.5 * ts);  // analytic branch
        // equidistance ODE: dlambda/dt~ = L / sqrt(metric) at the seed value
        const double length =
            std::sqrt(std::pow(1.0, alpha - 1.0)) * f_alpha(1e-4, alpha);
        const double lam_seed = p.value(0.5 * ts);
        const double rhs = length / length_integrand(lam_seed, alpha);
        CHECK(std::abs(seed_deriv - rhs) / rhs < 0.01);
    }
}

TEST_CASE("equidistance: slow-driving power is flat on the optimal schedule") {
    for (double alpha : {0.0, 1.0, 2.0}) {
        const ErasureTask task(1.0, 1e-2, 1.0);
        const BathSpectrum spectrum(alpha, 1.0);
        const Protocol p = optimal_protocol(task, spectrum);
        std::vector<double> power;
        for (int i = 0; i <= 600; ++i) {
            const double t = 0.01 * std::pow(100.0, i / 600.0);
            power.push_back(
                irreversible_power_slow(p.value(t), p.derivative(t), task, spectrum));
        }
        double mean = 0.0;
        for (double w : power) mean += w;
        mean /= static_cast<double>(power.size());
        for (double w : power) {
            CHECK(std::abs(w / mean - 1.0) < 0.005);
        }
    }
}

TEST_CASE("nesting: smaller target error ends at larger spacing") {
    const BathSpectrum spectrum(1.0, 1.0);
    const Protocol tight = optimal_protocol(ErasureTask(1.0, 1e-4, 1.0), spectrum);
    const Protocol loose = optimal_protocol(ErasureTask(1.0, 1e-2, 1.0), spectrum);
    CHECK(tight.value(1.0) > loose.value(1.0));
}

TEST_CASE("degenerate epsilon = 1/2 gives the zero protocol") {
    const Protocol p = optimal_protocol(ErasureTask(1.0, 0.5, 1.0), BathSpectrum(1.0, 1.0));
    CHECK(p.value(0.3) == 0.0);
    CHECK(p.derivative(0.3) == 0.0);
    CHECK(p.lambda_max() == 0.0);
}

TEST_CASE("constant protocol for relaxation studies") {
    const Protocol p = Protocol::constant(1.7);
    for (double t : {0.0, 0.4, 1.0}) {
        CHECK(p.value(t) == doctest::Approx(1.7).epsilon(1e-15));
        CHECK(p.derivative(t) == doctest::Approx(0.0).epsilon(1e-15));
    }
}

TEST_CASE("CSV round trip") {
    const Protocol p =
        optimal_protocol(ErasureTask(1.0, 1e-2, 1.0), BathSpectrum(1.0, 1.0));
    std::stringstream ss;
    p.write_csv(ss);
    const std::string text = ss.str();
    CHECK(text.rfind("t_tilde,lambda,dlambda_dt_tilde\n", 0) == 0);

    std::istringstream in(text);
    const Protocol q = Protocol::from_csv(in);
    for (double t : {1e-5, 1e-3, 0.1, 0.5, 0.99, 1.0}) {
        CHECK(q.value(t) == doctest::Approx(p.value(t)).epsilon(1e-9));
    }
}

TEST_CASE("sampled protocol validation") {
    CHECK_THROWS_AS(Protocol::make_sampled({0.0, 0.5}, {1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(Protocol::make_sampled({0.5, 0.5}, {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Protocol::make_sampled({0.0}, {0.0}), std::invalid_argument);
    const Protocol p = Protocol::make_sampled({0.0, 0.5, 1.0}, {0.0, 1.0, 4.0});
    CHECK(p.value(0.25) > 0.0);
    CHECK(p.value(0.25) < 1.0);
    CHECK(p.lambda_max() == 4.0);
}
