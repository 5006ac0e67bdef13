// Acceptance suite: ten end-to-end criteria with pinned tolerances, one
// PASS/FAIL line each. Exit code is the number of failed criteria.
// Usage: acceptance [path-to-qerasure-cli]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qerasure/dynamics.hpp"
#include "qerasure/experiments.hpp"
#include "qerasure/geometry.hpp"
#include "qerasure/physics.hpp"
#include "qerasure/protocol.hpp"

using namespace qerasure;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start{std::chrono::steady_clock::now()};
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void report(int criterion, bool pass, const std::string& what, double seconds,
            double limit_seconds, const std::string& detail = {}) {
    const bool in_time = seconds < limit_seconds;
    const bool ok = pass && in_time;
    if (!ok) ++g_failures;
    std::printf("criterion %2d: %s  %s  [%.2fs < %.0fs]%s%s\n", criterion,
                ok ? "PASS" : "FAIL", what.c_str(), seconds, limit_seconds,
                detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_1_length_table() {
    Timer timer;
    const double f0 = f_alpha(0.0, 0.0);
    const double f1 = f_alpha(0.0, 1.0);
    const double f2 = f_alpha(0.0, 2.0);
    const bool pass = std::abs(f0 - 1.1981) <= 5e-4 && std::abs(f1 - 0.9433) <= 5e-4 &&
                      std::abs(f2 - 1.0914) <= 5e-4;
    std::ostringstream d;
    d << "f(0)=" << f0 << "," << f1 << "," << f2;
    report(1, pass, "f_alpha(0) table to +-5e-4", timer.seconds(), 1.0, d.str());
}

void criterion_2_headline_bounds() {
    Timer timer;
    const BathSpectrum flat(0.0, 1.0);
    const double b1 =
        thermodynamic_length(ErasureTask(1.0, 0.01, 1.0), flat).precise_bound;
    const double b2 =
        thermodynamic_length(ErasureTask(1.0, 0.001, 1.0), flat).precise_bound;
    const bool pass = std::abs(b1 - 0.997) <= 0.002 && std::abs(b2 - 1.288) <= 0.002;
    std::ostringstream d;
    d << "bounds=" << b1 << "," << b2 << " (alpha=0; the headline numbers do not "
      << "match alpha=1, see README)";
    report(2, pass, "headline bounds 0.997/1.288 kT/(gamma0 tau) to +-0.002",
           timer.seconds(), 1.0, d.str());
}

void criterion_3_tradeoff_tightness() {
    Timer timer;
    const BathSpectrum spectrum(1.0, 1.0);
    const Protocol p = optimal_protocol(ErasureTask(1.0, 1e-4, 1.0), spectrum);
    const double len2 =
        thermodynamic_length(ErasureTask(1.0, 1e-4, 1.0), spectrum).precise_bound;
    double dev200 = 0.0, dev1600 = 0.0;
    for (double tau : {200.0, 400.0, 800.0, 1600.0}) {
        const ErasureTask task(1.0, 1e-4, tau);
        const double wt = simulate(p, task, spectrum).irr_work * tau;
        const double dev = std::abs(wt - len2) / len2;
        if (tau == 200.0) dev200 = dev;
        if (tau == 1600.0) dev1600 = dev;
    }
    const bool pass = dev200 <= 0.05 && dev1600 <= 0.02;
    std::ostringstream d;
    d << "rel dev " << dev200 << " @200, " << dev1600 << " @1600";
    report(3, pass, "Wir*tau within 5%/2% of L^2 at gamma0*tau=200/1600",
           timer.seconds(), 30.0, d.str());
}

void criterion_4_bound_ordering() {
    Timer timer;
    const auto eps_grid = log_grid(1e-6, 1e-1, 16);
    const std::vector<double> taus = {50.0, 200.0, 1000.0};
    int checked = 0;
    int v_asym_precise = 0, v_precise_opt = 0, v_opt_linear = 0, v_opt_quad = 0;
    for (double alpha : {0.0, 1.0, 2.0}) {
        const BathSpectrum spectrum(alpha, 1.0);
        for (double eps : eps_grid) {
            const ErasureTask probe(1.0, eps, 1.0);
            const Protocol opt = optimal_protocol(probe, spectrum);
            const Protocol lin = linear_protocol(probe.lambda_max());
            const Protocol quad = power_protocol(probe.lambda_max(), 2.0);
            for (double tau : taus) {
                const ErasureTask task(1.0, eps, tau);
                const LengthReport rep = thermodynamic_length(task, spectrum);
                const double wo = simulate(opt, task, spectrum).irr_work;
                const double wl = simulate(lin, task, spectrum).irr_work;
                const double wq = simulate(quad, task, spectrum).irr_work;
                ++checked;
                if (!(rep.asymptotic_bound <= rep.precise_bound)) ++v_asym_precise;
                if (!(rep.precise_bound <= wo)) ++v_precise_opt;
                if (!(wo <= wl)) ++v_opt_linear;
                if (!(wo <= wq)) ++v_opt_quad;
            }
        }
    }
    const bool pass =
        v_asym_precise == 0 && v_precise_opt == 0 && v_opt_linear == 0 && v_opt_quad == 0;
    std::ostringstream d;
    d << checked << " tuples; violations: asym<=precise " << v_asym_precise
      << ", precise<=opt " << v_precise_opt << ", opt<=linear " << v_opt_linear
      << ", opt<=quadratic " << v_opt_quad
      << (v_precise_opt > 0 ? " (super-Ohmic slow-driving breakdown, see README)" : "");
    report(4, pass, "bound ordering over the full (alpha, eps, tau) grid",
           timer.seconds(), 300.0, d.str());
}

void criterion_5_asymptotic_length() {
    Timer timer;
    double worst = 0.0;
    std::string worst_at;
    for (double alpha : {0.0, 1.0, 2.0}) {
        for (double eps : log_grid(1e-6, 1e-3, 10)) {
            const double exact = tail_integral(eps, alpha);  // (L(0)-L(eps))/prefactor
            const double asym =
                2.0 * std::sqrt(eps * std::pow(std::log(1.0 / eps), -alpha));
            const double rel = std::abs(exact - asym) / exact;
            if (rel > worst) {
                worst = rel;
                std::ostringstream at;
                at << "alpha=" << alpha << ",eps=" << eps;
                worst_at = at.str();
            }
        }
    }
    const bool pass = worst <= 0.05;
    std::ostringstream d;
    d << "worst rel err " << worst << " at " << worst_at
      << (pass ? "" : " (log-slow convergence for alpha>0, see README)");
    report(5, pass, "asymptotic length within 5% for eps <= 1e-3", timer.seconds(), 5.0,
           d.str());
}

void criterion_6_scaling_exponents() {
    Timer timer;
    bool pass = true;
    std::ostringstream d;
    for (double alpha : {0.0, 1.0, 2.0}) {
        const Protocol p =
            optimal_protocol(ErasureTask(1.0, 1e-4, 1.0), BathSpectrum(alpha, 1.0));
        const double fitted = scaling_exponent_fit(p, 1e-4, 1e-2);
        const double expected = 2.0 / (3.0 - alpha);
        const double tol = (alpha == 2.0) ? 0.04 : 0.02;
        if (std::abs(fitted - expected) > tol) pass = false;
        d << (alpha > 0 ? " " : "") << "alpha=" << alpha << ":" << fitted;
    }
    report(6, pass, "initial-stage exponent 2/(3-alpha) to +-0.02 (+-0.04 at alpha=2)",
           timer.seconds(), 10.0, d.str());
}

void criterion_7_equidistance() {
    Timer timer;
    double worst = 0.0;
    for (double alpha : {0.0, 1.0, 2.0}) {
        const ErasureTask task(1.0, 1e-4, 1.0);
        const BathSpectrum spectrum(alpha, 1.0);
        const Protocol p = optimal_protocol(task, spectrum);
        std::vector<double> power;
        for (int i = 0; i <= 800; ++i) {
            const double t = 0.01 * std::pow(100.0, i / 800.0);
            power.push_back(
                irreversible_power_slow(p.value(t), p.derivative(t), task, spectrum));
        }
        double mean = 0.0;
        for (double w : power) mean += w;
        mean /= static_cast<double>(power.size());
        for (double w : power) worst = std::max(worst, std::abs(w / mean - 1.0));
    }
    const bool pass = worst <= 0.005;
    std::ostringstream d;
    d << "max |Wir_dot/mean - 1| = " << worst;
    report(7, pass, "equidistance: slow-driving power flat to 0.5% on t~ in [0.01,1]",
           timer.seconds(), 5.0, d.str());
}

void criterion_8_quasi_static() {
    Timer timer;
    const ErasureTask task(1.0, 0.01, 1e4);
    const BathSpectrum spectrum(1.0, 1.0);
    const TrajectoryResult r = simulate(optimal_protocol(task, spectrum), task, spectrum);
    const double df = task.delta_f();
    const double rel = std::abs(r.work_total - df) / df;
    const bool pass = rel <= 0.02;
    std::ostringstream d;
    d << "work_total=" << r.work_total << " dF=" << df << " rel=" << rel;
    report(8, pass, "quasi-static limit: work_total -> dF within 2% at gamma0*tau=1e4",
           timer.seconds(), 30.0, d.str());
}

void criterion_9_oracle_equivalences() {
    Timer timer;
    bool pass = true;
    std::ostringstream d;

    // (a) decomposition f(0) - f(eps) = tail to 1e-8
    double worst_a = 0.0;
    for (double alpha : {0.0, 1.0, 2.0}) {
        const double f0 = f_alpha(0.0, alpha);
        for (double eps : {0.1, 0.01, 1e-4, 1e-6}) {
            worst_a = std::max(
                worst_a, std::abs(f0 - f_alpha(eps, alpha) - tail_integral(eps, alpha)));
        }
    }
    if (worst_a > 1e-8) pass = false;

    // (b) Wir_dot = lambda_dot * (slow-driving population - p_eq) to 1e-12
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> lam_dist(1e-3, 20.0);
    std::uniform_real_distribution<double> rate_dist(-2.0, 2.0);
    double worst_b = 0.0;
    const ErasureTask task(1.0, 0.01, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double lam = lam_dist(rng);
        const double lam_dot = rate_dist(rng);
        for (double alpha : {0.0, 1.0, 2.0}) {
            const BathSpectrum spectrum(alpha, 1.0);
            const double lhs = irreversible_power_slow(lam, lam_dot, task, spectrum);
            const double rhs =
                lam_dot * (slow_driving_population(lam, lam_dot, task, spectrum) -
                           equilibrium_population(lam, 1.0));
            const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
            worst_b = std::max(worst_b, std::abs(lhs - rhs) / scale);
        }
    }
    if (worst_b > 1e-12) pass = false;

    // (c) p_eq equals the master-equation fixed point n/(2n+1) to 1e-12
    double worst_c = 0.0;
    for (int i = 0; i < 80; ++i) {
        const double lam = 1e-8 * std::pow(3e9, i / 79.0);
        const double n = bath_occupation(lam, 1.0);
        worst_c = std::max(
            worst_c, std::abs(n / (2.0 * n + 1.0) - equilibrium_population(lam, 1.0)));
    }
    if (worst_c > 1e-12) pass = false;

    d << "decomposition " << worst_a << ", identity " << worst_b << ", fixed point "
      << worst_c;
    report(9, pass, "oracle equivalences (a) 1e-8, (b) 1e-12, (c) 1e-12",
           timer.seconds(), 5.0, d.str());
}

void criterion_10_determinism(const char* cli_path) {
    Timer timer;
    if (cli_path == nullptr) {
        report(10, false, "reproduce outputs byte-identical", timer.seconds(), 60.0,
               "CLI path not provided");
        return;
    }
    const auto dir = std::filesystem::temp_directory_path();
    bool pass = true;
    std::ostringstream d;
    for (const std::string id : {"sm-fig1", "fig2b"}) {
        const auto out1 = dir / ("qerasure_accept_" + id + "_1.csv");
        const auto out2 = dir / ("qerasure_accept_" + id + "_2.csv");
        for (const auto& out : {out1, out2}) {
            const std::string cmd = std::string(cli_path) + " reproduce " + id +
                                    " --out " + out.string() + " 2>/dev/null";
            if (std::system(cmd.c_str()) != 0) {
                pass = false;
                d << id << ": nonzero exit; ";
            }
        }
        const std::string a = read_file(out1);
        const std::string b = read_file(out2);
        if (a.empty() || a != b) {
            pass = false;
            d << id << ": outputs differ; ";
        }
        std::filesystem::remove(out1);
        std::filesystem::remove(out2);
    }
    if (pass) d << "sm-fig1, fig2b identical across runs";
    report(10, pass, "reproduce outputs byte-identical across two runs",
           timer.seconds(), 60.0, d.str());
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli_path = argc > 1 ? argv[1] : nullptr;
    criterion_1_length_table();
    criterion_2_headline_bounds();
    criterion_3_tradeoff_tightness();
    criterion_4_bound_ordering();
    criterion_5_asymptotic_length();
    criterion_6_scaling_exponents();
    criterion_7_equidistance();
    criterion_8_quasi_static();
    criterion_9_oracle_equivalences();
    criterion_10_determinism(cli_path);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
    } else {
        std::printf("all criteria passed\n");
    }
    return g_failures;
}
