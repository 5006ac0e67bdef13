// qerasure command-line front end: length/bound reports, protocol and
// trajectory dumps, parameter sweeps, and named reproduction recipes.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qerasure/dynamics.hpp"
#include "qerasure/experiments.hpp"
#include "qerasure/geometry.hpp"
#include "qerasure/physics.hpp"
#include "qerasure/protocol.hpp"
#include "qerasure/table.hpp"

namespace {

using qerasure::Table;

// "0.5" | "0.1,0.2" | "logspace:1e-6:1e-1:16"
std::vector<double> parse_value_list(const std::string& spec) {
    if (spec.rfind("logspace:", 0) == 0) {
        std::istringstream ss(spec.substr(9));
        std::string part;
        std::vector<std::string> parts;
        while (std::getline(ss, part, ':')) parts.push_back(part);
        if (parts.size() != 3) {
            throw std::invalid_argument("expected logspace:<lo>:<hi>:<n>, got: " + spec);
        }
        return qerasure::log_grid(std::stod(parts[0]), std::stod(parts[1]),
                                  std::stoi(parts[2]));
    }
    std::vector<double> values;
    std::istringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) values.push_back(std::stod(token));
    }
    if (values.empty()) {
        throw std::invalid_argument("empty value list: " + spec);
    }
    return values;
}

// flat key=value file; '#' starts a comment
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!key.empty() && !value.empty()) kv[key] = value;
    }
    return kv;
}

struct GlobalOptions {
    std::string alpha, epsilon, tau;
    double beta{1.0};
    double gamma0{1.0};
    std::string config_path, out_path;
    std::string format{"csv"};
    std::string kind{"optimal"};  // protocol/simulate subcommands
    double exponent{2.0};         // power-protocol exponent

    CLI::Option* alpha_opt{};
    CLI::Option* epsilon_opt{};
    CLI::Option* tau_opt{};
    CLI::Option* beta_opt{};
    CLI::Option* gamma0_opt{};
    CLI::Option* out_opt{};
    CLI::Option* format_opt{};
    CLI::Option* kind_opt{};
    CLI::Option* exponent_opt{};

    // config file fills anything the command line left unset; flags win
    void apply_config() {
        if (config_path.empty()) return;
        const auto kv = read_config_file(config_path);
        auto fill_str = [&](CLI::Option* opt, const char* key, std::string& target) {
            const auto it = kv.find(key);
            if (it != kv.end() && (opt == nullptr || opt->count() == 0)) target = it->second;
        };
        auto fill_num = [&](CLI::Option* opt, const char* key, double& target) {
            const auto it = kv.find(key);
            if (it != kv.end() && (opt == nullptr || opt->count() == 0))
                target = std::stod(it->second);
        };
        fill_str(alpha_opt, "alpha", alpha);
        fill_str(epsilon_opt, "epsilon", epsilon);
        fill_str(tau_opt, "tau", tau);
        fill_num(beta_opt, "beta", beta);
        fill_num(gamma0_opt, "gamma0", gamma0);
        fill_str(out_opt, "out", out_path);
        fill_str(format_opt, "format", format);
        fill_str(kind_opt, "kind", kind);
        fill_num(exponent_opt, "exponent", exponent);
    }

    std::vector<double> alphas(std::vector<double> fallback) const {
        return alpha.empty() ? fallback : parse_value_list(alpha);
    }
    std::vector<double> epsilons(std::vector<double> fallback) const {
        return epsilon.empty() ? fallback : parse_value_list(epsilon);
    }
    std::vector<double> taus(std::vector<double> fallback) const {
        return tau.empty() ? fallback : parse_value_list(tau);
    }
};

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    out << text;
}

void emit_table(const Table& table, const GlobalOptions& opts) {
    std::ostringstream ss;
    if (opts.format == "json") {
        table.write_json(ss);
    } else if (opts.format == "csv") {
        table.write_csv(ss);
    } else {
        throw std::invalid_argument("unknown format (want csv|json): " + opts.format);
    }
    write_output(ss.str(), opts.out_path);
}

qerasure::Protocol build_protocol(const GlobalOptions& opts, const qerasure::ErasureTask& task,
                                  const qerasure::BathSpectrum& spectrum) {
    const double lambda_m = task.lambda_max();
    if (opts.kind == "optimal") return qerasure::optimal_protocol(task, spectrum);
    if (opts.kind == "linear") return qerasure::linear_protocol(lambda_m);
    if (opts.kind == "quadratic") return qerasure::power_protocol(lambda_m, 2.0);
    if (opts.kind == "power") return qerasure::power_protocol(lambda_m, opts.exponent);
    throw std::invalid_argument("unknown protocol kind (want optimal|linear|quadratic|power): " +
                                opts.kind);
}

int run_length(const GlobalOptions& opts) {
    const auto table = qerasure::run_length_table(
        opts.alphas({0.0, 1.0, 2.0}), opts.epsilons(qerasure::default_epsilon_grid()),
        opts.beta, opts.gamma0);
    emit_table(table, opts);
    return 0;
}

int run_bound(const GlobalOptions& opts) {
    Table t;
    const auto alphas = opts.alphas({1.0});
    const auto epsilons = opts.epsilons(qerasure::default_epsilon_grid());
    const auto taus = opts.taus({200.0});
    t.provenance = "qerasure experiment=bound";
    t.columns = {"alpha",       "epsilon",        "tau",     "f_eps",
                 "length",      "precise_bound",  "asymptotic_bound", "mu_alpha"};
    for (double a : alphas) {
        const qerasure::BathSpectrum spectrum(a, opts.gamma0);
        for (double eps : epsilons) {
            for (double tau : taus) {
                const qerasure::ErasureTask task(opts.beta, eps, tau);
                const auto rep = qerasure::thermodynamic_length(task, spectrum);
                if (!rep.validity_warning.empty()) {
                    std::cerr << "warning: epsilon=" << eps << ": " << rep.validity_warning
                              << "\n";
                }
                t.append_row({a, eps, tau, rep.f_eps, rep.length, rep.precise_bound,
                              rep.asymptotic_bound, rep.mu_alpha});
            }
        }
    }
    emit_table(t, opts);
    return 0;
}

int run_protocol(const GlobalOptions& opts) {
    const auto alphas = opts.alphas({1.0});
    const auto epsilons = opts.epsilons({1e-4});
    const auto taus = opts.taus({200.0});
    if (alphas.size() != 1 || epsilons.size() != 1 || taus.size() != 1) {
        throw std::invalid_argument("protocol: needs single alpha, epsilon, tau");
    }
    const qerasure::ErasureTask task(opts.beta, epsilons[0], taus[0]);
    const qerasure::BathSpectrum spectrum(alphas[0], opts.gamma0);
    const auto protocol = build_protocol(opts, task, spectrum);
    std::ostringstream ss;
    protocol.write_csv(ss);
    write_output(ss.str(), opts.out_path);
    return 0;
}

int run_simulate(const GlobalOptions& opts) {
    const auto alphas = opts.alphas({1.0});
    const auto epsilons = opts.epsilons({1e-4});
    const auto taus = opts.taus({200.0});
    if (alphas.size() != 1 || epsilons.size() != 1 || taus.size() != 1) {
        throw std::invalid_argument("simulate: needs single alpha, epsilon, tau");
    }
    const qerasure::ErasureTask task(opts.beta, epsilons[0], taus[0]);
    const qerasure::BathSpectrum spectrum(alphas[0], opts.gamma0);
    const auto protocol = build_protocol(opts, task, spectrum);
    const auto result = qerasure::simulate(protocol, task, spectrum);
    std::ostringstream ss;
    if (opts.format == "json") {
        ss << result.summary_json() << "\n";
    } else {
        result.write_csv(ss);
    }
    write_output(ss.str(), opts.out_path);
    return 0;
}

int run_sweep_cmd(const GlobalOptions& opts) {
    const auto alphas = opts.alphas({0.0, 1.0, 2.0});
    const auto epsilons = opts.epsilons(qerasure::default_epsilon_grid());
    const auto taus = opts.taus({50.0, 200.0, 1000.0});
    const auto records = qerasure::run_sweep(alphas, epsilons, taus, opts.beta, opts.gamma0);
    std::ostringstream prov;
    prov << "qerasure experiment=sweep beta=" << qerasure::format_number(opts.beta)
         << " gamma0=" << qerasure::format_number(opts.gamma0);
    emit_table(qerasure::sweep_table(records, prov.str()), opts);
    return 0;
}

int run_reproduce(const GlobalOptions& opts, const std::string& figure_id) {
    qerasure::ExperimentConfig cfg;
    cfg.beta = opts.beta;
    cfg.gamma0 = opts.gamma0;
    cfg.format = opts.format;
    if (!opts.alpha.empty()) cfg.alphas = parse_value_list(opts.alpha);
    if (!opts.epsilon.empty()) cfg.epsilons = parse_value_list(opts.epsilon);
    if (!opts.tau.empty()) cfg.taus = parse_value_list(opts.tau);

    std::string experiment = figure_id;
    if (figure_id == "fig2a") {
        experiment = "tradeoff-surface";
    } else if (figure_id == "fig2b") {
        experiment = "optimal-protocols";
    } else if (figure_id == "fig3a") {
        experiment = "wir-vs-tau";
    } else if (figure_id == "fig3b") {
        experiment = "wir-vs-epsilon";
    } else if (figure_id == "sm-fig1") {
        experiment = "asymptotic-length-check";
    } else if (figure_id == "sm-fig2") {
        experiment = "optimal-protocols";
        if (cfg.alphas.empty()) cfg.alphas = {0.0, 2.0};
    } else if (figure_id == "headline") {
        experiment = "headline-bounds";
    }
    cfg.experiment = experiment;

    GlobalOptions out_opts = opts;
    if (out_opts.out_path.empty()) {
        out_opts.out_path = figure_id + (opts.format == "json" ? ".json" : ".csv");
    }
    emit_table(qerasure::run_experiment(cfg), out_opts);
    std::cerr << "wrote " << out_opts.out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-time qubit-erasure energetics: thermodynamic length, "
                 "trade-off bounds, optimal protocols, and exact simulation"};
    app.require_subcommand(1);

    GlobalOptions opts;
    opts.alpha_opt = app.add_option("--alpha", opts.alpha,
                                    "bath exponent(s): value, comma list, or logspace:lo:hi:n");
    opts.epsilon_opt = app.add_option("--epsilon", opts.epsilon,
                                      "target error probability list (same syntax)");
    opts.tau_opt = app.add_option("--tau", opts.tau, "erasure duration list (same syntax)");
    opts.beta_opt = app.add_option("--beta", opts.beta, "inverse temperature (default 1)");
    opts.gamma0_opt = app.add_option("--gamma0", opts.gamma0, "base dissipation rate (default 1)");
    app.add_option("--config", opts.config_path, "flat key=value config file; flags win");
    opts.out_opt = app.add_option("--out", opts.out_path, "output path (default stdout)");
    opts.format_opt =
        app.add_option("--format", opts.format, "output format: csv|json (default csv)");
    opts.kind_opt = app.add_option("--kind", opts.kind,
                                   "protocol kind: optimal|linear|quadratic|power");
    opts.exponent_opt =
        app.add_option("--exponent", opts.exponent, "power-protocol exponent (default 2)");

    auto* length = app.add_subcommand("length", "thermodynamic length table f_alpha(eps)");
    auto* bound = app.add_subcommand("bound", "precise and asymptotic trade-off bounds");
    auto* protocol = app.add_subcommand("protocol", "emit a driving schedule as CSV");
    auto* simulate = app.add_subcommand("simulate", "integrate the master equation");
    auto* sweep = app.add_subcommand("sweep", "full (alpha x epsilon x tau) sweep");
    auto* reproduce =
        app.add_subcommand("reproduce", "run a named recipe: fig2a|fig2b|fig3a|fig3b|"
                                        "sm-fig1|sm-fig2|headline|<experiment-name>");
    std::string figure_id;
    reproduce->add_option("figure-id", figure_id, "recipe name")->required();
    for (auto* sub : {length, bound, protocol, simulate, sweep, reproduce}) {
        sub->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        opts.apply_config();
        if (length->parsed()) return run_length(opts);
        if (bound->parsed()) return run_bound(opts);
        if (protocol->parsed()) return run_protocol(opts);
        if (simulate->parsed()) return run_simulate(opts);
        if (sweep->parsed()) return run_sweep_cmd(opts);
        if (reproduce->parsed()) return run_reproduce(opts, figure_id);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
