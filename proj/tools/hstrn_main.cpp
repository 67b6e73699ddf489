// Command-line front end: security/reliability metrics of a jammer-aided
// satellite relay downlink. Subcommands: point, sweep, tradeoff, reproduce,
// selftest.
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hstrn/presets.hpp"
#include "hstrn/runner.hpp"

namespace {

struct CommonArgs {
    std::string preset;
    std::string config_path;
    std::optional<double> psi_db, phi_db, theta_db, cth, cee;
    std::optional<double> lambda_rd, lambda_re, lambda_je;
    std::optional<int> relays;
    std::string methods = "closed,mc";
    std::string out_path = "-";
    hstrn::RunOptions run;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_config) {
    if (with_config) {
        cmd->add_option("--preset", a.preset, "named configuration, PM1-HS .. PM6-AS");
        cmd->add_option("--config", a.config_path, "JSON configuration file");
        cmd->add_option("--psi", a.psi_db, "satellite transmit SNR, dB");
        cmd->add_option("--phi", a.phi_db, "relay transmit SNR, dB");
        cmd->add_option("--theta", a.theta_db, "jammer transmit SNR, dB");
        cmd->add_option("--cth", a.cth, "target secrecy rate, b/s/Hz");
        cmd->add_option("--cee", a.cee, "estimation error magnitude, all links");
        cmd->add_option("--relays", a.relays, "relay count (replicates the first relay)");
        cmd->add_option("--lambda-rd", a.lambda_rd, "relay->destination channel rate");
        cmd->add_option("--lambda-re", a.lambda_re, "relay->eavesdropper channel rate");
        cmd->add_option("--lambda-je", a.lambda_je, "jammer->eavesdropper channel rate");
        cmd->add_option("--methods", a.methods,
                        "comma list of closed,series,mc (default closed,mc)");
    }
    cmd->add_option("--trials", a.run.trials, "Monte Carlo trials per point");
    cmd->add_option("--seed", a.run.seed, "Monte Carlo seed");
    cmd->add_option("--workers", a.run.workers, "worker threads (0 = all)");
    cmd->add_option("-o,--out", a.out_path, "output file, '-' for stdout");
}

hstrn::NetworkConfig build_config(const CommonArgs& a) {
    hstrn::NetworkConfig cfg;
    if (!a.preset.empty() && !a.config_path.empty())
        throw CLI::ValidationError("--preset and --config are mutually exclusive");
    if (!a.preset.empty())
        cfg = hstrn::parse_preset(a.preset);
    else if (!a.config_path.empty())
        cfg = hstrn::load_config_file(a.config_path);
    else
        cfg = hstrn::parse_preset("PM3-HS");
    if (a.psi_db) cfg.power.psi_db = *a.psi_db;
    if (a.phi_db) cfg.power.phi_db = *a.phi_db;
    if (a.theta_db) cfg.power.theta_db = *a.theta_db;
    if (a.cth) cfg.c_th = *a.cth;
    if (a.cee) cfg.cee = hstrn::CeeProfile::uniform(*a.cee);
    if (a.relays) {
        if (*a.relays < 1) throw CLI::ValidationError("--relays must be positive");
        cfg.relays.assign(static_cast<std::size_t>(*a.relays), cfg.relays.front());
    }
    if (a.lambda_rd) cfg.lambda_rd = *a.lambda_rd;
    if (a.lambda_re) cfg.lambda_re = *a.lambda_re;
    if (a.lambda_je) cfg.lambda_je = *a.lambda_je;
    return cfg;
}

hstrn::MethodSet parse_methods(const std::string& text) {
    hstrn::MethodSet m{false, false, false};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find(',', pos);
        const std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok == "closed" || tok == "closed_form")
            m.closed_form = true;
        else if (tok == "series")
            m.series = true;
        else if (tok == "mc" || tok == "monte-carlo")
            m.mc = true;
        else if (!tok.empty())
            throw CLI::ValidationError("unknown method '" + tok + "'");
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (!m.closed_form && !m.series && !m.mc)
        throw CLI::ValidationError("--methods selected nothing");
    return m;
}

struct OutStream {
    std::ostream* os = &std::cout;
    std::unique_ptr<std::ofstream> file;

    explicit OutStream(const std::string& path) {
        if (path == "-") return;
        file = std::make_unique<std::ofstream>(path);
        if (!*file) throw std::runtime_error("cannot open output file: " + path);
        os = file.get();
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"security/reliability analysis of a jammer-aided satellite relay downlink"};
    app.require_subcommand(1);

    CommonArgs pa, sa, ta, ra;
    std::string sweep_var = "psi_db";
    double sweep_from = 0.0, sweep_to = 50.0;
    int sweep_steps = 11;
    double trade_from = 0.02, trade_to = 0.30;
    int trade_steps = 15;
    std::string figure;

    CLI::App* point = app.add_subcommand("point", "evaluate one configuration");
    add_common(point, pa, true);

    CLI::App* sweep = app.add_subcommand("sweep", "CSV sweep over one variable");
    add_common(sweep, sa, true);
    sweep->add_option("--var", sweep_var, "psi_db, theta_db, cee or c_th");
    sweep->add_option("--from", sweep_from, "first value");
    sweep->add_option("--to", sweep_to, "last value");
    sweep->add_option("--steps", sweep_steps, "row count");

    CLI::App* trade = app.add_subcommand("tradeoff",
                                         "CSV security/reliability tradeoff over estimation error");
    add_common(trade, ta, true);
    trade->add_option("--from", trade_from, "first estimation error");
    trade->add_option("--to", trade_to, "last estimation error");
    trade->add_option("--steps", trade_steps, "row count");

    CLI::App* repro = app.add_subcommand("reproduce", "regenerate bundled figure data");
    repro->add_option("figure", figure, "fig2..fig9 or all")->required();
    add_common(repro, ra, false);

    app.add_subcommand("selftest", "fast internal consistency checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (point->parsed()) {
            pa.run.methods = parse_methods(pa.methods);
            OutStream out(pa.out_path);
            hstrn::run_point(build_config(pa), pa.run, *out.os);
        } else if (sweep->parsed()) {
            sa.run.methods = parse_methods(sa.methods);
            hstrn::SweepSpec spec;
            spec.variable = hstrn::parse_sweep_variable(sweep_var);
            spec.start = sweep_from;
            spec.stop = sweep_to;
            spec.steps = sweep_steps;
            OutStream out(sa.out_path);
            hstrn::run_sweep(build_config(sa), spec, sa.run, *out.os);
        } else if (trade->parsed()) {
            ta.run.methods = parse_methods(ta.methods);
            hstrn::SweepSpec spec;
            spec.variable = hstrn::SweepVariable::cee;
            spec.start = trade_from;
            spec.stop = trade_to;
            spec.steps = trade_steps;
            OutStream out(ta.out_path);
            hstrn::run_tradeoff(build_config(ta), spec, ta.run, *out.os);
        } else if (repro->parsed()) {
            OutStream out(ra.out_path);
            if (figure == "all") {
                for (int f = 2; f <= 9; ++f) {
                    std::ostringstream ss;
                    hstrn::run_reproduce("fig" + std::to_string(f), ra.run, ss);
                    const std::string text = ss.str();
                    const std::size_t body = text.find('\n') + 1;
                    *out.os << (f == 2 ? text : text.substr(body));
                }
            } else {
                hstrn::run_reproduce(figure, ra.run, *out.os);
            }
        } else { // selftest
            return hstrn::run_selftest(std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
