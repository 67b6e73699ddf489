#include "hstrn/runner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "hstrn/analysis.hpp"
#include "hstrn/montecarlo.hpp"
#include "hstrn/presets.hpp"
#include "hstrn/specfun.hpp"

namespace hstrn {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string csv_safe(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n') c = ';';
    return s;
}

} // namespace

std::string config_to_json(const NetworkConfig& cfg) {
    nlohmann::json j;
    for (const auto& r : cfg.relays)
        j["relays"].push_back({{"m", r.m}, {"b", r.b}, {"omega", r.omega}});
    j["lambda_rd"] = cfg.lambda_rd;
    j["lambda_re"] = cfg.lambda_re;
    j["lambda_je"] = cfg.lambda_je;
    j["cee"] = {{"sr", cfg.cee.sr}, {"rd", cfg.cee.rd}, {"re", cfg.cee.re}, {"je", cfg.cee.je}};
    j["power"] = {{"psi_db", cfg.power.psi_db},
                  {"phi_db", cfg.power.phi_db},
                  {"theta_db", cfg.power.theta_db}};
    j["c_th"] = cfg.c_th;
    return j.dump(2);
}

NetworkConfig config_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("config parse error: ") + e.what());
    }
    NetworkConfig cfg;
    cfg.relays.clear();
    if (j.contains("relays")) {
        for (const auto& r : j.at("relays")) {
            ShadowedRicianParams p;
            p.m = r.value("m", p.m);
            p.b = r.value("b", p.b);
            p.omega = r.value("omega", p.omega);
            cfg.relays.push_back(p);
        }
    }
    if (cfg.relays.empty()) cfg.relays.push_back(ShadowedRicianParams::heavy());
    cfg.lambda_rd = j.value("lambda_rd", cfg.lambda_rd);
    cfg.lambda_re = j.value("lambda_re", cfg.lambda_re);
    cfg.lambda_je = j.value("lambda_je", cfg.lambda_je);
    if (j.contains("cee")) {
        const auto& c = j.at("cee");
        if (c.is_number()) {
            cfg.cee = CeeProfile::uniform(c.get<double>());
        } else {
            cfg.cee.sr = c.value("sr", cfg.cee.sr);
            cfg.cee.rd = c.value("rd", cfg.cee.rd);
            cfg.cee.re = c.value("re", cfg.cee.re);
            cfg.cee.je = c.value("je", cfg.cee.je);
        }
    }
    if (j.contains("power")) {
        const auto& p = j.at("power");
        cfg.power.psi_db = p.value("psi_db", cfg.power.psi_db);
        cfg.power.phi_db = p.value("phi_db", cfg.power.phi_db);
        cfg.power.theta_db = p.value("theta_db", cfg.power.theta_db);
    }
    cfg.c_th = j.value("c_th", cfg.c_th);
    cfg.validate();
    return cfg;
}

NetworkConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str());
}

SweepVariable parse_sweep_variable(std::string_view name) {
    if (name == "psi_db" || name == "psi") return SweepVariable::psi_db;
    if (name == "theta_db" || name == "theta") return SweepVariable::theta_db;
    if (name == "cee") return SweepVariable::cee;
    if (name == "c_th" || name == "cth") return SweepVariable::c_th;
    throw std::invalid_argument("unknown sweep variable '" + std::string(name) +
                                "' (psi_db, theta_db, cee, c_th)");
}

std::string_view sweep_variable_name(SweepVariable v) {
    switch (v) {
        case SweepVariable::psi_db: return "psi_db";
        case SweepVariable::theta_db: return "theta_db";
        case SweepVariable::cee: return "cee";
        case SweepVariable::c_th: return "c_th";
    }
    return "?";
}

void apply_sweep_value(NetworkConfig& cfg, SweepVariable v, double value) {
    switch (v) {
        case SweepVariable::psi_db: cfg.power.psi_db = value; break;
        case SweepVariable::theta_db: cfg.power.theta_db = value; break;
        case SweepVariable::cee: cfg.cee = CeeProfile::uniform(value); break;
        case SweepVariable::c_th: cfg.c_th = value; break;
    }
}

void run_point(const NetworkConfig& cfg, const RunOptions& opt, std::ostream& out) {
    cfg.validate();
    out << "relays:             " << cfg.relays.size() << "\n";
    out << "satellite snr psi:  " << fmt(cfg.power.psi_db) << " dB\n";
    out << "relay snr phi:      " << fmt(cfg.power.phi_db) << " dB\n";
    out << "jammer snr theta:   " << fmt(cfg.power.theta_db) << " dB\n";
    out << "rate threshold:     " << fmt(cfg.c_th) << " b/s/Hz (snr threshold "
        << fmt(gamma_threshold(cfg.c_th)) << ")\n";
    out << "estimation error:   sr=" << fmt(cfg.cee.sr) << " rd=" << fmt(cfg.cee.rd)
        << " re=" << fmt(cfg.cee.re) << " je=" << fmt(cfg.cee.je) << "\n";
    out << "exp channel rates:  rd=" << fmt(cfg.lambda_rd) << " re=" << fmt(cfg.lambda_re)
        << " je=" << fmt(cfg.lambda_je) << "\n";
    if (opt.methods.closed_form) {
        out << "outage (closed):    " << fmt(outage_probability(cfg)) << "\n";
        out << "intercept (closed): " << fmt(intercept_probability(cfg)) << "\n";
    }
    if (opt.methods.series) {
        const SeriesResult s = intercept_probability_series(cfg);
        out << "intercept (series): " << fmt(s.value)
            << (s.converged ? " [converged, order " : " [NOT CONVERGED, truncated at order ")
            << s.highest_order << "]\n";
    }
    if (opt.methods.mc) {
        const McResult m = estimate(cfg, opt.trials, opt.seed, opt.workers);
        out << "outage (mc):        " << fmt(m.op.value) << " +/- " << fmt(m.op.std_error)
            << " [" << fmt(m.op.ci_low) << ", " << fmt(m.op.ci_high) << "] n=" << m.op.trials
            << "\n";
        out << "intercept (mc):     " << fmt(m.ip.value) << " +/- " << fmt(m.ip.std_error)
            << " [" << fmt(m.ip.ci_low) << ", " << fmt(m.ip.ci_high) << "] n=" << m.ip.trials
            << "\n";
    }
}

void run_sweep(const NetworkConfig& base, const SweepSpec& spec, const RunOptions& opt,
               std::ostream& out) {
    base.validate();
    if (spec.steps < 1) throw std::invalid_argument("sweep needs at least one step");
    out << "variable,value,op_closed,ip_closed,ip_series,ip_series_converged,"
           "op_mc,ip_mc,op_mc_stderr,ip_mc_stderr,error\n";
    for (int i = 0; i < spec.steps; ++i) {
        const double v = spec.steps == 1
                             ? spec.start
                             : spec.start + (spec.stop - spec.start) * i / (spec.steps - 1);
        NetworkConfig cfg = base;
        apply_sweep_value(cfg, spec.variable, v);
        std::string op_cf, ip_cf, ip_se, ip_se_conv, op_mc, ip_mc, op_see, ip_see, err;
        try {
            if (opt.methods.closed_form) {
                op_cf = fmt(outage_probability(cfg));
                ip_cf = fmt(intercept_probability(cfg));
            }
            if (opt.methods.series) {
                const SeriesResult s = intercept_probability_series(cfg);
                ip_se = fmt(s.value);
                ip_se_conv = s.converged ? "1" : "0";
            }
            if (opt.methods.mc) {
                const McResult m = estimate(cfg, opt.trials, opt.seed, opt.workers);
                op_mc = fmt(m.op.value);
                ip_mc = fmt(m.ip.value);
                op_see = fmt(m.op.std_error);
                ip_see = fmt(m.ip.std_error);
            }
        } catch (const std::exception& e) {
            err = csv_safe(e.what());
        }
        out << sweep_variable_name(spec.variable) << ',' << fmt(v) << ',' << op_cf << ','
            << ip_cf << ',' << ip_se << ',' << ip_se_conv << ',' << op_mc << ',' << ip_mc
            << ',' << op_see << ',' << ip_see << ',' << err << "\n";
    }
}

void run_tradeoff(const NetworkConfig& base, const SweepSpec& spec, const RunOptions& opt,
                  std::ostream& out) {
    SweepSpec s = spec;
    s.variable = SweepVariable::cee;
    run_sweep(base, s, opt, out);
}

namespace {

struct Curve {
    std::string name;
    NetworkConfig cfg;
};

void reproduce_rows(std::string_view figure, const std::vector<Curve>& curves,
                    SweepVariable var, const std::vector<double>& values,
                    const RunOptions& opt, std::ostream& out) {
    for (const Curve& c : curves) {
        for (double v : values) {
            NetworkConfig cfg = c.cfg;
            apply_sweep_value(cfg, var, v);
            const double op = outage_probability(cfg);
            const double ip = intercept_probability(cfg);
            const McResult m = estimate(cfg, opt.trials, opt.seed, opt.workers);
            out << figure << ',' << c.name << ',' << sweep_variable_name(var) << ','
                << fmt(v) << ',' << fmt(op) << ',' << fmt(ip) << ',' << fmt(m.op.value)
                << ',' << fmt(m.ip.value) << ',' << fmt(m.op.std_error) << ','
                << fmt(m.ip.std_error) << "\n";
        }
    }
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
    return v;
}

} // namespace

void run_reproduce(std::string_view figure, const RunOptions& opt, std::ostream& out) {
    out << "figure,series,variable,value,op_closed,ip_closed,op_mc,ip_mc,"
           "op_mc_stderr,ip_mc_stderr\n";
    auto curves_pm14 = [](ShadowingClass sc) {
        std::vector<Curve> cs;
        for (int pm = 1; pm <= 4; ++pm) cs.push_back({preset_name(pm, sc), expand_preset(pm, sc)});
        return cs;
    };
    auto curves_pm56_all = [] {
        std::vector<Curve> cs;
        for (int pm = 5; pm <= 6; ++pm) {
            cs.push_back({preset_name(pm, ShadowingClass::heavy),
                          expand_preset(pm, ShadowingClass::heavy)});
            cs.push_back({preset_name(pm, ShadowingClass::average),
                          expand_preset(pm, ShadowingClass::average)});
        }
        return cs;
    };
    auto curves_pm56_one = [](ShadowingClass sc) {
        std::vector<Curve> cs;
        for (int pm = 5; pm <= 6; ++pm) cs.push_back({preset_name(pm, sc), expand_preset(pm, sc)});
        return cs;
    };

    const std::vector<double> psi = linspace(0.0, 50.0, 11);
    const std::vector<double> cee_fig67 = linspace(0.10, 0.30, 9);
    const std::vector<double> cee_trade = linspace(0.02, 0.30, 15);

    if (figure == "fig2")
        reproduce_rows(figure, curves_pm14(ShadowingClass::heavy), SweepVariable::psi_db, psi, opt, out);
    else if (figure == "fig3")
        reproduce_rows(figure, curves_pm14(ShadowingClass::heavy), SweepVariable::psi_db, psi, opt, out);
    else if (figure == "fig4")
        reproduce_rows(figure, curves_pm14(ShadowingClass::average), SweepVariable::psi_db, psi, opt, out);
    else if (figure == "fig5")
        reproduce_rows(figure, curves_pm14(ShadowingClass::average), SweepVariable::psi_db, psi, opt, out);
    else if (figure == "fig6")
        reproduce_rows(figure, curves_pm56_all(), SweepVariable::cee, cee_fig67, opt, out);
    else if (figure == "fig7")
        reproduce_rows(figure, curves_pm56_all(), SweepVariable::cee, cee_fig67, opt, out);
    else if (figure == "fig8")
        reproduce_rows(figure, curves_pm56_one(ShadowingClass::heavy), SweepVariable::cee, cee_trade, opt, out);
    else if (figure == "fig9")
        reproduce_rows(figure, curves_pm56_one(ShadowingClass::average), SweepVariable::cee, cee_trade, opt, out);
    else
        throw std::invalid_argument("unknown figure '" + std::string(figure) +
                                    "' (fig2..fig9)");
}

int run_selftest(std::ostream& out) {
    int fails = 0;
    auto check = [&](bool ok, const std::string& what) {
        out << (ok ? "ok:   " : "FAIL: ") << what << "\n";
        if (!ok) ++fails;
    };
    auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); };

    check(rel(bessel_k(0, 1.0), 0.42102443824070834) < 1e-12, "bessel K0(1)");
    check(rel(bessel_k(1, 2.0), 0.13986588181652246) < 1e-12, "bessel K1(2)");
    check(rel(bessel_k(5, 3.7), 0.25639976139072568) < 1e-12, "bessel K5(3.7)");
    check(binomial(10, 4) == 210, "binomial(10,4)");

    NetworkConfig c1;
    c1.relays = {ShadowedRicianParams::heavy()};
    c1.cee = CeeProfile::uniform(0.25);
    c1.power = {20.0, 10.0, 1.0};
    check(rel(outage_probability(c1), 0.97127512489356049) < 1e-10, "outage closed-form pin");

    NetworkConfig c2;
    c2.relays.assign(3, ShadowedRicianParams::average());
    c2.cee = CeeProfile::uniform(0.25);
    c2.power = {20.0, 10.0, 1.0};
    check(rel(outage_probability(c2), op_numeric_oracle(c2)) < 1e-7,
          "outage closed form agrees with direct quadrature");

    NetworkConfig c3 = c2;
    c3.power = {10.0, 20.0, 1.0};
    check(rel(q_given_jammer(c3, 0.0), 0.44269780961233846) < 1e-10, "conditional secrecy pin");
    check(rel(intercept_probability(c3), 0.51935366024059793) < 1e-9, "intercept quadrature pin");

    for (double x : {0.0, 0.05, 0.7, 3.0}) {
        const TermSum best = best_relay_cdf_terms(c2.relays);
        double prod = 1.0;
        for (const auto& r : c2.relays) prod *= sr_cdf(r, x);
        if (std::abs(best_relay_cdf_eval(best, x) - prod) > 1e-12) {
            check(false, "best-relay CDF expansion at x=" + fmt(x));
            break;
        }
        if (x == 3.0) check(true, "best-relay CDF expansion matches direct product");
    }

    const McResult a = estimate(c1, 5000, 99, 1);
    const McResult b = estimate(c1, 5000, 99, 3);
    check(a.op.value == b.op.value && a.ip.value == b.ip.value,
          "monte carlo bit-identical across worker counts");
    const McResult m = estimate(c1, 20000, 7, 0);
    check(std::abs(m.op.value - outage_probability(c1)) < 4.0 * std::max(m.op.std_error, 1e-6),
          "monte carlo matches closed form within 4 sigma");

    out << (fails == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return fails;
}

} // namespace hstrn
