#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hstrn/analysis.hpp"
#include "hstrn/presets.hpp"
#include "hstrn/runner.hpp"

using namespace hstrn;

namespace {
std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}
} // namespace

TEST_SUITE("runner") {

TEST_CASE("presets expand to the documented shapes") {
    const NetworkConfig pm1 = expand_preset(1, ShadowingClass::heavy);
    CHECK(pm1.relays.size() == 1);
    CHECK(pm1.relays[0].m == 1);
    CHECK(pm1.cee.sr == 0.25);
    CHECK(pm1.power.phi_db == 20.0);
    CHECK(pm1.power.psi_db == 20.0);
    CHECK(pm1.power.theta_db == 1.0);
    CHECK(pm1.c_th == 1.0);

    const NetworkConfig pm2 = expand_preset(2, ShadowingClass::average);
    CHECK(pm2.relays.size() == 1);
    CHECK(pm2.relays[0].m == 5);
    CHECK(pm2.cee.sr == 0.0);

    CHECK(expand_preset(3, ShadowingClass::heavy).relays.size() == 3);
    CHECK(expand_preset(4, ShadowingClass::heavy).cee.rd == 0.0);
    CHECK(expand_preset(5, ShadowingClass::heavy).power.phi_db == 5.0);
    CHECK(expand_preset(6, ShadowingClass::heavy).power.phi_db == 10.0);
    CHECK_THROWS_AS(expand_preset(0, ShadowingClass::heavy), std::invalid_argument);
    CHECK_THROWS_AS(expand_preset(7, ShadowingClass::heavy), std::invalid_argument);
}

TEST_CASE("preset names round trip") {
    CHECK(preset_name(3, ShadowingClass::average) == "PM3-AS");
    const NetworkConfig a = parse_preset("PM3-AS");
    const NetworkConfig b = parse_preset("pm3-as");
    CHECK(a.relays.size() == b.relays.size());
    CHECK(a.relays[0].m == 5);
    CHECK_THROWS_AS(parse_preset("PM7-HS"), std::invalid_argument);
    CHECK_THROWS_AS(parse_preset("PM1-XX"), std::invalid_argument);
    CHECK_THROWS_AS(parse_preset(""), std::invalid_argument);
}

TEST_CASE("json config round trip") {
    NetworkConfig cfg = expand_preset(5, ShadowingClass::average);
    cfg.lambda_re = 2.5;
    cfg.cee.je = 0.125;
    cfg.c_th = 0.75;
    const NetworkConfig back = config_from_json(config_to_json(cfg));
    CHECK(back.relays.size() == cfg.relays.size());
    CHECK(back.relays[0].m == cfg.relays[0].m);
    CHECK(back.relays[0].b == cfg.relays[0].b);
    CHECK(back.relays[0].omega == cfg.relays[0].omega);
    CHECK(back.lambda_re == 2.5);
    CHECK(back.cee.je == 0.125);
    CHECK(back.cee.sr == 0.25);
    CHECK(back.c_th == 0.75);
    CHECK(back.power.phi_db == 5.0);
}

TEST_CASE("json config defaults and scalar error field") {
    const NetworkConfig d = config_from_json("{}");
    CHECK(d.relays.size() == 1);
    CHECK(d.relays[0].m == 1);
    CHECK(d.lambda_rd == 1.0);
    const NetworkConfig u = config_from_json(R"({"cee": 0.1})");
    CHECK(u.cee.sr == 0.1);
    CHECK(u.cee.je == 0.1);
    CHECK_THROWS_AS(config_from_json("not json"), std::runtime_error);
    CHECK_THROWS_AS(config_from_json(R"({"lambda_rd": -1})"), std::domain_error);
}

TEST_CASE("sweep variables parse and apply") {
    CHECK(parse_sweep_variable("psi") == SweepVariable::psi_db);
    CHECK(parse_sweep_variable("theta_db") == SweepVariable::theta_db);
    CHECK(parse_sweep_variable("cee") == SweepVariable::cee);
    CHECK(parse_sweep_variable("cth") == SweepVariable::c_th);
    CHECK_THROWS_AS(parse_sweep_variable("bogus"), std::invalid_argument);
    for (SweepVariable v : {SweepVariable::psi_db, SweepVariable::theta_db,
                            SweepVariable::cee, SweepVariable::c_th})
        CHECK(parse_sweep_variable(sweep_variable_name(v)) == v);

    NetworkConfig cfg = expand_preset(1, ShadowingClass::heavy);
    apply_sweep_value(cfg, SweepVariable::psi_db, 37.0);
    CHECK(cfg.power.psi_db == 37.0);
    apply_sweep_value(cfg, SweepVariable::theta_db, -3.0);
    CHECK(cfg.power.theta_db == -3.0);
    apply_sweep_value(cfg, SweepVariable::cee, 0.15);
    CHECK(cfg.cee.sr == 0.15);
    CHECK(cfg.cee.je == 0.15);
    apply_sweep_value(cfg, SweepVariable::c_th, 2.0);
    CHECK(cfg.c_th == 2.0);
}

TEST_CASE("sweep emits the documented csv") {
    RunOptions opt;
    opt.methods = {true, true, true};
    opt.trials = 5000;
    opt.seed = 5;
    opt.workers = 2;
    SweepSpec spec{SweepVariable::psi_db, 10.0, 30.0, 3};
    std::ostringstream out;
    const NetworkConfig base = expand_preset(1, ShadowingClass::heavy);
    run_sweep(base, spec, opt, out);

    const auto rows = lines_of(out.str());
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] ==
          "variable,value,op_closed,ip_closed,ip_series,ip_series_converged,"
          "op_mc,ip_mc,op_mc_stderr,ip_mc_stderr,error");
    const auto first = split(rows[1]);
    REQUIRE(first.size() == 11);
    CHECK(first[0] == "psi_db");
    CHECK(first[1] == "10");
    NetworkConfig at10 = base;
    at10.power.psi_db = 10.0;
    CHECK(std::abs(std::stod(first[2]) - outage_probability(at10)) < 1e-9);
    CHECK(std::abs(std::stod(first[3]) - intercept_probability(at10)) < 1e-9);
    CHECK((first[5] == "0" || first[5] == "1"));
    CHECK(first[10].empty());
    const auto last = split(rows[3]);
    CHECK(last[1] == "30");
}

TEST_CASE("sweep rows carry per-row failures in the error column") {
    RunOptions opt;
    opt.methods = {true, false, false};
    SweepSpec spec{SweepVariable::c_th, -1.0, 1.0, 2};
    std::ostringstream out;
    run_sweep(expand_preset(1, ShadowingClass::heavy), spec, opt, out);
    const auto rows = lines_of(out.str());
    REQUIRE(rows.size() == 3);
    const auto bad = split(rows[1]);
    CHECK(bad[2].empty());          // no numeric cells on the failed row
    CHECK_FALSE(bad[10].empty());   // message lands in the error column
    const auto good = split(rows[2]);
    CHECK_FALSE(good[2].empty());
    CHECK(good[10].empty());
}

TEST_CASE("disabled methods leave their cells empty") {
    RunOptions opt;
    opt.methods = {true, false, false};
    SweepSpec spec{SweepVariable::psi_db, 20.0, 20.0, 1};
    std::ostringstream out;
    run_sweep(expand_preset(1, ShadowingClass::heavy), spec, opt, out);
    const auto row = split(lines_of(out.str())[1]);
    CHECK_FALSE(row[2].empty());
    CHECK(row[4].empty());
    CHECK(row[6].empty());
    CHECK(row[8].empty());
}

TEST_CASE("tradeoff always sweeps the estimation error") {
    RunOptions opt;
    opt.methods = {true, false, false};
    SweepSpec spec{SweepVariable::psi_db, 0.1, 0.3, 2}; // variable is overridden
    std::ostringstream out;
    run_tradeoff(expand_preset(5, ShadowingClass::heavy), spec, opt, out);
    const auto rows = lines_of(out.str());
    REQUIRE(rows.size() == 3);
    CHECK(split(rows[1])[0] == "cee");
}

TEST_CASE("figure data regeneration") {
    RunOptions opt;
    opt.trials = 400;
    opt.workers = 2;
    std::ostringstream out;
    run_reproduce("fig8", opt, out);
    const auto rows = lines_of(out.str());
    REQUIRE(rows.size() == 31); // header + 2 curves x 15 points
    CHECK(rows[0] ==
          "figure,series,variable,value,op_closed,ip_closed,op_mc,ip_mc,"
          "op_mc_stderr,ip_mc_stderr");
    const auto r = split(rows[1]);
    REQUIRE(r.size() == 10);
    CHECK(r[0] == "fig8");
    CHECK(r[1] == "PM5-HS");
    CHECK(r[2] == "cee");
    CHECK_THROWS_AS(run_reproduce("fig1", opt, out), std::invalid_argument);
}

TEST_CASE("point report names every quantity") {
    RunOptions opt;
    opt.methods = {true, true, true};
    opt.trials = 2000;
    opt.workers = 2;
    std::ostringstream out;
    run_point(expand_preset(1, ShadowingClass::heavy), opt, out);
    const std::string text = out.str();
    CHECK(text.find("outage (closed):") != std::string::npos);
    CHECK(text.find("intercept (closed):") != std::string::npos);
    CHECK(text.find("intercept (series):") != std::string::npos);
    CHECK(text.find("outage (mc):") != std::string::npos);
    CHECK(text.find("n=2000") != std::string::npos);
}

TEST_CASE("internal selftest is green") {
    std::ostringstream sink;
    CHECK(run_selftest(sink) == 0);
}

} // TEST_SUITE
