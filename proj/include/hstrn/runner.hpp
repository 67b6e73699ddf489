#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hstrn/linkmodel.hpp"

namespace hstrn {

std::string config_to_json(const NetworkConfig& cfg);
NetworkConfig config_from_json(const std::string& text);
NetworkConfig load_config_file(const std::string& path);

enum class SweepVariable { psi_db, theta_db, cee, c_th };

SweepVariable parse_sweep_variable(std::string_view name);
std::string_view sweep_variable_name(SweepVariable v);
void apply_sweep_value(NetworkConfig& cfg, SweepVariable v, double value);

struct SweepSpec {
    SweepVariable variable = SweepVariable::psi_db;
    double start = 0.0;
    double stop = 50.0;
    int steps = 11; // row count, endpoints included
};

struct MethodSet {
    bool closed_form = true;
    bool series = false;
    bool mc = true;
};

struct RunOptions {
    std::uint64_t trials = 200000;
    std::uint64_t seed = 12345;
    unsigned workers = 0; // 0 = all hardware threads
    MethodSet methods;
};

// Evaluates one configuration and writes an aligned human-readable report.
void run_point(const NetworkConfig& cfg, const RunOptions& opt, std::ostream& out);

// CSV, one row per sweep value:
// variable,value,op_closed,ip_closed,ip_series,ip_series_converged,
// op_mc,ip_mc,op_mc_stderr,ip_mc_stderr,error
// Cells for disabled methods stay empty; a row that throws reports the
// message in `error` and leaves its numeric cells empty.
void run_sweep(const NetworkConfig& base, const SweepSpec& spec,
               const RunOptions& opt, std::ostream& out);

// CSV of the reliability/security tradeoff: sweeps the estimation error
// and emits outage and intercept columns side by side.
void run_tradeoff(const NetworkConfig& base, const SweepSpec& spec,
                  const RunOptions& opt, std::ostream& out);

// Regenerates the data behind one of the bundled figures (fig2..fig9):
// figure,series,variable,value,op_closed,ip_closed,op_mc,ip_mc,
// op_mc_stderr,ip_mc_stderr
void run_reproduce(std::string_view figure, const RunOptions& opt, std::ostream& out);

// Fast internal consistency checks; returns the number of failures.
int run_selftest(std::ostream& out);

} // namespace hstrn
