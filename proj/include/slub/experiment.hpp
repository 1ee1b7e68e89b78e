#pragma once

#include "slub/coupling.hpp"
#include "slub/diagnostics.hpp"
#include "slub/problems.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace slub {

enum class Scheme { SL, UB, Coupled };

Scheme parse_scheme(const std::string& s);
std::string to_string(Scheme s);

struct RunOptions {
    std::optional<double> delta;
    std::optional<double> epsilon;
    std::optional<double> flat_tol;
    std::vector<int> snapshots;
    int controls = 201;
    double radius_cells = 3.0; // epsilon_reg in units of dx
    Exec exec = Exec::Parallel;
};

struct Snapshot {
    int step = 0;
    Field values;
    SigmaField sigma; // empty unless coupled
};

struct RunResult {
    Scheme scheme = Scheme::SL;
    Grid1D grid;
    TimeSpec time;
    RegularityParams params;
    Field final;
    SigmaField final_sigma;
    std::vector<Snapshot> snapshots;
    std::vector<double> tv;
};

RegularityParams default_regularity(const ProblemSpec& p, const RunOptions& opt);
SchemeContext make_context(const ProblemSpec& p, const Grid1D& g, double dt, Exec exec, int controls = 201);
TimeSpec default_time(const ProblemSpec& p, const Grid1D& g, double nu, double T);

RunResult run_sl(const ProblemSpec& p, const Grid1D& g, const TimeSpec& time, const RunOptions& opt = {});
RunResult run_ub(const ProblemSpec& p, const Grid1D& g, const TimeSpec& time, const RunOptions& opt = {});
RunResult run_coupled(const ProblemSpec& p, const Grid1D& g, const TimeSpec& time, const RegularityParams& params,
                      const RunOptions& opt = {});
RunResult run_scheme(const ProblemSpec& p, Scheme s, const Grid1D& g, const TimeSpec& time,
                     const RunOptions& opt = {});

ErrorReport evaluate(const ProblemSpec& p, const RunResult& r, double radius_cells = 3.0);

struct Ladder {
    std::string name;
    std::vector<int> m;
};

Ladder ladder_preset(const std::string& name);
// Preset name or comma-separated cell counts.
Ladder parse_ladder(const std::string& text);

struct ConvergenceRow {
    int m = 0;
    ErrorReport err;
    std::optional<double> order_l1;
    std::optional<double> order_l2;
    std::optional<double> order_linf;
};

std::vector<ConvergenceRow> convergence_table(const ProblemSpec& p, Scheme s, const Ladder& ladder, double nu,
                                              double T, const RunOptions& opt = {});

struct StabilitySuiteResult {
    int trials = 0;
    int sl_violations = 0;
    int ub_violations = 0;
    int coupled_violations = 0;
    // node counts per (sigma_prev, sigma) = (1,1), (0,0), (1,0), (0,1)
    std::array<long, 4> switch_cases{};
    std::optional<StabilityViolation> first;
};

// Random compact-support fields, random nu in [-1, 1], one step of every scheme per trial.
StabilitySuiteResult stability_suite(std::uint64_t seed, int trials);

std::string format_sci3(double v);
std::string format_table(const std::vector<ConvergenceRow>& rows, bool with_reg);

} // namespace slub
