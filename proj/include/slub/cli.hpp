#pragma once

#include "slub/experiment.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slub::cli {

struct RunConfig {
    std::string problem = "adv-smooth";
    std::string scheme = "coupled";
    std::optional<double> a;
    std::optional<double> b;
    std::optional<int> m;
    std::optional<double> nu;
    std::optional<double> T;
    std::optional<double> delta;
    std::optional<double> epsilon;
    std::vector<int> snapshots;
    std::string out = "out";

    bool operator==(const RunConfig&) const = default;
};

// Every optional filled from the problem defaults; snapshots default to {0, n_steps}.
RunConfig resolve(const RunConfig& cfg);

std::string write_manifest(const RunConfig& resolved);
RunConfig parse_manifest(const std::string& text);

std::vector<int> parse_int_list(const std::string& s);

// Each returns a process exit code and writes into cfg.out.
int cmd_run(const RunConfig& cfg);
int cmd_convergence(const std::string& problem, const std::string& scheme, const std::string& ladder,
                    std::optional<double> nu, std::optional<double> T, const std::string& out);
int cmd_compare(const std::string& problem, std::optional<int> m, const std::vector<std::string>& schemes,
                const std::string& out);
int cmd_list_problems();
int cmd_check(unsigned seed, int trials);

} // namespace slub::cli
