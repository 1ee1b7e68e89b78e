#pragma once

#include "slub/grid.hpp"
#include "slub/parallel.hpp"
#include "slub/ub.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace slub {

double backward_diff(const Field& w, std::ptrdiff_t j);

struct RegularityParams {
    double delta = 1.0;
    double epsilon = 0.1;
    double flat_tol = 0.7;
    double zero_band = 1e-12; // relative to delta; slopes this small have no sign

    // delta = max(L (1 + eps), floor), flat_tol = kappa delta
    static RegularityParams from_slope_bound(double L, double eps = 0.1, double floor = 1.0, double kappa = 0.7);
    // delta = max |D-w0| - eps with a 1e-12 flat tolerance
    static RegularityParams from_initial_data(const Field& w0, double eps);
    static RegularityParams always_regular();
    static RegularityParams never_regular();
};

using SigmaField = std::vector<std::uint8_t>;

int classify_node(const Field& w, std::ptrdiff_t j, const RegularityParams& params);
SigmaField classify(const Field& w, const RegularityParams& params, Exec exec = Exec::Parallel);

inline double project_sl(double u_bar_left, double u_bar_right) { return 0.5 * (u_bar_left + u_bar_right); }
inline double project_ub(double u_left, double u_right) { return 0.5 * (u_left + u_right); }

struct CoupledState {
    Field w;                        // point values at nodes
    Field w_bar;                    // cell values, meaningful where cell_valid
    std::vector<std::uint8_t> cell_valid;
    SigmaField sigma;               // indicator used for the step that produced this state
    SigmaField sigma_prev;
    int step = 0;
    int synthesized = 0;            // cells filled by project_ub inside fill_holes
};

// Both representations present and every cell valid.
CoupledState init_coupled(const Field& w0, const Field& w_bar0);

struct SchemeContext {
    std::function<Field(const Field&)> sl_step;
    CourantNumbers cn;
    Exec exec = Exec::Parallel;
};

// Valid cells keep w_bar, the others take project_ub of the node values.
std::vector<double> working_cells(const CoupledState& state);

// Nodes with sigma = 1 get the SL update; cells touching a sigma = 0 node get the UB update.
CoupledState coupled_step(const CoupledState& state, const SigmaField& sigma, const SchemeContext& ctx);
CoupledState coupled_step(const CoupledState& state, const SchemeContext& ctx, const RegularityParams& params);

CoupledState fill_holes(CoupledState state);

struct RegionPartition {
    std::vector<int> regular_nodes;
    std::vector<int> singular_nodes;
    std::vector<int> singular_cells;
};

RegionPartition partition(const SigmaField& sigma);

} // namespace slub
