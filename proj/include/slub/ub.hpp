#pragma once

#include "slub/grid.hpp"
#include "slub/parallel.hpp"

#include <span>
#include <utility>
#include <vector>

namespace slub {

struct VelocityPair {
    RealFn f_m;
    RealFn f_M;

    static VelocityPair single(RealFn c);
    static VelocityPair symmetric(double c); // f_m = -|c|, f_M = |c|
};

// Per-cell Courant numbers, sampled at the cell centres.
struct CourantNumbers {
    std::vector<double> nu_m;
    std::vector<double> nu_M;

    bool single_velocity() const { return nu_m == nu_M; }
    double max_abs() const;
};

// Throws std::invalid_argument naming the first sample with |nu| > 1.
CourantNumbers cfl_check(const VelocityPair& pair, const Grid1D& g, double dt);
CourantNumbers constant_courant(int cells, double nu);

inline constexpr double kZeroCourant = 1e-14;

// Flux at the interface j+1/2 from (u_{j-1}, u_j, u_{j+1}), 0 <= nu <= 1.
double ub_flux_left(double u_prev, double u_cur, double u_next, double nu);
// Flux at the interface j-1/2 from (u_{j-1}, u_j, u_{j+1}), -1 <= nu <= 0.
double ub_flux_right(double u_prev, double u_cur, double u_next, double nu);

// One cell of the flux-form update; indices outside u use constant continuation.
double ub_cell_update(std::span<const double> u, std::ptrdiff_t k, double nu);

Field ub_step_single(const Field& in, std::span<const double> nus, Exec exec = Exec::Parallel);
Field ub_step(const Field& in, const CourantNumbers& cn, Exec exec = Exec::Parallel);

struct LimiterState {
    double r = 0.0;
    double phi = 0.0;
    bool active = false;
};

// Limiter form of the j+1/2 flux for 0 < nu < 1; agrees with ub_flux_left.
std::pair<double, LimiterState> ub_flux_limited(const Field& field, std::ptrdiff_t j, double nu);

} // namespace slub
