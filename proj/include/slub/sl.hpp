#pragma once

#include "slub/grid.hpp"
#include "slub/parallel.hpp"

#include <limits>
#include <span>
#include <vector>

namespace slub {

// Linear interpolation of node values; x outside [a, b] takes the endpoint value.
double p1_interpolate(std::span<const double> values, const Grid1D& g, double x);
double p1_interpolate(const Field& field, double x);

// Signed Courant number: nu >= 0 reads the left neighbour, nu < 0 the right one.
Field sl_advection_step(const Field& in, double nu, Exec exec = Exec::Parallel);
Field sl_advection_step_var(const Field& in, const RealFn& c, double dt, Exec exec = Exec::Parallel);

struct Hamiltonian {
    enum class Kind { AbsValue, Linear, Custom };
    Kind kind = Kind::Custom;
    double c = 0.0;
    RealFn eval;

    static Hamiltonian abs_value(double c);
    static Hamiltonian linear(double c);
    static Hamiltonian custom(RealFn h);
};

struct ControlSet {
    double a_min = -1.0;
    double a_max = 1.0;
    std::vector<double> controls;

    static ControlSet uniform(double a_min, double a_max, int n_controls);
    static ControlSet single(double a);
};

struct PSearch {
    double p_max = 100.0;
    int samples = 2001;
    double growth_slope = 1e-6;
};

inline constexpr double kInfeasible = std::numeric_limits<double>::infinity();

struct LegendreTable {
    std::vector<double> controls;
    std::vector<double> values; // kInfeasible outside the effective domain of H*

    std::size_t feasible_count() const;
};

LegendreTable legendre_transform(const Hamiltonian& h, const ControlSet& controls, const PSearch& search = {});

// min over feasible controls a of I[in](x_j - a dt) + dt H*(a)
Field sl_hj_step(const Field& in, const LegendreTable& table, double dt, Exec exec = Exec::Parallel);

} // namespace slub
