#pragma once

#include "slub/grid.hpp"
#include "slub/ub.hpp"

#include <string>
#include <vector>

namespace slub {

double ic_smooth(double x);
double ic_jump(double x);
double ic_mix(double x);
double ic_smooth_var(double x);

double exact_advection_const(const RealFn& ic, double c, double x, double t);
// Flow dX/dt = -(X - x_bar), traced back from (x, t).
double exact_advection_linear_velocity(const RealFn& ic, double x_bar, double x, double t);
// Same foot by classical RK4 on the characteristic ODE; reference for the closed form.
double rk4_backtrace_linear_velocity(const RealFn& ic, double x_bar, double x, double t, int steps = 200);
// Hopf-Lax for H(p) = |c p|: min of ic over [x - c t, x + c t].
double hopf_lax_oracle(const RealFn& ic, double c, double x, double t, int n_samples = 2001);

enum class EquationKind { AdvectionConst, AdvectionVar, HJTwoVelocity };

using Oracle = std::function<double(double, double)>;

struct ProblemSpec {
    std::string name;
    std::string description;
    EquationKind kind = EquationKind::AdvectionConst;
    RealFn ic;
    std::vector<double> ic_breakpoints;
    double a = 0.0;
    double b = 1.0;
    double T = 1.0;
    VelocityPair velocity;
    double velocity_scale = 1.0; // converts nu to dt
    double nu = 0.9;
    double slope_bound = 0.0;    // bound on |u_x| away from singular points
    std::string ladder;
    int default_m = 79;
    Oracle exact;
    std::function<std::vector<double>(double)> singular; // singular abscissae at time t
};

struct SingularPointSet {
    std::vector<double> points;
    double radius = 0.0;
};

const std::vector<ProblemSpec>& problem_registry();
// Throws std::invalid_argument for an unknown name.
const ProblemSpec& find_problem(const std::string& name);

SingularPointSet singular_points(const ProblemSpec& problem, double t, double radius);

} // namespace slub
