#include "slub/problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace slub {

double ic_smooth(double x)
{
    if (std::abs(x) > 1.0)
        return 0.0;
    const double s = 1.0 - x * x;
    return s * s * s * s;
}

double ic_jump(double x)
{
    return std::abs(x) <= 1.0 ? 1.0 : 0.0;
}

double ic_mix(double x)
{
    if (x > -4.0 && x < -2.0)
        return 1.0 - std::abs(x + 3.0);
    if (x > -1.0 && x < 1.0)
        return ic_smooth(x);
    if (x > 2.0 && x < 3.0)
        return 1.0;
    return 0.0;
}

double ic_smooth_var(double x)
{
    const double s = std::max(0.0, 1.0 - 16.0 * (x - 0.25) * (x - 0.25));
    return s * s;
}

double exact_advection_const(const RealFn& ic, double c, double x, double t)
{
    return ic(x - c * t);
}

double exact_advection_linear_velocity(const RealFn& ic, double x_bar, double x, double t)
{
    return ic(x_bar + (x - x_bar) * std::exp(t));
}

double rk4_backtrace_linear_velocity(const RealFn& ic, double x_bar, double x, double t, int steps)
{
    // backward in time: dY/ds = +(Y - x_bar)
    const auto f = [x_bar](double y) { return y - x_bar; };
    const double h = t / steps;
    double y = x;
    for (int i = 0; i < steps; ++i) {
        const double k1 = f(y);
        const double k2 = f(y + 0.5 * h * k1);
        const double k3 = f(y + 0.5 * h * k2);
        const double k4 = f(y + h * k3);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return ic(y);
}

double hopf_lax_oracle(const RealFn& ic, double c, double x, double t, int n_samples)
{
    if (!(c > 0.0) || n_samples < 101)
        throw std::invalid_argument("hopf_lax_oracle: need c > 0 and at least 101 samples");
    const double r = c * t;
    if (r <= 0.0)
        return ic(x);
    const double lo = x - r;
    const double h = 2.0 * r / (n_samples - 1);
    double best = std::numeric_limits<double>::infinity();
    int arg = 0;
    for (int i = 0; i < n_samples; ++i) {
        const double y = i == n_samples - 1 ? x + r : lo + i * h;
        const double v = ic(y);
        if (v < best) {
            best = v;
            arg = i;
        }
    }
    double l = lo + std::max(0, arg - 1) * h;
    double u = std::min(x + r, lo + std::min(n_samples - 1, arg + 1) * h);
    for (int it = 0; it < 100 && u - l > 1e-15; ++it) {
        const double m1 = l + (u - l) / 3.0;
        const double m2 = u - (u - l) / 3.0;
        if (ic(m1) < ic(m2))
            u = m2;
        else
            l = m1;
    }
    return std::min(best, ic(0.5 * (l + u)));
}

namespace {

std::vector<double> shifted(std::vector<double> pts, double s)
{
    for (double& p : pts)
        p += s;
    return pts;
}

std::vector<ProblemSpec> build_registry()
{
    std::vector<ProblemSpec> r;
    const RealFn one = [](double) { return 1.0; };

    ProblemSpec smooth;
    smooth.name = "adv-smooth";
    smooth.description = "u_t + u_x = 0, u0 = (1-x^2)^4 on |x|<=1, domain [-2,2], T=2, nu=0.9";
    smooth.kind = EquationKind::AdvectionConst;
    smooth.ic = ic_smooth;
    smooth.a = -2.0;
    smooth.b = 2.0;
    smooth.T = 2.0;
    smooth.velocity = VelocityPair::single(one);
    smooth.nu = 0.9;
    smooth.slope_bound = 1.9041;
    smooth.ladder = "ex1";
    smooth.exact = [](double x, double t) { return exact_advection_const(ic_smooth, 1.0, x, t); };
    smooth.singular = [](double) { return std::vector<double>{}; };
    r.push_back(smooth);

    ProblemSpec jump = smooth;
    jump.name = "adv-jump";
    jump.description = "u_t + u_x = 0, u0 = 1 on |x|<=1, domain [-2,2], T=2, nu=0.9";
    jump.ic = ic_jump;
    jump.ic_breakpoints = {-1.0, 1.0};
    jump.slope_bound = 0.0;
    jump.exact = [](double x, double t) { return exact_advection_const(ic_jump, 1.0, x, t); };
    jump.singular = [](double t) { return shifted({-1.0, 1.0}, t); };
    r.push_back(jump);

    ProblemSpec mix;
    mix.name = "adv-mix";
    mix.description = "u_t + 0.1 u_x = 0, hat + smooth bump + square pulse, domain [-4.5,4.5], T=6";
    mix.kind = EquationKind::AdvectionConst;
    mix.ic = ic_mix;
    mix.ic_breakpoints = {-4.0, -3.0, -2.0, -1.0, 1.0, 2.0, 3.0};
    mix.a = -4.5;
    mix.b = 4.5;
    mix.T = 6.0;
    mix.velocity = VelocityPair::single([](double) { return 0.1; });
    mix.velocity_scale = 0.1;
    mix.nu = 1.0 / 12.0;
    mix.slope_bound = 1.9041;
    mix.ladder = "ex2";
    mix.default_m = 400;
    mix.exact = [](double x, double t) { return exact_advection_const(ic_mix, 0.1, x, t); };
    mix.singular = [](double t) { return shifted({-4.0, -3.0, -2.0, 2.0, 3.0}, 0.1 * t); };
    r.push_back(mix);

    ProblemSpec var;
    var.name = "adv-var";
    var.description = "u_t + c(x) u_x = 0, c(x) = -(x-1.1), u0 = max(0,1-16(x-0.25)^2)^2, domain [0,1], T=1, nu=0.6";
    var.kind = EquationKind::AdvectionVar;
    var.ic = ic_smooth_var;
    var.a = 0.0;
    var.b = 1.0;
    var.T = 1.0;
    var.velocity = VelocityPair::single([](double x) { return -(x - 1.1); });
    var.nu = 0.6;
    var.slope_bound = 16.74;
    var.ladder = "ex3";
    var.default_m = 39;
    var.exact = [](double x, double t) { return exact_advection_linear_velocity(ic_smooth_var, 1.1, x, t); };
    var.singular = [](double) { return std::vector<double>{}; };
    r.push_back(var);

    ProblemSpec hj;
    hj.name = "hj-abs";
    hj.description = "v_t + |v_x| = 0, v0 = (1-x^2)^4 on |x|<=1, domain [-2,2], T=0.5, nu=0.6";
    hj.kind = EquationKind::HJTwoVelocity;
    hj.ic = ic_smooth;
    hj.a = -2.0;
    hj.b = 2.0;
    hj.T = 0.5;
    hj.velocity = VelocityPair::symmetric(1.0);
    hj.nu = 0.6;
    hj.slope_bound = 1.9041;
    hj.ladder = "ex4";
    hj.default_m = 159;
    hj.exact = [](double x, double t) { return hopf_lax_oracle(ic_smooth, 1.0, x, t); };
    hj.singular = [](double t) { return t > 0.0 ? std::vector<double>{0.0} : std::vector<double>{}; };
    r.push_back(hj);

    return r;
}

} // namespace

const std::vector<ProblemSpec>& problem_registry()
{
    static const std::vector<ProblemSpec> registry = build_registry();
    return registry;
}

const ProblemSpec& find_problem(const std::string& name)
{
    for (const auto& p : problem_registry())
        if (p.name == name)
            return p;
    throw std::invalid_argument("unknown problem '" + name + "'");
}

SingularPointSet singular_points(const ProblemSpec& problem, double t, double radius)
{
    return {problem.singular ? problem.singular(t) : std::vector<double>{}, radius};
}

} // namespace slub
