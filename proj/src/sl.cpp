#include "slub/sl.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace slub {

double p1_interpolate(std::span<const double> v, const Grid1D& g, double x)
{
    const auto last = static_cast<std::ptrdiff_t>(v.size()) - 1;
    const double s = (x - g.a) / g.dx;
    if (s <= 0.0)
        return v.front();
    if (s >= static_cast<double>(last))
        return v.back();
    const auto j = std::min(static_cast<std::ptrdiff_t>(std::floor(s)), last - 1);
    const double xl = g.node(j);
    const double xr = g.node(j + 1);
    if (x == xl)
        return v[static_cast<std::size_t>(j)];
    if (x == xr)
        return v[static_cast<std::size_t>(j + 1)];
    const double vl = v[static_cast<std::size_t>(j)];
    return vl + (x - xl) / g.dx * (v[static_cast<std::size_t>(j + 1)] - vl);
}

double p1_interpolate(const Field& field, double x)
{
    return p1_interpolate(field.values, field.grid, x);
}

Field sl_advection_step(const Field& in, double nu, Exec exec)
{
    if (std::abs(nu) > 1.0)
        throw std::invalid_argument("sl_advection_step: |nu| > 1");
    Field out = in;
    const auto n = static_cast<std::ptrdiff_t>(in.size());
    const int side = nu >= 0.0 ? -1 : 1;
    const double w = std::abs(nu);
    parallel_for(n, exec, [&](std::ptrdiff_t j) {
        out.values[static_cast<std::size_t>(j)] = w * in.clamped(j + side) + (1.0 - w) * in.clamped(j);
    });
    return out;
}

Field sl_advection_step_var(const Field& in, const RealFn& c, double dt, Exec exec)
{
    const auto n = static_cast<std::ptrdiff_t>(in.size());
    std::vector<double> vel(static_cast<std::size_t>(n));
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        const double v = c(in.grid.node(j));
        if (std::abs(v) * dt / in.grid.dx > 1.0 + 1e-12) {
            std::ostringstream msg;
            msg << "sl_advection_step_var: CFL violated at x=" << in.grid.node(j)
                << " (|c| dt/dx = " << std::abs(v) * dt / in.grid.dx << ")";
            throw std::invalid_argument(msg.str());
        }
        vel[static_cast<std::size_t>(j)] = v;
    }
    Field out = in;
    parallel_for(n, exec, [&](std::ptrdiff_t j) {
        const auto k = static_cast<std::size_t>(j);
        out.values[k] = p1_interpolate(in.values, in.grid, in.grid.node(j) - vel[k] * dt);
    });
    return out;
}

Hamiltonian Hamiltonian::abs_value(double c)
{
    return {Kind::AbsValue, c, [c](double p) { return std::abs(c * p); }};
}

Hamiltonian Hamiltonian::linear(double c)
{
    return {Kind::Linear, c, [c](double p) { return c * p; }};
}

Hamiltonian Hamiltonian::custom(RealFn h)
{
    return {Kind::Custom, 0.0, std::move(h)};
}

ControlSet ControlSet::uniform(double a_min, double a_max, int n_controls)
{
    if (a_min > a_max || n_controls < 3)
        throw std::invalid_argument("ControlSet::uniform: need a_min <= a_max and at least 3 controls");
    ControlSet cs{a_min, a_max, std::vector<double>(static_cast<std::size_t>(n_controls))};
    const double h = (a_max - a_min) / (n_controls - 1);
    for (int i = 0; i < n_controls; ++i)
        cs.controls[static_cast<std::size_t>(i)] = a_min + i * h;
    cs.controls.back() = a_max;
    return cs;
}

ControlSet ControlSet::single(double a)
{
    return {a, a, {a}};
}

std::size_t LegendreTable::feasible_count() const
{
    return static_cast<std::size_t>(
        std::count_if(values.begin(), values.end(), [](double v) { return std::isfinite(v); }));
}

LegendreTable legendre_transform(const Hamiltonian& h, const ControlSet& controls, const PSearch& search)
{
    if (search.samples < 3 || !(search.p_max > 0.0))
        throw std::invalid_argument("legendre_transform: bad p search interval");
    const int n = search.samples | 1; // odd count keeps p = 0 on the sample grid
    const double dp = 2.0 * search.p_max / (n - 1);
    std::vector<double> ps(static_cast<std::size_t>(n)), hs(ps.size());
    for (int i = 0; i < n; ++i) {
        ps[static_cast<std::size_t>(i)] = i == (n - 1) / 2 ? 0.0 : -search.p_max + i * dp;
        hs[static_cast<std::size_t>(i)] = h.eval(ps[static_cast<std::size_t>(i)]);
    }

    LegendreTable table{controls.controls, std::vector<double>(controls.controls.size())};
    for (std::size_t k = 0; k < table.controls.size(); ++k) {
        const double a = table.controls[k];
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < ps.size(); ++i)
            best = std::max(best, a * ps[i] - hs[i]);
        const auto g = [&](std::size_t i) { return a * ps[i] - hs[i]; };
        const double grow_right = (g(ps.size() - 1) - g(ps.size() - 2)) / dp;
        const double grow_left = (g(0) - g(1)) / dp;
        table.values[k] = (grow_right > search.growth_slope || grow_left > search.growth_slope) ? kInfeasible : best;
    }
    return table;
}

Field sl_hj_step(const Field& in, const LegendreTable& table, double dt, Exec exec)
{
    std::vector<double> as, costs;
    for (std::size_t k = 0; k < table.controls.size(); ++k) {
        if (std::isfinite(table.values[k])) {
            as.push_back(table.controls[k]);
            costs.push_back(dt * table.values[k]);
        }
    }
    if (as.empty())
        throw std::invalid_argument("sl_hj_step: no feasible control");
    Field out = in;
    parallel_for(static_cast<std::ptrdiff_t>(in.size()), exec, [&](std::ptrdiff_t j) {
        const double x = in.grid.node(j);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < as.size(); ++k)
            best = std::min(best, p1_interpolate(in.values, in.grid, x - as[k] * dt) + costs[k]);
        out.values[static_cast<std::size_t>(j)] = best;
    });
    return out;
}

} // namespace slub
