#include "slub/ub.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace slub {

VelocityPair VelocityPair::single(RealFn c)
{
    return {c, c};
}

VelocityPair VelocityPair::symmetric(double c)
{
    const double s = std::abs(c);
    return {[s](double) { return -s; }, [s](double) { return s; }};
}

double CourantNumbers::max_abs() const
{
    double r = 0.0;
    for (double v : nu_m)
        r = std::max(r, std::abs(v));
    for (double v : nu_M)
        r = std::max(r, std::abs(v));
    return r;
}

CourantNumbers cfl_check(const VelocityPair& pair, const Grid1D& g, double dt)
{
    const double ratio = dt / g.dx;
    const auto check = [&](double x) {
        for (const RealFn* f : {&pair.f_m, &pair.f_M}) {
            const double nu = (*f)(x) * ratio;
            if (!(std::abs(nu) <= 1.0 + 1e-12)) {
                std::ostringstream msg;
                msg << "CFL violated at x=" << x << ": |nu| = " << std::abs(nu) << " > 1";
                throw std::invalid_argument(msg.str());
            }
        }
    };
    for (int j = 0; j <= g.m; ++j)
        check(g.node(j));
    CourantNumbers cn{std::vector<double>(static_cast<std::size_t>(g.m)), std::vector<double>(static_cast<std::size_t>(g.m))};
    for (int j = 0; j < g.m; ++j) {
        const double x = g.center(j);
        check(x);
        cn.nu_m[static_cast<std::size_t>(j)] = std::clamp(pair.f_m(x) * ratio, -1.0, 1.0);
        cn.nu_M[static_cast<std::size_t>(j)] = std::clamp(pair.f_M(x) * ratio, -1.0, 1.0);
    }
    return cn;
}

CourantNumbers constant_courant(int cells, double nu)
{
    std::vector<double> v(static_cast<std::size_t>(cells), nu);
    return {v, v};
}

double ub_flux_left(double u_prev, double u_cur, double u_next, double nu)
{
    if (nu < kZeroCourant)
        return u_cur != u_prev ? u_next : u_cur;
    const double lo = std::min(u_cur, u_prev);
    const double hi = std::max(u_cur, u_prev);
    const double b = hi + (u_cur - hi) / nu;
    const double B = lo + (u_cur - lo) / nu;
    return std::min(std::max(u_next, b), B);
}

double ub_flux_right(double u_prev, double u_cur, double u_next, double nu)
{
    const double s = -nu;
    if (s < kZeroCourant)
        return u_cur != u_next ? u_prev : u_cur;
    const double lo = std::min(u_cur, u_next);
    const double hi = std::max(u_cur, u_next);
    const double b = hi + (u_cur - hi) / s;
    const double B = lo + (u_cur - lo) / s;
    return std::min(std::max(u_prev, b), B);
}

double ub_cell_update(std::span<const double> u, std::ptrdiff_t k, double nu)
{
    const auto last = static_cast<std::ptrdiff_t>(u.size()) - 1;
    const auto g = [&](std::ptrdiff_t i) { return u[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(i, 0, last))]; };
    double f_plus, f_minus;
    if (nu >= 0.0) {
        f_plus = ub_flux_left(g(k - 1), g(k), g(k + 1), nu);
        f_minus = ub_flux_left(g(k - 2), g(k - 1), g(k), nu);
    } else {
        f_minus = ub_flux_right(g(k - 1), g(k), g(k + 1), nu);
        f_plus = ub_flux_right(g(k), g(k + 1), g(k + 2), nu);
    }
    return g(k) - nu * (f_plus - f_minus);
}

Field ub_step_single(const Field& in, std::span<const double> nus, Exec exec)
{
    if (nus.size() != in.size())
        throw std::invalid_argument("ub_step_single: one Courant number per cell required");
    Field out = in;
    parallel_for(static_cast<std::ptrdiff_t>(in.size()), exec, [&](std::ptrdiff_t k) {
        out.values[static_cast<std::size_t>(k)] = ub_cell_update(in.values, k, nus[static_cast<std::size_t>(k)]);
    });
    return out;
}

Field ub_step(const Field& in, const CourantNumbers& cn, Exec exec)
{
    if (cn.nu_m.size() != in.size() || cn.nu_M.size() != in.size())
        throw std::invalid_argument("ub_step: one Courant number per cell required");
    if (cn.single_velocity())
        return ub_step_single(in, cn.nu_M, exec);
    Field out = in;
    parallel_for(static_cast<std::ptrdiff_t>(in.size()), exec, [&](std::ptrdiff_t k) {
        const auto i = static_cast<std::size_t>(k);
        out.values[i] = std::min(ub_cell_update(in.values, k, cn.nu_m[i]), ub_cell_update(in.values, k, cn.nu_M[i]));
    });
    return out;
}

std::pair<double, LimiterState> ub_flux_limited(const Field& field, std::ptrdiff_t j, double nu)
{
    if (!(nu > 0.0 && nu < 1.0))
        throw std::invalid_argument("ub_flux_limited: nu must lie in (0, 1)");
    const double um = field.clamped(j - 1);
    const double u = field.clamped(j);
    const double up = field.clamped(j + 1);
    LimiterState st;
    if (up == u)
        return {u, st};
    st.active = true;
    st.r = (u - um) / (up - u);
    st.phi = std::max(0.0, std::min(2.0 * st.r / nu, 2.0 / (1.0 - nu)));
    return {u + 0.5 * (1.0 - nu) * st.phi * (up - u), st};
}

} // namespace slub
