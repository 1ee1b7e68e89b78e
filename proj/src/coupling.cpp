#include "slub/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace slub {

namespace {

int sign_with_band(double v, double band)
{
    if (std::abs(v) <= band)
        return 0;
    return v > 0.0 ? 1 : -1;
}

bool compatible(double d1, double d2, const RegularityParams& p, double band)
{
    if (sign_with_band(d1, band) * sign_with_band(d2, band) > 0)
        return true;
    return std::abs(d1) <= p.flat_tol && std::abs(d2) <= p.flat_tol;
}

} // namespace

double backward_diff(const Field& w, std::ptrdiff_t j)
{
    return (w.clamped(j) - w.clamped(j - 1)) / w.grid.dx;
}

RegularityParams RegularityParams::from_slope_bound(double L, double eps, double floor, double kappa)
{
    const double delta = std::max(L * (1.0 + eps), floor);
    return {delta, eps, kappa * delta, 1e-12};
}

RegularityParams RegularityParams::from_initial_data(const Field& w0, double eps)
{
    double top = 0.0;
    for (std::ptrdiff_t j = 1; j < static_cast<std::ptrdiff_t>(w0.size()); ++j)
        top = std::max(top, std::abs(backward_diff(w0, j)));
    const double delta = top - eps;
    if (!(delta > 0.0))
        throw std::invalid_argument("RegularityParams::from_initial_data: max|D-w0| - eps must be positive");
    return {delta, eps, 1e-12, 1e-12};
}

RegularityParams RegularityParams::always_regular()
{
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, 0.0, inf, 0.0};
}

RegularityParams RegularityParams::never_regular()
{
    return {0.0, 0.0, 0.0, 0.0};
}

int classify_node(const Field& w, std::ptrdiff_t j, const RegularityParams& p)
{
    if (std::isinf(p.delta))
        return 1;
    const auto n = static_cast<std::ptrdiff_t>(w.size());
    const auto slope = [&](std::ptrdiff_t i) { return (i < 1 || i >= n) ? 0.0 : backward_diff(w, i); };
    const double dm = slope(j - 1);
    const double d0 = slope(j);
    const double dp = slope(j + 1);
    if (!(std::max({std::abs(dm), std::abs(d0), std::abs(dp)}) < p.delta))
        return 0;
    const double band = p.zero_band * p.delta;
    return compatible(dm, d0, p, band) && compatible(d0, dp, p, band) ? 1 : 0;
}

SigmaField classify(const Field& w, const RegularityParams& params, Exec exec)
{
    SigmaField s(w.size());
    parallel_for(static_cast<std::ptrdiff_t>(w.size()), exec, [&](std::ptrdiff_t j) {
        s[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(classify_node(w, j, params));
    });
    return s;
}

CoupledState init_coupled(const Field& w0, const Field& w_bar0)
{
    if (w0.alignment != Alignment::NodeCentered || w_bar0.alignment != Alignment::CellCentered ||
        w0.size() != w_bar0.size() + 1)
        throw std::invalid_argument("init_coupled: need matching node and cell fields");
    CoupledState s{w0, w_bar0, std::vector<std::uint8_t>(w_bar0.size(), 1), SigmaField(w0.size(), 1),
                   SigmaField(w0.size(), 1), 0, 0};
    return s;
}

std::vector<double> working_cells(const CoupledState& state)
{
    std::vector<double> c(state.w_bar.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = state.cell_valid[k] ? state.w_bar[k] : project_ub(state.w[k], state.w[k + 1]);
    return c;
}

CoupledState coupled_step(const CoupledState& state, const SigmaField& sigma, const SchemeContext& ctx)
{
    const std::size_t nodes = state.w.size();
    const std::size_t cells = state.w_bar.size();
    if (sigma.size() != nodes)
        throw std::invalid_argument("coupled_step: sigma must have one entry per node");

    CoupledState next = state;
    next.sigma_prev = state.sigma;
    next.sigma = sigma;
    next.step = state.step + 1;
    next.synthesized = 0;

    std::vector<std::uint8_t> need(cells, 0);
    for (std::size_t j = 0; j < nodes; ++j) {
        if (sigma[j] != 0)
            continue;
        if (j >= 1)
            need[j - 1] = 1;
        if (j < cells)
            need[j] = 1;
    }

    const bool any_regular = std::any_of(sigma.begin(), sigma.end(), [](std::uint8_t s) { return s != 0; });
    if (any_regular) {
        const Field sl = ctx.sl_step(state.w);
        for (std::size_t j = 0; j < nodes; ++j)
            if (sigma[j] != 0)
                next.w.values[j] = sl.values[j];
    }

    const std::vector<double> work = working_cells(state);
    const bool single = ctx.cn.single_velocity();
    parallel_for(static_cast<std::ptrdiff_t>(cells), ctx.exec, [&](std::ptrdiff_t k) {
        const auto i = static_cast<std::size_t>(k);
        if (!need[i])
            return;
        const double up = ub_cell_update(work, k, ctx.cn.nu_M[i]);
        next.w_bar.values[i] = single ? up : std::min(ub_cell_update(work, k, ctx.cn.nu_m[i]), up);
    });
    next.cell_valid = need;
    return fill_holes(std::move(next));
}

CoupledState coupled_step(const CoupledState& state, const SchemeContext& ctx, const RegularityParams& params)
{
    return coupled_step(state, classify(state.w, params, ctx.exec), ctx);
}

CoupledState fill_holes(CoupledState state)
{
    const std::size_t cells = state.w_bar.size();
    const std::vector<double> w = state.w.values;
    const auto cell = [&](std::size_t k) {
        if (state.cell_valid[k])
            return state.w_bar[k];
        ++state.synthesized;
        return project_ub(w[k], w[k + 1]);
    };
    for (std::size_t j = 0; j < state.w.size(); ++j) {
        if (state.sigma[j] != 0)
            continue;
        const double left = cell(j >= 1 ? j - 1 : 0);
        const double right = cell(j < cells ? j : cells - 1);
        state.w.values[j] = project_sl(left, right);
    }
    return state;
}

RegionPartition partition(const SigmaField& sigma)
{
    RegionPartition p;
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        (sigma[j] ? p.regular_nodes : p.singular_nodes).push_back(static_cast<int>(j));
        if (!sigma[j]) {
            if (j >= 1 && (p.singular_cells.empty() || p.singular_cells.back() != static_cast<int>(j) - 1))
                p.singular_cells.push_back(static_cast<int>(j) - 1);
            if (j + 1 < sigma.size())
                p.singular_cells.push_back(static_cast<int>(j));
        }
    }
    return p;
}

} // namespace slub
