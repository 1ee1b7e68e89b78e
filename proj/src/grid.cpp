#include "slub/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace slub {

namespace {

constexpr std::array<double, 5> kGaussNodes = {
    -0.906179845938663992797626878299, -0.538469310105683091036314420700, 0.0,
    0.538469310105683091036314420700, 0.906179845938663992797626878299};
constexpr std::array<double, 5> kGaussWeights = {
    0.236926885056189087514264040720, 0.478628670499366468041291514836,
    0.568888888888888888888888888889, 0.478628670499366468041291514836,
    0.236926885056189087514264040720};

double gauss_mean(const RealFn& f, double xl, double xr)
{
    const double mid = 0.5 * (xl + xr);
    const double half = 0.5 * (xr - xl);
    std::array<double, 5> s{};
    for (std::size_t i = 0; i < 5; ++i)
        s[i] = f(mid + half * kGaussNodes[i]);
    // piecewise-constant data stays bit exact
    if (std::all_of(s.begin(), s.end(), [&](double v) { return v == s[0]; }))
        return s[0];
    double acc = 0.0;
    for (std::size_t i = 0; i < 5; ++i)
        acc += kGaussWeights[i] * s[i];
    return 0.5 * acc;
}

} // namespace

std::vector<double> Grid1D::nodes() const
{
    std::vector<double> x(static_cast<std::size_t>(node_count()));
    for (std::size_t j = 0; j < x.size(); ++j)
        x[j] = node(static_cast<std::ptrdiff_t>(j));
    return x;
}

std::vector<double> Grid1D::centers() const
{
    std::vector<double> x(static_cast<std::size_t>(cell_count()));
    for (std::size_t j = 0; j < x.size(); ++j)
        x[j] = center(static_cast<std::ptrdiff_t>(j));
    return x;
}

Grid1D build_grid(double a, double b, int m)
{
    if (!(a < b))
        throw std::invalid_argument("build_grid: need a < b");
    if (m < 3)
        throw std::invalid_argument("build_grid: need at least 3 cells, got " + std::to_string(m));
    return Grid1D{a, b, m, (b - a) / m};
}

double Field::clamped(std::ptrdiff_t i) const
{
    const auto n = static_cast<std::ptrdiff_t>(values.size());
    return values[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(i, 0, n - 1))];
}

double Field::point(std::size_t i) const
{
    const auto j = static_cast<std::ptrdiff_t>(i);
    return alignment == Alignment::NodeCentered ? grid.node(j) : grid.center(j);
}

std::vector<double> Field::points() const
{
    return alignment == Alignment::NodeCentered ? grid.nodes() : grid.centers();
}

Field make_field(const Grid1D& g, Alignment al, std::vector<double> values)
{
    const auto expected = static_cast<std::size_t>(al == Alignment::NodeCentered ? g.node_count() : g.cell_count());
    if (values.size() != expected)
        throw std::invalid_argument("make_field: expected " + std::to_string(expected) + " values, got " +
                                    std::to_string(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!std::isfinite(values[i]))
            throw std::domain_error("make_field: non-finite value at index " + std::to_string(i));
    return Field{al, g, std::move(values)};
}

SupportWindow full_window(const Grid1D& g, Alignment al)
{
    return {0, al == Alignment::NodeCentered ? g.m : g.m - 1};
}

TimeSpec make_time(double T, double dt)
{
    if (!(T > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("make_time: T and dt must be positive");
    return {dt, T, static_cast<int>(std::lround(T / dt))};
}

TimeSpec time_for_courant(double T, double dx, double nu, double velocity_scale)
{
    if (!(nu > 0.0) || !(velocity_scale > 0.0))
        throw std::invalid_argument("time_for_courant: nu and velocity scale must be positive");
    const int n = static_cast<int>(std::ceil(T * velocity_scale / (nu * dx) - 1e-9));
    return {T / n, T, n};
}

Field init_point_values(const Grid1D& g, const RealFn& ic)
{
    std::vector<double> v(static_cast<std::size_t>(g.node_count()));
    for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = ic(g.node(static_cast<std::ptrdiff_t>(j)));
    return make_field(g, Alignment::NodeCentered, std::move(v));
}

double cell_average(const RealFn& f, double xl, double xr, std::span<const double> breakpoints)
{
    std::vector<double> cuts{xl};
    for (double p : breakpoints)
        if (p > xl && p < xr)
            cuts.push_back(p);
    cuts.push_back(xr);
    std::sort(cuts.begin(), cuts.end());
    if (cuts.size() == 2)
        return gauss_mean(f, xl, xr);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        acc += (cuts[i + 1] - cuts[i]) * gauss_mean(f, cuts[i], cuts[i + 1]);
    return acc / (xr - xl);
}

Field init_cell_averages(const Grid1D& g, const RealFn& ic, std::span<const double> breakpoints)
{
    std::vector<double> v(static_cast<std::size_t>(g.cell_count()));
    for (std::size_t j = 0; j < v.size(); ++j) {
        const auto k = static_cast<std::ptrdiff_t>(j);
        v[j] = cell_average(ic, g.node(k), g.node(k + 1), breakpoints);
    }
    return make_field(g, Alignment::CellCentered, std::move(v));
}

} // namespace slub
