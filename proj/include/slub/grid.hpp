#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace slub {

using RealFn = std::function<double(double)>;

struct Grid1D {
    double a = 0.0;
    double b = 1.0;
    int m = 0;
    double dx = 1.0;

    int node_count() const { return m + 1; }
    int cell_count() const { return m; }
    double node(std::ptrdiff_t j) const { return a + static_cast<double>(j) * dx; }
    double center(std::ptrdiff_t j) const { return node(j) + 0.5 * dx; }
    std::vector<double> nodes() const;
    std::vector<double> centers() const;
};

Grid1D build_grid(double a, double b, int m);

enum class Alignment { NodeCentered, CellCentered };

struct Field {
    Alignment alignment = Alignment::NodeCentered;
    Grid1D grid;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }
    // Constant continuation outside the index range.
    double clamped(std::ptrdiff_t i) const;
    double point(std::size_t i) const;
    std::vector<double> points() const;
};

// Checks length against the alignment and rejects non-finite values.
Field make_field(const Grid1D& g, Alignment al, std::vector<double> values);

struct SupportWindow {
    int j_min = 0;
    int j_max = 0;
};

SupportWindow full_window(const Grid1D& g, Alignment al);

struct TimeSpec {
    double dt = 0.0;
    double T = 0.0;
    int n_steps = 0;
};

TimeSpec make_time(double T, double dt);
// Largest dt <= nu*dx/velocity_scale that divides T evenly.
TimeSpec time_for_courant(double T, double dx, double nu, double velocity_scale);

Field init_point_values(const Grid1D& g, const RealFn& ic);

// 5-point Gauss-Legendre on [xl, xr], split at any breakpoints inside the cell.
double cell_average(const RealFn& f, double xl, double xr, std::span<const double> breakpoints = {});
Field init_cell_averages(const Grid1D& g, const RealFn& ic, std::span<const double> breakpoints = {});

} // namespace slub
