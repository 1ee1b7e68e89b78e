#pragma once

#include "slub/coupling.hpp"
#include "slub/grid.hpp"
#include "slub/problems.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace slub {

double total_variation(std::span<const double> v);
double total_variation(const Field& f);

struct TVSeries {
    std::vector<double> tv;
    std::vector<double> bound;       // TV(w0) + n (b - a) delta
    std::vector<int> violations;     // steps n+1 with TV(n+1) > TV(n) + (b - a) delta
    std::vector<int> increases;      // steps n+1 with TV(n+1) > TV(n) (beyond roundoff)
    bool nonincreasing() const { return increases.empty(); }
};

TVSeries tv_monitor(std::span<const double> tv, double width, double delta, double rel_tol = 1e-12);

struct IncrementalCoefficients {
    std::vector<double> C;           // C_{j-1/2}, one per node of the input
    std::vector<double> D;           // D_{j+1/2}
    std::vector<std::uint8_t> skipped;
    double residual = 0.0;
    bool representable = true;
    bool harten = true;              // 0 <= C, D and C + D <= 1 on the non-skipped entries
};

// direction +1 solves the left-sided form (D = 0), -1 the right-sided one (C = 0).
IncrementalCoefficients extract_incremental(const std::function<Field(const Field&)>& step, const Field& in,
                                            int direction = 1);

struct StabilityViolation {
    std::ptrdiff_t index = 0;
    double lo = 0.0;
    double hi = 0.0;
    double value = 0.0;
};

inline constexpr double kWitnessSlack = 1e-14;

// out[j] against [min, max] of in over the upwind pair picked by sign(nus[j]).
std::optional<StabilityViolation> stability_witness(std::span<const double> in, std::span<const double> out,
                                                    std::span<const double> nus);
// out[j] against in[j - radius .. j + radius].
std::optional<StabilityViolation> stability_witness_window(std::span<const double> in, std::span<const double> out,
                                                           int radius);
// Each piece of a coupled step against the values it was computed from.
std::optional<StabilityViolation> coupled_stability_witness(const CoupledState& before, const CoupledState& after,
                                                            const CourantNumbers& cn);

struct ErrorReport {
    double l1 = 0.0;
    double l2 = 0.0;
    double linf = 0.0;
    double linf_reg = 0.0;
    double dx = 0.0;
    double dt = 0.0;
};

// Oracle sampled at nodes for node fields, averaged over cells for cell fields.
std::vector<double> reference_values(const Field& numeric, const Oracle& oracle, double t,
                                     std::span<const double> breakpoints = {});
ErrorReport error_norms(const Field& numeric, std::span<const double> reference, const SingularPointSet& sing,
                        double dt = 0.0);
ErrorReport error_norms(const Field& numeric, const Oracle& oracle, double t, const SingularPointSet& sing,
                        double dt = 0.0);

// Least-squares slope of log(err) against log(dx).
double observed_order(std::span<const double> dx, std::span<const double> err);

} // namespace slub
