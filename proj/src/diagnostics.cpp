#include "slub/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slub {

double total_variation(std::span<const double> v)
{
    double tv = 0.0;
    for (std::size_t j = 0; j + 1 < v.size(); ++j)
        tv += std::abs(v[j] - v[j + 1]);
    return tv;
}

double total_variation(const Field& f)
{
    return total_variation(f.values);
}

TVSeries tv_monitor(std::span<const double> tv, double width, double delta, double rel_tol)
{
    TVSeries s;
    s.tv.assign(tv.begin(), tv.end());
    const double step_bound = width * delta;
    for (std::size_t n = 0; n < tv.size(); ++n) {
        s.bound.push_back(tv.empty() ? 0.0 : tv[0] + static_cast<double>(n) * step_bound);
        if (n == 0)
            continue;
        const double slack = rel_tol * std::max(1.0, tv[n - 1]);
        if (tv[n] > tv[n - 1] + step_bound + slack)
            s.violations.push_back(static_cast<int>(n));
        if (tv[n] > tv[n - 1] + slack)
            s.increases.push_back(static_cast<int>(n));
    }
    return s;
}

IncrementalCoefficients extract_incremental(const std::function<Field(const Field&)>& step, const Field& in,
                                            int direction)
{
    const Field out = step(in);
    const std::size_t n = in.size();
    IncrementalCoefficients ic{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0),
                               std::vector<std::uint8_t>(n, 0), 0.0, true, true};
    for (std::size_t j = 0; j < n; ++j) {
        const auto k = static_cast<std::ptrdiff_t>(j);
        const double change = out[j] - in[j];
        const double diff = direction > 0 ? in[j] - in.clamped(k - 1) : in.clamped(k + 1) - in[j];
        if (diff == 0.0) {
            ic.skipped[j] = 1;
            if (std::abs(change) > 1e-12 * std::max(1.0, std::abs(in[j])))
                ic.representable = false;
            continue;
        }
        double rebuilt;
        if (direction > 0) {
            ic.C[j] = -change / diff;
            rebuilt = in[j] - ic.C[j] * diff;
        } else {
            ic.D[j] = change / diff;
            rebuilt = in[j] + ic.D[j] * diff;
        }
        ic.residual = std::max(ic.residual, std::abs(rebuilt - out[j]));
        const double tol = 1e-12;
        if (ic.C[j] < -tol || ic.D[j] < -tol || ic.C[j] + ic.D[j] > 1.0 + tol)
            ic.harten = false;
    }
    if (!ic.representable)
        ic.harten = false;
    return ic;
}

namespace {

std::optional<StabilityViolation> check_range(std::ptrdiff_t j, double lo, double hi, double v)
{
    const double slack = kWitnessSlack * std::max({1.0, std::abs(lo), std::abs(hi)});
    if (v < lo - slack || v > hi + slack)
        return StabilityViolation{j, lo, hi, v};
    return std::nullopt;
}

double at(std::span<const double> v, std::ptrdiff_t i)
{
    return v[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(v.size()) - 1))];
}

std::optional<StabilityViolation> window_check(std::span<const double> in, double v, std::ptrdiff_t j,
                                               std::ptrdiff_t from, std::ptrdiff_t to)
{
    double lo = at(in, from), hi = lo;
    for (std::ptrdiff_t i = from + 1; i <= to; ++i) {
        lo = std::min(lo, at(in, i));
        hi = std::max(hi, at(in, i));
    }
    return check_range(j, lo, hi, v);
}

} // namespace

std::optional<StabilityViolation> stability_witness(std::span<const double> in, std::span<const double> out,
                                                    std::span<const double> nus)
{
    if (in.size() != out.size() || nus.size() != out.size())
        throw std::invalid_argument("stability_witness: size mismatch");
    for (std::size_t j = 0; j < out.size(); ++j) {
        const auto k = static_cast<std::ptrdiff_t>(j);
        const auto r = nus[j] >= 0.0 ? window_check(in, out[j], k, k - 1, k) : window_check(in, out[j], k, k, k + 1);
        if (r)
            return r;
    }
    return std::nullopt;
}

std::optional<StabilityViolation> stability_witness_window(std::span<const double> in, std::span<const double> out,
                                                           int radius)
{
    if (in.size() != out.size())
        throw std::invalid_argument("stability_witness_window: size mismatch");
    for (std::size_t j = 0; j < out.size(); ++j) {
        const auto k = static_cast<std::ptrdiff_t>(j);
        if (auto r = window_check(in, out[j], k, k - radius, k + radius))
            return r;
    }
    return std::nullopt;
}

std::optional<StabilityViolation> coupled_stability_witness(const CoupledState& before, const CoupledState& after,
                                                            const CourantNumbers& cn)
{
    const std::vector<double> work = working_cells(before);
    const std::size_t cells = work.size();
    const bool single = cn.single_velocity();
    for (std::size_t k = 0; k < cells; ++k) {
        if (!after.cell_valid[k])
            continue;
        const auto i = static_cast<std::ptrdiff_t>(k);
        std::optional<StabilityViolation> r;
        if (single)
            r = cn.nu_M[k] >= 0.0 ? window_check(work, after.w_bar[k], i, i - 1, i)
                                  : window_check(work, after.w_bar[k], i, i, i + 1);
        else
            r = window_check(work, after.w_bar[k], i, i - 1, i + 1);
        if (r)
            return r;
    }
    for (std::size_t j = 0; j < after.w.size(); ++j) {
        const auto i = static_cast<std::ptrdiff_t>(j);
        std::optional<StabilityViolation> r;
        if (after.sigma[j])
            r = window_check(before.w.values, after.w[j], i, i - 1, i + 1);
        else
            r = window_check(after.w_bar.values, after.w[j], i, i - 1, std::min<std::ptrdiff_t>(i, cells - 1));
        if (r)
            return r;
    }
    return std::nullopt;
}

std::vector<double> reference_values(const Field& numeric, const Oracle& oracle, double t,
                                     std::span<const double> breakpoints)
{
    std::vector<double> ref(numeric.size());
    const auto f = [&](double x) { return oracle(x, t); };
    for (std::size_t j = 0; j < ref.size(); ++j) {
        const auto k = static_cast<std::ptrdiff_t>(j);
        ref[j] = numeric.alignment == Alignment::NodeCentered
                     ? f(numeric.grid.node(k))
                     : cell_average(f, numeric.grid.node(k), numeric.grid.node(k + 1), breakpoints);
    }
    return ref;
}

ErrorReport error_norms(const Field& numeric, std::span<const double> reference, const SingularPointSet& sing,
                        double dt)
{
    if (reference.size() != numeric.size())
        throw std::invalid_argument("error_norms: reference size mismatch");
    ErrorReport e;
    e.dx = numeric.grid.dx;
    e.dt = dt;
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t j = 0; j < numeric.size(); ++j) {
        if (!std::isfinite(reference[j]))
            throw std::domain_error("error_norms: oracle undefined at x=" + std::to_string(numeric.point(j)));
        const double d = std::abs(numeric[j] - reference[j]);
        s1 += d;
        s2 += d * d;
        e.linf = std::max(e.linf, d);
        const double x = numeric.point(j);
        const bool regular = std::none_of(sing.points.begin(), sing.points.end(),
                                          [&](double p) { return std::abs(x - p) <= sing.radius; });
        if (regular)
            e.linf_reg = std::max(e.linf_reg, d);
    }
    e.l1 = e.dx * s1;
    e.l2 = std::sqrt(e.dx * s2);
    return e;
}

ErrorReport error_norms(const Field& numeric, const Oracle& oracle, double t, const SingularPointSet& sing, double dt)
{
    return error_norms(numeric, reference_values(numeric, oracle, t, sing.points), sing, dt);
}

double observed_order(std::span<const double> dx, std::span<const double> err)
{
    if (dx.size() != err.size() || dx.size() < 2)
        throw std::invalid_argument("observed_order: need at least two matching rows");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(dx.size());
    for (std::size_t i = 0; i < dx.size(); ++i) {
        const double x = std::log(dx[i]);
        const double y = std::log(err[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace slub
