#include "slub/experiment.hpp"

#include "slub/sl.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace slub {

Scheme parse_scheme(const std::string& s)
{
    if (s == "sl")
        return Scheme::SL;
    if (s == "ub")
        return Scheme::UB;
    if (s == "coupled")
        return Scheme::Coupled;
    throw std::invalid_argument("unknown scheme '" + s + "' (expected sl, ub or coupled)");
}

std::string to_string(Scheme s)
{
    switch (s) {
    case Scheme::SL:
        return "sl";
    case Scheme::UB:
        return "ub";
    case Scheme::Coupled:
        return "coupled";
    }
    return "?";
}

RegularityParams default_regularity(const ProblemSpec& p, const RunOptions& opt)
{
    RegularityParams r = RegularityParams::from_slope_bound(p.slope_bound, opt.epsilon.value_or(0.1));
    if (opt.delta) {
        r.delta = *opt.delta;
        r.flat_tol = std::isinf(r.delta) ? r.delta : 0.7 * r.delta;
    }
    if (opt.flat_tol)
        r.flat_tol = *opt.flat_tol;
    return r;
}

SchemeContext make_context(const ProblemSpec& p, const Grid1D& g, double dt, Exec exec, int controls)
{
    SchemeContext ctx;
    ctx.cn = cfl_check(p.velocity, g, dt);
    ctx.exec = exec;
    switch (p.kind) {
    case EquationKind::AdvectionConst: {
        const double nu = p.velocity.f_M(0.5 * (g.a + g.b)) * dt / g.dx;
        ctx.sl_step = [nu, exec](const Field& w) { return sl_advection_step(w, nu, exec); };
        break;
    }
    case EquationKind::AdvectionVar: {
        const RealFn c = p.velocity.f_M;
        ctx.sl_step = [c, dt, exec](const Field& w) { return sl_advection_step_var(w, c, dt, exec); };
        break;
    }
    case EquationKind::HJTwoVelocity: {
        const double amax = std::max(std::abs(p.velocity.f_m(g.a)), std::abs(p.velocity.f_M(g.a)));
        const auto table = std::make_shared<LegendreTable>(
            legendre_transform(Hamiltonian::abs_value(amax), ControlSet::uniform(-amax, amax, controls)));
        ctx.sl_step = [table, dt, exec](const Field& w) { return sl_hj_step(w, *table, dt, exec); };
        break;
    }
    }
    return ctx;
}

TimeSpec default_time(const ProblemSpec& p, const Grid1D& g, double nu, double T)
{
    return time_for_courant(T, g.dx, nu, p.velocity_scale);
}

namespace {

bool wants(const RunOptions& opt, int step)
{
    return std::find(opt.snapshots.begin(), opt.snapshots.end(), step) != opt.snapshots.end();
}

template <class Step>
RunResult run_plain(Scheme s, const Grid1D& g, const TimeSpec& time, Field u, const RunOptions& opt, Step&& step)
{
    RunResult r;
    r.scheme = s;
    r.grid = g;
    r.time = time;
    r.tv.push_back(total_variation(u));
    for (int n = 0; n < time.n_steps; ++n) {
        if (wants(opt, n))
            r.snapshots.push_back({n, u, {}});
        u = step(u);
        r.tv.push_back(total_variation(u));
    }
    if (wants(opt, time.n_steps))
        r.snapshots.push_back({time.n_steps, u, {}});
    r.final = std::move(u);
    return r;
}

} // namespace

RunResult run_sl(const ProblemSpec& p, const Grid1D& g, const TimeSpec& time, const RunOptions& opt)
{
    const SchemeContext ctx = make_context(p, g, time.dt, opt.exec, opt.controls);
    return run_plain(Scheme::SL, g, time, init_point_values(g, p.ic), opt, ctx.sl_step);
}

RunResult run_ub(const ProblemSpec& p, const Grid1D& g, const TimeSpec& time, const RunOptions& opt)
{
    const SchemeContext ctx = make_context(p, g, time.dt, opt.exec, opt.controls);
    return run_plain(Scheme::UB, g, time, init_cell_averages(g, p.ic, p.ic_breakpoints), opt,
                     [&](const Field& u) { return ub_step(u, ctx.cn, opt.exec); });
}

RunResult run_coupled(const ProblemSpec& p, const Grid1D& g, const TimeSpec& time, const RegularityParams& params,
                      const RunOptions& opt)
{
    const SchemeContext ctx = make_context(p, g, time.dt, opt.exec, opt.controls);
    CoupledState st = init_coupled(init_point_values(g, p.ic), init_cell_averages(g, p.ic, p.ic_breakpoints));
    RunResult r;
    r.scheme = Scheme::Coupled;
    r.grid = g;
    r.time = time;
    r.params = params;
    r.tv.push_back(total_variation(st.w));
    for (int n = 0; n < time.n_steps; ++n) {
        SigmaField sigma = classify(st.w, params, opt.exec);
        if (wants(opt, n))
            r.snapshots.push_back({n, st.w, sigma});
        st = coupled_step(st, sigma, ctx);
        r.tv.push_back(total_variation(st.w));
    }
    r.final_sigma = classify(st.w, params, opt.exec);
    if (wants(opt, time.n_steps))
        r.snapshots.push_back({time.n_steps, st.w, r.final_sigma});
    r.final = st.w;
    return r;
}

RunResult run_scheme(const ProblemSpec& p, Scheme s, const Grid1D& g, const TimeSpec& time, const RunOptions& opt)
{
    switch (s) {
    case Scheme::SL:
        return run_sl(p, g, time, opt);
    case Scheme::UB:
        return run_ub(p, g, time, opt);
    case Scheme::Coupled:
        return run_coupled(p, g, time, default_regularity(p, opt), opt);
    }
    throw std::invalid_argument("run_scheme: bad scheme");
}

ErrorReport evaluate(const ProblemSpec& p, const RunResult& r, double radius_cells)
{
    const double t = r.time.dt * r.time.n_steps;
    const SingularPointSet sing = singular_points(p, t, radius_cells * r.grid.dx);
    return error_norms(r.final, p.exact, t, sing, r.time.dt);
}

Ladder ladder_preset(const std::string& name)
{
    if (name == "ex1" || name == "ex3" || name == "ex4")
        return {name, {19, 39, 79, 159, 319, 639}};
    if (name == "ex2")
        return {name, {100, 200, 400, 800, 1600}};
    throw std::invalid_argument("unknown ladder preset '" + name + "'");
}

Ladder parse_ladder(const std::string& text)
{
    if (text.rfind("ex", 0) == 0)
        return ladder_preset(text);
    Ladder l{"custom", {}};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int m = 0;
        try {
            m = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed ladder entry '" + item + "'");
        }
        if (used != item.size() || m < 3)
            throw std::invalid_argument("malformed ladder entry '" + item + "'");
        l.m.push_back(m);
    }
    if (l.m.empty())
        throw std::invalid_argument("empty ladder");
    return l;
}

std::vector<ConvergenceRow> convergence_table(const ProblemSpec& p, Scheme s, const Ladder& ladder, double nu,
                                              double T, const RunOptions& opt)
{
    std::vector<ConvergenceRow> rows(ladder.m.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Grid1D g = build_grid(p.a, p.b, ladder.m[i]);
        const RunResult r = run_scheme(p, s, g, default_time(p, g, nu, T), opt);
        rows[i].m = ladder.m[i];
        rows[i].err = evaluate(p, r, opt.radius_cells);
    }
    const auto order = [](double e0, double e1, double d0, double d1) { return std::log(e0 / e1) / std::log(d0 / d1); };
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& a = rows[i - 1].err;
        const auto& b = rows[i].err;
        rows[i].order_l1 = order(a.l1, b.l1, a.dx, b.dx);
        rows[i].order_l2 = order(a.l2, b.l2, a.dx, b.dx);
        rows[i].order_linf = order(a.linf, b.linf, a.dx, b.dx);
    }
    return rows;
}

StabilitySuiteResult stability_suite(std::uint64_t seed, int trials)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    std::uniform_real_distribution<double> courant(-1.0, 1.0);
    std::uniform_int_distribution<int> cells_dist(6, 40);
    std::bernoulli_distribution coin(0.5);

    StabilitySuiteResult res;
    res.trials = trials;
    const auto note = [&](int& counter, const std::optional<StabilityViolation>& v) {
        if (!v)
            return;
        ++counter;
        if (!res.first)
            res.first = v;
    };
    const auto random_values = [&](std::size_t n) {
        std::vector<double> v(n, 0.0);
        for (std::size_t i = 2; i + 2 < n; ++i)
            v[i] = val(rng);
        return v;
    };

    for (int t = 0; t < trials; ++t) {
        const int m = cells_dist(rng);
        const Grid1D g = build_grid(0.0, 1.0, m);
        const double nu = courant(rng);
        const bool two = coin(rng);
        const Field w = make_field(g, Alignment::NodeCentered, random_values(static_cast<std::size_t>(m + 1)));
        const Field wb = make_field(g, Alignment::CellCentered, random_values(static_cast<std::size_t>(m)));
        const std::vector<double> nus_nodes(w.size(), nu);
        const std::vector<double> nus_cells(wb.size(), nu);

        note(res.sl_violations, stability_witness(w.values, sl_advection_step(w, nu).values, nus_nodes));
        note(res.ub_violations, stability_witness(wb.values, ub_step_single(wb, nus_cells).values, nus_cells));

        SchemeContext ctx;
        const double s = std::abs(nu);
        if (two) {
            ctx.cn = CourantNumbers{std::vector<double>(wb.size(), -s), std::vector<double>(wb.size(), s)};
            const auto table = std::make_shared<LegendreTable>(
                legendre_transform(Hamiltonian::abs_value(1.0), ControlSet::uniform(-1.0, 1.0, 21)));
            const double dt = s * g.dx;
            ctx.sl_step = [table, dt](const Field& f) { return sl_hj_step(f, *table, dt); };
            note(res.ub_violations, stability_witness_window(wb.values, ub_step(wb, ctx.cn).values, 1));
            note(res.sl_violations, stability_witness_window(w.values, ctx.sl_step(w).values, 1));
        } else {
            ctx.cn = constant_courant(m, nu);
            ctx.sl_step = [nu](const Field& f) { return sl_advection_step(f, nu); };
        }

        CoupledState st = init_coupled(w, wb);
        for (auto& sp : st.sigma)
            sp = coin(rng) ? 1 : 0;
        for (std::size_t k = 0; k < wb.size(); ++k)
            st.cell_valid[k] = (st.sigma[k] == 0 || st.sigma[k + 1] == 0) ? 1 : 0;
        SigmaField sigma(w.size());
        for (std::size_t j = 0; j < sigma.size(); ++j) {
            sigma[j] = coin(rng) ? 1 : 0;
            const int idx = st.sigma[j] ? (sigma[j] ? 0 : 2) : (sigma[j] ? 3 : 1);
            ++res.switch_cases[static_cast<std::size_t>(idx)];
        }
        const CoupledState next = coupled_step(st, sigma, ctx);
        note(res.coupled_violations, coupled_stability_witness(st, next, ctx.cn));
    }
    return res;
}

std::string format_sci3(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2E", v);
    return buf;
}

std::string format_table(const std::vector<ConvergenceRow>& rows, bool with_reg)
{
    std::ostringstream os;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%10s %10s %10s %10s %10s", "dt", "dx", "L1", "L2", "Linf");
    os << buf;
    if (with_reg)
        os << ' ' << "  Linf_reg";
    if (rows.size() > 1)
        os << "   ord_L1";
    os << '\n';
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%10.6f %10.6f %10s %10s %10s", r.err.dt, r.err.dx, format_sci3(r.err.l1).c_str(),
                      format_sci3(r.err.l2).c_str(), format_sci3(r.err.linf).c_str());
        os << buf;
        if (with_reg)
            os << ' ' << std::string(10 - std::min<std::size_t>(10, format_sci3(r.err.linf_reg).size()), ' ')
               << format_sci3(r.err.linf_reg);
        if (rows.size() > 1) {
            if (r.order_l1) {
                std::snprintf(buf, sizeof buf, "%9.2f", *r.order_l1);
                os << buf;
            } else {
                os << std::string(9, ' ');
            }
        }
        os << '\n';
    }
    return os.str();
}

} // namespace slub
