#include "slub/coupling.hpp"
#include "slub/diagnostics.hpp"
#include "slub/experiment.hpp"
#include "slub/sl.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

using namespace slub;

namespace {

SchemeContext advection_context(int m, double nu)
{
    SchemeContext ctx;
    ctx.cn = constant_courant(m, nu);
    ctx.sl_step = [nu](const Field& f) { return sl_advection_step(f, nu); };
    return ctx;
}

} // namespace

TEST_CASE("backward_diff")
{
    const Grid1D g = build_grid(0.0, 1.0, 20);
    CHECK(backward_diff(init_point_values(g, [](double) { return 2.0; }), 5) == 0.0);
    CHECK(backward_diff(init_point_values(g, [](double x) { return x; }), 5) == doctest::Approx(1.0));
    const Field step = init_point_values(g, [](double x) { return x > 0.52 ? 1.0 : 0.0; });
    CHECK(backward_diff(step, 11) == doctest::Approx(20.0));
    CHECK(backward_diff(step, 0) == 0.0);
}

TEST_CASE("classify_node examples")
{
    const Grid1D g = build_grid(0.0, 1.0, 20);
    const RegularityParams one = RegularityParams::from_slope_bound(0.0, 0.1, 1.0);
    CHECK(classify_node(init_point_values(g, [](double x) { return 0.5 * x; }), 10, one) == 1);

    const RegularityParams eight{8.0, 0.0, 5.6, 1e-12};
    const Field step = init_point_values(g, [](double x) { return x > 0.52 ? 1.0 : 0.0; });
    CHECK(classify_node(step, 11, eight) == 0);
    CHECK(classify_node(step, 10, eight) == 0);
    CHECK(classify_node(step, 12, eight) == 0);
    CHECK(classify_node(step, 3, eight) == 1);

    const Field zero = init_point_values(g, [](double) { return 0.0; });
    for (int j = 0; j <= 20; ++j)
        CHECK(classify_node(zero, j, one) == 1);

    // sign change with steep slopes is singular
    const Field kink = init_point_values(g, [](double x) { return -std::abs(x - 0.5) * 0.95; });
    CHECK(classify_node(kink, 10, one) == 0);
    CHECK(classify_node(kink, 4, one) == 1);

    CHECK(classify_node(step, 11, RegularityParams::always_regular()) == 1);
    CHECK(classify_node(zero, 4, RegularityParams::never_regular()) == 0);
}

TEST_CASE("initial-data delta formula")
{
    const Grid1D g = build_grid(0.0, 1.0, 10);
    const RegularityParams p = RegularityParams::from_initial_data(init_point_values(g, [](double x) { return 3 * x; }), 0.5);
    CHECK(p.delta == doctest::Approx(2.5));
    CHECK_THROWS_AS(RegularityParams::from_initial_data(init_point_values(g, [](double) { return 1.0; }), 0.1),
                    std::invalid_argument);
}

TEST_CASE("projections")
{
    CHECK(project_sl(0.4, 0.6) == doctest::Approx(0.5));
    CHECK(project_ub(0.0, 1.0) == 0.5);
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int t = 0; t < 1000; ++t) {
        const double a = d(rng), b = d(rng), c = d(rng);
        CHECK(project_sl(a, a) == a);
        CHECK(project_ub(b, b) == b);
        const double p = project_sl(a, b);
        CHECK(p >= std::min(a, b));
        CHECK(p <= std::max(a, b));
        const double round = project_sl(project_ub(a, b), project_ub(b, c));
        CHECK(round == doctest::Approx((a + 2 * b + c) / 4).epsilon(1e-14));
        CHECK(round >= std::min({a, b, c}));
        CHECK(round <= std::max({a, b, c}));
    }
}

TEST_CASE("fill_holes")
{
    const Grid1D g = build_grid(0.0, 1.0, 4);
    CoupledState st = init_coupled(make_field(g, Alignment::NodeCentered, {0, 1, 2, 3, 4}),
                                   make_field(g, Alignment::CellCentered, {0.2, 0.8, 0.1, 0.1}));
    CHECK(fill_holes(st).w.values == st.w.values);
    st.sigma[1] = 0;
    const CoupledState f = fill_holes(st);
    CHECK(f.w[1] == doctest::Approx(0.5));
    CHECK(f.w[0] == 0.0);
    CHECK(f.w[2] == 2.0);

    st.cell_valid = {1, 0, 1, 1};
    const CoupledState s2 = fill_holes(st);
    CHECK(s2.synthesized == 1);
    CHECK(s2.w[1] == doctest::Approx(0.5 * (0.2 + 1.5)));
}

TEST_CASE("coupled step: constant data stays constant")
{
    const Grid1D g = build_grid(0.0, 1.0, 12);
    const Field w = init_point_values(g, [](double) { return 0.75; });
    const Field wb = init_cell_averages(g, [](double) { return 0.75; });
    std::mt19937 rng(23);
    std::bernoulli_distribution coin(0.5);
    CoupledState st = init_coupled(w, wb);
    const SchemeContext ctx = advection_context(12, 0.4);
    for (int n = 0; n < 20; ++n) {
        SigmaField sigma(13);
        for (auto& s : sigma)
            s = coin(rng);
        st = coupled_step(st, sigma, ctx);
        for (double v : st.w.values)
            CHECK(v == 0.75);
    }
    CHECK(classify(st.w, RegularityParams::from_slope_bound(1.0)) == SigmaField(13, 1));
}

TEST_CASE("coupled step reduces to SL and to UB")
{
    const Grid1D g = build_grid(-2.0, 2.0, 40);
    const Field w = init_point_values(g, [](double x) { return std::exp(-x * x); });
    const Field wb = init_cell_averages(g, [](double x) { return std::exp(-x * x); });
    const SchemeContext ctx = advection_context(40, 0.7);

    CoupledState a = init_coupled(w, wb);
    Field sl = w;
    CoupledState b = init_coupled(w, wb);
    Field ub = wb;
    for (int n = 0; n < 15; ++n) {
        a = coupled_step(a, ctx, RegularityParams::always_regular());
        sl = sl_advection_step(sl, 0.7);
        CHECK(a.w.values == sl.values);
        b = coupled_step(b, ctx, RegularityParams::never_regular());
        ub = ub_step_single(ub, ctx.cn.nu_M);
        CHECK(b.w_bar.values == ub.values);
    }
}

TEST_CASE("coupled step on step data acts like UB near the jump")
{
    const ProblemSpec& p = find_problem("adv-jump");
    const Grid1D g = build_grid(p.a, p.b, 40);
    const TimeSpec t = default_time(p, g, p.nu, p.T);
    const SchemeContext ctx = make_context(p, g, t.dt, Exec::Serial);
    const RegularityParams rp = default_regularity(p, {});
    const Field w0 = init_point_values(g, p.ic);
    const Field c0 = init_cell_averages(g, p.ic, p.ic_breakpoints);
    const CoupledState st = coupled_step(init_coupled(w0, c0), ctx, rp);
    const Field ub = ub_step(c0, ctx.cn);
    for (std::size_t k = 0; k < st.w_bar.size(); ++k)
        if (st.cell_valid[k])
            CHECK(st.w_bar[k] == ub[k]);
    // node at x = -1 sits on the jump
    CHECK(st.sigma[10] == 0);
    CHECK(st.sigma[30] == 0);
}

TEST_CASE("mixed initial data has both sigma values")
{
    const ProblemSpec& p = find_problem("adv-mix");
    const Grid1D g = build_grid(p.a, p.b, 100);
    const SigmaField s = classify(init_point_values(g, p.ic), default_regularity(p, {}));
    const auto at = [&](double x) { return s[static_cast<std::size_t>(std::lround((x - g.a) / g.dx))]; };
    CHECK(at(0.0) == 1);
    CHECK(at(0.45) == 1);
    CHECK(at(2.07) == 0);
    CHECK(at(2.97) == 0);
    const RegionPartition part = partition(s);
    CHECK(part.regular_nodes.size() + part.singular_nodes.size() == s.size());
    CHECK_FALSE(part.singular_cells.empty());
}

TEST_CASE("partition")
{
    const RegionPartition p = partition(SigmaField{1, 0, 0, 1, 1, 0});
    CHECK(p.regular_nodes == std::vector<int>{0, 3, 4});
    CHECK(p.singular_nodes == std::vector<int>{1, 2, 5});
    CHECK(p.singular_cells == std::vector<int>{0, 1, 2, 4});
}

TEST_CASE("coupled stability witness over random switch patterns")
{
    const StabilitySuiteResult r = stability_suite(99, 2000);
    CHECK(r.sl_violations == 0);
    CHECK(r.ub_violations == 0);
    CHECK(r.coupled_violations == 0);
    for (long c : r.switch_cases)
        CHECK(c > 0);
}
