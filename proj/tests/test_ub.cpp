#include "slub/diagnostics.hpp"
#include "slub/ub.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace slub;

namespace {

Field cells_of(std::vector<double> v)
{
    const int m = static_cast<int>(v.size());
    return make_field(build_grid(0.0, static_cast<double>(m), m), Alignment::CellCentered, std::move(v));
}

std::vector<double> random_values(std::mt19937& rng, std::size_t n)
{
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v)
        x = d(rng);
    return v;
}

} // namespace

TEST_CASE("cfl_check")
{
    const Grid1D g = build_grid(-2.0, 2.0, 40);
    const auto one = [](double) { return 1.0; };
    const auto minus = [](double) { return -1.0; };
    const CourantNumbers cn = cfl_check({minus, one}, g, 0.9 * g.dx);
    for (double v : cn.nu_M)
        CHECK(v == doctest::Approx(0.9));
    for (double v : cn.nu_m)
        CHECK(v == doctest::Approx(-0.9));
    CHECK_FALSE(cn.single_velocity());

    const auto zero = [](double) { return 0.0; };
    const CourantNumbers z = cfl_check({zero, zero}, g, 0.3);
    CHECK(z.max_abs() == 0.0);

    try {
        cfl_check({one, one}, g, 1.2 * g.dx);
        FAIL("expected CFL failure");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("x=") != std::string::npos);
    }
}

TEST_CASE("ub fluxes: hand examples")
{
    CHECK(ub_flux_left(0.0, 1.0, 1.0, 0.5) == 1.0);
    CHECK(ub_flux_left(0.0, 0.0, 1.0, 0.5) == 0.0);
    CHECK(ub_flux_right(1.0, 0.0, 0.0, -0.5) == 0.0);
    for (double nu : {0.1, 0.5, 1.0}) {
        CHECK(ub_flux_left(0.7, 0.7, 0.7, nu) == 0.7);
        CHECK(ub_flux_right(0.7, 0.7, 0.7, -nu) == 0.7);
    }
    // zero Courant branches
    CHECK(ub_flux_left(0.0, 1.0, 3.0, 0.0) == 3.0);
    CHECK(ub_flux_left(1.0, 1.0, 3.0, 0.0) == 1.0);
    CHECK(ub_flux_left(1.0, 2.0, 3.0, 1e-16) == 3.0);
    CHECK(ub_flux_right(3.0, 1.0, 0.0, 0.0) == 3.0);
    CHECK(ub_flux_right(3.0, 1.0, 1.0, -0.0) == 1.0);
}

TEST_CASE("ub fluxes: reflection symmetry")
{
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> d(-1.0, 1.0), nd(0.0, 1.0);
    for (int t = 0; t < 1000; ++t) {
        const double a = d(rng), b = d(rng), c = d(rng), nu = nd(rng);
        CHECK(ub_flux_left(a, b, c, nu) == ub_flux_right(c, b, a, -nu));
    }
}

TEST_CASE("ub fluxes lie between the cells next to the interface")
{
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> d(-1.0, 1.0), nd(0.0, 1.0);
    for (int t = 0; t < 10000; ++t) {
        const double a = d(rng), b = d(rng), c = d(rng), nu = nd(rng);
        const double fl = ub_flux_left(a, b, c, nu);
        CHECK(fl >= std::min(b, c));
        CHECK(fl <= std::max(b, c));
        const double fr = ub_flux_right(a, b, c, -nu);
        CHECK(fr >= std::min(a, b));
        CHECK(fr <= std::max(a, b));
    }
    // the (u_{j-1}, u_j) pair does not bound the flux in general
    const double f = ub_flux_left(0.0, 1.0, 5.0, 0.5);
    CHECK(f == 2.0);
}

TEST_CASE("ub_step_single examples")
{
    const Field c = cells_of(std::vector<double>(8, 0.4));
    for (double nu : {-1.0, -0.4, 0.0, 0.3, 1.0})
        CHECK(ub_step_single(c, std::vector<double>(8, nu)).values == c.values);

    const Field step = cells_of({0, 0, 0, 1, 1, 1, 1, 1});
    const Field s = ub_step_single(step, std::vector<double>(8, 0.5));
    CHECK(s.values == std::vector<double>{0, 0, 0, 0.5, 1, 1, 1, 1});
    const Field down = cells_of({1, 1, 1, 0, 0, 0, 0, 0});
    CHECK(ub_step_single(down, std::vector<double>(8, 0.5)).values == std::vector<double>{1, 1, 1, 0.5, 0, 0, 0, 0});

    std::mt19937 rng(4);
    for (int t = 0; t < 200; ++t) {
        const Field r = cells_of(random_values(rng, 12));
        const Field sh = ub_step_single(r, std::vector<double>(12, 1.0));
        for (std::size_t j = 1; j < 12; ++j)
            CHECK(std::abs(sh[j] - r[j - 1]) <= 1e-15);
        const Field back = ub_step_single(r, std::vector<double>(12, -1.0));
        for (std::size_t j = 0; j + 1 < 12; ++j)
            CHECK(std::abs(back[j] - r[j + 1]) <= 1e-15);
    }
}

TEST_CASE("ub properties on random data")
{
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> nd(-1.0, 1.0);
    for (int t = 0; t < 2000; ++t) {
        const Field r = cells_of(random_values(rng, 20));
        const double nu = nd(rng);
        const std::vector<double> nus(20, nu);
        const Field out = ub_step_single(r, nus);
        CHECK_FALSE(stability_witness(r.values, out.values, nus));
        CHECK(total_variation(out) <= total_variation(r) + 1e-12);
    }
}

TEST_CASE("ub_step min-combines two velocities")
{
    std::mt19937 rng(12);
    for (int t = 0; t < 100; ++t) {
        const Field r = cells_of(random_values(rng, 16));
        const CourantNumbers same = constant_courant(16, 0.6);
        CHECK(ub_step(r, same).values == ub_step_single(r, same.nu_M).values);
        const CourantNumbers two{std::vector<double>(16, -0.6), std::vector<double>(16, 0.6)};
        const Field both = ub_step(r, two);
        const Field lo = ub_step_single(r, two.nu_m);
        const Field hi = ub_step_single(r, two.nu_M);
        for (std::size_t j = 0; j < 16; ++j)
            CHECK(both[j] == std::min(lo[j], hi[j]));
    }

    // eikonal erosion of a smooth hat: the flanks go down, the flat top is kept
    std::vector<double> hat(20);
    for (int k = 0; k < 20; ++k) {
        const double x = -1.0 + (k + 0.5) * 0.1;
        hat[static_cast<std::size_t>(k)] = std::pow(std::max(0.0, 1.0 - x * x), 4);
    }
    const Field h = cells_of(hat);
    const Field e = ub_step(h, CourantNumbers{std::vector<double>(20, -0.5), std::vector<double>(20, 0.5)});
    for (std::size_t k = 1; k < 19; ++k) {
        if (k == 9 || k == 10)
            CHECK(std::abs(e[k] - h[k]) <= 1e-15);
        else
            CHECK(e[k] < h[k]);
    }
}

TEST_CASE("ub_flux_limited agrees with the clamp flux")
{
    const Field lin = cells_of({0.0, 1.0, 2.0});
    const auto [f, st] = ub_flux_limited(lin, 1, 0.5);
    CHECK(st.r == 1.0);
    CHECK(st.phi == 4.0);
    CHECK(f == 2.0);
    CHECK(f == ub_flux_left(0.0, 1.0, 2.0, 0.5));

    const Field flat = cells_of({3.0, 3.0, 3.0});
    CHECK(ub_flux_limited(flat, 1, 0.3).first == 3.0);
    CHECK_THROWS_AS(ub_flux_limited(flat, 1, 1.0), std::invalid_argument);

    std::mt19937 rng(13);
    std::uniform_real_distribution<double> nd(0.01, 0.99);
    for (int t = 0; t < 5000; ++t) {
        const Field r = cells_of(random_values(rng, 3));
        const double nu = nd(rng);
        const auto [lf, ls] = ub_flux_limited(r, 1, nu);
        CHECK(ls.phi >= 0.0);
        CHECK(lf == doctest::Approx(ub_flux_left(r[0], r[1], r[2], nu)).epsilon(1e-9));
        CHECK(lf >= std::min({r[0], r[1], r[2]}) - 1e-12);
        CHECK(lf <= std::max({r[0], r[1], r[2]}) + 1e-12);
    }
}

TEST_CASE("ub exact step transport")
{
    for (double nu : {0.25, 0.5, 0.9, 1.0}) {
        const int m = 100;
        std::vector<double> v(m, 0.0);
        for (int k = 10; k < 30; ++k)
            v[static_cast<std::size_t>(k)] = 1.0;
        Field u = cells_of(v);
        const std::vector<double> nus(m, nu);
        for (int n = 1; n <= 50; ++n) {
            u = ub_step_single(u, nus);
            const double shift = n * nu;
            for (int k = 0; k < m; ++k) {
                const double lo = std::max<double>(k, 10.0 + shift);
                const double hi = std::min<double>(k + 1, 30.0 + shift);
                const double exact = std::max(0.0, hi - lo);
                REQUIRE(std::abs(u[static_cast<std::size_t>(k)] - exact) <= 1e-12);
            }
        }
    }
}
