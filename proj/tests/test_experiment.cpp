#include "slub/cli.hpp"
#include "slub/experiment.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

using namespace slub;

TEST_CASE("scheme names")
{
    CHECK(parse_scheme("sl") == Scheme::SL);
    CHECK(parse_scheme("ub") == Scheme::UB);
    CHECK(parse_scheme("coupled") == Scheme::Coupled);
    CHECK(to_string(Scheme::Coupled) == "coupled");
    CHECK_THROWS_AS(parse_scheme("weno"), std::invalid_argument);
}

TEST_CASE("ladders")
{
    CHECK(ladder_preset("ex1").m == std::vector<int>{19, 39, 79, 159, 319, 639});
    CHECK(ladder_preset("ex2").m == std::vector<int>{100, 200, 400, 800, 1600});
    CHECK(parse_ladder("ex4").m.size() == 6);
    CHECK(parse_ladder("20,40").m == std::vector<int>{20, 40});
    CHECK_THROWS_AS(parse_ladder("20,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ladder("2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ladder("ex9"), std::invalid_argument);
}

TEST_CASE("one-row convergence table has no order column")
{
    const ProblemSpec& p = find_problem("adv-smooth");
    const auto rows = convergence_table(p, Scheme::SL, parse_ladder("39"), p.nu, p.T);
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].order_l1);
    const std::string table = format_table(rows, false);
    CHECK(table.find("ord_L1") == std::string::npos);
    CHECK(format_sci3(0.0167) == "1.67E-02");
}

TEST_CASE("dt follows nu and dx")
{
    const ProblemSpec& p = find_problem("adv-mix");
    const auto rows = convergence_table(p, Scheme::SL, parse_ladder("100,200"), p.nu, p.T);
    CHECK(rows[0].err.dt == doctest::Approx(0.075));
    CHECK(rows[1].err.dt == doctest::Approx(0.0375));
    CHECK(rows[1].order_l1.has_value());
}

TEST_CASE("snapshots and sigma")
{
    const ProblemSpec& p = find_problem("adv-smooth");
    const Grid1D g = build_grid(p.a, p.b, 39);
    const TimeSpec t = default_time(p, g, p.nu, p.T);
    RunOptions o;
    o.snapshots = {0, 5, t.n_steps};
    const RunResult r = run_scheme(p, Scheme::Coupled, g, t, o);
    REQUIRE(r.snapshots.size() == 3);
    CHECK(r.snapshots[1].step == 5);
    CHECK(r.snapshots[1].sigma.size() == 40);
    CHECK(r.snapshots[2].values.values == r.final.values);
    const RunResult u = run_scheme(p, Scheme::UB, g, t, o);
    CHECK(u.snapshots[0].sigma.empty());
    CHECK(u.final.alignment == Alignment::CellCentered);
}

TEST_CASE("manifest round trip")
{
    cli::RunConfig c;
    c.problem = "hj-abs";
    c.scheme = "coupled";
    c.nu = 0.6;
    c.snapshots = {0, 10, 20};
    const cli::RunConfig r = cli::resolve(c);
    CHECK(r.m == 159);
    CHECK(r.T == 0.5);
    CHECK(r.delta.has_value());
    CHECK(cli::parse_manifest(cli::write_manifest(r)) == r);

    cli::RunConfig inf = c;
    inf.delta = std::numeric_limits<double>::infinity();
    const cli::RunConfig ri = cli::resolve(inf);
    CHECK(cli::parse_manifest(cli::write_manifest(ri)) == ri);

    cli::RunConfig bad = c;
    bad.snapshots = {1000};
    CHECK_THROWS_AS(cli::resolve(bad), std::invalid_argument);
    bad = c;
    bad.nu = 1.5;
    CHECK_THROWS_AS(cli::resolve(bad), std::invalid_argument);
}

TEST_CASE("cmd_run writes a deterministic bundle")
{
    namespace fs = std::filesystem;
    const fs::path root = fs::temp_directory_path() / "slub_cmd_run_test";
    fs::remove_all(root);
    cli::RunConfig c;
    c.problem = "adv-jump";
    c.scheme = "coupled";
    c.m = 39;
    c.snapshots = {0, 10};
    const auto slurp = [](const fs::path& p) {
        std::ifstream f(p);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    c.out = (root / "a").string();
    CHECK(cli::cmd_run(c) == 0);
    c.out = (root / "b").string();
    CHECK(cli::cmd_run(c) == 0);
    for (const char* f : {"sol_coupled_step0.csv", "sol_coupled_step10.csv", "sigma_step10.csv", "tv_coupled.csv",
                          "errors_coupled.csv"}) {
        REQUIRE(fs::exists(root / "a" / f));
        CHECK(slurp(root / "a" / f) == slurp(root / "b" / f));
    }
    const std::string sig = slurp(root / "a" / "sigma_step10.csv");
    CHECK(sig.rfind("x,sigma\n", 0) == 0);
    CHECK(sig.find(",0\n") != std::string::npos);
    const cli::RunConfig back = cli::parse_manifest(slurp(root / "a" / "manifest.txt"));
    c.out = (root / "a").string();
    CHECK(back == cli::resolve(c));
    fs::remove_all(root);
}

TEST_CASE("cmd_compare with a repeated scheme gives identical columns")
{
    namespace fs = std::filesystem;
    const fs::path root = fs::temp_directory_path() / "slub_cmd_compare_test";
    fs::remove_all(root);
    CHECK(cli::cmd_compare("adv-smooth", 39, {"sl", "sl"}, root.string()) == 0);
    std::ifstream f(root / "compare_solution.csv");
    std::string line;
    std::getline(f, line);
    CHECK(line == "x,exact,sl,sl");
    while (std::getline(f, line)) {
        std::stringstream ss(line);
        std::string x, e, a, b;
        std::getline(ss, x, ',');
        std::getline(ss, e, ',');
        std::getline(ss, a, ',');
        std::getline(ss, b, ',');
        CHECK(a == b);
    }
    fs::remove_all(root);
}
