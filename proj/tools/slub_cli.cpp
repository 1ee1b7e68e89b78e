#include "slub/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

int main(int argc, char** argv)
{
    using namespace slub::cli;
    CLI::App app{"semi-Lagrangian / Ultra-Bee / coupled solvers for 1D advection and HJ equations"};
    app.require_subcommand(1);

    RunConfig run;
    std::optional<int> m;
    std::optional<double> nu, T, delta, epsilon;
    std::string snapshots;
    auto* r = app.add_subcommand("run", "run one scheme on one problem and dump snapshots");
    r->add_option("--problem", run.problem, "problem name (see list-problems)")->required();
    r->add_option("--scheme", run.scheme, "sl, ub or coupled")->capture_default_str();
    r->add_option("--m", m, "number of cells");
    r->add_option("--nu", nu, "Courant number");
    r->add_option("--T", T, "final time");
    r->add_option("--delta", delta, "regularity threshold (inf forces SL everywhere)");
    r->add_option("--epsilon", epsilon, "relative margin on the slope bound");
    r->add_option("--snapshots", snapshots, "comma-separated step indices");
    r->add_option("--out", run.out, "output directory")->capture_default_str();

    std::string problem, scheme = "coupled", ladder, out = "out", schemes = "sl,ub,coupled";
    auto* c = app.add_subcommand("convergence", "error table over a refinement ladder");
    c->add_option("--problem", problem)->required();
    c->add_option("--scheme", scheme)->capture_default_str();
    c->add_option("--ladder", ladder, "preset (ex1..ex4) or comma-separated m list");
    c->add_option("--nu", nu);
    c->add_option("--T", T);
    c->add_option("--out", out)->capture_default_str();

    auto* cmp = app.add_subcommand("compare", "all schemes side by side at one resolution");
    cmp->add_option("--problem", problem)->required();
    cmp->add_option("--m", m);
    cmp->add_option("--scheme", schemes, "comma-separated scheme list")->capture_default_str();
    cmp->add_option("--out", out)->capture_default_str();

    auto* lp = app.add_subcommand("list-problems", "print the problem registry");

    unsigned seed = 1;
    int trials = 10000;
    auto* chk = app.add_subcommand("check", "random L-infinity stability witness suite");
    chk->add_option("--seed", seed)->capture_default_str();
    chk->add_option("--trials", trials)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (r->parsed()) {
            run.m = m;
            run.nu = nu;
            run.T = T;
            run.delta = delta;
            run.epsilon = epsilon;
            run.snapshots = parse_int_list(snapshots);
            return cmd_run(run);
        }
        if (c->parsed())
            return cmd_convergence(problem, scheme, ladder, nu, T, out);
        if (cmp->parsed()) {
            std::vector<std::string> list;
            std::stringstream ss(schemes);
            for (std::string s; std::getline(ss, s, ',');)
                list.push_back(s);
            return cmd_compare(problem, m, list, out);
        }
        if (lp->parsed())
            return cmd_list_problems();
        if (chk->parsed())
            return cmd_check(seed, trials);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
