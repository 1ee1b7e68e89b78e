#include "slub/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace slub::cli {

namespace fs = std::filesystem;

namespace {

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

ProblemSpec configured_problem(const RunConfig& r)
{
    ProblemSpec p = find_problem(r.problem);
    p.a = r.a.value_or(p.a);
    p.b = r.b.value_or(p.b);
    return p;
}

RunOptions options_for(const RunConfig& r)
{
    RunOptions o;
    o.delta = r.delta;
    o.epsilon = r.epsilon;
    o.snapshots = r.snapshots;
    return o;
}

std::ofstream open_out(const fs::path& p)
{
    std::ofstream f(p);
    if (!f)
        throw std::runtime_error("cannot write " + p.string());
    return f;
}

void write_errors(const fs::path& path, const ErrorReport& e)
{
    auto f = open_out(path);
    f << "l1,l2,linf,linf_reg,dx,dt\n"
      << csv(e.l1) << ',' << csv(e.l2) << ',' << csv(e.linf) << ',' << csv(e.linf_reg) << ',' << csv(e.dx) << ','
      << csv(e.dt) << '\n';
}

// Node-aligned view of any result; cell values are projected with project_sl.
std::vector<double> at_nodes(const Field& f)
{
    if (f.alignment == Alignment::NodeCentered)
        return f.values;
    std::vector<double> v(f.size() + 1);
    for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = project_sl(f.clamped(static_cast<std::ptrdiff_t>(j) - 1), f.clamped(static_cast<std::ptrdiff_t>(j)));
    return v;
}

} // namespace

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size())
            throw std::invalid_argument("malformed integer list '" + s + "'");
        out.push_back(v);
    }
    return out;
}

RunConfig resolve(const RunConfig& cfg)
{
    RunConfig r = cfg;
    parse_scheme(r.scheme);
    const ProblemSpec& base = find_problem(r.problem);
    r.a = r.a.value_or(base.a);
    r.b = r.b.value_or(base.b);
    r.m = r.m.value_or(base.default_m);
    r.nu = r.nu.value_or(base.nu);
    r.T = r.T.value_or(base.T);
    r.epsilon = r.epsilon.value_or(0.1);
    if (!(*r.nu > 0.0 && *r.nu <= 1.0))
        throw std::invalid_argument("--nu must lie in (0, 1]");
    const ProblemSpec p = configured_problem(r);
    const Grid1D g = build_grid(*r.a, *r.b, *r.m);
    const TimeSpec time = default_time(p, g, *r.nu, *r.T);
    if (!r.delta)
        r.delta = default_regularity(p, options_for(r)).delta;
    if (r.snapshots.empty())
        r.snapshots = {0, time.n_steps};
    for (int s : r.snapshots)
        if (s < 0 || s > time.n_steps)
            throw std::invalid_argument("snapshot step " + std::to_string(s) + " outside [0, " +
                                        std::to_string(time.n_steps) + "]");
    return r;
}

std::string write_manifest(const RunConfig& r)
{
    std::ostringstream os;
    os << "problem=" << r.problem << '\n'
       << "scheme=" << r.scheme << '\n'
       << "a=" << num(r.a.value()) << '\n'
       << "b=" << num(r.b.value()) << '\n'
       << "m=" << r.m.value() << '\n'
       << "nu=" << num(r.nu.value()) << '\n'
       << "T=" << num(r.T.value()) << '\n'
       << "delta=" << num(r.delta.value()) << '\n'
       << "epsilon=" << num(r.epsilon.value()) << '\n'
       << "snapshots=" << join(r.snapshots) << '\n'
       << "out=" << r.out << '\n';
    const ProblemSpec p = configured_problem(r);
    const Grid1D g = build_grid(*r.a, *r.b, *r.m);
    const TimeSpec t = default_time(p, g, *r.nu, *r.T);
    const RegularityParams rp = default_regularity(p, options_for(r));
    os << "dx=" << num(g.dx) << '\n'
       << "dt=" << num(t.dt) << '\n'
       << "n_steps=" << t.n_steps << '\n'
       << "flat_tol=" << num(rp.flat_tol) << '\n'
       << "controls=201\n"
       << "radius_cells=3\n";
    return os.str();
}

RunConfig parse_manifest(const std::string& text)
{
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    const auto get = [&](const char* k) -> const std::string& {
        const auto it = kv.find(k);
        if (it == kv.end())
            throw std::invalid_argument(std::string("manifest lacks key ") + k);
        return it->second;
    };
    RunConfig r;
    r.problem = get("problem");
    r.scheme = get("scheme");
    r.a = std::stod(get("a"));
    r.b = std::stod(get("b"));
    r.m = std::stoi(get("m"));
    r.nu = std::stod(get("nu"));
    r.T = std::stod(get("T"));
    r.delta = std::stod(get("delta"));
    r.epsilon = std::stod(get("epsilon"));
    r.snapshots = parse_int_list(get("snapshots"));
    r.out = get("out");
    return r;
}

int cmd_run(const RunConfig& cfg)
{
    const RunConfig r = resolve(cfg);
    const ProblemSpec p = configured_problem(r);
    const Scheme scheme = parse_scheme(r.scheme);
    const Grid1D g = build_grid(*r.a, *r.b, *r.m);
    const TimeSpec time = default_time(p, g, *r.nu, *r.T);
    const RunResult res = run_scheme(p, scheme, g, time, options_for(r));
    const ErrorReport err = evaluate(p, res);

    const fs::path dir(r.out);
    fs::create_directories(dir);
    for (const auto& s : res.snapshots) {
        auto f = open_out(dir / ("sol_" + r.scheme + "_step" + std::to_string(s.step) + ".csv"));
        f << "x,value\n";
        for (std::size_t j = 0; j < s.values.size(); ++j)
            f << csv(s.values.point(j)) << ',' << csv(s.values[j]) << '\n';
        if (!s.sigma.empty()) {
            auto fs_ = open_out(dir / ("sigma_step" + std::to_string(s.step) + ".csv"));
            fs_ << "x,sigma\n";
            for (std::size_t j = 0; j < s.sigma.size(); ++j)
                fs_ << csv(g.node(static_cast<std::ptrdiff_t>(j))) << ',' << int(s.sigma[j]) << '\n';
        }
    }
    {
        const double width = g.b - g.a;
        const double delta = scheme == Scheme::Coupled ? res.params.delta : 0.0;
        const TVSeries tv = tv_monitor(res.tv, width, delta);
        auto f = open_out(dir / ("tv_" + r.scheme + ".csv"));
        f << "step,tv,bound\n";
        for (std::size_t n = 0; n < tv.tv.size(); ++n)
            f << n << ',' << csv(tv.tv[n]) << ',' << csv(tv.bound[n]) << '\n';
        if (!tv.violations.empty())
            std::cerr << "warning: TV envelope exceeded at " << tv.violations.size() << " steps\n";
    }
    write_errors(dir / ("errors_" + r.scheme + ".csv"), err);
    open_out(dir / "manifest.txt") << write_manifest(r);

    std::cout << r.problem << " " << r.scheme << " m=" << *r.m << " dx=" << csv(g.dx) << " dt=" << csv(time.dt)
              << " steps=" << time.n_steps << "\n"
              << "L1=" << format_sci3(err.l1) << " L2=" << format_sci3(err.l2) << " Linf=" << format_sci3(err.linf)
              << " Linf_reg=" << format_sci3(err.linf_reg) << "\n";
    return 0;
}

int cmd_convergence(const std::string& problem, const std::string& scheme, const std::string& ladder,
                    std::optional<double> nu, std::optional<double> T, const std::string& out)
{
    const ProblemSpec& p = find_problem(problem);
    const Scheme s = parse_scheme(scheme);
    const Ladder l = parse_ladder(ladder.empty() ? p.ladder : ladder);
    const auto rows = convergence_table(p, s, l, nu.value_or(p.nu), T.value_or(p.T));
    const bool with_reg = !p.singular(T.value_or(p.T)).empty();
    const std::string table = format_table(rows, with_reg);
    std::cout << problem << " / " << scheme << " (ladder " << l.name << ")\n" << table;

    const fs::path dir(out);
    fs::create_directories(dir);
    const std::string stem = "convergence_" + problem + "_" + scheme;
    open_out(dir / (stem + ".txt")) << table;
    auto f = open_out(dir / (stem + ".csv"));
    f << "m,dt,dx,l1,l2,linf,linf_reg,order_l1,order_l2,order_linf\n";
    for (const auto& r : rows) {
        f << r.m << ',' << csv(r.err.dt) << ',' << csv(r.err.dx) << ',' << csv(r.err.l1) << ',' << csv(r.err.l2) << ','
          << csv(r.err.linf) << ',' << csv(r.err.linf_reg);
        for (const auto& o : {r.order_l1, r.order_l2, r.order_linf})
            f << ',' << (o ? csv(*o) : std::string());
        f << '\n';
    }
    return 0;
}

int cmd_compare(const std::string& problem, std::optional<int> m, const std::vector<std::string>& schemes,
                const std::string& out)
{
    const ProblemSpec& p = find_problem(problem);
    const Grid1D g = build_grid(p.a, p.b, m.value_or(p.default_m));
    const TimeSpec time = default_time(p, g, p.nu, p.T);
    const double t = time.dt * time.n_steps;

    std::vector<std::vector<double>> columns;
    std::vector<ErrorReport> errors;
    for (const auto& name : schemes) {
        const RunResult r = run_scheme(p, parse_scheme(name), g, time);
        errors.push_back(evaluate(p, r));
        columns.push_back(at_nodes(r.final));
    }

    const fs::path dir(out);
    fs::create_directories(dir);
    {
        auto f = open_out(dir / "compare_errors.csv");
        f << "scheme,l1,l2,linf,linf_reg,dx,dt\n";
        for (std::size_t i = 0; i < schemes.size(); ++i)
            f << schemes[i] << ',' << csv(errors[i].l1) << ',' << csv(errors[i].l2) << ',' << csv(errors[i].linf)
              << ',' << csv(errors[i].linf_reg) << ',' << csv(errors[i].dx) << ',' << csv(errors[i].dt) << '\n';
    }
    {
        auto f = open_out(dir / "compare_solution.csv");
        f << "x,exact";
        for (const auto& s : schemes)
            f << ',' << s;
        f << '\n';
        for (int j = 0; j <= g.m; ++j) {
            f << csv(g.node(j)) << ',' << csv(p.exact(g.node(j), t));
            for (const auto& c : columns)
                f << ',' << csv(c[static_cast<std::size_t>(j)]);
            f << '\n';
        }
    }
    std::cout << problem << " m=" << g.m << " dx=" << csv(g.dx) << " dt=" << csv(time.dt) << "\n";
    for (std::size_t i = 0; i < schemes.size(); ++i)
        std::cout << "  " << schemes[i] << ": L1=" << format_sci3(errors[i].l1) << " L2=" << format_sci3(errors[i].l2)
                  << " Linf=" << format_sci3(errors[i].linf) << " Linf_reg=" << format_sci3(errors[i].linf_reg)
                  << "\n";
    return 0;
}

int cmd_list_problems()
{
    for (const auto& p : problem_registry())
        std::cout << p.name << "  " << p.description << "  (ladder " << p.ladder << ", default m " << p.default_m
                  << ")\n";
    return 0;
}

int cmd_check(unsigned seed, int trials)
{
    const StabilitySuiteResult r = stability_suite(seed, trials);
    std::cout << "trials=" << r.trials << " sl_violations=" << r.sl_violations << " ub_violations=" << r.ub_violations
              << " coupled_violations=" << r.coupled_violations << "\n"
              << "switch cases (1->1, 0->0, 1->0, 0->1): " << r.switch_cases[0] << ' ' << r.switch_cases[1] << ' '
              << r.switch_cases[2] << ' ' << r.switch_cases[3] << "\n";
    if (r.first)
        std::cout << "first violation at index " << r.first->index << ": " << r.first->value << " not in ["
                  << r.first->lo << ", " << r.first->hi << "]\n";
    return r.sl_violations + r.ub_violations + r.coupled_violations == 0 ? 0 : 1;
}

} // namespace slub::cli
