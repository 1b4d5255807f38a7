#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ehrhart/io.hpp"
#include "ehrhart/lr_hives.hpp"
#include "ehrhart/report.hpp"
#include "ehrhart/verify.hpp"

using namespace ehrhart;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

/// Bad input detected after parsing.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Source
{
    std::string file;
    std::vector<std::string> family;

    void attach(CLI::App* cmd)
    {
        auto* f = cmd->add_option("--file", file, "polytope document (JSON)");
        auto* g = cmd->add_option("--family", family, "family name followed by its parameters")->expected(1, -1);
        f->excludes(g);
        g->excludes(f);
    }

    FamilyInstance load() const
    {
        if (!file.empty())
            return {file, read_document(file), std::nullopt, std::nullopt};
        if (family.empty())
            throw UsageError("one of --file or --family is required");
        return make_family(family.front(), {family.begin() + 1, family.end()});
    }
};

std::string join(const std::vector<Integer>& v, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + v[i].str();
    return out;
}

const char* yes_no(bool b)
{
    return b ? "true" : "false";
}

std::string yes_no(const std::optional<bool>& b)
{
    return b ? yes_no(*b) : "unknown";
}

/// Interpolates and confirms the result one step past the nodes, which
/// catches H-form input with fractional vertices.
RationalPolynomial checked_polynomial(const Polytope& p, const CountOptions& options)
{
    RationalPolynomial f = ehrhart_poly(p, options);
    const long t = f.degree() + 1;
    const Integer direct = count_points(p, t, options);
    if (f(t) != Rational(direct))
        throw EngineError("count at t = " + std::to_string(t) + " is " + direct.str() +
                          " but the interpolant gives " + format_rational(f(t)) + "; the polytope is not integral");
    return f;
}

int run_ehrhart(const Source& src, bool hstar, bool analysis, bool formula, unsigned workers)
{
    FamilyInstance inst = src.load();
    RationalPolynomial f;
    if (formula)
    {
        if (!inst.formula)
            throw UsageError("no closed form or stored polynomial for " + inst.source);
        f = *inst.formula;
    }
    else
        f = checked_polynomial(inst.polytope, {workers});
    std::cout << format_coefficients(f) << '\n';
    const int d = f.degree();
    if (!hstar && !analysis)
        return exit_ok;
    HStarVector h = hstar_from_ehrhart(f, d);
    if (hstar)
        std::cout << "h*: " << join(h.entries(), ",") << '\n';
    if (!analysis)
        return exit_ok;
    AnalysisReport a = analyze(f, h);
    std::cout << "dimension: " << a.dim << '\n'
              << "sign_pattern: " << a.sign_pattern << '\n'
              << "ehrhart_positive: " << yes_no(a.ehrhart_positive) << '\n'
              << "sum_of_roots: " << format_rational(a.sum_of_roots) << '\n'
              << "reflexive: " << yes_no(a.reflexive) << '\n'
              << "gorenstein: " << yes_no(a.gorenstein) << '\n'
              << "codegree: " << a.codegree << '\n'
              << "palindromic: " << yes_no(a.hstar_palindromic) << '\n'
              << "unimodal: " << yes_no(a.hstar_unimodal) << '\n'
              << "unit_circle_rooted: " << yes_no(a.unit_circle_rooted) << '\n'
              << "nrpr: " << yes_no(a.nrpr) << '\n';
    if (!a.vieta_agrees)
    {
        std::cerr << "error: root-sum Gorenstein test ("
                  << (a.vieta.gorenstein ? "s = " + std::to_string(*a.vieta.codegree) : std::string("not Gorenstein"))
                  << ") disagrees with the h* palindromicity test\n";
        return exit_failed;
    }
    return exit_ok;
}

int run_verify_cmd(const std::string& family, const VerifyOptions& options)
{
    std::cout << "family: " << family << '\n' << "seed: " << options.seed << '\n';
    auto results = run_verify(family, options);
    std::size_t passed = 0;
    for (const auto& r : results)
    {
        if (r.ok)
        {
            ++passed;
            std::cout << "ok   " << r.params << '\n';
        }
        else
            std::cout << "FAIL " << r.params << ": " << r.detail << '\n';
    }
    std::cout << passed << "/" << results.size() << " checks passed\n";
    return passed == results.size() ? exit_ok : exit_failed;
}

int run_lr(const std::string& l, const std::string& m, const std::string& n, long stretch, bool fit,
           unsigned workers)
{
    Partition lambda = parse_partition(l), mu = parse_partition(m), nu = parse_partition(n);
    if (stretch > 0)
    {
        auto values = stretched_values(lambda, mu, nu, stretch);
        for (std::size_t t = 0; t < values.size(); ++t)
            std::cout << t + 1 << " " << values[t] << '\n';
    }
    else if (!fit)
        std::cout << hive_count(lambda, mu, nu, 0, workers) << '\n';
    if (fit)
    {
        auto f = stretched_fit(lambda, mu, nu);
        if (!f)
        {
            std::cerr << "error: the fitted polynomial fails on the holdout stretches\n";
            return exit_failed;
        }
        std::cout << format_coefficients(*f) << '\n';
    }
    return exit_ok;
}

int run_report(const std::string& suite, const std::string& path)
{
    if (suite.empty())
        throw UsageError("--suite must be full or counterexamples");
    try
    {
        suite_entries(suite);
    }
    catch (const std::invalid_argument& e)
    {
        throw UsageError(e.what());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write " + path);
    write_report(suite, out);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Ehrhart polynomials, h*-vectors and lattice point counts"};
    app.require_subcommand(1);

    Source count_src;
    long t = 1;
    unsigned workers = 1;
    auto* count = app.add_subcommand("count", "lattice points of tP");
    count_src.attach(count);
    count->add_option("-t", t, "dilation factor")->check(CLI::NonNegativeNumber);
    count->add_option("--workers", workers, "threads");

    Source ehr_src;
    bool hstar = false, analysis = false, formula = false;
    auto* ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial coefficients, low to high");
    ehr_src.attach(ehr);
    ehr->add_flag("--hstar", hstar, "also print the h*-vector");
    ehr->add_flag("--analyze", analysis, "also print the positivity analysis");
    ehr->add_flag("--formula", formula, "use the closed form or stored polynomial instead of counting");
    ehr->add_option("--workers", workers, "threads");

    std::string verify_family;
    VerifyOptions vopt;
    auto* ver = app.add_subcommand("verify", "closed forms against the counting oracle");
    ver->add_option("--family", verify_family, "family name")->required();
    ver->add_option("--max-dim", vopt.max_dim, "largest dimension or size parameter")->check(CLI::PositiveNumber);
    ver->add_option("--trials", vopt.trials, "random trials")->check(CLI::NonNegativeNumber);
    ver->add_option("--seed", vopt.seed, "random seed");
    ver->add_option("--workers", vopt.workers, "threads");

    std::string lambda, mu, nu;
    long stretch = 0;
    bool fit = false;
    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients by hive counting");
    lr->add_option("--lambda", lambda, "partition, e.g. 3,2")->required();
    lr->add_option("--mu", mu, "partition")->required();
    lr->add_option("--nu", nu, "partition")->required();
    lr->add_option("--stretch", stretch, "print c for stretches 1..T")->check(CLI::PositiveNumber);
    lr->add_flag("--fit", fit, "fit and validate the stretched polynomial");
    lr->add_option("--workers", workers, "threads");

    std::string suite, report_out;
    auto* rep = app.add_subcommand("report", "CSV report over a catalog suite");
    rep->add_option("--suite", suite, "full or counterexamples")->required();
    rep->add_option("--out", report_out, "CSV path")->required();

    Source export_src;
    std::string export_out;
    auto* exp = app.add_subcommand("export", "write a polytope document");
    export_src.attach(exp);
    exp->add_option("--out", export_out, "JSON path")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (*count)
        {
            std::cout << count_points(count_src.load().polytope, t, {workers}) << '\n';
            return exit_ok;
        }
        if (*ehr)
            return run_ehrhart(ehr_src, hstar, analysis, formula, workers);
        if (*ver)
            return run_verify_cmd(verify_family, vopt);
        if (*lr)
            return run_lr(lambda, mu, nu, stretch, fit, workers);
        if (*rep)
            return run_report(suite, report_out);
        if (*exp)
        {
            write_document(export_src.load().polytope, export_out);
            return exit_ok;
        }
    }
    catch (const UsageError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
