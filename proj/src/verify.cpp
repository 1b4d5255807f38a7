#include "ehrhart/verify.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <thread>

namespace ehrhart {

namespace {

using Outcome = std::optional<std::string>;

struct Check
{
    std::string params;
    std::function<Outcome()> run;
};

std::string list(const std::vector<long>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::string columns_text(const MatrixXz& m)
{
    std::string out;
    for (Eigen::Index c = 0; c < m.cols(); ++c)
    {
        out += c ? ";" : "";
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            out += (r ? "," : "") + m(r, c).str();
    }
    return out;
}

Outcome compare(const RationalPolynomial& formula, const RationalPolynomial& oracle)
{
    if (formula == oracle)
        return std::nullopt;
    return "formula " + format_coefficients(formula) + " vs oracle " + format_coefficients(oracle);
}

Outcome compare_hstar(const HStarVector& formula, const HStarVector& oracle)
{
    if (formula == oracle)
        return std::nullopt;
    std::vector<Rational> a(formula.entries().begin(), formula.entries().end());
    std::vector<Rational> b(oracle.entries().begin(), oracle.entries().end());
    return "h* " + format_coefficients(RationalPolynomial(a)) + " vs oracle " +
           format_coefficients(RationalPolynomial(b));
}

/// Every vector of length d with entries in [lo, hi].
void for_each_vector(int d, long lo, long hi, const std::function<void(const std::vector<long>&)>& f)
{
    std::vector<long> v(d, lo);
    while (true)
    {
        f(v);
        int i = 0;
        while (i < d && v[i] == hi)
            v[i++] = lo;
        if (i == d)
            return;
        ++v[i];
    }
}

using Suite = std::function<std::vector<Check>(const VerifyOptions&, std::mt19937_64&)>;

std::vector<Check> cube_suite(const VerifyOptions& o, std::mt19937_64&)
{
    std::vector<Check> out;
    for (int d = 1; d <= o.max_dim; ++d)
        out.push_back({"d=" + std::to_string(d), [d] {
                           auto f = unit_cube(d);
                           return compare(f.ehrhart, ehrhart_poly(f.polytope));
                       }});
    return out;
}

std::vector<Check> simplex_suite(const VerifyOptions& o, std::mt19937_64&)
{
    std::vector<Check> out;
    for (int d = 1; d <= o.max_dim; ++d)
        out.push_back({"d=" + std::to_string(d), [d] {
                           auto f = standard_simplex(d);
                           return compare(f.ehrhart, ehrhart_poly(f.polytope));
                       }});
    return out;
}

std::vector<Check> cross_suite(const VerifyOptions& o, std::mt19937_64&)
{
    std::vector<Check> out;
    for (int d = 1; d <= o.max_dim; ++d)
        out.push_back({"d=" + std::to_string(d), [d]() -> Outcome {
                           auto f = cross_polytope(d);
                           RationalPolynomial oracle = ehrhart_poly(f.polytope);
                           if (auto bad = compare(f.ehrhart, oracle))
                               return bad;
                           return compare_hstar(f.hstar, hstar_from_ehrhart(oracle, d));
                       }});
    return out;
}

std::vector<Check> pitman_stanley_suite(const VerifyOptions& o, std::mt19937_64&)
{
    std::vector<Check> out;
    for (int d = 1; d <= o.max_dim; ++d)
        for_each_vector(d, 0, 2, [&](const std::vector<long>& a) {
            out.push_back({"a=" + list(a), [a] {
                               auto f = pitman_stanley(a);
                               return compare(f.ehrhart, ehrhart_poly(f.polytope));
                           }});
        });
    return out;
}

Check flow_check(const std::string& name, FlowGraph g, std::vector<long> a)
{
    return {name + " a=" + list(a), [g, a]() -> Outcome {
                RationalPolynomial oracle = ehrhart_poly(flow_polytope(g, a));
                if (auto bad = compare(lidskii_ehrhart(g, a), oracle))
                    return "binomial form: " + *bad;
                if (auto bad = compare(lidskii_ehrhart_multiset(g, a), oracle))
                    return "multiset form: " + *bad;
                return std::nullopt;
            }};
}

std::vector<Check> flow_suite(const VerifyOptions& o, std::mt19937_64&)
{
    std::vector<Check> out;
    for (int d = 1; d <= o.max_dim; ++d)
        for_each_vector(d, 0, 2, [&](const std::vector<long>& a) {
            if (a[0] > 0)
                out.push_back(flow_check("ps:" + std::to_string(d), pitman_stanley_graph(d), a));
        });
    const int n = std::max(2, std::min(o.max_dim, 3));
    for_each_vector(n, 0, 3, [&](const std::vector<long>& a) {
        long sum = 0;
        for (long x : a)
            sum += x;
        if (a[0] > 0 && sum <= 3)
            out.push_back(flow_check("complete:" + std::to_string(n + 1), complete_graph(n + 1), a));
    });
    return out;
}

std::vector<Check> cry_suite(const VerifyOptions& o, std::mt19937_64&)
{
    std::vector<Check> out;
    for (int n = 2; n <= std::max(2, o.max_dim); ++n)
        out.push_back({"n=" + std::to_string(n), [n] {
                           std::vector<long> a(n, 0);
                           a[0] = 1;
                           return compare(lidskii_ehrhart(complete_graph(n + 1), a), ehrhart_poly(cry(n)));
                       }});
    return out;
}

std::vector<Check> tesler_suite(const VerifyOptions& o, std::mt19937_64&)
{
    std::vector<Check> out;
    for (int n = 2; n <= std::clamp(o.max_dim, 2, 3); ++n)
        out.push_back({"n=" + std::to_string(n), [n] {
                           return compare(lidskii_ehrhart(complete_graph(n + 1), std::vector<long>(n, 1)),
                                          ehrhart_poly(tesler(n)));
                       }});
    return out;
}

std::vector<Check> reeve_suite(const VerifyOptions& o, std::mt19937_64& rng)
{
    std::vector<Check> out;
    std::uniform_int_distribution<long> m_dist(1, 40);
    for (int k = 0; k < o.trials; ++k)
    {
        const long m = m_dist(rng);
        out.push_back({"m=" + std::to_string(m), [m]() -> Outcome {
                           auto f = reeve(m);
                           if (auto bad = compare(f.ehrhart, ehrhart_poly(f.polytope)))
                               return bad;
                           return compare(f.ehrhart, ehrhart_poly(reeve_h(m)));
                       }});
    }
    return out;
}

std::vector<Check> permutohedron_suite(const VerifyOptions& o, std::mt19937_64&)
{
    std::vector<Check> out;
    for (int d = 1; d <= std::min(o.max_dim, 3); ++d)
        out.push_back({"d=" + std::to_string(d), [d]() -> Outcome {
                           RationalPolynomial formula = zonotope_coeffs(permutohedron_generators(d));
                           if (auto bad = compare(formula, ehrhart_poly(regular_permutohedron(d))))
                               return bad;
                           for (int k = 0; k <= d; ++k)
                               if (formula[k] != Rational(forest_count(d + 1, d + 1 - k)))
                                   return "forest count differs at t^" + std::to_string(k);
                           return std::nullopt;
                       }});
    return out;
}

MatrixXz random_generators(std::mt19937_64& rng, int dim, int max_count, long bound)
{
    std::uniform_int_distribution<int> count(1, max_count);
    std::uniform_int_distribution<long> entry(-bound, bound);
    const int m = count(rng);
    MatrixXz g(dim, m);
    for (int c = 0; c < m; ++c)
    {
        do
            for (int r = 0; r < dim; ++r)
                g(r, c) = entry(rng);
        while (g.col(c).isZero());
    }
    return g;
}

std::vector<Check> zonotope_suite(const VerifyOptions& o, std::mt19937_64& rng)
{
    std::vector<Check> out;
    for (int k = 0; k < o.trials; ++k)
    {
        MatrixXz g = random_generators(rng, 3, 5, 1);
        out.push_back({"generators=" + columns_text(g),
                       [g] { return compare(zonotope_coeffs(g), ehrhart_poly(zonotope_vrep(g))); }});
    }
    return out;
}

std::vector<Check> delta1q_suite(const VerifyOptions& o, std::mt19937_64& rng)
{
    std::vector<Check> out;
    std::uniform_int_distribution<int> dim(1, std::max(1, o.max_dim));
    std::uniform_int_distribution<long> entry(1, 5);
    for (int k = 0; k < o.trials; ++k)
    {
        std::vector<long> q(dim(rng));
        for (auto& x : q)
            x = entry(rng);
        out.push_back({"q=" + list(q), [q]() -> Outcome {
                           auto f = delta_1q(q);
                           const int d = static_cast<int>(q.size());
                           HStarVector oracle = hstar_from_ehrhart(ehrhart_poly(f.polytope), d);
                           if (auto bad = compare_hstar(f.hstar, oracle))
                               return bad;
                           const bool reflexive = oracle.degree() == d && oracle[0] == oracle[d] &&
                                                  std::equal(oracle.entries().begin(), oracle.entries().end(),
                                                             oracle.entries().rbegin());
                           if (reflexive != f.reflexive)
                               return std::string("reflexivity flag disagrees with h*");
                           return std::nullopt;
                       }});
    }
    return out;
}

std::vector<Check> payne_suite(const VerifyOptions&, std::mt19937_64&)
{
    return {{"r=0 s=3 k=2", [] {
                 return compare_hstar(payne_hstar(0, 3, 2),
                                      hstar_from_ehrhart(ehrhart_poly(delta_1q(payne(0, 3, 2)).polytope),
                                                         static_cast<int>(payne(0, 3, 2).size())));
             }}};
}

std::vector<Check> base_r_suite(const VerifyOptions& o, std::mt19937_64&)
{
    std::vector<Check> out;
    for (long r = 2; r <= 3; ++r)
        for (int d = 1; d <= o.max_dim; ++d)
            out.push_back({"r=" + std::to_string(r) + " d=" + std::to_string(d), [r, d] {
                               auto f = delta_1q(base_r_simplex(r, d).q);
                               return compare_hstar(f.hstar, hstar_from_ehrhart(ehrhart_poly(f.polytope), d));
                           }});
    return out;
}

std::vector<Check> order_p_suite(const VerifyOptions& o, std::mt19937_64&)
{
    std::vector<Check> out;
    for (int k = 1; k <= o.max_dim; ++k)
        out.push_back({"k=" + std::to_string(k), [k] {
                           return compare_hstar(order_p_hstar(k),
                                                hstar_from_ehrhart(ehrhart_poly(order_polytope(poset_p(k))), 2 * k));
                       }});
    return out;
}

std::vector<Check> order_q_suite(const VerifyOptions& o, std::mt19937_64&)
{
    std::vector<Check> out;
    for (int k = 1; k <= o.max_dim + 1; ++k)
        out.push_back({"k=" + std::to_string(k), [k]() -> Outcome {
                           RationalPolynomial oracle = ehrhart_poly(order_polytope(poset_q(k)));
                           if (auto bad = compare(order_q_ehrhart(k), oracle))
                               return bad;
                           std::vector<long> a(k, 0);
                           a[0] = 1;
                           return compare(order_q_ehrhart(k), ehrhart_poly(flow_polytope(order_q_graph(k), a)));
                       }});
    return out;
}

std::vector<Check> birkhoff_suite(const VerifyOptions& o, std::mt19937_64&)
{
    std::vector<Check> out;
    for (int n = 1; n <= std::min(o.max_dim, 4); ++n)
        out.push_back({"n=" + std::to_string(n), [n]() -> Outcome {
                           // lattice points of B_n are the permutation matrices
                           const Integer c = count_points(birkhoff(n), 1);
                           if (c != factorial(n))
                               return "count " + c.str() + " vs n! " + factorial(n).str();
                           return std::nullopt;
                       }});
    return out;
}

BipartiteGraph random_bipartite(std::mt19937_64& rng, int left, int right)
{
    BipartiteGraph g;
    g.right = right;
    std::vector<int> all(right);
    for (int r = 0; r < right; ++r)
        all[r] = r;
    g.supports.push_back(all);
    std::uniform_int_distribution<int> mask(1, (1 << right) - 1);
    for (int j = 1; j < left; ++j)
    {
        const int m = mask(rng);
        std::vector<int> s;
        for (int r = 0; r < right; ++r)
            if (m >> r & 1)
                s.push_back(r);
        g.supports.push_back(s);
    }
    return g;
}

std::vector<Check> typey_suite(const VerifyOptions& o, std::mt19937_64& rng)
{
    std::vector<Check> out;
    std::uniform_int_distribution<int> left(1, 4), dim(1, std::max(1, o.max_dim));
    std::uniform_int_distribution<long> factor(0, 2);
    for (int k = 0; k < o.trials; ++k)
    {
        BipartiteGraph g = random_bipartite(rng, left(rng), dim(rng) + 1);
        std::vector<long> y(g.left());
        for (auto& x : y)
            x = factor(rng);
        y[0] = std::max(y[0], 1L);
        std::string text;
        for (std::size_t j = 0; j < g.supports.size(); ++j)
        {
            text += j ? ";" : "";
            for (std::size_t i = 0; i < g.supports[j].size(); ++i)
                text += (i ? "," : "") + std::to_string(g.supports[j][i]);
        }
        out.push_back({"graph=" + text + " y=" + list(y),
                       [g, y] { return compare(typey_ehrhart(g, y), ehrhart_poly(typey_vrep(g, y))); }});
    }
    return out;
}

std::vector<Check> gen_zonotope_suite(const VerifyOptions& o, std::mt19937_64& rng)
{
    std::vector<Check> out;
    std::uniform_int_distribution<int> dim(1, std::clamp(o.max_dim, 1, 3)), npoints(1, 3);
    std::uniform_int_distribution<long> coord(0, 2);
    for (int k = 0; k < o.trials; ++k)
    {
        const int d = dim(rng);
        MatrixXz pts(d, npoints(rng));
        for (Eigen::Index i = 0; i < pts.size(); ++i)
            pts.data()[i] = coord(rng);
        MatrixXz g = random_generators(rng, d, 3, 1);
        out.push_back({"points=" + columns_text(pts) + " generators=" + columns_text(g), [pts, g]() -> Outcome {
                           VPolytope p(pts.cast<Rational>());
                           RationalPolynomial formula = gen_zonotope_ehrhart(p, g);
                           for (long t = 0; t <= 3; ++t)
                           {
                               MatrixXz scaled = g * Integer(t);
                               const Integer direct = count_points(minkowski_sum(p, zonotope_vrep(scaled)), 1);
                               if (formula(t) != Rational(direct))
                                   return "t=" + std::to_string(t) + ": formula " + format_rational(formula(t)) +
                                          " vs count " + direct.str();
                           }
                           return std::nullopt;
                       }});
    }
    return out;
}

std::vector<Check> higher_suite(const VerifyOptions&, std::mt19937_64&)
{
    return {{"highpoly", []() -> Outcome {
                 VPolytope s = VPolytope::from_rows({{0, 0, 0}, {4, 0, 0}, {3, 6, 0}, {2, 2, 2}});
                 if (!is_k_integral_simplex(s, 1))
                     return std::string("not 1-integral");
                 return compare(higher_assemble(s, 1), ehrhart_poly(s));
             }},
            {"cyclic 2 0,1,2,3", []() -> Outcome {
                 VPolytope c = cyclic_polytope(2, {0, 1, 2, 3});
                 return compare(higher_assemble(c, 2), ehrhart_poly(c));
             }}};
}

std::vector<Check> sign_product_suite(const VerifyOptions&, std::mt19937_64&)
{
    std::vector<Check> out;
    for (long m : {13L, 36L, 37L})
        out.push_back({"m=" + std::to_string(m) + " d=5", [m] {
                           auto f = sign_pattern_product(m, 5);
                           return compare(f.ehrhart, ehrhart_poly(f.polytope));
                       }});
    return out;
}

const std::map<std::string, Suite>& suites()
{
    static const std::map<std::string, Suite> table = {
        {"base-r", base_r_suite},
        {"birkhoff", birkhoff_suite},
        {"cross", cross_suite},
        {"cry", cry_suite},
        {"cube", cube_suite},
        {"delta1q", delta1q_suite},
        {"flow", flow_suite},
        {"gen-zonotope", gen_zonotope_suite},
        {"higher", higher_suite},
        {"order-p", order_p_suite},
        {"order-q", order_q_suite},
        {"payne", payne_suite},
        {"permutohedron", permutohedron_suite},
        {"pitman-stanley", pitman_stanley_suite},
        {"reeve", reeve_suite},
        {"sign-product", sign_product_suite},
        {"simplex", simplex_suite},
        {"tesler", tesler_suite},
        {"typey", typey_suite},
        {"zonotope", zonotope_suite},
    };
    return table;
}

}  // namespace

std::vector<CheckResult> run_verify(const std::string& family, const VerifyOptions& options)
{
    auto it = suites().find(family);
    if (it == suites().end())
        throw FamilyError("no verification suite for '" + family + "'");
    std::mt19937_64 rng(options.seed);
    std::vector<Check> checks = it->second(options, rng);
    std::vector<CheckResult> results(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < checks.size(); i = next++)
        {
            results[i].params = checks[i].params;
            try
            {
                Outcome bad = checks[i].run();
                results[i].ok = !bad;
                results[i].detail = bad.value_or("");
            }
            catch (const std::exception& e)
            {
                results[i].ok = false;
                results[i].detail = std::string("error: ") + e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < std::max(1u, options.workers); ++w)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return results;
}

std::vector<std::string> verify_families()
{
    std::vector<std::string> out;
    for (const auto& [name, suite] : suites())
        out.push_back(name);
    return out;
}

}  // namespace ehrhart
