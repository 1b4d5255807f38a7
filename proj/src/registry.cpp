#include "ehrhart/registry.hpp"

#include <charconv>
#include <functional>
#include <map>

namespace ehrhart {

namespace {

long parse_long(std::string_view item)
{
    while (!item.empty() && item.front() == ' ')
        item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ')
        item.remove_suffix(1);
    long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
        throw FamilyError("bad integer '" + std::string(item) + "'");
    return value;
}

std::vector<long> split_longs(std::string_view text)
{
    std::vector<long> out;
    while (true)
    {
        auto comma = text.find(',');
        out.push_back(parse_long(text.substr(0, comma)));
        if (comma == std::string_view::npos)
            return out;
        text.remove_prefix(comma + 1);
    }
}

void expect_count(const std::string& name, const std::vector<std::string>& params, std::size_t n)
{
    if (params.size() != n)
        throw FamilyError(name + " takes " + std::to_string(n) + " parameter" + (n == 1 ? "" : "s"));
}

int small_int(const std::string& token, long lo, long hi, const std::string& what)
{
    const long v = parse_long(token);
    if (v < lo || v > hi)
        throw FamilyError(what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

/// Columns are the given vectors.
MatrixXz columns_of(const std::vector<std::vector<long>>& vectors)
{
    if (vectors.empty())
        throw FamilyError("empty vector list");
    const std::size_t dim = vectors.front().size();
    MatrixXz m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t c = 0; c < vectors.size(); ++c)
    {
        if (vectors[c].size() != dim)
            throw FamilyError("vectors differ in length");
        for (std::size_t i = 0; i < dim; ++i)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = vectors[c][i];
    }
    return m;
}

FlowGraph parse_graph(const std::string& spec)
{
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw FamilyError("graph spec is complete:N, ps:D or q:K");
    const std::string kind = spec.substr(0, colon);
    const int n = small_int(spec.substr(colon + 1), 1, 12, "graph size");
    if (kind == "complete")
        return complete_graph(n);
    if (kind == "ps")
        return pitman_stanley_graph(n);
    if (kind == "q")
        return order_q_graph(n);
    throw FamilyError("unknown graph kind '" + kind + "'");
}

BipartiteGraph parse_bipartite(const std::string& spec)
{
    if (spec.rfind("staircase:", 0) == 0)
        return staircase_graph(small_int(spec.substr(10), 1, 10, "staircase size"));
    BipartiteGraph g;
    for (const auto& support : parse_vectors(spec))
    {
        std::vector<int> s;
        for (long v : support)
        {
            if (v < 0)
                throw FamilyError("right vertices are numbered from 0");
            s.push_back(static_cast<int>(v));
            g.right = std::max(g.right, static_cast<int>(v) + 1);
        }
        g.supports.push_back(s);
    }
    return g;
}

FamilyInstance with_formula(Polytope p, RationalPolynomial f)
{
    return {"", std::move(p), std::move(f), std::nullopt};
}

FamilyInstance with_hstar(Polytope p, const HStarVector& h)
{
    return {"", std::move(p), ehrhart_from_hstar(h), h};
}

FamilyInstance stored(const std::string& name)
{
    for (auto& ex : stored_counterexamples())
        if (ex.name == name)
            return with_formula(ex.polytope, ex.reference);
    throw FamilyError("no stored example " + name);
}

using Builder = std::function<FamilyInstance(const std::string&, const std::vector<std::string>&)>;

const std::map<std::string, Builder>& builders()
{
    static const std::map<std::string, Builder> table = {
        {"cube",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 1);
             auto f = unit_cube(small_int(p[0], 1, 12, "dimension"));
             return with_formula(f.polytope, f.ehrhart);
         }},
        {"simplex",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 1);
             auto f = standard_simplex(small_int(p[0], 1, 12, "dimension"));
             return with_formula(f.polytope, f.ehrhart);
         }},
        {"cross",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 1);
             auto f = cross_polytope(small_int(p[0], 1, 10, "dimension"));
             return FamilyInstance{"", f.polytope, f.ehrhart, f.hstar};
         }},
        {"pitman-stanley",
         [](const std::string&, const auto& p) {
             auto f = pitman_stanley(parse_longs(p));
             return with_formula(f.polytope, f.ehrhart);
         }},
        {"cry",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 1);
             const int k = small_int(p[0], 1, 8, "size");
             std::vector<long> a(k, 0);
             a[0] = 1;
             return with_formula(cry(k), lidskii_ehrhart(complete_graph(k + 1), a));
         }},
        {"tesler",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 1);
             const int k = small_int(p[0], 1, 8, "size");
             return with_formula(tesler(k), lidskii_ehrhart(complete_graph(k + 1), std::vector<long>(k, 1)));
         }},
        {"flow",
         [](const std::string& n, const auto& p) {
             if (p.size() < 2)
                 throw FamilyError(n + " takes a graph spec and a netflow");
             FlowGraph g = parse_graph(p[0]);
             std::vector<long> a = parse_longs({p.begin() + 1, p.end()});
             return with_formula(flow_polytope(g, a), lidskii_ehrhart(g, a));
         }},
        {"reeve",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 1);
             auto f = reeve(parse_long(p[0]));
             return with_formula(f.polytope, f.ehrhart);
         }},
        {"permutohedron",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 1);
             const int d = small_int(p[0], 1, 6, "dimension");
             return with_formula(regular_permutohedron(d), zonotope_coeffs(permutohedron_generators(d)));
         }},
        {"zonotope",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 1);
             MatrixXz g = columns_of(parse_vectors(p[0]));
             return with_formula(zonotope_vrep(g), zonotope_coeffs(g));
         }},
        {"delta1q",
         [](const std::string&, const auto& p) {
             auto f = delta_1q(parse_longs(p));
             return with_hstar(f.polytope, f.hstar);
         }},
        {"payne",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 3);
             const long r = parse_long(p[0]), s = parse_long(p[1]), k = parse_long(p[2]);
             return with_hstar(delta_1q(payne(r, s, k)).polytope, payne_hstar(r, s, k));
         }},
        {"base-r",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 2);
             const int d = small_int(p[1], 1, 12, "dimension");
             BaseR b = base_r_simplex(parse_long(p[0]), d);
             if (b.standard_simplex)
             {
                 auto f = standard_simplex(d);
                 return with_formula(f.polytope, f.ehrhart);
             }
             auto f = delta_1q(b.q);
             return with_hstar(f.polytope, f.hstar);
         }},
        {"order-p",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 1);
             const int k = small_int(p[0], 1, 8, "k");
             return with_hstar(order_polytope(poset_p(k)), order_p_hstar(k));
         }},
        {"order-q",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 1);
             const int k = small_int(p[0], 1, 40, "k");
             return with_formula(order_polytope(poset_q(k)), order_q_ehrhart(k));
         }},
        {"stanley-order-20",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 0);
             return with_formula(order_polytope(poset_q(20)), order_q_ehrhart(20));
         }},
        {"birkhoff",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 1);
             return FamilyInstance{"", birkhoff(small_int(p[0], 1, 6, "n")), std::nullopt, std::nullopt};
         }},
        {"cyclic",
         [](const std::string& n, const auto& p) {
             if (p.size() < 2)
                 throw FamilyError(n + " takes a dimension and parameters u");
             const int d = small_int(p[0], 1, 8, "dimension");
             return FamilyInstance{"", cyclic_polytope(d, parse_longs({p.begin() + 1, p.end()})), std::nullopt,
                                   std::nullopt};
         }},
        {"highpoly",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 0);
             VPolytope s = VPolytope::from_rows({{0, 0, 0}, {4, 0, 0}, {3, 6, 0}, {2, 2, 2}});
             return with_formula(s, higher_assemble(s, 1));
         }},
        {"sign-product",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 2);
             auto f = sign_pattern_product(parse_long(p[0]), small_int(p[1], 4, 12, "dimension"));
             return with_formula(f.polytope, f.ehrhart);
         }},
        {"typey",
         [](const std::string& n, const auto& p) {
             if (p.size() < 2)
                 throw FamilyError(n + " takes a graph spec and one factor per left vertex");
             BipartiteGraph g = parse_bipartite(p[0]);
             std::vector<long> y = parse_longs({p.begin() + 1, p.end()});
             return with_formula(typey_vrep(g, y), typey_ehrhart(g, y));
         }},
        {"smooth-reflexive-9",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 0);
             return stored(n);
         }},
        {"mink-1",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 0);
             return stored(n);
         }},
        {"mink-2",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 0);
             return stored(n);
         }},
        {"mink-2-q",
         [](const std::string& n, const auto& p) {
             expect_count(n, p, 0);
             return stored(n);
         }},
    };
    return table;
}

}  // namespace

std::vector<std::vector<long>> parse_vectors(std::string_view text)
{
    std::vector<std::vector<long>> out;
    while (true)
    {
        auto semi = text.find(';');
        out.push_back(split_longs(text.substr(0, semi)));
        if (semi == std::string_view::npos)
            return out;
        text.remove_prefix(semi + 1);
    }
}

std::vector<long> parse_longs(const std::vector<std::string>& tokens)
{
    std::vector<long> out;
    for (const auto& t : tokens)
        for (long v : split_longs(t))
            out.push_back(v);
    return out;
}

FamilyInstance make_family(const std::string& name, const std::vector<std::string>& params)
{
    auto it = builders().find(name);
    if (it == builders().end())
        throw FamilyError("unknown family '" + name + "'");
    FamilyInstance inst = it->second(name, params);
    inst.source = name;
    for (const auto& p : params)
        inst.source += " " + p;
    return inst;
}

std::vector<std::string> family_names()
{
    std::vector<std::string> out;
    for (const auto& [name, builder] : builders())
        out.push_back(name);
    return out;
}

}  // namespace ehrhart
