#include "ehrhart/families.hpp"

#include <functional>
#include <numeric>

namespace ehrhart {

namespace {

void validate(const FlowGraph& g)
{
    if (g.vertices < 2)
        throw FamilyError("flow graph needs at least two vertices");
    for (const auto& [i, j] : g.edges)
        if (i < 1 || j > g.vertices || i >= j)
            throw FamilyError("flow graph edges must ascend within 1.." + std::to_string(g.vertices));
}

/// Weak compositions of `total` into `parts` parts whose prefix sums
/// dominate those of `floor`.
void dominating_compositions(long total, const std::vector<long>& floor, std::size_t pos, long prefix,
                             long floor_prefix, std::vector<long>& cur, const std::function<void()>& visit)
{
    const std::size_t parts = floor.size();
    if (pos + 1 == parts)
    {
        long last = total - prefix;
        if (last < 0 || prefix + last < floor_prefix + floor[pos])
            return;
        cur.push_back(last);
        visit();
        cur.pop_back();
        return;
    }
    for (long v = 0; prefix + v <= total; ++v)
    {
        if (prefix + v < floor_prefix + floor[pos])
            continue;
        cur.push_back(v);
        dominating_compositions(total, floor, pos + 1, prefix + v, floor_prefix + floor[pos], cur, visit);
        cur.pop_back();
    }
}

void check_hypotheses(const FlowGraph& g, const std::vector<long>& a)
{
    validate(g);
    const int n = g.vertices - 1;
    if (static_cast<int>(a.size()) != n)
        throw FamilyError("netflow needs one entry per non-sink vertex");
    for (long x : a)
        if (x < 0)
            throw FamilyError("netflow entries must be nonnegative");
    if (!g.connected())
        throw FamilyError("flow graph must be connected");
    for (int v = 1; v <= n; ++v)
        if (g.outdegree(v) == 0)
            throw FamilyError("vertex " + std::to_string(v) + " has no outgoing edge");
}

template <typename Factor>
RationalPolynomial lidskii_sum(const FlowGraph& g, const std::vector<long>& a, Factor factor)
{
    check_hypotheses(g, a);
    const int n = g.vertices - 1;
    const long m = static_cast<long>(g.edges.size());
    std::vector<long> out(n);
    for (int k = 0; k < n; ++k)
        out[k] = g.outdegree(k + 1) - 1;

    RationalPolynomial total;
    std::vector<long> j;
    dominating_compositions(m - n, out, 0, 0, 0, j, [&] {
        std::vector<long> b(g.vertices, 0);
        for (int k = 0; k < n; ++k)
            b[k] = j[k] - out[k];
        Integer kp = kostant(g, b);
        if (kp == 0)
            return;
        RationalPolynomial term = RationalPolynomial::constant(Rational(kp));
        for (int k = 0; k < n; ++k)
            term *= factor(k, j[k]);
        total += term;
    });
    return total;
}

}  // namespace

int FlowGraph::outdegree(int v) const
{
    return static_cast<int>(std::count_if(edges.begin(), edges.end(), [v](const auto& e) { return e.first == v; }));
}

int FlowGraph::indegree(int v) const
{
    return static_cast<int>(std::count_if(edges.begin(), edges.end(), [v](const auto& e) { return e.second == v; }));
}

bool FlowGraph::connected() const
{
    std::vector<int> parent(vertices + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& [i, j] : edges)
        parent[find(i)] = find(j);
    for (int v = 2; v <= vertices; ++v)
        if (find(v) != find(1))
            return false;
    return true;
}

FlowGraph complete_graph(int vertices)
{
    FlowGraph g{vertices, {}};
    for (int i = 1; i <= vertices; ++i)
        for (int j = i + 1; j <= vertices; ++j)
            g.edges.emplace_back(i, j);
    return g;
}

FlowGraph pitman_stanley_graph(int d)
{
    if (d < 1)
        throw FamilyError("Pitman-Stanley graph needs d >= 1");
    FlowGraph g{d + 1, {}};
    for (int i = 1; i <= d; ++i)
    {
        g.edges.emplace_back(i, i + 1);
        g.edges.emplace_back(i, d + 1);
    }
    return g;
}

FlowGraph order_q_graph(int k)
{
    if (k < 1)
        throw FamilyError("order graph needs k >= 1");
    FlowGraph g{k + 1, {}};
    g.edges.emplace_back(1, k + 1);
    for (int i = 1; i <= k; ++i)
    {
        g.edges.emplace_back(i, i + 1);
        g.edges.emplace_back(i, i + 1);
    }
    return g;
}

Integer kostant(const FlowGraph& g, const std::vector<long>& b)
{
    validate(g);
    if (static_cast<int>(b.size()) != g.vertices)
        throw FamilyError("netflow length differs from the vertex count");
    if (std::accumulate(b.begin(), b.end(), 0L) != 0)
        return 0;
    std::vector<std::vector<int>> heads(g.vertices + 1);
    for (const auto& [i, j] : g.edges)
        heads[i].push_back(j);

    // Vertices are settled in increasing order: once all inflow into v is
    // known, its outflow total is forced and only its split is free.
    std::vector<long> inflow(g.vertices + 1, 0);
    std::function<Integer(int)> settle;
    std::function<Integer(int, std::size_t, long)> split = [&](int v, std::size_t e, long remaining) -> Integer {
        const auto& out = heads[v];
        if (e + 1 == out.size())
        {
            inflow[out[e]] += remaining;
            Integer r = settle(v + 1);
            inflow[out[e]] -= remaining;
            return r;
        }
        Integer total = 0;
        for (long f = 0; f <= remaining; ++f)
        {
            inflow[out[e]] += f;
            total += split(v, e + 1, remaining - f);
            inflow[out[e]] -= f;
        }
        return total;
    };
    settle = [&](int v) -> Integer {
        const long outflow = b[v - 1] + inflow[v];
        if (v == g.vertices)
            return outflow == 0 ? 1 : 0;
        if (outflow < 0)
            return 0;
        if (heads[v].empty())
            return outflow == 0 ? settle(v + 1) : Integer(0);
        return split(v, 0, outflow);
    };
    return settle(1);
}

HPolytope flow_polytope(const FlowGraph& g, const std::vector<long>& a)
{
    validate(g);
    const int n = g.vertices - 1;
    if (static_cast<int>(a.size()) != n)
        throw FamilyError("netflow needs one entry per non-sink vertex");
    const Eigen::Index m = static_cast<Eigen::Index>(g.edges.size());
    HPolytope p(m);
    for (int v = 1; v <= n; ++v)
    {
        VectorXz row = VectorXz::Zero(m);
        for (Eigen::Index e = 0; e < m; ++e)
        {
            if (g.edges[e].first == v)
                row(e) += 1;
            if (g.edges[e].second == v)
                row(e) -= 1;
        }
        p.add_equality(row, a[v - 1]);
    }
    for (Eigen::Index e = 0; e < m; ++e)
    {
        VectorXz row = VectorXz::Zero(m);
        row(e) = -1;
        p.add_inequality(row, 0);
    }
    return p;
}

RationalPolynomial lidskii_ehrhart(const FlowGraph& g, const std::vector<long>& a)
{
    return lidskii_sum(g, a, [&](int k, long j) {
        return binom_of(RationalPolynomial::linear(a[k], g.outdegree(k + 1) - 1), j);
    });
}

RationalPolynomial lidskii_ehrhart_multiset(const FlowGraph& g, const std::vector<long>& a)
{
    return lidskii_sum(g, a, [&](int k, long j) {
        return multiset_poly(RationalPolynomial::linear(a[k], -(g.indegree(k + 1) - 1)), j);
    });
}

HPolytope cry(int n)
{
    if (n < 2)
        throw FamilyError("CRY polytope needs n >= 2");
    std::vector<long> a(n, 0);
    a[0] = 1;
    return flow_polytope(complete_graph(n + 1), a);
}

HPolytope tesler(int n)
{
    if (n < 2)
        throw FamilyError("Tesler polytope needs n >= 2");
    return flow_polytope(complete_graph(n + 1), std::vector<long>(n, 1));
}

}  // namespace ehrhart
