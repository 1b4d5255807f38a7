#include "ehrhart/families.hpp"

#include <functional>

namespace ehrhart {

namespace {

void validate(const BipartiteGraph& g)
{
    if (g.right < 1 || g.left() < 1)
        throw FamilyError("bipartite graph needs vertices on both sides");
    if (g.left() > 12)
        throw FamilyError("too many left vertices for subset checks");
    for (const auto& s : g.supports)
        for (int r : s)
            if (r < 0 || r >= g.right)
                throw FamilyError("support index out of range");
    std::vector<bool> seen(g.right, false);
    for (int r : g.supports[0])
        seen[r] = true;
    for (bool b : seen)
        if (!b)
            throw FamilyError("the first left vertex must be joined to every right vertex");
}

}  // namespace

std::vector<std::vector<long>> draconian(const BipartiteGraph& g)
{
    validate(g);
    const int c = g.left();
    const long d = g.right - 1;
    // union size for every subset of left vertices
    std::vector<int> union_size(1 << c, 0);
    for (int mask = 1; mask < (1 << c); ++mask)
    {
        std::vector<bool> in(g.right, false);
        for (int j = 0; j < c; ++j)
            if ((mask >> j) & 1)
                for (int r : g.supports[j])
                    in[r] = true;
        union_size[mask] = static_cast<int>(std::count(in.begin(), in.end(), true));
    }

    std::vector<std::vector<long>> out;
    std::vector<long> g_seq;
    std::function<void(int, long)> rec = [&](int pos, long used) {
        if (pos == c)
        {
            if (used == d)
                out.push_back(g_seq);
            return;
        }
        for (long v = 0; used + v <= d; ++v)
        {
            g_seq.push_back(v);
            // subsets whose largest member is pos are now fully assigned
            bool ok = true;
            for (int mask = 1 << pos; mask < (1 << (pos + 1)) && ok; ++mask)
            {
                long s = 0;
                for (int j = 0; j <= pos; ++j)
                    if ((mask >> j) & 1)
                        s += g_seq[j];
                ok = union_size[mask] >= s + 1;
            }
            if (ok)
                rec(pos + 1, used + v);
            g_seq.pop_back();
            if (!ok)
                break;  // larger v only makes the violated subset worse
        }
    };
    rec(0, 0);
    return out;
}

RationalPolynomial typey_ehrhart(const BipartiteGraph& g, const std::vector<long>& y)
{
    validate(g);
    if (static_cast<int>(y.size()) != g.left())
        throw FamilyError("need one dilation factor per left vertex");
    for (long v : y)
        if (v < 0)
            throw FamilyError("dilation factors must be nonnegative");
    RationalPolynomial total;
    for (const auto& seq : draconian(g))
    {
        RationalPolynomial term = multiset_poly(RationalPolynomial::linear(y[0], 1), seq[0]);
        for (std::size_t k = 1; k < seq.size(); ++k)
            term *= multiset_poly(RationalPolynomial::linear(y[k], 0), seq[k]);
        total += term;
    }
    return total;
}

VPolytope typey_vrep(const BipartiteGraph& g, const std::vector<long>& y)
{
    validate(g);
    if (static_cast<int>(y.size()) != g.left())
        throw FamilyError("need one dilation factor per left vertex");
    VPolytope sum(MatrixXq::Zero(g.right, 1));
    for (int j = 0; j < g.left(); ++j)
    {
        if (y[j] == 0)
            continue;
        if (y[j] < 0)
            throw FamilyError("dilation factors must be nonnegative");
        const auto& s = g.supports[j];
        MatrixXq simplex = MatrixXq::Zero(g.right, static_cast<Eigen::Index>(s.size()));
        for (std::size_t i = 0; i < s.size(); ++i)
            simplex(s[i], static_cast<Eigen::Index>(i)) = y[j];
        sum = irredundant(minkowski_sum(sum, VPolytope(simplex)));
    }
    return sum;
}

BipartiteGraph staircase_graph(int d)
{
    if (d < 1)
        throw FamilyError("staircase graph needs d >= 1");
    BipartiteGraph g{d + 1, {}};
    for (int j = 0; j < d; ++j)
    {
        std::vector<int> s;
        for (int r = j; r <= d; ++r)
            s.push_back(r);
        g.supports.push_back(s);
    }
    return g;
}

}  // namespace ehrhart
