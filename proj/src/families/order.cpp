#include "ehrhart/families.hpp"

namespace ehrhart {

std::vector<std::vector<bool>> Poset::order() const
{
    std::vector<std::vector<bool>> le(size, std::vector<bool>(size, false));
    for (int i = 0; i < size; ++i)
        le[i][i] = true;
    for (const auto& [a, b] : covers)
    {
        if (a < 0 || b < 0 || a >= size || b >= size || a == b)
            throw FamilyError("poset relation out of range");
        le[a][b] = true;
    }
    for (int k = 0; k < size; ++k)
        for (int i = 0; i < size; ++i)
            if (le[i][k])
                for (int j = 0; j < size; ++j)
                    if (le[k][j])
                        le[i][j] = true;
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            if (le[i][j] && le[j][i])
                throw FamilyError("poset relations contain a cycle");
    return le;
}

Poset chain_poset(int n)
{
    if (n < 1)
        throw FamilyError("chain needs n >= 1");
    Poset p{n, {}};
    for (int i = 0; i + 1 < n; ++i)
        p.covers.emplace_back(i, i + 1);
    return p;
}

Poset poset_p(int k)
{
    if (k < 1)
        throw FamilyError("P_k needs k >= 1");
    Poset p{2 * k, {}};
    for (int j = 0; j + 1 < k; ++j)
        for (int i = 0; i < 2; ++i)
            for (int i2 = 0; i2 < 2; ++i2)
                p.covers.emplace_back(2 * j + i, 2 * (j + 1) + i2);
    return p;
}

Poset poset_q(int k)
{
    if (k < 1)
        throw FamilyError("Q_k needs k >= 1");
    Poset p{k + 1, {}};
    for (int i = 1; i <= k; ++i)
        p.covers.emplace_back(0, i);
    return p;
}

HPolytope order_polytope(const Poset& poset)
{
    auto le = poset.order();
    const int n = poset.size;
    HPolytope p(n);
    for (int i = 0; i < n; ++i)
    {
        VectorXz row = VectorXz::Zero(n);
        row(i) = -1;
        p.add_inequality(row, 0);
        row(i) = 1;
        p.add_inequality(row, 1);
    }
    // Only cover relations are needed, but comparable pairs are harmless and
    // keep the description independent of how the covers were listed.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && le[a][b])
            {
                VectorXz row = VectorXz::Zero(n);
                row(a) = 1;
                row(b) = -1;
                p.add_inequality(row, 0);
            }
    return p;
}

HStarVector order_p_hstar(int k)
{
    if (k < 1)
        throw FamilyError("P_k needs k >= 1");
    std::vector<Integer> h;
    for (int i = 0; i <= k; ++i)
        h.push_back(binomial(k, i));
    return HStarVector(h, 2 * k);
}

RationalPolynomial order_q_ehrhart(int k)
{
    if (k < 1)
        throw FamilyError("Q_k needs k >= 1");
    return power_sum_poly(k);
}

}  // namespace ehrhart
