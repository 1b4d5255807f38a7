#include "ehrhart/families.hpp"

namespace ehrhart {

Delta1q delta_1q(const std::vector<long>& q)
{
    const int d = static_cast<int>(q.size());
    if (d < 1)
        throw FamilyError("q must be nonempty");
    long total = 0;
    for (long x : q)
    {
        if (x < 1)
            throw FamilyError("q entries must be positive");
        total += x;
    }
    MatrixXq pts = MatrixXq::Zero(d, d + 1);
    for (int i = 0; i < d; ++i)
    {
        pts(i, i) = 1;
        pts(i, d) = -q[i];
    }

    // h*_i counts b in 0..sum(q) with omega(b) = i
    const long denom = total + 1;
    std::vector<Integer> h(d + 1, 0);
    for (long b = 0; b <= total; ++b)
    {
        long omega = b;
        for (long x : q)
            omega -= (x * b) / denom;
        if (omega < 0 || omega > d)
            throw FamilyError("omega out of range");
        h[omega] += 1;
    }

    bool reflexive = true;
    for (long x : q)
        reflexive = reflexive && denom % x == 0;
    return {VPolytope(pts), HStarVector(h, d), reflexive};
}

std::vector<long> payne(long r, long s, long k)
{
    if (r < 0 || s < 3 || k < r + 2)
        throw FamilyError("Payne parameters need r >= 0, s >= 3, k >= r + 2");
    std::vector<long> q(s * k - 1, 1);
    q.insert(q.end(), r + 1, s);
    return q;
}

HStarVector payne_hstar(long r, long s, long k)
{
    payne(r, s, k);
    const long d = r + s * k;
    std::vector<Integer> h(d + 1, 0);
    for (long a = 0; a < s; ++a)
        for (long b = 0; b <= k + r; ++b)
            h[a * k + b] += 1;
    return HStarVector(h, static_cast<int>(d));
}

BaseR base_r_simplex(long r, int d)
{
    if (r < 1 || d < 1)
        throw FamilyError("base-r simplex needs r >= 1 and d >= 1");
    if (r == 1)
        return {{}, true};
    std::vector<long> q;
    long power = r - 1;
    for (int i = 0; i < d; ++i)
    {
        q.push_back(power);
        if (i + 1 < d && power > std::numeric_limits<long>::max() / r)
            throw FamilyError("base-r entries overflow");
        power *= r;
    }
    return {q, false};
}

}  // namespace ehrhart
