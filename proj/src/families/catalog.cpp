#include "ehrhart/families.hpp"

namespace ehrhart {

HPolytope smooth_reflexive_9()
{
    HPolytope p(9);
    for (Eigen::Index i = 0; i < 9; ++i)
    {
        VectorXz row = VectorXz::Zero(9);
        row(i) = 1;
        p.add_inequality(row, 1);
    }
    // The right-hand side was printed with nine entries for twelve rows; a
    // reflexive polytope has all ones.
    p.add_inequality({0, 0, 0, 0, 0, 0, 0, 0, -1}, 1);
    p.add_inequality({-1, -1, -1, -1, 0, 0, 0, 0, 4}, 1);
    p.add_inequality({0, 0, 0, 0, -1, -1, -1, -1, -4}, 1);
    return p;
}

RationalPolynomial smooth_reflexive_9_ehrhart()
{
    return parse_polynomial("12477727/18144 t^9 + 12477727/4032 t^8 + 9074291/1512 t^7 + 630095/96 t^6"
                            " + 19058687/4320 t^5 + 117857/64 t^4 + 3838711/9072 t^3 + 11915/1008 t^2"
                            " - 6673/630 t + 1");
}

VPolytope mink1_p()
{
    return VPolytope::from_rows({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
}

VPolytope mink1_q()
{
    return VPolytope::from_rows({{0, 0, 0, 0}, {1, 19, 19, 20}});
}

RationalPolynomial mink1_ehrhart()
{
    return parse_polynomial("10/3t^4 + 7/6 t^3 - 1/3 t^2 + 17/6 t +1");
}

VPolytope mink2_p()
{
    return VPolytope::from_rows({{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 5, 15, 16},
                                 {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
}

VPolytope mink2_q()
{
    return VPolytope::from_rows({{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {1, 1, 15, 15, 16},
                                 {0, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}});
}

RationalPolynomial mink2_ehrhart()
{
    return parse_polynomial("3007/40 t^5 + 359/24 t^4 - 255/24 t^3 + 193/24 t^2 + 89/20 t + 1");
}

RationalPolynomial mink2_q_ehrhart()
{
    return parse_polynomial("1/8 t^5 + 5/12 t^4 + 17/24 t^3 + 19/12 t^2 + 13/6 t + 1");
}

std::vector<StoredExample> stored_counterexamples()
{
    return {
        {"smooth-reflexive-9", smooth_reflexive_9(), smooth_reflexive_9_ehrhart()},
        {"mink-1", minkowski_sum(mink1_p(), mink1_q()), mink1_ehrhart()},
        {"mink-2", minkowski_sum(mink2_p(), mink2_q()), mink2_ehrhart()},
        {"mink-2-q", mink2_q(), mink2_q_ehrhart()},
    };
}

}  // namespace ehrhart
