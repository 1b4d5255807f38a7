#pragma once

#include "ehrhart/families.hpp"

namespace ehrhart {

/// A named family instance: the polytope and, when known, its closed-form or
/// stored Ehrhart polynomial.
struct FamilyInstance
{
    std::string source;
    Polytope polytope;
    std::optional<RationalPolynomial> formula;
    std::optional<HStarVector> hstar_formula;
};

/// Parameters are free tokens; list parameters accept "1,2,3" or separate
/// tokens. Point and generator lists use ';' between vectors.
FamilyInstance make_family(const std::string& name, const std::vector<std::string>& params);
std::vector<std::string> family_names();

/// Splits "1,2;3,4" into {{1,2},{3,4}}.
std::vector<std::vector<long>> parse_vectors(std::string_view text);
std::vector<long> parse_longs(const std::vector<std::string>& tokens);

}  // namespace ehrhart
