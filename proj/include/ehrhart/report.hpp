#pragma once

#include <ostream>

#include "ehrhart/positivity.hpp"
#include "ehrhart/registry.hpp"

namespace ehrhart {

inline constexpr const char* report_version = "1";

struct ReportRow
{
    std::string source;
    RationalPolynomial ehrhart;
    AnalysisReport analysis;
    HStarVector hstar;
};

/// Polynomial of an instance: the closed form or stored reference when one
/// exists, otherwise interpolated.
RationalPolynomial instance_polynomial(const FamilyInstance& inst);
ReportRow report_row(const FamilyInstance& inst);

/// Family name and parameter tokens of every row of a suite; throws
/// std::invalid_argument on an unknown suite.
std::vector<std::pair<std::string, std::vector<std::string>>> suite_entries(const std::string& suite);

std::string report_header();
std::string report_line(const ReportRow& row);
void write_report(const std::string& suite, std::ostream& out);

}  // namespace ehrhart
