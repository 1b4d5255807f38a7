#include "ehrhart/report.hpp"

#include <stdexcept>

namespace ehrhart {

namespace {

std::string join(const std::vector<std::string>& items)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? ";" : "") + items[i];
    return out;
}

/// Quotes fields holding separators, doubling inner quotes.
std::string csv_field(const std::string& text)
{
    if (text.find_first_of(",\"\n") == std::string::npos)
        return text;
    std::string out = "\"";
    for (char c : text)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

const char* flag(bool b)
{
    return b ? "true" : "false";
}

std::string flag(const std::optional<bool>& b)
{
    return b ? flag(*b) : "unknown";
}

}  // namespace

RationalPolynomial instance_polynomial(const FamilyInstance& inst)
{
    if (inst.formula)
        return *inst.formula;
    return ehrhart_poly(inst.polytope);
}

ReportRow report_row(const FamilyInstance& inst)
{
    RationalPolynomial p = instance_polynomial(inst);
    HStarVector h = hstar_from_ehrhart(p, p.degree());
    AnalysisReport a = analyze(p, h);
    return {inst.source, p, a, h};
}

std::vector<std::pair<std::string, std::vector<std::string>>> suite_entries(const std::string& suite)
{
    std::vector<std::pair<std::string, std::vector<std::string>>> counter = {
        {"reeve", {"13"}},
        {"stanley-order-20", {}},
        {"smooth-reflexive-9", {}},
        {"mink-1", {}},
        {"mink-2", {}},
    };
    if (suite == "counterexamples")
        return counter;
    if (suite == "full")
    {
        std::vector<std::pair<std::string, std::vector<std::string>>> positive = {
            {"cube", {"3"}},
            {"simplex", {"4"}},
            {"cross", {"3"}},
            {"pitman-stanley", {"1,2,1"}},
            {"cry", {"3"}},
            {"tesler", {"3"}},
            {"flow", {"ps:3", "1,1,2"}},
            {"permutohedron", {"3"}},
            {"zonotope", {"1,0,0;0,1,0;0,0,1;1,1,1"}},
            {"order-p", {"2"}},
            {"birkhoff", {"3"}},
            {"cyclic", {"2", "0,1,2,3"}},
            {"highpoly", {}},
            {"typey", {"staircase:3", "1,2,1"}},
        };
        positive.insert(positive.end(), counter.begin(), counter.end());
        return positive;
    }
    throw std::invalid_argument("unknown suite '" + suite + "' (expected full or counterexamples)");
}

std::string report_header()
{
    return "source,dimension,degree,coefficients,sign_pattern,ehrhart_positive,hstar,reflexive,gorenstein_s,"
           "palindromic,unimodal,nrpr,version";
}

std::string report_line(const ReportRow& row)
{
    std::vector<std::string> coeffs, hstar;
    for (const auto& c : row.ehrhart.coefficients())
        coeffs.push_back(format_rational(c));
    for (const auto& h : row.hstar.entries())
        hstar.push_back(h.str());
    const auto& a = row.analysis;
    std::string out = csv_field(row.source);
    out += "," + std::to_string(a.dim);
    out += "," + std::to_string(row.ehrhart.degree());
    out += "," + join(coeffs);
    out += "," + a.sign_pattern;
    out += std::string(",") + flag(a.ehrhart_positive);
    out += "," + join(hstar);
    out += std::string(",") + flag(a.reflexive);
    out += "," + (a.gorenstein ? std::to_string(a.codegree) : std::string());
    out += std::string(",") + flag(a.hstar_palindromic);
    out += std::string(",") + flag(a.hstar_unimodal);
    out += "," + flag(a.nrpr);
    out += std::string(",") + report_version;
    return out;
}

void write_report(const std::string& suite, std::ostream& out)
{
    auto entries = suite_entries(suite);
    out << report_header() << '\n';
    for (const auto& [name, params] : entries)
        out << report_line(report_row(make_family(name, params))) << '\n';
}

}  // namespace ehrhart
