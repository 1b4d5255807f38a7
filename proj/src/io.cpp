#include "ehrhart/io.hpp"

#include <fstream>

namespace ehrhart {

using nlohmann::json;

namespace {

json rows_to_json(const MatrixXz& m, const VectorXz& rhs)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
    {
        json a = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            a.push_back(json::parse(m(i, j).str()));
        out.push_back({{"a", a}, {"b", json::parse(rhs(i).str())}});
    }
    return out;
}

Integer integer_field(const json& v, const std::string& what)
{
    if (v.is_number_integer())
        return Integer(v.get<long long>());
    if (v.is_string())
    {
        Rational r = parse_rational(v.get<std::string>());
        if (is_integer(r))
            return numerator(r);
    }
    throw DocumentError(what + " must be an integer");
}

void read_rows(const json& rows, Eigen::Index dim, HPolytope& p, bool equality)
{
    if (!rows.is_array())
        throw DocumentError("constraint list must be an array");
    for (const auto& row : rows)
    {
        if (!row.is_object() || !row.contains("a") || !row.contains("b") || row.size() != 2)
            throw DocumentError("constraints need exactly the keys a and b");
        const auto& a = row["a"];
        if (!a.is_array() || static_cast<Eigen::Index>(a.size()) != dim)
            throw DocumentError("constraint row length differs from ambient_dim");
        VectorXz v(dim);
        for (Eigen::Index j = 0; j < dim; ++j)
            v(j) = integer_field(a[j], "constraint coefficient");
        Integer b = integer_field(row["b"], "right-hand side");
        if (equality)
            p.add_equality(v, b);
        else
            p.add_inequality(v, b);
    }
}

}  // namespace

json to_json(const Polytope& p)
{
    if (const auto* h = std::get_if<HPolytope>(&p))
        return {{"kind", "H"},
                {"ambient_dim", h->ambient_dim},
                {"inequalities", rows_to_json(h->a, h->b)},
                {"equalities", rows_to_json(h->e, h->f)}};
    const auto& v = std::get<VPolytope>(p);
    json points = json::array();
    for (Eigen::Index c = 0; c < v.points.cols(); ++c)
    {
        json pt = json::array();
        for (Eigen::Index i = 0; i < v.ambient_dim; ++i)
            pt.push_back(format_rational(v.points(i, c)));
        points.push_back(pt);
    }
    return {{"kind", "V"}, {"ambient_dim", v.ambient_dim}, {"points", points}};
}

Polytope polytope_from_json(const json& doc)
{
    if (!doc.is_object() || !doc.contains("kind") || !doc.contains("ambient_dim"))
        throw DocumentError("document needs kind and ambient_dim");
    if (!doc["ambient_dim"].is_number_integer() || doc["ambient_dim"].get<long long>() < 0)
        throw DocumentError("ambient_dim must be a nonnegative integer");
    const Eigen::Index dim = doc["ambient_dim"].get<Eigen::Index>();
    const std::string kind = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";
    if (kind == "H")
    {
        for (const auto& [key, value] : doc.items())
            if (key != "kind" && key != "ambient_dim" && key != "inequalities" && key != "equalities")
                throw DocumentError("unexpected key '" + key + "' in an H document");
        if (!doc.contains("inequalities"))
            throw DocumentError("H document needs inequalities");
        HPolytope p(dim);
        read_rows(doc["inequalities"], dim, p, false);
        if (doc.contains("equalities"))
            read_rows(doc["equalities"], dim, p, true);
        return p;
    }
    if (kind == "V")
    {
        for (const auto& [key, value] : doc.items())
            if (key != "kind" && key != "ambient_dim" && key != "points")
                throw DocumentError("unexpected key '" + key + "' in a V document");
        if (!doc.contains("points") || !doc["points"].is_array() || doc["points"].empty())
            throw DocumentError("V document needs a nonempty points array");
        const auto& pts = doc["points"];
        MatrixXq m(dim, static_cast<Eigen::Index>(pts.size()));
        for (std::size_t c = 0; c < pts.size(); ++c)
        {
            if (!pts[c].is_array() || static_cast<Eigen::Index>(pts[c].size()) != dim)
                throw DocumentError("point length differs from ambient_dim");
            for (Eigen::Index i = 0; i < dim; ++i)
            {
                const auto& x = pts[c][i];
                if (x.is_string())
                    m(i, static_cast<Eigen::Index>(c)) = parse_rational(x.get<std::string>());
                else if (x.is_number_integer())
                    m(i, static_cast<Eigen::Index>(c)) = Rational(x.get<long long>());
                else
                    throw DocumentError("point coordinates must be rational strings or integers");
            }
        }
        return VPolytope(m);
    }
    throw DocumentError("kind must be \"H\" or \"V\"");
}

Polytope read_document(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw DocumentError("cannot open " + path.string());
    json doc;
    try
    {
        doc = json::parse(in);
    }
    catch (const json::parse_error& e)
    {
        throw DocumentError(path.string() + ": " + e.what());
    }
    try
    {
        return polytope_from_json(doc);
    }
    catch (const ExactError& e)
    {
        throw DocumentError(path.string() + ": " + e.what());
    }
}

void write_document(const Polytope& p, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw DocumentError("cannot write " + path.string());
    out << to_json(p).dump(2) << '\n';
}

}  // namespace ehrhart
