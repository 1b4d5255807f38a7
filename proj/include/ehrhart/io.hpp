#pragma once

#include <filesystem>

#include <json.hpp>

#include "ehrhart/polytope.hpp"

namespace ehrhart {

class DocumentError : public std::runtime_error
{
    public:
        explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

/// {"kind": "H", "ambient_dim", "inequalities": [{"a", "b"}], "equalities"}
/// or {"kind": "V", "ambient_dim", "points": [["p/q", ...]]}.
nlohmann::json to_json(const Polytope& p);
Polytope polytope_from_json(const nlohmann::json& doc);

Polytope read_document(const std::filesystem::path& path);
void write_document(const Polytope& p, const std::filesystem::path& path);

}  // namespace ehrhart
