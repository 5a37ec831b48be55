#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hyperpde/algebra.hpp"
#include "hyperpde/hyperfun.hpp"
#include "hyperpde/multipoly.hpp"
#include "hyperpde/pde.hpp"
#include "hyperpde/search.hpp"

namespace hyperpde::json_io {

using json = nlohmann::json;

// Readers throw Error(ParseError) with a JSON-pointer path ("/gamma/1/0/2: ...").
// Algebra axioms are checked after the schema, so an axiom failure surfaces
// with its own error code.

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const std::string& path = "");

json to_json(const Algebra& a);
Algebra algebra_from_json(const json& j, const std::string& path = "");

json coords_to_json(const Element& e);
Element element_from_json(const Algebra& a, const json& j, const std::string& path = "");

json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j, const std::string& path = "");

json to_json(const Pde& p);
Pde pde_from_json(const json& j, const std::string& path = "");

json to_json(const SymbolResult& s);
json to_json(const AlgebraPolyFunction& f);
json to_json(const SolutionCertificate& c);
json to_json(const CrReport& r);

json to_json(const Provenance& p);
Provenance provenance_from_json(const json& j, const std::string& path = "");
json to_json(const SearchHit& h);

/// Reads and parses a JSON file; ParseError on I/O or syntax problems.
json load_file(const std::filesystem::path& path);

}  // namespace hyperpde::json_io
