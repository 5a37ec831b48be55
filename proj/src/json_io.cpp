#include "hyperpde/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hyperpde::json_io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw Error(ErrorCode::ParseError, (path.empty() ? "/" : path) + ": " + why);
}

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key '") + key + "'");
  return *it;
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::size_t size_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

MultiIndex index_from_json(const json& j, const std::string& path) {
  MultiIndex idx;
  for (std::size_t k = 0; k < array_at(j, path).size(); ++k)
    idx.push_back(static_cast<unsigned>(size_from_json(j[k], path + "/" + std::to_string(k))));
  return idx;
}

json basis_to_json(const std::vector<Element>& basis) {
  json out = json::array();
  for (const auto& e : basis) out.push_back(coords_to_json(e));
  return out;
}

}  // namespace

json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a scalar string such as \"1/2\" or \"1/2+3/4*i\"");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.detail());
  }
}

json to_json(const Algebra& a) {
  json gamma = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) {
      json col = json::array();
      for (std::size_t k = 0; k < a.dim(); ++k) col.push_back(to_json(a.gamma(i, j, k)));
      row.push_back(std::move(col));
    }
    gamma.push_back(std::move(row));
  }
  return json{{"label", a.label()}, {"field", std::string(to_string(a.field()))}, {"dim", a.dim()}, {"gamma", gamma}};
}

Algebra algebra_from_json(const json& j, const std::string& path) {
  std::string label;
  if (j.is_object() && j.contains("label")) {
    if (!j["label"].is_string()) fail(path + "/label", "expected a string");
    label = j["label"].get<std::string>();
  }
  const json& field_j = member(j, "field", path);
  if (!field_j.is_string()) fail(path + "/field", "expected \"Q\" or \"Qi\"");
  Field field;
  try {
    field = parse_field(field_j.get<std::string>());
  } catch (const Error& e) {
    fail(path + "/field", e.detail());
  }
  const std::size_t dim = size_from_json(member(j, "dim", path), path + "/dim");
  const json& g = array_at(member(j, "gamma", path), path + "/gamma");
  if (g.size() != dim) fail(path + "/gamma", "has " + std::to_string(g.size()) + " slices, dim is " + std::to_string(dim));
  StructureTensor gamma(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::string pi = path + "/gamma/" + std::to_string(i);
    if (array_at(g[i], pi).size() != dim) fail(pi, "expected " + std::to_string(dim) + " rows");
    gamma[i].resize(dim);
    for (std::size_t jj = 0; jj < dim; ++jj) {
      std::string pj = pi + "/" + std::to_string(jj);
      if (array_at(g[i][jj], pj).size() != dim) fail(pj, "expected " + std::to_string(dim) + " entries");
      for (std::size_t k = 0; k < dim; ++k)
        gamma[i][jj].push_back(scalar_from_json(g[i][jj][k], pj + "/" + std::to_string(k)));
    }
  }
  return validate_algebra(gamma, field, std::move(label));
}

json coords_to_json(const Element& e) {
  json out = json::array();
  for (const auto& c : e.coords()) out.push_back(to_json(c));
  return out;
}

Element element_from_json(const Algebra& a, const json& j, const std::string& path) {
  if (array_at(j, path).size() != a.dim())
    fail(path, "expected " + std::to_string(a.dim()) + " coordinates, got " + std::to_string(j.size()));
  std::vector<Scalar> c;
  for (std::size_t k = 0; k < j.size(); ++k) c.push_back(scalar_from_json(j[k], path + "/" + std::to_string(k)));
  return Element(a, std::move(c));
}

json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json{{"exp", e}, {"coeff", to_json(c)}});
  return json{{"nvars", p.nvars()}, {"terms", terms}};
}

MultiPoly poly_from_json(const json& j, const std::string& path) {
  const std::size_t nvars = size_from_json(member(j, "nvars", path), path + "/nvars");
  const json& terms = array_at(member(j, "terms", path), path + "/terms");
  std::vector<std::pair<MultiIndex, Scalar>> parsed;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    std::string pt = path + "/terms/" + std::to_string(t);
    MultiIndex e = index_from_json(member(terms[t], "exp", pt), pt + "/exp");
    if (e.size() != nvars) fail(pt + "/exp", "expected " + std::to_string(nvars) + " exponents");
    parsed.emplace_back(std::move(e), scalar_from_json(member(terms[t], "coeff", pt), pt + "/coeff"));
  }
  return MultiPoly::from_terms(nvars, parsed);
}

json to_json(const Pde& p) {
  json terms = json::array();
  for (const auto& [idx, c] : p.terms()) terms.push_back(json{{"index", idx}, {"coeff", to_json(c)}});
  return json{{"nvars", p.nvars()}, {"order", p.order()}, {"terms", terms}};
}

Pde pde_from_json(const json& j, const std::string& path) {
  const std::size_t nvars = size_from_json(member(j, "nvars", path), path + "/nvars");
  const std::size_t order = size_from_json(member(j, "order", path), path + "/order");
  const json& terms = array_at(member(j, "terms", path), path + "/terms");
  std::vector<std::pair<MultiIndex, Scalar>> parsed;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    std::string pt = path + "/terms/" + std::to_string(t);
    MultiIndex idx = index_from_json(member(terms[t], "index", pt), pt + "/index");
    parsed.emplace_back(std::move(idx), scalar_from_json(member(terms[t], "coeff", pt), pt + "/coeff"));
  }
  return Pde::make(nvars, static_cast<unsigned>(order), parsed);
}

json to_json(const SymbolResult& s) {
  return json{{"value", coords_to_json(s.value)}, {"is_zero", s.is_zero}};
}

json to_json(const AlgebraPolyFunction& f) {
  json comps = json::array();
  for (const auto& u : f.components()) comps.push_back(to_json(u));
  json coeffs = nullptr;
  if (f.coeffs()) coeffs = basis_to_json(*f.coeffs());
  return json{{"algebra", f.algebra().label()},
              {"description", f.description()},
              {"basis", basis_to_json(f.basis().elements())},
              {"coeffs", coeffs},
              {"components", comps}};
}

json to_json(const SolutionCertificate& c) {
  json residuals = json::array();
  for (const auto& r : c.residuals) residuals.push_back(to_json(r));
  json table = json::array();
  for (const auto& row : c.spot_checks) {
    json point = json::array();
    for (const auto& x : row.point) point.push_back(to_json(x));
    table.push_back(json{{"point", point}, {"point_f", row.point_f}, {"max_abs_residual", row.max_abs_residual}});
  }
  return json{{"pde", to_json(c.pde)},       {"algebra", c.algebra_label}, {"basis", basis_to_json(c.basis)},
              {"function", c.function},      {"residuals", residuals},      {"verdict", c.verdict},
              {"spot_checks", table}};
}

json to_json(const CrReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back(json{{"direction", f.direction}, {"coordinate", f.coordinate}, {"residual", to_json(f.residual)}});
  return json{{"holds", r.holds}, {"failures", failures}};
}

json to_json(const Provenance& p) {
  json moduli = json::array();
  for (const auto& m : p.moduli) {
    json c = json::array();
    for (const auto& s : m.coeffs()) c.push_back(to_json(s));
    moduli.push_back(std::move(c));
  }
  json coords = json::array();
  for (const auto& b : p.basis_coords) {
    json c = json::array();
    for (const auto& s : b) c.push_back(to_json(s));
    coords.push_back(std::move(c));
  }
  return json{{"family", std::string(to_string(p.family))},
              {"field", std::string(to_string(p.field))},
              {"moduli", moduli},
              {"basis_coords", coords}};
}

Provenance provenance_from_json(const json& j, const std::string& path) {
  Provenance p{};
  try {
    const json& fam = member(j, "family", path);
    const json& fld = member(j, "field", path);
    if (!fam.is_string() || !fld.is_string()) fail(path, "family and field must be strings");
    p.family = parse_family(fam.get<std::string>());
    p.field = parse_field(fld.get<std::string>());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    fail(path, e.detail());
  }
  const json& moduli = array_at(member(j, "moduli", path), path + "/moduli");
  for (std::size_t m = 0; m < moduli.size(); ++m) {
    std::string pm = path + "/moduli/" + std::to_string(m);
    std::vector<Scalar> c;
    for (std::size_t k = 0; k < array_at(moduli[m], pm).size(); ++k)
      c.push_back(scalar_from_json(moduli[m][k], pm + "/" + std::to_string(k)));
    p.moduli.emplace_back(std::move(c));
  }
  const json& coords = array_at(member(j, "basis_coords", path), path + "/basis_coords");
  for (std::size_t b = 0; b < coords.size(); ++b) {
    std::string pb = path + "/basis_coords/" + std::to_string(b);
    std::vector<Scalar> c;
    for (std::size_t k = 0; k < array_at(coords[b], pb).size(); ++k)
      c.push_back(scalar_from_json(coords[b][k], pb + "/" + std::to_string(k)));
    p.basis_coords.push_back(std::move(c));
  }
  return p;
}

json to_json(const SearchHit& h) {
  return json{{"key", h.key},
              {"algebra", to_json(h.algebra)},
              {"basis", basis_to_json(h.basis.elements())},
              {"symbol", coords_to_json(h.symbol)},
              {"provenance", to_json(h.provenance)},
              {"certified", {{"z2", h.certified_z2}, {"z3", h.certified_z3}}}};
}

json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

}  // namespace hyperpde::json_io
