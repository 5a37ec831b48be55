#include "hyperpde/cli.hpp"

#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hyperpde/json_io.hpp"

namespace hyperpde::cli {

namespace {

using json_io::json;

constexpr int kDegreeWarning = 64;

// Everything a subcommand needs, collected from the flags.
struct RunConfig {
  std::string algebra_file;
  std::string pde_file;
  std::string poly_file;
  std::string output;
  std::string basis;
  std::string modulus;
  std::string field = "Q";
  std::string label;
  std::optional<unsigned> degree;
  std::optional<unsigned> exp_order;
  std::optional<std::size_t> component;
  std::string family = "quotient";
  unsigned max_degree = 2;
  int coeff_range = 1;
  int basis_range = 1;
  std::size_t max_candidates = 10'000'000;
  std::string box = "-1:1";
  std::size_t resolution = 11;
  bool no_spot_checks = false;
  std::uint64_t seed = kDefaultSeed;
};

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

Element parse_basis_element(const Algebra& a, const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw Error(ErrorCode::ParseError, "unterminated coordinate vector '" + text + "'");
    std::vector<Scalar> c;
    for (const auto& part : split_top_level(std::string_view(text).substr(1, text.size() - 2), ','))
      c.push_back(Scalar::parse(part));
    return Element(a, std::move(c));
  }
  UPoly p = UPoly::parse(text);
  if (a.dim() < 2 && p.degree() > 0) throw Error(ErrorCode::ParseError, "'t' needs an algebra of dim >= 2");
  Element result = Element::zero(a);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k].is_zero()) continue;
    result += pow(Element::basis(a, 1), static_cast<unsigned>(k)) * p.coeffs()[k];
  }
  return result;
}

void write_output(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + cfg.output);
  f << text << '\n';
}

void warn_degree(const MultiPoly& p, std::ostream& err) {
  if (p.total_degree() > kDegreeWarning)
    err << "warning: polynomial of total degree " << p.total_degree() << " exceeds " << kDegreeWarning << '\n';
}

// A bare polynomial, a function export, or generate output ({"function": ...}).
MultiPoly load_poly(const RunConfig& cfg) {
  json j = json_io::load_file(cfg.poly_file);
  std::string path;
  if (j.is_object() && j.contains("function")) {
    j = j["function"];
    path = "/function";
  }
  if (j.is_object() && j.contains("components")) {
    std::size_t k = cfg.component.value_or(0);
    const json& comps = j["components"];
    if (!comps.is_array() || k >= comps.size())
      throw Error(ErrorCode::ParseError, path + "/components: no component " + std::to_string(k));
    return json_io::poly_from_json(comps[k], path + "/components/" + std::to_string(k));
  }
  if (cfg.component) throw Error(ErrorCode::ParseError, "--component given but the file holds a single polynomial");
  return json_io::poly_from_json(j);
}

int cmd_algebra_validate(const RunConfig& cfg, std::ostream& out) {
  json j = json_io::load_file(cfg.algebra_file);
  try {
    Algebra a = json_io::algebra_from_json(j);
    write_output(cfg, out, json{{"valid", true}, {"label", a.label()}, {"dim", a.dim()}}.dump(2));
    return kExitOk;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::NotCommutative:
      case ErrorCode::NotAssociative:
      case ErrorCode::UnitViolation:
      case ErrorCode::FieldViolation:
      case ErrorCode::DimTooLarge:
        write_output(cfg, out,
                     json{{"valid", false}, {"error", std::string(to_string(e.code()))}, {"witness", e.witness()},
                          {"message", e.what()}}
                         .dump(2));
        return kExitVerdictFalse;
      default:
        throw;
    }
  }
}

int cmd_quotient(const RunConfig& cfg, std::ostream& out) {
  Algebra a = quotient_algebra(UPoly::parse(cfg.modulus), parse_field(cfg.field), cfg.label);
  write_output(cfg, out, json_io::to_json(a).dump(2));
  return kExitOk;
}

int cmd_symbol_check(const RunConfig& cfg, std::ostream& out) {
  Algebra a = json_io::algebra_from_json(json_io::load_file(cfg.algebra_file));
  Pde pde = json_io::pde_from_json(json_io::load_file(cfg.pde_file));
  SubspaceBasis basis = parse_basis_spec(a, cfg.basis);
  SymbolResult r = symbol_evaluate(pde, basis);
  write_output(cfg, out, json_io::to_json(r).dump(2));
  return r.is_zero ? kExitOk : kExitVerdictFalse;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.degree.has_value() == cfg.exp_order.has_value())
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --degree and --exp");
  Algebra a = json_io::algebra_from_json(json_io::load_file(cfg.algebra_file));
  Pde pde = json_io::pde_from_json(json_io::load_file(cfg.pde_file));
  SubspaceBasis basis = parse_basis_spec(a, cfg.basis);
  AlgebraPolyFunction f = cfg.degree ? build_monomial(basis, *cfg.degree) : build_truncated_exp(basis, *cfg.exp_order);
  for (const auto& u : f.components()) warn_degree(u, err);
  SolutionCertificate cert = certify(pde, f, cfg.seed);
  if (cfg.no_spot_checks) cert.spot_checks.clear();
  json doc{{"symbol", json_io::to_json(symbol_evaluate(pde, basis))},
           {"function", json_io::to_json(f)},
           {"certificate", json_io::to_json(cert)}};
  write_output(cfg, out, doc.dump(2));
  return cert.verdict ? kExitOk : kExitVerdictFalse;
}

json complex_pair(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Pde pde = json_io::pde_from_json(json_io::load_file(cfg.pde_file));
  MultiPoly u = load_poly(cfg);
  warn_degree(u, err);
  MultiPoly residual = apply_operator(pde, u);
  json table = json::array();
  if (!cfg.no_spot_checks) {
    for (const auto& point : spot_check_points(pde.nvars(), kSpotCheckPoints, cfg.seed)) {
      std::vector<double> pf;
      for (const auto& x : point) pf.push_back(x.re().get_d());
      table.push_back(json{{"point", pf},
                           {"value", complex_pair(evaluate(residual, point).to_complex())},
                           {"finite_difference", complex_pair(finite_difference_residual(pde, u, pf, 1e-3))}});
    }
  }
  json doc{{"residual", json_io::to_json(residual)},
           {"residual_text", residual.str()},
           {"is_zero", residual.is_zero()},
           {"spot_checks", table}};
  write_output(cfg, out, doc.dump(2));
  return residual.is_zero() ? kExitOk : kExitVerdictFalse;
}

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Pde pde = json_io::pde_from_json(json_io::load_file(cfg.pde_file));
  SearchSpace space{parse_family(cfg.family), parse_field(cfg.field), cfg.max_degree, cfg.coeff_range,
                    cfg.basis_range, cfg.max_candidates};
  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file = std::make_unique<std::ofstream>(cfg.output);
    if (!*file) throw Error(ErrorCode::ParseError, "cannot write " + cfg.output);
    sink = file.get();
  }
  std::size_t hits = 0, examined = 0;
  SearchStatus status = for_each_hit(
      pde, space,
      [&](const SearchHit& h) {
        *sink << json_io::to_json(h).dump() << '\n';
        ++hits;
      },
      &examined);
  err << "search: " << hits << " hit(s), " << examined << " candidate(s) examined, "
      << (status == SearchStatus::CapReached ? "cap reached" : "space exhausted") << '\n';
  return hits ? kExitOk : kExitVerdictFalse;
}

int cmd_grid(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  MultiPoly u = load_poly(cfg);
  warn_degree(u, err);
  if (!u.is_real()) throw Error(ErrorCode::InvalidArgument, "grid export needs a polynomial with real coefficients");
  if (cfg.resolution < 2) throw Error(ErrorCode::InvalidArgument, "--resolution must be >= 2");
  const std::size_t n = u.nvars();
  auto ranges = split_top_level(cfg.box, ',');
  if (ranges.size() != 1 && ranges.size() != n)
    throw Error(ErrorCode::ParseError, "--box needs one range or " + std::to_string(n) + " ranges");
  std::vector<std::pair<double, double>> box;
  for (std::size_t k = 0; k < n; ++k) {
    const std::string& r = ranges[ranges.size() == 1 ? 0 : k];
    auto colon = r.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "range '" + r + "' must be lo:hi");
    try {
      box.emplace_back(std::stod(r.substr(0, colon)), std::stod(r.substr(colon + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "range '" + r + "' must be lo:hi");
    }
  }
  std::ostringstream csv;
  for (std::size_t k = 0; k < n; ++k) csv << 'x' << k << ',';
  csv << "u\n";
  std::vector<std::size_t> idx(n, 0);
  std::vector<std::complex<double>> point(n);
  char buf[64];
  while (true) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto [lo, hi] = box[k];
      double x = lo + (hi - lo) * static_cast<double>(idx[k]) / static_cast<double>(cfg.resolution - 1);
      point[k] = x;
      std::snprintf(buf, sizeof buf, "%.17g,", x);
      csv << buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g\n", evaluate(u, point).real());
    csv << buf;
    std::size_t k = n;
    while (k > 0 && idx[k - 1] == cfg.resolution - 1) idx[--k] = 0;
    if (k == 0) break;
    ++idx[k - 1];
  }
  std::string text = csv.str();
  text.pop_back();
  write_output(cfg, out, text);
  return kExitOk;
}

}  // namespace

SubspaceBasis parse_basis_spec(const Algebra& algebra, std::string_view spec) {
  std::vector<Element> elems;
  for (const auto& part : split_top_level(spec, ',')) {
    std::string t = trim(part);
    if (t.empty()) throw Error(ErrorCode::ParseError, "empty element in basis spec '" + std::string(spec) + "'");
    elems.push_back(parse_basis_element(algebra, t));
  }
  return check_basis(algebra, std::move(elems));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact hyperholomorphic-function solutions of constant-coefficient PDEs", "hyperpde"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", cfg.output, "Write result to this file"); };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Seed for numeric spot-check points")->capture_default_str();
    sub->add_flag("--no-spot-checks", cfg.no_spot_checks, "Skip the numeric spot-check table");
  };

  auto* validate = app.add_subcommand("algebra-validate", "Check an algebra JSON file against the axioms");
  validate->add_option("file", cfg.algebra_file, "Algebra JSON")->required()->check(CLI::ExistingFile);
  add_output(validate);

  auto* quotient = app.add_subcommand("quotient", "Emit the algebra K[t]/(p) as JSON");
  quotient->add_option("poly", cfg.modulus, "Monic modulus in t, e.g. \"t^2+1\"")->required();
  quotient->add_option("--field", cfg.field, "Q or Qi")->capture_default_str();
  quotient->add_option("--label", cfg.label, "Algebra label");
  add_output(quotient);

  auto* symbol = app.add_subcommand("symbol-check", "Evaluate the PDE symbol on a subspace basis");
  symbol->add_option("--algebra", cfg.algebra_file)->required()->check(CLI::ExistingFile);
  symbol->add_option("--pde", cfg.pde_file)->required()->check(CLI::ExistingFile);
  symbol->add_option("--basis", cfg.basis, "e.g. \"1,t\" or \"[1,0],[0,1]\"")->required();
  add_output(symbol);

  auto* generate = app.add_subcommand("generate", "Build z^j or a truncated exponential and certify it");
  generate->add_option("--algebra", cfg.algebra_file)->required()->check(CLI::ExistingFile);
  generate->add_option("--pde", cfg.pde_file)->required()->check(CLI::ExistingFile);
  generate->add_option("--basis", cfg.basis)->required();
  generate->add_option("--degree", cfg.degree, "Build f = z^j");
  generate->add_option("--exp", cfg.exp_order, "Build f = sum_{j<=N} z^j/j!");
  add_seed(generate);
  add_output(generate);

  auto* verify = app.add_subcommand("verify", "Apply a PDE to a polynomial");
  verify->add_option("--pde", cfg.pde_file)->required()->check(CLI::ExistingFile);
  verify->add_option("--poly", cfg.poly_file, "Polynomial, function export, or generate output")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--component", cfg.component, "Component index when the file holds a function");
  add_seed(verify);
  add_output(verify);

  auto* search = app.add_subcommand("search", "Enumerate algebras and bases whose symbol vanishes");
  search->add_option("--pde", cfg.pde_file)->required()->check(CLI::ExistingFile);
  search->add_option("--family", cfg.family, "quotient, direct-sum or tensor")->capture_default_str();
  search->add_option("--field", cfg.field, "Q or Qi")->capture_default_str();
  search->add_option("--max-degree", cfg.max_degree, "Degree bound on each modulus")->capture_default_str();
  search->add_option("--coeff-range", cfg.coeff_range, "Modulus coefficients in [-c, c]")->capture_default_str();
  search->add_option("--basis-range", cfg.basis_range, "Basis coordinates in [-c', c']")->capture_default_str();
  search->add_option("--max-candidates", cfg.max_candidates)->capture_default_str();
  add_output(search);

  auto* grid = app.add_subcommand("grid", "Sample a polynomial on a grid as CSV");
  grid->add_option("--poly", cfg.poly_file)->required()->check(CLI::ExistingFile);
  grid->add_option("--component", cfg.component);
  grid->add_option("--box", cfg.box, "lo:hi for every axis, or one lo:hi per axis separated by commas")
      ->capture_default_str();
  grid->add_option("--resolution", cfg.resolution, "Samples per axis")->capture_default_str();
  add_output(grid);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (validate->parsed()) return cmd_algebra_validate(cfg, out);
    if (quotient->parsed()) return cmd_quotient(cfg, out);
    if (symbol->parsed()) return cmd_symbol_check(cfg, out);
    if (generate->parsed()) return cmd_generate(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (search->parsed()) return cmd_search(cfg, out, err);
    if (grid->parsed()) return cmd_grid(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace hyperpde::cli
