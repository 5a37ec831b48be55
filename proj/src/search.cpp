#include "hyperpde/search.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <stdexcept>
#include <unordered_set>

namespace hyperpde {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Quotient: return "quotient";
    case Family::DirectSum: return "direct-sum";
    case Family::Tensor: return "tensor";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  if (s == "quotient") return Family::Quotient;
  if (s == "direct-sum") return Family::DirectSum;
  if (s == "tensor") return Family::Tensor;
  throw Error(ErrorCode::ParseError, "unknown family '" + std::string(s) + "' (quotient, direct-sum, tensor)");
}

std::vector<UPoly> enumerate_moduli(unsigned max_degree, int coeff_range) {
  std::vector<UPoly> out;
  for (unsigned deg = 1; deg <= max_degree; ++deg) {
    std::vector<int> a(deg, -coeff_range);
    while (true) {
      std::vector<Scalar> c(a.begin(), a.end());
      c.emplace_back(1);
      out.emplace_back(std::move(c));
      std::size_t k = deg;
      while (k > 0 && a[k - 1] == coeff_range) a[--k] = -coeff_range;
      if (k == 0) break;
      ++a[k - 1];
    }
  }
  return out;
}

std::vector<std::pair<Algebra, std::vector<UPoly>>> enumerate_algebras(const SearchSpace& space) {
  auto moduli = enumerate_moduli(space.max_poly_degree, space.coeff_range);
  std::vector<Algebra> quotients;
  for (const auto& p : moduli) quotients.push_back(quotient_algebra(p, space.field));
  std::vector<std::pair<Algebra, std::vector<UPoly>>> out;
  switch (space.family) {
    case Family::Quotient:
      for (std::size_t i = 0; i < moduli.size(); ++i) out.emplace_back(quotients[i], std::vector<UPoly>{moduli[i]});
      break;
    case Family::DirectSum:
      for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i; j < moduli.size(); ++j)
          out.emplace_back(direct_sum(quotients[i], quotients[j]), std::vector<UPoly>{moduli[i], moduli[j]});
      break;
    case Family::Tensor:
      for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i; j < moduli.size(); ++j)
          if (moduli[i].degree() >= 2 && moduli[j].degree() >= 2)
            out.emplace_back(tensor_product(quotients[i], quotients[j]), std::vector<UPoly>{moduli[i], moduli[j]});
      break;
  }
  return out;
}

Algebra rebuild_algebra(const Provenance& p) {
  const std::size_t factors = p.family == Family::Quotient ? 1 : 2;
  if (p.moduli.size() != factors)
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(p.family)) + " provenance needs " +
                                                std::to_string(factors) + " moduli");
  Algebra a = quotient_algebra(p.moduli[0], p.field);
  if (p.family == Family::Quotient) return a;
  Algebra b = quotient_algebra(p.moduli[1], p.field);
  return p.family == Family::DirectSum ? direct_sum(a, b) : tensor_product(a, b);
}

SubspaceBasis rebuild_basis(const Provenance& p) {
  Algebra alg = rebuild_algebra(p);
  std::vector<Element> elems{Element::unit(alg)};
  for (const auto& c : p.basis_coords) elems.emplace_back(alg, c);
  return check_basis(alg, std::move(elems));
}

namespace {

std::string algebra_key(const Algebra& a) {
  std::string key = std::string(to_string(a.field())) + ";" + std::to_string(a.dim()) + ";";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) key += a.gamma(i, j, k).str() + ",";
  return key;
}

// b_1..b_m flipped so that each first nonzero coordinate is positive.
std::vector<Element> normalize_signs(const std::vector<Element>& basis) {
  std::vector<Element> out = basis;
  for (std::size_t b = 1; b < out.size(); ++b) {
    for (const auto& s : out[b].coords()) {
      if (s.is_zero()) continue;
      if (sgn(s.re()) < 0 || (sgn(s.re()) == 0 && sgn(s.im()) < 0)) out[b] = -out[b];
      break;
    }
  }
  return out;
}

std::string basis_key(const std::vector<Element>& basis) {
  std::string key;
  auto normalized = normalize_signs(basis);
  for (std::size_t b = 1; b < normalized.size(); ++b) {
    key += "|";
    for (const auto& s : normalized[b].coords()) key += s.str() + ",";
  }
  return key;
}

struct Outcome {
  std::vector<std::size_t> vector_index;  // one per b_1..b_m
  bool z2 = false;
  bool z3 = false;
};

class CandidateWalker {
 public:
  CandidateWalker(const Pde& pde, const Algebra& alg, int range) : pde_(pde), alg_(alg) {
    const std::size_t d = alg.dim();
    std::vector<int> v(d, -range);
    while (true) {
      if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; })) {
        std::vector<Scalar> c(v.begin(), v.end());
        vectors_.emplace_back(alg, std::move(c));
      }
      std::size_t k = d;
      while (k > 0 && v[k - 1] == range) v[--k] = -range;
      if (k == 0) break;
      ++v[k - 1];
    }
    powers_.resize(vectors_.size());
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      powers_[i].push_back(Element::unit(alg));
      for (unsigned e = 1; e <= pde.order(); ++e) powers_[i].push_back(mul(powers_[i].back(), vectors_[i]));
    }
  }

  /// V^m candidates, saturating at SIZE_MAX.
  std::size_t total() const {
    std::size_t t = 1;
    for (std::size_t k = 1; k < pde_.nvars(); ++k) {
      if (t > SIZE_MAX / vectors_.size()) return SIZE_MAX;
      t *= vectors_.size();
    }
    return t;
  }

  std::vector<std::size_t> decode(std::size_t index) const {
    std::vector<std::size_t> digits(pde_.nvars() - 1);
    for (std::size_t k = digits.size(); k-- > 0;) {
      digits[k] = index % vectors_.size();
      index /= vectors_.size();
    }
    return digits;
  }

  std::optional<Outcome> evaluate(std::size_t index) const {
    auto digits = decode(index);
    Element value = Element::zero(alg_);
    for (const auto& [idx, c] : pde_.terms()) {
      std::optional<Element> term;
      for (std::size_t k = 1; k < idx.size(); ++k) {
        if (idx[k] == 0) continue;
        const Element& p = powers_[digits[k - 1]][idx[k]];
        term = term ? mul(*term, p) : p;
      }
      value += term ? *term * c : Element::unit(alg_) * c;
    }
    if (!value.is_zero()) return std::nullopt;
    std::vector<std::vector<Scalar>> cols{Element::unit(alg_).coords()};
    for (auto d : digits) cols.push_back(vectors_[d].coords());
    if (null_vector(Matrix::from_columns(cols))) return std::nullopt;
    SubspaceBasis basis = check_basis(alg_, elements(digits));
    Outcome out{std::move(digits), certify_serial(pde_, build_monomial(basis, 2)).verdict,
                certify_serial(pde_, build_monomial(basis, 3)).verdict};
    if (!out.z2 || !out.z3)
      throw std::logic_error("symbol vanishes but certification failed on " + alg_.label() +
                             "; power-function expansion is inconsistent");
    return out;
  }

  std::vector<Element> elements(const std::vector<std::size_t>& digits) const {
    std::vector<Element> e{Element::unit(alg_)};
    for (auto d : digits) e.push_back(vectors_[d]);
    return e;
  }

 private:
  const Pde& pde_;
  const Algebra& alg_;
  std::vector<Element> vectors_;
  std::vector<std::vector<Element>> powers_;
};

constexpr std::size_t kBlock = 4096;

SearchStatus walk(const Pde& pde, const SearchSpace& space, const std::function<void(const SearchHit&)>& sink,
                  std::size_t* examined, bool parallel) {
  if (space.max_poly_degree < 1 || space.coeff_range < 1 || space.basis_range < 1 || space.max_candidates < 1)
    throw Error(ErrorCode::InvalidArgument, "search bounds must all be >= 1");
  if (space.field == Field::Q && !pde.is_real())
    throw Error(ErrorCode::FieldMismatch, "PDE with non-real coefficients needs field Qi");
  std::size_t count = 0;
  std::unordered_set<std::string> seen;
  auto finish = [&](SearchStatus s) {
    if (examined) *examined = count;
    return s;
  };
  for (const auto& [alg, moduli] : enumerate_algebras(space)) {
    if (alg.dim() < pde.nvars()) continue;
    CandidateWalker walker(pde, alg, space.basis_range);
    const std::string akey = algebra_key(alg);
    const std::size_t total = walker.total();
    for (std::size_t start = 0; start < total; start += kBlock) {
      if (count >= space.max_candidates) return finish(SearchStatus::CapReached);
      const std::size_t end = std::min({total, start + kBlock, start + (space.max_candidates - count)});
      std::vector<std::optional<Outcome>> slots(end - start);
      std::exception_ptr failure;
      const auto n = static_cast<long>(slots.size());
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
      for (long s = 0; s < n; ++s) {
        try {
          slots[s] = walker.evaluate(start + static_cast<std::size_t>(s));
        } catch (...) {
#pragma omp critical(hyperpde_search_failure)
          if (!failure) failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);
      count += end - start;
      for (auto& slot : slots) {
        if (!slot) continue;
        auto elems = walker.elements(slot->vector_index);
        std::string key = akey + basis_key(elems);
        if (!seen.insert(key).second) continue;
        // Report the sign-normalised representative when it is itself a hit.
        SubspaceBasis basis = check_basis(alg, std::move(elems));
        SubspaceBasis normalized = check_basis(alg, normalize_signs(basis.elements()));
        bool z2 = slot->z2, z3 = slot->z3;
        if (symbol_evaluate(pde, normalized).is_zero) {
          basis = normalized;
          z2 = certify_serial(pde, build_monomial(basis, 2)).verdict;
          z3 = certify_serial(pde, build_monomial(basis, 3)).verdict;
        }
        Provenance prov{space.family, space.field, moduli, {}};
        for (std::size_t b = 1; b < basis.size(); ++b) prov.basis_coords.push_back(basis[b].coords());
        SymbolResult symbol = symbol_evaluate(pde, basis);
        sink(SearchHit{alg, std::move(basis), std::move(symbol.value), std::move(prov), z2, z3, std::move(key)});
      }
    }
  }
  return finish(SearchStatus::SpaceExhausted);
}

SearchResult collect(const Pde& pde, const SearchSpace& space, bool parallel) {
  SearchResult r;
  r.status = walk(pde, space, [&](const SearchHit& h) { r.hits.push_back(h); }, &r.candidates_examined, parallel);
  return r;
}

}  // namespace

std::string dedupe_key(const Algebra& algebra, const std::vector<Element>& basis) {
  return algebra_key(algebra) + basis_key(basis);
}

std::string dedupe_key(const SearchHit& hit) { return dedupe_key(hit.algebra, hit.basis.elements()); }

SearchStatus for_each_hit(const Pde& pde, const SearchSpace& space, const std::function<void(const SearchHit&)>& sink,
                          std::size_t* examined) {
  return walk(pde, space, sink, examined, true);
}

SearchResult enumerate(const Pde& pde, const SearchSpace& space) { return collect(pde, space, true); }

SearchResult enumerate_serial(const Pde& pde, const SearchSpace& space) { return collect(pde, space, false); }

}  // namespace hyperpde
