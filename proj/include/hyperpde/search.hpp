#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpde/algebra.hpp"
#include "hyperpde/pde.hpp"
#include "hyperpde/univariate.hpp"

namespace hyperpde {

/// Algebra families the search walks.
///   Quotient  - K[t]/(p) for every monic p in range.
///   DirectSum - K[t]/(p) (+) K[t]/(q), p at or before q in quotient order.
///   Tensor    - K[t]/(p) (x) K[t]/(q), both of degree >= 2, p at or before q.
enum class Family { Quotient, DirectSum, Tensor };

std::string_view to_string(Family f);
Family parse_family(std::string_view s);

struct SearchSpace {
  Family family = Family::Quotient;
  Field field = Field::Q;
  unsigned max_poly_degree = 2;  // degree bound on each modulus
  int coeff_range = 1;           // modulus coefficients (below the leading 1) in [-c, c]
  int basis_range = 1;           // b_1..b_m integer coordinates in [-c', c']
  std::size_t max_candidates = 10'000'000;
};

/// Everything needed to rebuild a candidate bit-exactly.
struct Provenance {
  Family family;
  Field field;
  std::vector<UPoly> moduli;                     // one (quotient) or two factors
  std::vector<std::vector<Scalar>> basis_coords;  // b_1..b_m
};

struct SearchHit {
  Algebra algebra;
  SubspaceBasis basis;
  Element symbol;
  Provenance provenance;
  bool certified_z2;
  bool certified_z3;
  std::string key;
};

enum class SearchStatus { SpaceExhausted, CapReached };

struct SearchResult {
  std::vector<SearchHit> hits;
  SearchStatus status = SearchStatus::SpaceExhausted;
  std::size_t candidates_examined = 0;
};

/// Monic moduli of degree 1..d with lower coefficients in [-c, c], ordered by
/// degree and then lexicographically on (a_0, ..., a_{d-1}).
std::vector<UPoly> enumerate_moduli(unsigned max_degree, int coeff_range);

/// Family algebras in enumeration order, paired with their moduli.
std::vector<std::pair<Algebra, std::vector<UPoly>>> enumerate_algebras(const SearchSpace& space);

Algebra rebuild_algebra(const Provenance& p);
SubspaceBasis rebuild_basis(const Provenance& p);

/// Canonical text of (structure constants, basis) after flipping each of
/// b_1..b_m so its first nonzero coordinate is positive.
std::string dedupe_key(const Algebra& algebra, const std::vector<Element>& basis);
std::string dedupe_key(const SearchHit& hit);

/// Walks every (algebra, b_1..b_m) candidate of the space in order and calls
/// `sink` for each new hit: symbol exactly zero, z^2 and z^3 certified, and
/// key not seen before. Basis tuples are ordered lexicographically over the
/// nonzero integer vectors of [-c', c']^dim. Candidate evaluation runs on
/// OpenMP threads in fixed-size blocks; hits are delivered in enumeration
/// order, so output does not depend on the thread count.
SearchStatus for_each_hit(const Pde& pde, const SearchSpace& space, const std::function<void(const SearchHit&)>& sink,
                          std::size_t* examined = nullptr);

SearchResult enumerate(const Pde& pde, const SearchSpace& space);
/// Single-threaded reference of enumerate().
SearchResult enumerate_serial(const Pde& pde, const SearchSpace& space);

}  // namespace hyperpde
