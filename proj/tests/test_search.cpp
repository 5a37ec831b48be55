#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "search_oracle.hpp"
#include "hyperpde/search.hpp"

using namespace hyperpde;
using namespace hyperpde::test;

namespace {

SearchSpace small_quotient_space() { return SearchSpace{}; }

bool has_hit(const SearchResult& r, const char* modulus, std::vector<std::vector<long>> coords) {
  for (const auto& h : r.hits) {
    if (h.provenance.moduli.size() != 1 || !(h.provenance.moduli[0] == UPoly::parse(modulus))) continue;
    std::vector<std::vector<Scalar>> want;
    for (const auto& v : coords) want.emplace_back(v.begin(), v.end());
    if (h.provenance.basis_coords == want) return true;
  }
  return false;
}

}  // namespace

TEST(Moduli, OrderAndCount) {
  auto m = enumerate_moduli(2, 1);
  ASSERT_EQ(m.size(), 3u + 9u);
  EXPECT_EQ(m[0], UPoly::parse("t-1"));
  EXPECT_EQ(m[2], UPoly::parse("t+1"));
  EXPECT_EQ(m[3], UPoly::parse("t^2-t-1"));
  EXPECT_EQ(m[4], UPoly::parse("t^2-1"));
  EXPECT_EQ(m[11], UPoly::parse("t^2+t+1"));
  for (const auto& p : m) EXPECT_TRUE(p.is_monic());
}

TEST(Search, LaplaceRecoversComplexNumbers) {
  auto r = enumerate(laplace2(), small_quotient_space());
  EXPECT_EQ(r.status, SearchStatus::SpaceExhausted);
  EXPECT_EQ(r.candidates_examined, 72u);
  EXPECT_TRUE(has_hit(r, "t^2+1", {{0, 1}}));
}

TEST(Search, WaveRecoversSplitComplex) {
  auto r = enumerate(wave(), small_quotient_space());
  EXPECT_TRUE(has_hit(r, "t^2-1", {{0, 1}}));
}

TEST(Search, BiharmonicRecoversSquaredComplexModulus) {
  SearchSpace s;
  s.max_poly_degree = 4;
  s.coeff_range = 2;
  auto r = enumerate(biharmonic(), s);
  EXPECT_TRUE(has_hit(r, "t^4+2*t^2+1", {{0, 1, 0, 0}}));
}

TEST(Search, LaplaceThreeDimensionsOnTensorFamily) {
  SearchSpace s;
  s.family = Family::Tensor;
  auto r = enumerate(laplace3(), s);
  bool found = false;
  std::vector<Scalar> e1{0, 1, 0, 0}, e2{0, 0, 1, 0};
  for (const auto& h : r.hits) {
    if (h.provenance.moduli.size() != 2) continue;
    bool mods = h.provenance.moduli[0] == UPoly::parse("t^2") && h.provenance.moduli[1] == UPoly::parse("t^2+1");
    const auto& bc = h.provenance.basis_coords;
    found |= mods && ((bc[0] == e1 && bc[1] == e2) || (bc[0] == e2 && bc[1] == e1));
  }
  EXPECT_TRUE(found);
}

TEST(Search, DirectSumFamily) {
  SearchSpace s;
  s.family = Family::DirectSum;
  s.max_poly_degree = 1;
  // (1-dim) (+) (1-dim) is the split-complex plane in the basis uA+uB, uA-uB.
  auto r = enumerate(wave(), s);
  ASSERT_FALSE(r.hits.empty());
  for (const auto& h : r.hits) EXPECT_EQ(h.algebra.dim(), 2u);
  EXPECT_TRUE(enumerate(laplace2(), s).hits.empty());
}

TEST(Search, HitsAreSound) {
  for (const auto& pde : {laplace2(), wave()}) {
    for (const auto& h : enumerate(pde, small_quotient_space()).hits) {
      EXPECT_TRUE(h.certified_z2);
      EXPECT_TRUE(h.certified_z3);
      EXPECT_TRUE(h.symbol.is_zero());
      SubspaceBasis b = rebuild_basis(h.provenance);
      EXPECT_TRUE(b.algebra().same_as(h.algebra));
      EXPECT_TRUE(symbol_evaluate(pde, b).is_zero);
      EXPECT_TRUE(certify(pde, build_monomial(b, 2)).verdict);
      EXPECT_TRUE(certify(pde, build_monomial(b, 3)).verdict);
      EXPECT_EQ(dedupe_key(b.algebra(), b.elements()), h.key);
      EXPECT_EQ(dedupe_key(h), h.key);
    }
  }
}

TEST(Search, DeterministicAndThreadIndependent) {
  SearchSpace s;
  s.family = Family::Tensor;
  auto a = enumerate(laplace3(), s), b = enumerate(laplace3(), s), c = enumerate_serial(laplace3(), s);
  ASSERT_EQ(a.hits.size(), b.hits.size());
  ASSERT_EQ(a.hits.size(), c.hits.size());
  for (std::size_t k = 0; k < a.hits.size(); ++k) {
    EXPECT_EQ(a.hits[k].key, b.hits[k].key);
    EXPECT_EQ(a.hits[k].key, c.hits[k].key);
    EXPECT_EQ(a.hits[k].provenance.basis_coords, c.hits[k].provenance.basis_coords);
  }
  EXPECT_EQ(a.candidates_examined, c.candidates_examined);
  std::set<std::string> keys;
  for (const auto& h : a.hits) EXPECT_TRUE(keys.insert(h.key).second);
}

TEST(Search, MatchesBruteForceOracle) {
  for (const auto& pde : {laplace2(), wave(), make_pde(2, 2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}})}) {
    for (auto [d, c, cb] : {std::tuple{2u, 1, 1}, std::tuple{2u, 2, 2}, std::tuple{3u, 1, 1}}) {
      SearchSpace s;
      s.max_poly_degree = d;
      s.coeff_range = c;
      s.basis_range = cb;
      EXPECT_EQ(keys_of(enumerate(pde, s)), brute_force_quotient_hits(pde, d, c, cb)) << pde.str() << " d=" << d;
    }
  }
}

TEST(Search, CapReached) {
  SearchSpace s;
  s.max_candidates = 10;
  std::size_t examined = 0;
  std::size_t hits = 0;
  EXPECT_EQ(for_each_hit(laplace2(), s, [&](const SearchHit&) { ++hits; }, &examined), SearchStatus::CapReached);
  EXPECT_EQ(examined, 10u);
  auto r = enumerate(laplace2(), s);
  EXPECT_EQ(r.status, SearchStatus::CapReached);
  EXPECT_EQ(r.hits.size(), hits);
}

TEST(Search, Errors) {
  SearchSpace s;
  s.basis_range = 0;
  EXPECT_THROW(enumerate(laplace2(), s), Error);
  std::vector<std::pair<MultiIndex, Scalar>> t{{{2, 0}, Scalar(1)}, {{0, 2}, Scalar::imaginary_unit()}};
  Pde complex_pde = Pde::make(2, 2, t);
  try {
    enumerate(complex_pde, SearchSpace{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
  SearchSpace qi;
  qi.field = Field::Qi;
  qi.max_candidates = 100;
  EXPECT_NO_THROW(enumerate(complex_pde, qi));
  EXPECT_THROW(parse_family("sum"), Error);
  EXPECT_EQ(parse_family("direct-sum"), Family::DirectSum);
}

TEST(DedupeKey, Examples) {
  Algebra cx = complex_numbers();
  Element one = Element::unit(cx), t = Element::basis(cx, 1);
  EXPECT_EQ(dedupe_key(cx, {one, t}), dedupe_key(cx, {one, t}));
  EXPECT_EQ(dedupe_key(cx, {one, t}), dedupe_key(cx, {one, -t}));
  EXPECT_NE(dedupe_key(cx, {one, t}), dedupe_key(cx, {one, t * Scalar(2)}));
  Algebra sc = split_complex();
  EXPECT_NE(dedupe_key(cx, {one, t}), dedupe_key(sc, {Element::unit(sc), Element::basis(sc, 1)}));
}
