#include "hyperpde/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "hyperpde/errors.hpp"

namespace hyperpde {

unsigned total_degree(const MultiIndex& idx) { return std::accumulate(idx.begin(), idx.end(), 0u); }

bool GradedLex::operator()(const MultiIndex& a, const MultiIndex& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return b < a;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Scalar& c) {
  MultiPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(MultiIndex(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t k) {
  if (k >= nvars) throw Error(ErrorCode::VarOutOfRange, "variable x" + std::to_string(k) + " out of range");
  MultiIndex e(nvars, 0);
  e[k] = 1;
  return monomial(std::move(e), 1);
}

MultiPoly MultiPoly::monomial(MultiIndex exponents, const Scalar& c) {
  MultiPoly p(exponents.size());
  if (!c.is_zero()) p.terms_.emplace(std::move(exponents), c);
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::span<const std::pair<MultiIndex, Scalar>> terms) {
  MultiPoly p(nvars);
  for (const auto& [e, c] : terms) {
    if (e.size() != nvars)
      throw Error(ErrorCode::ArityMismatch,
                  "exponent of length " + std::to_string(e.size()) + " in a " + std::to_string(nvars) + "-variable polynomial");
    p.terms_[e] += c;
  }
  std::erase_if(p.terms_, [](const auto& t) { return t.second.is_zero(); });
  return p;
}

bool MultiPoly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(hyperpde::total_degree(terms_.rbegin()->first));
}

Scalar MultiPoly::coefficient(const MultiIndex& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Scalar() : it->second;
}

void MultiPoly::require_arity(const MultiPoly& o) const {
  if (nvars_ != o.nvars_)
    throw Error(ErrorCode::ArityMismatch,
                std::to_string(nvars_) + "-variable and " + std::to_string(o.nvars_) + "-variable polynomials mixed");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_arity(o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) continue;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_arity(o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (inserted) continue;
    it->second -= c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_arity(b);
  MultiPoly out(a.nvars_);
  MultiIndex e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.terms_[e] += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  // Highest degree first; within a degree, map order.
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(),
                   [](auto* a, auto* b) { return hyperpde::total_degree(a->first) > hyperpde::total_degree(b->first); });
  std::string out;
  for (const auto* term : order) {
    const auto& [e, c] = *term;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    std::string cs = c.is_real() ? (negative ? -c : c).str() : "(" + c.str() + ")";
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(k);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
  }
  return out;
}

MultiPoly partial_derivative(const MultiPoly& p, std::size_t var) {
  if (var >= p.nvars())
    throw Error(ErrorCode::VarOutOfRange,
                "d/dx" + std::to_string(var) + " of a " + std::to_string(p.nvars()) + "-variable polynomial");
  std::vector<std::pair<MultiIndex, Scalar>> terms;
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    MultiIndex d = e;
    --d[var];
    terms.emplace_back(std::move(d), c * Scalar(static_cast<long>(e[var])));
  }
  return MultiPoly::from_terms(p.nvars(), terms);
}

MultiPoly iterated_derivative(const MultiPoly& p, const MultiIndex& idx) {
  if (idx.size() != p.nvars())
    throw Error(ErrorCode::ArityMismatch, "derivative index of length " + std::to_string(idx.size()) + " for " +
                                              std::to_string(p.nvars()) + " variables");
  // Falling factorials per variable, applied term by term.
  std::vector<std::pair<MultiIndex, Scalar>> terms;
  for (const auto& [e, c] : p.terms()) {
    Scalar coeff = c;
    MultiIndex d = e;
    bool vanishes = false;
    for (std::size_t k = 0; k < idx.size() && !vanishes; ++k) {
      if (idx[k] > e[k]) {
        vanishes = true;
        break;
      }
      for (unsigned s = 0; s < idx[k]; ++s) coeff *= Scalar(static_cast<long>(e[k] - s));
      d[k] -= idx[k];
    }
    if (!vanishes) terms.emplace_back(std::move(d), std::move(coeff));
  }
  return MultiPoly::from_terms(p.nvars(), terms);
}

Scalar evaluate(const MultiPoly& p, std::span<const Scalar> point) {
  if (point.size() != p.nvars())
    throw Error(ErrorCode::ArityMismatch,
                "point of length " + std::to_string(point.size()) + " for " + std::to_string(p.nvars()) + " variables");
  Scalar sum;
  for (const auto& [e, c] : p.terms()) {
    Scalar t = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (unsigned s = 0; s < e[k]; ++s) t *= point[k];
    sum += t;
  }
  return sum;
}

std::complex<double> evaluate(const MultiPoly& p, std::span<const std::complex<double>> point) {
  if (point.size() != p.nvars())
    throw Error(ErrorCode::ArityMismatch,
                "point of length " + std::to_string(point.size()) + " for " + std::to_string(p.nvars()) + " variables");
  std::complex<double> sum = 0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> t = c.to_complex();
    for (std::size_t k = 0; k < e.size(); ++k)
      for (unsigned s = 0; s < e[k]; ++s) t *= point[k];
    sum += t;
  }
  return sum;
}

}  // namespace hyperpde
