#include "hyperpde/univariate.hpp"

#include <algorithm>
#include <cctype>

#include "hyperpde/errors.hpp"

namespace hyperpde {

UPoly::UPoly(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }

UPoly UPoly::monomial(std::size_t degree, Scalar coeff) {
  std::vector<Scalar> c(degree + 1);
  c[degree] = std::move(coeff);
  return UPoly(std::move(c));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool UPoly::is_real() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_real(); });
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator*(UPoly a, const Scalar& s) {
  for (auto& c : a.coeffs_) c *= s;
  a.trim();
  return a;
}

UPoly UPoly::mod(const UPoly& monic) const {
  if (!monic.is_monic()) throw Error(ErrorCode::NonMonic, "modulus " + monic.str() + " is not monic");
  std::vector<Scalar> r = coeffs_;
  const std::size_t d = monic.coeffs_.size() - 1;
  for (std::size_t top = r.size(); top-- > d;) {
    if (r[top].is_zero()) continue;
    Scalar lead = r[top];
    for (std::size_t k = 0; k <= d; ++k) r[top - d + k] -= lead * monic.coeffs_[k];
  }
  if (r.size() > d) r.resize(d);
  return UPoly(std::move(r));
}

std::string UPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      cs = (negative ? -c : c).str();
    } else {
      cs = "(" + c.str() + ")";
    }
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";
    if (k == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += cs + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  UPoly run() {
    if (s_.empty()) fail("empty polynomial");
    UPoly acc;
    bool first = true;
    while (pos_ < s_.size()) {
      bool neg = false;
      if (peek() == '+' || peek() == '-') {
        neg = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      acc += term(neg);
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "bad polynomial '" + std::string(text_) + "': " + why);
  }

  UPoly term(bool neg) {
    Scalar coeff = 1;
    bool have_coeff = false;
    if (peek() == '(') {
      auto close = s_.find(')', pos_);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      coeff = Scalar::parse(std::string_view(s_).substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
      coeff = Scalar::parse(std::string_view(s_).substr(start, pos_ - start));
      have_coeff = true;
    }
    if (have_coeff && peek() == '*') {
      ++pos_;
      if (peek() != 't') fail("expected 't' after '*'");
    }
    std::size_t power = 0;
    if (peek() == 't') {
      ++pos_;
      power = 1;
      if (peek() == '^') {
        ++pos_;
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("missing exponent");
        power = std::stoul(s_.substr(start, pos_ - start));
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or 't'");
    }
    if (neg) coeff = -coeff;
    return UPoly::monomial(power, coeff);
  }

  std::string_view text_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

UPoly UPoly::parse(std::string_view text) { return TermParser(text).run(); }

}  // namespace hyperpde
