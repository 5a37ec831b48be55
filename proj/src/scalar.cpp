#include "hyperpde/scalar.hpp"

#include <cctype>
#include <cmath>

#include "hyperpde/errors.hpp"

namespace hyperpde {

std::string_view to_string(Field f) { return f == Field::Q ? "Q" : "Qi"; }

Field parse_field(std::string_view s) {
  if (s == "Q") return Field::Q;
  if (s == "Qi") return Field::Qi;
  throw Error(ErrorCode::ParseError, "unknown field tag '" + std::string(s) + "' (expected Q or Qi)");
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::from_double(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite double");
  return Scalar(mpq_class(v));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_real()) return Scalar(1 / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (!o.is_real()) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (!o.is_real()) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string Scalar::str() const {
  if (is_real()) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  if (imag[0] != '-') imag.insert(imag.begin(), '+');
  return re_.get_str() + imag;
}

namespace {

[[noreturn]] void bad(std::string_view text, const char* why) {
  throw Error(ErrorCode::ParseError, "bad scalar '" + std::string(text) + "': " + why);
}

mpq_class parse_rational(std::string_view tok, std::string_view whole) {
  bool neg = false;
  if (!tok.empty() && (tok[0] == '+' || tok[0] == '-')) {
    neg = tok[0] == '-';
    tok.remove_prefix(1);
  }
  if (tok.empty()) bad(whole, "missing digits");
  auto slash = tok.find('/');
  auto digits = [&](std::string_view d) {
    if (d.empty()) bad(whole, "missing digits");
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) bad(whole, "unexpected character");
  };
  mpq_class q;
  if (slash == std::string_view::npos) {
    digits(tok);
    q = mpq_class(mpz_class(std::string(tok)));
  } else {
    digits(tok.substr(0, slash));
    digits(tok.substr(slash + 1));
    mpz_class num(std::string(tok.substr(0, slash)));
    mpz_class den(std::string(tok.substr(slash + 1)));
    if (den == 0) bad(whole, "zero denominator");
    q = mpq_class(num, den);
    q.canonicalize();
  }
  return neg ? mpq_class(-q) : q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  std::string_view v(s);
  if (v.empty()) bad(text, "empty");
  if (v.back() != 'i') return Scalar(parse_rational(v, text));

  v.remove_suffix(1);
  if (!v.empty() && v.back() == '*') {
    v.remove_suffix(1);
    if (v.empty() || v.back() == '+' || v.back() == '-') bad(text, "dangling '*'");
  }
  // Rationals never contain '+' or '-' past their first character, so the
  // last sign after position 0 separates the real and imaginary parts.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = v.size(); k-- > 1;) {
    if (v[k] == '+' || v[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view real_part, imag_part = v;
  if (split != std::string_view::npos) {
    real_part = v.substr(0, split);
    imag_part = v.substr(split);
  }
  mpq_class im;
  if (imag_part.empty() || imag_part == "+") {
    im = 1;
  } else if (imag_part == "-") {
    im = -1;
  } else {
    im = parse_rational(imag_part, text);
  }
  mpq_class re = real_part.empty() ? mpq_class(0) : parse_rational(real_part, text);
  return Scalar(re, im);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::DimTooLarge: return "DimTooLarge";
    case ErrorCode::FieldViolation: return "FieldViolation";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::UnitViolation: return "UnitViolation";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NonMonic: return "NonMonic";
    case ErrorCode::FirstNotUnit: return "FirstNotUnit";
    case ErrorCode::LinearlyDependent: return "LinearlyDependent";
    case ErrorCode::NotInSubspace: return "NotInSubspace";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::VarOutOfRange: return "VarOutOfRange";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ZeroOperator: return "ZeroOperator";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace hyperpde
