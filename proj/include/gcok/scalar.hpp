#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <regex>
#include <string>
#include <string_view>

#include "gcok/error.hpp"

namespace gcok {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Gaussian rational re + im*i. Both parts are exact and kept in lowest terms
/// by the underlying rational type.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long re) : re_(re) {}  // NOLINT: integer literals are scalars
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return {Rational(0), Rational(1)}; }
  static Scalar fraction(long long num, long long den) { return Scalar(Rational(num, den)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar conj() const { return {re_, -im_}; }
  Scalar operator-() const { return {-re_, -im_}; }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error("Scalar: division by zero");
    const Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    Rational r = (re_ * o.re_ + im_ * o.im_) / norm;
    im_ = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(r);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// Text form "p/q", "p/q+r/s i" or "p/q-r/s i"; integers print without denominator.
  std::string str() const {
    std::string out = re_.str();
    if (im_ == 0) return out;
    out += im_ < 0 ? "-" : "+";
    out += Rational(abs(im_)).str();
    out += " i";
    return out;
  }

  /// Parses the text form. Also accepts the shorthands "i", "-i", "2/3 i" and
  /// "1-i" (omitted real part or unit imaginary coefficient).
  static Scalar parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ' && c != '\t' && c != '\n') s += c;
    if (s.empty()) throw ParseError("invalid scalar: empty string");
    Scalar out;
    if (s.back() != 'i') {
      out.re_ = parse_rational(s, text);
      return out;
    }
    s.pop_back();
    if (!s.empty() && s.back() == '*') s.pop_back();
    const auto split = s.find_last_of("+-");
    std::string re_part, im_part = s;
    if (split != std::string::npos && split > 0) {
      re_part = s.substr(0, split);
      im_part = s.substr(split);
    }
    if (!re_part.empty()) out.re_ = parse_rational(re_part, text);
    if (im_part.empty() || im_part == "+")
      out.im_ = 1;
    else if (im_part == "-")
      out.im_ = -1;
    else
      out.im_ = parse_rational(im_part, text);
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  static Rational parse_rational(const std::string& token, std::string_view whole) {
    static const std::regex pattern(R"(^[+-]?\d+(/\d+)?$)");
    if (!std::regex_match(token, pattern)) throw ParseError("invalid scalar '" + std::string(whole) + "'");
    const std::string unsigned_token = token[0] == '+' ? token.substr(1) : token;
    const auto slash = unsigned_token.find('/');
    const Integer num(unsigned_token.substr(0, slash));
    const Integer den = slash == std::string::npos ? Integer(1) : Integer(unsigned_token.substr(slash + 1));
    if (den == 0) throw ParseError("invalid scalar '" + std::string(whole) + "': zero denominator");
    return Rational(num, den);
  }

  Rational re_{0};
  Rational im_{0};
};

}  // namespace gcok
