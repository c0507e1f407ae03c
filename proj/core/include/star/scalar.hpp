#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace star {

using Rational = boost::multiprecision::cpp_rational;

enum class ScalarTag { exact, floating };

/// Coefficient value for all symbolic objects: either an arbitrary-precision
/// rational or a binary64 float.  The two tags never mix silently; arithmetic
/// between mismatched tags throws std::domain_error.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  explicit Scalar(Rational r) : v_(std::move(r)) {}
  explicit Scalar(double d) : v_(d) {}

  static Scalar rat(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    return Scalar(Rational(num, den));
  }
  static Scalar flt(double d) { return Scalar(d); }
  static Scalar zero(ScalarTag tag) {
    return tag == ScalarTag::exact ? rat(0) : flt(0.0);
  }
  static Scalar one(ScalarTag tag) {
    return tag == ScalarTag::exact ? rat(1) : flt(1.0);
  }

  ScalarTag tag() const {
    return std::holds_alternative<Rational>(v_) ? ScalarTag::exact
                                                : ScalarTag::floating;
  }
  bool is_exact() const { return tag() == ScalarTag::exact; }

  const Rational& rational() const {
    if (!is_exact()) throw std::domain_error("Scalar: not rational");
    return std::get<Rational>(v_);
  }
  double value() const {
    return is_exact() ? static_cast<double>(std::get<Rational>(v_))
                      : std::get<double>(v_);
  }

  bool is_zero() const {
    return is_exact() ? rational() == 0 : std::get<double>(v_) == 0.0;
  }

  Scalar operator-() const {
    return is_exact() ? Scalar(Rational(-rational()))
                      : Scalar(-std::get<double>(v_));
  }
  Scalar operator+(const Scalar& o) const {
    check_tag(o);
    return is_exact() ? Scalar(Rational(rational() + o.rational()))
                      : Scalar(value() + o.value());
  }
  Scalar operator-(const Scalar& o) const { return *this + (-o); }
  Scalar operator*(const Scalar& o) const {
    check_tag(o);
    return is_exact() ? Scalar(Rational(rational() * o.rational()))
                      : Scalar(value() * o.value());
  }
  Scalar operator/(const Scalar& o) const {
    check_tag(o);
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    return is_exact() ? Scalar(Rational(rational() / o.rational()))
                      : Scalar(value() / o.value());
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const {
    check_tag(o);
    return is_exact() ? rational() == o.rational() : value() == o.value();
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check_tag(const Scalar& o) const {
    if (tag() != o.tag())
      throw std::domain_error("Scalar: mixed exact/float arithmetic");
  }
  std::variant<Rational, double> v_;
};

}  // namespace star
