#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace idcode {

using Real = boost::multiprecision::cpp_bin_float_50;
using Rational = boost::multiprecision::cpp_rational;

enum class Comparison { less, ambiguous, greater };

// A bound value that stays an exact rational as long as every operand is
// rational, and otherwise falls back to a 50-digit binary float. Comparisons
// against the float form treat differences below a relative 1e-40 as
// ambiguous instead of trusting the last digits.
class Quantity {
 public:
  Quantity() : value_(Rational(0)) {}
  Quantity(Rational r) : value_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Quantity(long long i) : value_(Rational(i)) {}  // NOLINT(google-explicit-constructor)
  static Quantity real(Real r) { return Quantity(std::move(r), 0); }

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational* exact() const { return std::get_if<Rational>(&value_); }
  Real to_real() const;
  double approx() const { return to_real().convert_to<double>(); }

  friend Quantity operator+(const Quantity& a, const Quantity& b);
  friend Quantity operator-(const Quantity& a, const Quantity& b);
  friend Quantity operator*(const Quantity& a, const Quantity& b);
  friend Quantity operator/(const Quantity& a, const Quantity& b);

  friend Comparison compare(const Quantity& a, const Quantity& b);

  // count <= *this, with ambiguous float comparisons resolved in favour of
  // the inequality (an integer cannot equal an irrational bound).
  bool at_least(std::size_t count) const;
  // count >= *this, same tie rule.
  bool at_most(std::size_t count) const;

  std::string str(int digits = 6) const;

 private:
  Quantity(Real r, int) : value_(std::move(r)) {}
  std::variant<Rational, Real> value_;
};

Quantity count(std::size_t c);

// Natural log evaluated to 50 digits.
Quantity ln(const Quantity& x);

// f(d) = (d(ln d - 1) + 1) / (d - 1)^2, continuously extended through d = 1
// (value 1/2) and d = 0 (value 1). Independence-ratio guarantee for
// triangle-free graphs of average degree d.
Real independence_ratio(const Real& d);
double independence_ratio(double d);

}  // namespace idcode
