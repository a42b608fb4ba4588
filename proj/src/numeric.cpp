#include "idcode/numeric.hpp"

#include <cmath>
#include <sstream>

namespace idcode {

namespace {

const Real& guard() {
  static const Real g("1e-40");
  return g;
}

Real rational_to_real(const Rational& r) {
  return Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r));
}

template <typename Op>
Quantity combine(const Quantity& a, const Quantity& b, Op op) {
  if (a.is_exact() && b.is_exact()) return Quantity(Rational(op(*a.exact(), *b.exact())));
  return Quantity::real(Real(op(a.to_real(), b.to_real())));
}

}  // namespace

Real Quantity::to_real() const {
  if (const auto* r = exact()) return rational_to_real(*r);
  return std::get<Real>(value_);
}

Quantity operator+(const Quantity& a, const Quantity& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Quantity operator-(const Quantity& a, const Quantity& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Quantity operator*(const Quantity& a, const Quantity& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Quantity operator/(const Quantity& a, const Quantity& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

Comparison compare(const Quantity& a, const Quantity& b) {
  if (a.is_exact() && b.is_exact()) {
    const auto& x = *a.exact();
    const auto& y = *b.exact();
    if (x < y) return Comparison::less;
    if (x > y) return Comparison::greater;
    return Comparison::ambiguous;
  }
  const Real x = a.to_real();
  const Real y = b.to_real();
  const Real scale = std::max(Real(1), std::max(abs(x), abs(y)));
  const Real diff = x - y;
  if (abs(diff) <= guard() * scale) return Comparison::ambiguous;
  return diff < 0 ? Comparison::less : Comparison::greater;
}

bool Quantity::at_least(std::size_t c) const {
  return compare(count(c), *this) != Comparison::greater;
}

bool Quantity::at_most(std::size_t c) const {
  return compare(count(c), *this) != Comparison::less;
}

std::string Quantity::str(int digits) const {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << to_real().convert_to<double>();
  return os.str();
}

Quantity count(std::size_t c) { return Quantity(Rational(static_cast<unsigned long long>(c))); }

Quantity ln(const Quantity& x) { return Quantity::real(log(x.to_real())); }

Real independence_ratio(const Real& d) {
  if (d == 0) return Real(1);
  const Real t = d - 1;
  if (abs(t) < Real("0.01")) {
    // (d ln d - d + 1) / (d-1)^2 = sum_{k>=2} (-1)^k t^(k-2) / (k(k-1))
    Real sum = 0;
    Real power = 1;
    for (int k = 2; k < 40; ++k) {
      const Real term = power / (k * (k - 1));
      sum += (k % 2 == 0) ? term : Real(-term);
      power *= t;
    }
    return sum;
  }
  return (d * (log(d) - 1) + 1) / (t * t);
}

double independence_ratio(double d) {
  if (d == 0.0) return 1.0;
  const double t = d - 1.0;
  if (std::abs(t) < 1e-3) {
    double sum = 0.0;
    double power = 1.0;
    for (int k = 2; k < 12; ++k) {
      const double term = power / (k * (k - 1));
      sum += (k % 2 == 0) ? term : -term;
      power *= t;
    }
    return sum;
  }
  return (d * (std::log(d) - 1.0) + 1.0) / (t * t);
}

}  // namespace idcode
