#ifndef NILBASIS_SCALAR_HPP
#define NILBASIS_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "nilbasis/errors.hpp"

namespace nb {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Element of the real quadratic field Q(sqrt(m)): value = rat + surd*sqrt(m).
/// m is a square-free natural number shared per algebra; m = 1 means pure
/// rationals (the surd part is folded into rat on normalization). All
/// arithmetic is exact.
class Scalar {
public:
  Scalar() : rat_(0), surd_(0), m_(1) {}
  Scalar(long v) : rat_(v), surd_(0), m_(1) {}          // NOLINT(google-explicit-constructor)
  Scalar(const BigRat& v) : rat_(v), surd_(0), m_(1) {} // NOLINT(google-explicit-constructor)
  Scalar(BigRat rat, BigRat surd, unsigned radicand)
      : rat_(std::move(rat)), surd_(std::move(surd)), m_(radicand) {
    normalize();
  }
  static Scalar ratio(long p, long q) { return Scalar(BigRat(p, q)); }
  static Scalar sqrt_of(unsigned m) { return Scalar(BigRat(0), BigRat(1), m); }

  const BigRat& rat() const { return rat_; }
  const BigRat& surd() const { return surd_; }
  unsigned radicand() const { return m_; }

  bool is_zero() const { return rat_ == 0 && surd_ == 0; }
  bool is_rational() const { return surd_ == 0; }
  bool is_integer() const {
    return surd_ == 0 && boost::multiprecision::denominator(rat_) == 1;
  }

  /// Denominator of the rational part (1 for integers); only meaningful for
  /// rational values.
  BigInt denominator() const {
    if (!is_rational()) throw IrrationalScaling("denominator of irrational scalar");
    return boost::multiprecision::denominator(rat_);
  }

  Scalar operator-() const { return Scalar(-rat_, -surd_, m_); }
  Scalar operator+(const Scalar& o) const {
    unsigned m = join(o);
    return Scalar(rat_ + o.rat_, surd_ + o.surd_, m);
  }
  Scalar operator-(const Scalar& o) const { return *this + (-o); }
  Scalar operator*(const Scalar& o) const {
    unsigned m = join(o);
    // (a + b sqrt(m))(c + d sqrt(m)) = ac + bd m + (ad + bc) sqrt(m)
    return Scalar(rat_ * o.rat_ + surd_ * o.surd_ * BigRat(m),
                  rat_ * o.surd_ + surd_ * o.rat_, m);
  }
  Scalar inverse() const {
    if (is_zero()) throw SingularMatrix("inverse of zero scalar");
    // (a + b sqrt(m))^-1 = (a - b sqrt(m)) / (a^2 - b^2 m); the denominator
    // vanishes only at zero because m is square-free.
    BigRat den = rat_ * rat_ - surd_ * surd_ * BigRat(m_);
    return Scalar(rat_ / den, -surd_ / den, m_);
  }
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const {
    return rat_ == o.rat_ && surd_ == o.surd_ && (surd_ == 0 || m_ == o.m_);
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Exact sign of rat + surd*sqrt(m).
  int sign() const {
    int sr = rat_.sign(), ss = surd_.sign();
    if (ss == 0) return sr;
    if (sr == 0) return ss;
    if (sr == ss) return sr;
    // Opposite signs: compare |rat|^2 against |surd|^2 * m.
    BigRat lhs = rat_ * rat_, rhs = surd_ * surd_ * BigRat(m_);
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sr : ss;
  }
  bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }
  bool operator>(const Scalar& o) const { return (*this - o).sign() > 0; }
  bool operator<=(const Scalar& o) const { return (*this - o).sign() <= 0; }
  bool operator>=(const Scalar& o) const { return (*this - o).sign() >= 0; }

  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  /// Exact floor (largest integer <= value).
  BigInt floor() const {
    namespace mp = boost::multiprecision;
    if (is_rational()) {
      BigInt num = mp::numerator(rat_), den = mp::denominator(rat_);
      BigInt q = num / den;  // truncation toward zero
      if (num < 0 && q * den != num) --q;
      return q;
    }
    // Bracket with a double guess, then fix up by exact comparisons.
    BigInt guess(static_cast<long long>(std::floor(to_double())));
    while (*this < Scalar(BigRat(guess))) --guess;
    while (*this >= Scalar(BigRat(guess + 1))) ++guess;
    return guess;
  }

  double to_double() const {
    double r = rat_.convert_to<double>();
    double s = surd_.convert_to<double>();
    return r + s * std::sqrt(static_cast<double>(m_));
  }

  /// Canonical text: "p/q" or "p/q+r/s√m" (ASCII "rad" spelled as "√").
  std::string str() const {
    auto frac = [](const BigRat& v) {
      namespace mp = boost::multiprecision;
      std::string s = mp::numerator(v).str();
      if (mp::denominator(v) != 1) s += "/" + mp::denominator(v).str();
      return s;
    };
    if (surd_ == 0) return frac(rat_);
    std::string tail = frac(surd_ < 0 ? BigRat(-surd_) : surd_);
    if (tail == "1") tail.clear();
    tail += "√" + std::to_string(m_);
    if (rat_ == 0) return (surd_ < 0 ? "-" : "") + tail;
    return frac(rat_) + (surd_ < 0 ? "-" : "+") + tail;
  }

private:
  void normalize() {
    if (m_ == 0) throw InputError("radicand must be positive");
    if (m_ == 1) {
      rat_ += surd_;
      surd_ = 0;
    }
  }
  /// Common radicand of two operands; mixing distinct surds is a usage bug.
  unsigned join(const Scalar& o) const {
    if (surd_ == 0) return o.surd_ == 0 ? std::max(m_, o.m_) : o.m_;
    if (o.surd_ == 0) return m_;
    if (m_ != o.m_) throw InputError("mixed radicands in scalar arithmetic");
    return m_;
  }

  BigRat rat_, surd_;
  unsigned m_;
};

inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }

}  // namespace nb

#endif
