#pragma once

// Exact scalars: GMP rationals plus the quadratic extension Q(sqrt 2).

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace a2l2 {

/// Library-wide error type. Every precondition violation throws this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational, always kept in lowest terms.
using Scalar = mpq_class;

inline Scalar rat(long num, long den = 1) {
  if (den == 0) throw Error("rat: zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

inline bool is_integer(const Scalar& x) { return x.get_den() == 1; }

/// "p/q" or "p"; the wire form used by reports and dumps.
inline std::string to_string(const Scalar& x) { return x.get_str(); }

inline Scalar parse_scalar(const std::string& s) {
  Scalar q;
  if (q.set_str(s, 10) != 0) throw Error("parse_scalar: bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error("parse_scalar: zero denominator");
  q.canonicalize();
  return q;
}

/// binom(1/2, k) = (1/2)(1/2 - 1)...(1/2 - k + 1) / k!
inline Scalar binom_half(int k) {
  Scalar r = 1;
  for (int i = 0; i < k; ++i) {
    r *= Scalar(rat(1, 2) - i);
    r /= i + 1;
  }
  return r;
}

/// a + b*sqrt(2) with rational a, b.
struct QuadScalar {
  Scalar rat_part = 0;
  Scalar surd = 0;

  QuadScalar() = default;
  QuadScalar(const Scalar& a) : rat_part(a) {}  // NOLINT(implicit)
  QuadScalar(const Scalar& a, const Scalar& b) : rat_part(a), surd(b) {}

  static QuadScalar sqrt2() { return {0, 1}; }

  bool is_rational() const { return is_zero(surd); }

  friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
    return {Scalar(x.rat_part + y.rat_part), Scalar(x.surd + y.surd)};
  }
  friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) {
    return {Scalar(x.rat_part - y.rat_part), Scalar(x.surd - y.surd)};
  }
  friend QuadScalar operator-(const QuadScalar& x) { return {Scalar(-x.rat_part), Scalar(-x.surd)}; }
  friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
    return {Scalar(x.rat_part * y.rat_part + 2 * x.surd * y.surd),
            Scalar(x.rat_part * y.surd + x.surd * y.rat_part)};
  }
  QuadScalar& operator+=(const QuadScalar& y) { return *this = *this + y; }
  QuadScalar& operator-=(const QuadScalar& y) { return *this = *this - y; }
  QuadScalar& operator*=(const QuadScalar& y) { return *this = *this * y; }

  /// Exact division; the norm a^2 - 2b^2 of a nonzero element is never zero.
  friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) {
    Scalar norm = y.rat_part * y.rat_part - 2 * y.surd * y.surd;
    if (is_zero(norm)) throw Error("QuadScalar: division by zero");
    QuadScalar conj{y.rat_part, Scalar(-y.surd)};
    QuadScalar num = x * conj;
    return {Scalar(num.rat_part / norm), Scalar(num.surd / norm)};
  }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.rat_part == y.rat_part && x.surd == y.surd;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadScalar& x) {
    os << x.rat_part;
    if (!x.is_rational()) os << (sgn(x.surd) < 0 ? " - " : " + ") << abs(x.surd) << "*sqrt2";
    return os;
  }
};

inline bool is_zero(const QuadScalar& x) { return is_zero(x.rat_part) && is_zero(x.surd); }

}  // namespace a2l2
