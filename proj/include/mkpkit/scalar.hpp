#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mkpkit {

using Rational = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatchError : Error {
  using Error::Error;
};

/// True iff q is the square of a rational.
bool is_perfect_square(const Rational& q);

/// Exact rational square root; requires is_perfect_square(q) and q >= 0.
Rational rational_sqrt(const Rational& q);

/// Element of Q or of a real quadratic extension Q(sqrt(r)),
/// stored as a + b*sqrt(r) with rational a, b.
///
/// Invariants: b == 0 implies r == 0 (plain rational); b != 0 implies r is a
/// positive non-square rational, so Q(sqrt(r)) is a field and the
/// representation is unique. sqrt_of() collapses perfect squares to plain
/// rationals, which keeps the non-square invariant without user care.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), r_(0) {}
  Scalar(long n) : a_(n), b_(0), r_(0) {}
  Scalar(int n) : a_(n), b_(0), r_(0) {}
  Scalar(Rational q) : a_(std::move(q)), b_(0), r_(0) { a_.canonicalize(); }
  Scalar(Rational a, Rational b, Rational r);

  /// The element sqrt(r), exact. Rational when r is a perfect square.
  static Scalar sqrt_of(const Rational& r);

  const Rational& rat_part() const { return a_; }
  const Rational& irr_part() const { return b_; }
  const Rational& radicand() const { return r_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return b_ == 0 && a_ == 1; }
  bool is_rational() const { return b_ == 0; }

  /// Requires is_rational().
  const Rational& rational_value() const;

  /// Sign of the real value a + b*sqrt(r): -1, 0, +1.
  int sign() const;

  double to_double() const;
  std::string str() const;

  Scalar operator-() const { return Scalar(-a_, -b_, r_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ &&
           (x.b_ == 0 || y.b_ == 0 || x.r_ == y.r_);
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  Scalar inverse() const;
  Scalar squared() const { return *this * *this; }
  /// Conjugate a - b*sqrt(r).
  Scalar conj() const { return Scalar(a_, -b_, r_); }
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

 private:
  // merge the radicands of two operands, throwing on genuine mismatch
  static const Rational& merge_radicand(const Scalar& x, const Scalar& y);
  void normalize();

  Rational a_, b_, r_;
};

}  // namespace mkpkit
