#include "mkpkit/scalar.hpp"

#include <cmath>
#include <sstream>

namespace mkpkit {

bool is_perfect_square(const Rational& q) {
  if (q < 0) return false;
  Rational c = q;
  c.canonicalize();
  return mpz_perfect_square_p(c.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(c.get_den().get_mpz_t());
}

Rational rational_sqrt(const Rational& q) {
  if (!is_perfect_square(q)) throw Error("rational_sqrt: not a perfect square");
  Rational c = q;
  c.canonicalize();
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), c.get_num().get_mpz_t());
  mpz_sqrt(den.get_mpz_t(), c.get_den().get_mpz_t());
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Scalar::Scalar(Rational a, Rational b, Rational r)
    : a_(std::move(a)), b_(std::move(b)), r_(std::move(r)) {
  a_.canonicalize();
  b_.canonicalize();
  r_.canonicalize();
  if (b_ != 0) {
    if (r_ <= 0) throw Error("Scalar: radicand must be positive");
    if (is_perfect_square(r_)) {
      // collapse to a plain rational
      a_ += b_ * rational_sqrt(r_);
      b_ = 0;
      r_ = 0;
    }
  }
  normalize();
}

Scalar Scalar::sqrt_of(const Rational& r) {
  if (r < 0) throw Error("Scalar::sqrt_of: negative radicand");
  if (is_perfect_square(r)) return Scalar(rational_sqrt(r));
  return Scalar(Rational(0), Rational(1), r);
}

void Scalar::normalize() {
  if (b_ == 0) r_ = 0;
}

const Rational& Scalar::merge_radicand(const Scalar& x, const Scalar& y) {
  if (x.b_ == 0) return y.r_;
  if (y.b_ == 0) return x.r_;
  if (x.r_ != y.r_)
    throw FieldMismatchError("Scalar: mixing sqrt(" + x.r_.get_str() +
                             ") with sqrt(" + y.r_.get_str() + ")");
  return x.r_;
}

const Rational& Scalar::rational_value() const {
  if (!is_rational()) throw Error("Scalar: not rational: " + str());
  return a_;
}

int Scalar::sign() const {
  if (b_ == 0) return sgn(a_);
  if (a_ == 0) return sgn(b_);
  // sign of a + b*sqrt(r): compare a^2 with b^2 r when signs differ
  int sa = sgn(a_), sb = sgn(b_);
  if (sa == sb) return sa;
  Rational lhs = a_ * a_, rhs = b_ * b_ * r_;
  if (lhs == rhs) return 0;
  return (lhs > rhs) ? sa : sb;
}

double Scalar::to_double() const {
  double v = a_.get_d();
  if (b_ != 0) v += b_.get_d() * std::sqrt(r_.get_d());
  return v;
}

std::string Scalar::str() const {
  if (b_ == 0) return a_.get_str();
  std::ostringstream os;
  Rational ab = ::abs(b_);
  os << "(" << a_.get_str() << (b_ > 0 ? "+" : "-")
     << ab.get_str() << "*sqrt(" << r_.get_str() << "))";
  return os.str();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  Rational r = merge_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  r_ = r;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  Rational r = merge_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  r_ = r;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational r = merge_radicand(*this, o);
  Rational a = a_ * o.a_;
  if (b_ != 0 && o.b_ != 0) a += b_ * o.b_ * r;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  r_ = std::move(r);
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("Scalar: division by zero");
  if (b_ == 0) return Scalar(Rational(1) / a_);
  // (a + b sqrt(r))^-1 = (a - b sqrt(r)) / (a^2 - b^2 r); the norm is
  // nonzero because r is a non-square.
  Rational norm = a_ * a_ - b_ * b_ * r_;
  return Scalar(a_ / norm, -b_ / norm, r_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

}  // namespace mkpkit
