#include "mkpkit/model.hpp"

#include <cmath>
#include <sstream>

namespace mkpkit {

std::string CaseParams::str() const {
  std::ostringstream os;
  os << "(sigma1=" << (sigma1 > 0 ? "+1" : "-1")
     << ", sigma2=" << (sigma2 > 0 ? "+1" : "-1")
     << ", kappa^2=" << kappa_sq.get_str() << ")";
  return os.str();
}

CaseParams make_case(int sigma1, int sigma2, const Rational& kappa_sq) {
  if (sigma1 * sigma1 != 1 || sigma2 * sigma2 != 1)
    throw Error("make_case: sigma1, sigma2 must be +-1");
  if (kappa_sq <= 0) throw Error("make_case: kappa^2 must be positive");
  CaseParams p;
  p.sigma1 = sigma1;
  p.sigma2 = sigma2;
  p.kappa_sq = kappa_sq;
  p.kappa_sq.canonicalize();
  p.kappa = Scalar::sqrt_of(p.kappa_sq);
  return p;
}

JetExpr pde_expression(const CaseParams& params) {
  JetExpr wx = JetExpr::w(0, 1, 0), wy = JetExpr::w(0, 0, 1);
  JetExpr wxx = JetExpr::w(0, 2, 0);
  JetExpr e = JetExpr::w(1, 1, 0);
  e += (wx * wx).scaled(Scalar(params.sigma1)) * wxx;
  e += wy.scaled(params.kappa) * wxx;
  e += JetExpr::w(0, 4, 0);
  e += JetExpr::w(0, 0, 2).scaled(Scalar(params.sigma2));
  return e;
}

bool is_integrable(const CaseParams& params) {
  return params.kappa_sq == 2 && params.sigma1 * params.sigma2 == -1;
}

double SignedSqrt::value() const { return sign * std::sqrt(square.get_d()); }

SignedSqrt SignedSqrt::of_rational(const Rational& q) {
  if (q == 0) throw Error("SignedSqrt: zero factor");
  return SignedSqrt{sgn(q), q * q};
}

namespace {

// product of signed square roots as (sign, square); exact
SignedSqrt ss_mul(const SignedSqrt& a, const SignedSqrt& b) {
  SignedSqrt out;
  out.sign = a.sign * b.sign;
  out.square = a.square * b.square;
  out.square.canonicalize();
  return out;
}

SignedSqrt ss_inv(const SignedSqrt& a) {
  if (a.square == 0) throw Error("SignedSqrt: inverting zero");
  return SignedSqrt{a.sign, Rational(1) / a.square};
}

Rational kappa0_squared(const Scalar& kappa0) {
  Scalar sq = kappa0.squared();
  if (!sq.is_rational())
    throw Error("scale_coefficients: kappa0 must be rational or a pure "
                "rational multiple of a square root");
  return sq.rational_value();
}

}  // namespace

ScaledForm scale_coefficients(const CoefficientSet& coeffs) {
  if (coeffs.alpha == 0 || coeffs.beta == 0 || coeffs.gamma == 0 ||
      coeffs.kappa0.is_zero())
    throw Error("scale_coefficients: all coefficients must be nonzero");

  const Rational& alpha = coeffs.alpha;
  const Rational& beta = coeffs.beta;
  const Rational& gamma = coeffs.gamma;
  Rational k0sq = kappa0_squared(coeffs.kappa0);

  ScaledForm out;
  int s1 = -sgn(alpha * beta);
  int s2 = sgn(gamma * beta);
  Rational ksq = k0sq / abs(alpha * gamma);
  ksq.canonicalize();
  out.params = make_case(s1, s2, ksq);

  // l2 = 1, l1 = 1/beta, l3 = sqrt|gamma/beta|, l4 = sgn(kappa0 beta) sqrt|beta/alpha|
  out.map.lambda2 = SignedSqrt{1, 1};
  out.map.lambda1 = SignedSqrt::of_rational(Rational(1) / beta);
  out.map.lambda3 = SignedSqrt{1, abs(gamma / beta)};
  out.map.lambda3.square.canonicalize();
  out.map.lambda4 =
      SignedSqrt{coeffs.kappa0.sign() * sgn(beta), abs(beta / alpha)};
  out.map.lambda4.square.canonicalize();
  return out;
}

bool verify_scaling(const CoefficientSet& coeffs, const ScaledForm& sf) {
  const Rational& alpha = coeffs.alpha;
  const Rational& beta = coeffs.beta;
  const Rational& gamma = coeffs.gamma;
  const ScalingMap& m = sf.map;
  Rational k0sq = kappa0_squared(coeffs.kappa0);

  // Substituting t -> l1 t, x -> l2 x, y -> l3 y, w -> l4 w into
  //   w_tx - alpha w_x^2 w_xx + kappa0 w_xx w_y + beta w_xxxx + gamma w_yy
  // and normalizing the w_tx coefficient to 1 leaves the coefficients
  //   cubic:    -alpha l1 l4^2 / l2^3
  //   nonlocal:  kappa0 l1 l4 / (l2 l3)
  //   linear:    beta l1 / l2^3
  //   transverse gamma l1 l2 / l3^2
  // which must come out as sigma1, kappa, 1, sigma2. All four are checked
  // exactly: three are rational, the nonlocal one through its square and
  // sign.
  SignedSqrt l1 = m.lambda1, l2 = m.lambda2, l3 = m.lambda3, l4 = m.lambda4;
  SignedSqrt l2cube = ss_mul(ss_mul(l2, l2), l2);

  auto as_rational = [](const SignedSqrt& s) -> Rational {
    if (!is_perfect_square(s.square))
      throw Error("verify_scaling: expected a rational combination");
    return Rational(s.sign) * rational_sqrt(s.square);
  };

  Rational unit = beta * as_rational(ss_mul(l1, ss_inv(l2cube)));
  if (unit != 1) return false;

  Rational c_cubic =
      -alpha * as_rational(ss_mul(ss_mul(l1, ss_mul(l4, l4)), ss_inv(l2cube)));
  if (c_cubic != sf.params.sigma1) return false;

  Rational c_transverse = gamma * as_rational(ss_mul(ss_mul(l1, l2),
                                                     ss_inv(ss_mul(l3, l3))));
  if (c_transverse != sf.params.sigma2) return false;

  // nonlocal coefficient: square must equal kappa^2, sign must be positive
  SignedSqrt ratio = ss_mul(ss_mul(l1, l4), ss_inv(ss_mul(l2, l3)));
  Rational csq = k0sq * ratio.square;
  csq.canonicalize();
  if (csq != sf.params.kappa_sq) return false;
  int csign = coeffs.kappa0.sign() * ratio.sign;
  if (csign != 1) return false;

  // rebuild the transformed equation with the verified exact coefficients
  // and compare canonically against the scaled form
  CaseParams rebuilt = make_case(int(c_cubic.get_d()), int(c_transverse.get_d()),
                                 csq);
  return pde_expression(rebuilt) == pde_expression(sf.params);
}

}  // namespace mkpkit
