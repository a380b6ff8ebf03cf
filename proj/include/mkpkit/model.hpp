#pragma once

#include "mkpkit/jet.hpp"

#include <string>

namespace mkpkit {

/// One member of the scaled family
///   w_tx + (sigma1 w_x^2 + kappa w_y) w_xx + w_xxxx + sigma2 w_yy = 0,
/// sigma1, sigma2 = +-1, kappa > 0.
struct CaseParams {
  int sigma1 = 1;
  int sigma2 = 1;
  Scalar kappa = Scalar(1);
  Rational kappa_sq = 1;

  std::string str() const;
};

/// Build a case from its signs and kappa^2 (kept exact; kappa itself lives
/// in Q or in Q(sqrt(kappa_sq)) as needed).
CaseParams make_case(int sigma1, int sigma2, const Rational& kappa_sq);

/// G = w_tx + (sigma1 w_x^2 + kappa w_y) w_xx + w_xxxx + sigma2 w_yy
/// in canonical form; linear in w_tx with unit coefficient.
JetExpr pde_expression(const CaseParams& params);

inline DerivIndex pde_leading() { return DerivIndex{1, 1, 0}; }

/// kappa^2 = 2 together with sigma1*sigma2 = -1.
bool is_integrable(const CaseParams& params);

/// Unscaled potential-form coefficients: alpha, beta, gamma rational and
/// nonzero; kappa0 nonzero rational or a pure rational multiple of a square
/// root (so kappa0^2 stays rational).
struct CoefficientSet {
  Rational alpha, beta, gamma;
  Scalar kappa0;
};

/// sign * sqrt(square): exact bookkeeping for scaling factors whose squares
/// are rational even when the factors themselves are not.
struct SignedSqrt {
  int sign = 1;
  Rational square = 1;

  double value() const;
  static SignedSqrt of_rational(const Rational& q);
};

/// t -> l1 t, x -> l2 x, y -> l3 y, w -> l4 w carrying the unscaled
/// potential equation onto the scaled form. l1 < 0 absorbs negative beta
/// (time reversal); the sign of l4 fixes kappa > 0.
struct ScalingMap {
  SignedSqrt lambda1, lambda2, lambda3, lambda4;
};

struct ScaledForm {
  CaseParams params;
  ScalingMap map;
};

/// Normalize a coefficient set: sigma1 = -sign(alpha beta),
/// sigma2 = sign(gamma beta), kappa = |kappa0| / sqrt(|alpha gamma|),
/// plus the explicit scaling map realizing the normalization.
ScaledForm scale_coefficients(const CoefficientSet& coeffs);

/// Exact check that the map carries the unscaled potential equation onto
/// pde_expression(sf.params): the transformed equation is rebuilt with
/// exact coefficients and compared in canonical form.
bool verify_scaling(const CoefficientSet& coeffs, const ScaledForm& sf);

}  // namespace mkpkit
