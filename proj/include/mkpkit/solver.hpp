#pragma once

#include "mkpkit/laws.hpp"
#include "mkpkit/model.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mkpkit {

/// Monomial-basis bounds for the multiplier ansatz. The polynomial part in
/// (t, x, y) is capped by max_poly_degree; with ladder_closure on, the cap
/// widens to total degree max_poly_degree + 1 while the t-degree stays at
/// max_poly_degree. The widening covers the derivative ladder of
/// t-dependent multipliers, whose spatial companions carry one more power
/// than the time function they accompany (y^2 f', y w_x f and the like),
/// so every built-in multiplier instantiated with f of degree
/// <= max_poly_degree lies in the closed basis span.
struct AnsatzBounds {
  int max_jet_order = 3;
  int max_jet_degree = 3;
  int max_poly_degree = 1;
  bool ladder_closure = true;
};

struct Ansatz {
  AnsatzBounds bounds;
  std::vector<Monomial> basis;  // deduplicated, canonically ordered
};

Ansatz build_ansatz(const AnsatzBounds& bounds = {});

/// Exact linear system: column j holds the canonical coefficients of
/// E_w(G * basis[j]). Row provenance (which jet monomial each row carries)
/// is kept for diagnostics.
struct DeterminingSystem {
  CaseParams params;
  Ansatz ansatz;
  std::vector<Monomial> row_monomials;
  std::vector<std::vector<std::pair<int, Scalar>>> columns;  // sorted by row

  std::size_t nonzeros() const;
};

DeterminingSystem assemble_system(const CaseParams& params, const Ansatz& ansatz,
                                  const JetOptions& opts = {});

/// Canonical kernel basis of the determining system: primitive, leading
/// coefficient positive, ordered deterministically.
struct KernelBasis {
  CaseParams params;
  Ansatz ansatz;
  std::vector<std::vector<Scalar>> vectors;  // dense over the ansatz basis
  std::vector<Multiplier> multipliers;       // the same vectors as JetExprs

  int dimension() const { return int(vectors.size()); }
};

KernelBasis nullspace(const DeterminingSystem& sys);

/// Exact membership of an expression in the kernel span. The expression
/// must be supported on the ansatz basis; returns false otherwise.
bool in_kernel_span(const KernelBasis& kernel, const JetExpr& q);

struct ScanEntry {
  Rational kappa_sq;
  int sigma1, sigma2;
  int dimension;
};

/// Nullspace dimensions over a grid of kappa^2 values and sign pairs,
/// deduplicated; cases run in parallel.
std::vector<ScanEntry> case_scan(std::vector<Rational> kappa_sqs,
                                 const std::vector<std::pair<int, int>>& sign_pairs,
                                 const AnsatzBounds& bounds = {});

/// Scaling weight (t:3, x:1, y:2, w_I: -(3a+b+2c)) under which the
/// determining operator is homogeneous of degree -4; the system
/// block-diagonalizes over it.
int scaling_weight(const Monomial& m);

}  // namespace mkpkit
