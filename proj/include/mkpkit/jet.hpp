#pragma once

#include "mkpkit/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mkpkit {

struct OrderCapError : Error {
  using Error::Error;
};
struct UnboundVariableError : Error {
  using Error::Error;
};

enum class Dir : int { T = 0, X = 1, Y = 2 };

/// Multi-index of a jet variable w_{t^a x^b y^c}. (0,0,0) is w itself.
/// Comparison is lexicographic on (t, x, y).
struct DerivIndex {
  int t = 0, x = 0, y = 0;

  int order() const { return t + x + y; }
  DerivIndex plus(Dir d) const {
    DerivIndex out = *this;
    (d == Dir::T ? out.t : d == Dir::X ? out.x : out.y) += 1;
    return out;
  }
  /// Componentwise difference if *this >= base in every slot.
  bool dominates(const DerivIndex& base) const {
    return t >= base.t && x >= base.x && y >= base.y;
  }
  friend auto operator<=>(const DerivIndex&, const DerivIndex&) = default;
};

/// A symbol appearing in a jet-space monomial: an independent variable
/// t/x/y, a formal time-function symbol f_i^(k), or a jet variable w_I.
/// The kind ordering (indep < time function < jet) plus the in-kind
/// orderings fix the canonical variable order used everywhere.
class VarKey {
 public:
  enum class Kind : uint8_t { Indep = 0, TimeFunc = 1, Jet = 2 };

  static VarKey indep(Dir d) { return VarKey(Kind::Indep, int(d), 0, 0); }
  static VarKey time_func(int index, int deriv) {
    if (index < 1 || index > 4 || deriv < 0)
      throw Error("VarKey: time function index out of range");
    return VarKey(Kind::TimeFunc, index, deriv, 0);
  }
  static VarKey jet(DerivIndex i) { return VarKey(Kind::Jet, i.t, i.x, i.y); }

  Kind kind() const { return kind_; }
  Dir indep_dir() const { return Dir(a_); }
  int tf_index() const { return a_; }
  int tf_deriv() const { return b_; }
  DerivIndex jet_index() const { return DerivIndex{a_, b_, c_}; }

  friend auto operator<=>(const VarKey&, const VarKey&) = default;

 private:
  VarKey(Kind k, int a, int b, int c) : kind_(k), a_(a), b_(b), c_(c) {}
  Kind kind_;
  int a_, b_, c_;
};

/// Power product of VarKeys, kept sorted with positive exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial var(VarKey v, int exp = 1);

  bool is_one() const { return factors_.empty(); }
  int exponent(VarKey v) const;
  int total_degree() const;
  int degree_where(VarKey::Kind kind) const;
  /// Largest jet-variable order appearing (0 if none).
  int max_jet_order() const;

  Monomial times(const Monomial& o) const;
  /// Divide out v^exp; exponent must be present.
  Monomial without(VarKey v, int exp) const;

  const std::vector<std::pair<VarKey, int>>& factors() const {
    return factors_;
  }

  /// Graded lexicographic: total degree first, then lex on the exponent
  /// vector in canonical variable order.
  static std::strong_ordering cmp(const Monomial& lhs, const Monomial& rhs);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<VarKey, int>> factors_;
};

/// Exact multivariate polynomial over jet variables, independent variables
/// and formal time-function symbols. Terms are held sorted (leading
/// monomial first), merged and zero-free, so structural equality is
/// canonical-form equality.
class JetExpr {
 public:
  JetExpr() = default;

  static JetExpr zero() { return JetExpr(); }
  static JetExpr constant(Scalar c);
  static JetExpr variable(VarKey v);
  static JetExpr monomial(Monomial m, Scalar c);

  // convenience constructors used throughout the test suite
  static JetExpr w(int t, int x, int y) {
    return variable(VarKey::jet({t, x, y}));
  }
  static JetExpr indep(Dir d) { return variable(VarKey::indep(d)); }
  static JetExpr tf(int index, int deriv = 0) {
    return variable(VarKey::time_func(index, deriv));
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<Monomial, Scalar>>& terms() const {
    return terms_;
  }

  /// All distinct variables occurring in the expression.
  std::vector<VarKey> variables() const;
  int max_jet_order() const;

  JetExpr operator-() const;
  JetExpr& operator+=(const JetExpr& o);
  JetExpr& operator-=(const JetExpr& o);
  friend JetExpr operator+(JetExpr a, const JetExpr& b) { return a += b; }
  friend JetExpr operator-(JetExpr a, const JetExpr& b) { return a -= b; }
  friend JetExpr operator*(const JetExpr& a, const JetExpr& b);
  JetExpr& operator*=(const JetExpr& o) { return *this = *this * o; }
  JetExpr scaled(const Scalar& c) const;
  JetExpr pow(int e) const;

  friend bool operator==(const JetExpr&, const JetExpr&) = default;

 private:
  std::vector<std::pair<Monomial, Scalar>> terms_;
};

struct JetOptions {
  /// Cap on the total order of any jet variable an operation may create.
  int max_order = 8;
};

/// Total derivative D_t, D_x or D_y. Time-function symbols advance their
/// derivative chain under D_t and are constant under D_x, D_y.
JetExpr total_derivative(const JetExpr& e, Dir d, const JetOptions& opts = {});
/// D_t^a D_x^b D_y^c.
JetExpr total_derivative(const JetExpr& e, DerivIndex i,
                         const JetOptions& opts = {});

/// Formal partial derivative treating every VarKey as an independent
/// coordinate.
JetExpr jet_partial(const JetExpr& e, VarKey v);

/// Variational derivative E_w(e) = sum_I (-1)^|I| D_I (de/dw_I).
JetExpr euler_operator(const JetExpr& e, const JetOptions& opts = {});

/// Exact evaluation; the assignment must bind every variable in e.
Scalar eval_point(const JetExpr& e, const std::map<VarKey, Scalar>& assignment);

/// Substitute replacement for every occurrence of v (expanding powers).
JetExpr substitute(const JetExpr& e, VarKey v, const JetExpr& replacement);

/// Normal form of e modulo the differential ideal of g, where g is solved
/// for its leading derivative (g must be linear in w_leading with unit
/// coefficient). Every descendant w_{leading+I} is rewritten through the
/// prolonged solved form until none remain; the result is canonical and
/// the map is idempotent. Intermediate rewriting may create derivatives
/// above opts.max_order; an internal guard of twice the cap bounds it.
JetExpr reduce_mod_pde(const JetExpr& e, const JetExpr& g, DerivIndex leading,
                       const JetOptions& opts = {});

}  // namespace mkpkit
