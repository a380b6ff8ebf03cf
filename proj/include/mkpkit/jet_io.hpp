#pragma once

#include "mkpkit/jet.hpp"

#include <string>

namespace mkpkit {

struct ParseError : Error {
  using Error::Error;
};

/// Symbols the grammar resolves from context: `k` is the case's kappa as a
/// field element, `s1`/`s2` are the concrete signs. Leaving a slot unset
/// makes the corresponding token a parse error.
struct ParseContext {
  bool has_kappa = false;
  Scalar kappa;
  int sigma1 = 0;  // 0 = unset
  int sigma2 = 0;

  static ParseContext plain() { return {}; }
};

/// Deterministic infix form: `w[a,b,c]` for jet variables, `f1`..`f4` with
/// apostrophes for time-function derivatives, `^` for powers, `*` between
/// factors. Coefficients in Q(sqrt(r)) print as `(a+b*k)` so a round trip
/// through parse (with kappa = sqrt(r)) reproduces the expression.
std::string to_text(const JetExpr& e);

/// Whitespace-insensitive parser for the same grammar.
JetExpr parse_jet_expr(const std::string& text, const ParseContext& ctx = {});

}  // namespace mkpkit
