#include "mkpkit/jet.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace mkpkit {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(VarKey v, int exp) {
  Monomial m;
  if (exp < 0) throw Error("Monomial: negative exponent");
  if (exp > 0) m.factors_.emplace_back(v, exp);
  return m;
}

int Monomial::exponent(VarKey v) const {
  for (const auto& [key, exp] : factors_)
    if (key == v) return exp;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [key, exp] : factors_) d += exp;
  return d;
}

int Monomial::degree_where(VarKey::Kind kind) const {
  int d = 0;
  for (const auto& [key, exp] : factors_)
    if (key.kind() == kind) d += exp;
  return d;
}

int Monomial::max_jet_order() const {
  int d = 0;
  for (const auto& [key, exp] : factors_)
    if (key.kind() == VarKey::Kind::Jet)
      d = std::max(d, key.jet_index().order());
  return d;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first))
      out.factors_.push_back(*a++);
    else if (a == factors_.end() || b->first < a->first)
      out.factors_.push_back(*b++);
    else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  return out;
}

Monomial Monomial::without(VarKey v, int exp) const {
  Monomial out;
  bool found = false;
  for (const auto& f : factors_) {
    if (f.first == v) {
      found = true;
      if (f.second < exp) throw Error("Monomial: exponent underflow");
      if (f.second > exp) out.factors_.emplace_back(f.first, f.second - exp);
    } else {
      out.factors_.push_back(f);
    }
  }
  if (!found && exp > 0) throw Error("Monomial: variable not present");
  return out;
}

std::strong_ordering Monomial::cmp(const Monomial& lhs, const Monomial& rhs) {
  if (auto c = lhs.total_degree() <=> rhs.total_degree(); c != 0) return c;
  // lex on sorted factor lists: the earlier variable with the larger
  // exponent wins; a variable present beats one absent.
  auto a = lhs.factors_.begin(), b = rhs.factors_.begin();
  while (a != lhs.factors_.end() && b != rhs.factors_.end()) {
    if (a->first != b->first)
      return a->first < b->first ? std::strong_ordering::greater
                                 : std::strong_ordering::less;
    if (a->second != b->second)
      return a->second > b->second ? std::strong_ordering::greater
                                   : std::strong_ordering::less;
    ++a, ++b;
  }
  if (a != lhs.factors_.end()) return std::strong_ordering::greater;
  if (b != rhs.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- JetExpr

namespace {
struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp(a, b) == std::strong_ordering::greater;
  }
};
using TermMap = std::map<Monomial, Scalar, MonoLess>;

JetExpr from_map(TermMap&& acc) {
  JetExpr out;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out += JetExpr::monomial(m, c);
  return out;
}
}  // namespace

JetExpr JetExpr::constant(Scalar c) { return monomial(Monomial::one(), std::move(c)); }

JetExpr JetExpr::variable(VarKey v) { return monomial(Monomial::var(v), Scalar(1)); }

JetExpr JetExpr::monomial(Monomial m, Scalar c) {
  JetExpr e;
  if (!c.is_zero()) e.terms_.emplace_back(std::move(m), std::move(c));
  return e;
}

std::vector<VarKey> JetExpr::variables() const {
  std::set<VarKey> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, exp] : m.factors()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

int JetExpr::max_jet_order() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.max_jet_order());
  return d;
}

JetExpr JetExpr::operator-() const {
  JetExpr out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

JetExpr& JetExpr::operator+=(const JetExpr& o) {
  std::vector<std::pair<Monomial, Scalar>> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end()) {
      merged.push_back(*a++);
    } else if (a == terms_.end()) {
      merged.push_back(*b++);
    } else {
      auto c = Monomial::cmp(a->first, b->first);
      if (c == std::strong_ordering::greater) {
        merged.push_back(*a++);
      } else if (c == std::strong_ordering::less) {
        merged.push_back(*b++);
      } else {
        Scalar s = a->second + b->second;
        if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
        ++a, ++b;
      }
    }
  }
  terms_ = std::move(merged);
  return *this;
}

JetExpr& JetExpr::operator-=(const JetExpr& o) { return *this += -o; }

JetExpr operator*(const JetExpr& a, const JetExpr& b) {
  TermMap acc;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Scalar c = ca * cb;
      if (c.is_zero()) continue;
      auto [it, fresh] = acc.emplace(ma.times(mb), c);
      if (!fresh) it->second += c;
    }
  return from_map(std::move(acc));
}

JetExpr JetExpr::scaled(const Scalar& c) const {
  if (c.is_zero()) return zero();
  JetExpr out = *this;
  for (auto& [m, s] : out.terms_) s *= c;
  return out;
}

JetExpr JetExpr::pow(int e) const {
  if (e < 0) throw Error("JetExpr: negative power");
  JetExpr out = constant(Scalar(1));
  for (int i = 0; i < e; ++i) out *= *this;
  return out;
}

// ------------------------------------------------------------- operations

namespace {

// d(var)/d(dir) as an expression, or zero. Enforces the order cap when a
// new jet variable is created.
JetExpr var_derivative(VarKey v, Dir d, const JetOptions& opts, int cap) {
  switch (v.kind()) {
    case VarKey::Kind::Indep:
      return v.indep_dir() == d ? JetExpr::constant(Scalar(1))
                                : JetExpr::zero();
    case VarKey::Kind::TimeFunc:
      if (d != Dir::T) return JetExpr::zero();
      return JetExpr::variable(VarKey::time_func(v.tf_index(), v.tf_deriv() + 1));
    case VarKey::Kind::Jet: {
      DerivIndex next = v.jet_index().plus(d);
      if (next.order() > cap) {
        std::ostringstream os;
        os << "total_derivative: order cap " << cap << " exceeded at w["
           << next.t << "," << next.x << "," << next.y << "]";
        throw OrderCapError(os.str());
      }
      (void)opts;
      return JetExpr::variable(VarKey::jet(next));
    }
  }
  throw Error("unreachable");
}

JetExpr total_derivative_capped(const JetExpr& e, Dir d, const JetOptions& opts,
                                int cap) {
  TermMap acc;
  for (const auto& [m, c] : e.terms()) {
    for (const auto& [v, exp] : m.factors()) {
      JetExpr dv = var_derivative(v, d, opts, cap);
      if (dv.is_zero()) continue;
      Monomial rest = m.without(v, 1);
      Scalar coef = c * Scalar(exp);
      for (const auto& [dm, dc] : dv.terms()) {
        auto [it, fresh] = acc.emplace(rest.times(dm), coef * dc);
        if (!fresh) it->second += coef * dc;
      }
    }
  }
  return from_map(std::move(acc));
}

}  // namespace

JetExpr total_derivative(const JetExpr& e, Dir d, const JetOptions& opts) {
  return total_derivative_capped(e, d, opts, opts.max_order);
}

JetExpr total_derivative(const JetExpr& e, DerivIndex i, const JetOptions& opts) {
  JetExpr out = e;
  for (int k = 0; k < i.t; ++k) out = total_derivative(out, Dir::T, opts);
  for (int k = 0; k < i.x; ++k) out = total_derivative(out, Dir::X, opts);
  for (int k = 0; k < i.y; ++k) out = total_derivative(out, Dir::Y, opts);
  return out;
}

JetExpr jet_partial(const JetExpr& e, VarKey v) {
  TermMap acc;
  for (const auto& [m, c] : e.terms()) {
    int exp = m.exponent(v);
    if (exp == 0) continue;
    auto [it, fresh] = acc.emplace(m.without(v, 1), c * Scalar(exp));
    if (!fresh) it->second += c * Scalar(exp);
  }
  return from_map(std::move(acc));
}

JetExpr euler_operator(const JetExpr& e, const JetOptions& opts) {
  std::set<DerivIndex> indices;
  for (const auto& [m, c] : e.terms())
    for (const auto& [v, exp] : m.factors())
      if (v.kind() == VarKey::Kind::Jet) indices.insert(v.jet_index());

  JetExpr acc;
  for (const auto& i : indices) {
    JetExpr p = jet_partial(e, VarKey::jet(i));
    if (p.is_zero()) continue;
    JetExpr term = total_derivative(p, i, opts);
    acc += (i.order() % 2 == 0) ? term : -term;
  }
  return acc;
}

Scalar eval_point(const JetExpr& e, const std::map<VarKey, Scalar>& assignment) {
  // collect unbound variables up front for a complete error message
  std::vector<VarKey> unbound;
  for (VarKey v : e.variables())
    if (!assignment.count(v)) unbound.push_back(v);
  if (!unbound.empty()) {
    std::ostringstream os;
    os << "eval_point: " << unbound.size() << " unbound variable(s):";
    for (VarKey v : unbound) {
      switch (v.kind()) {
        case VarKey::Kind::Indep:
          os << " " << "txy"[int(v.indep_dir())];
          break;
        case VarKey::Kind::TimeFunc:
          os << " f" << v.tf_index() << "^(" << v.tf_deriv() << ")";
          break;
        case VarKey::Kind::Jet: {
          auto i = v.jet_index();
          os << " w[" << i.t << "," << i.x << "," << i.y << "]";
          break;
        }
      }
    }
    throw UnboundVariableError(os.str());
  }

  Scalar total(0);
  for (const auto& [m, c] : e.terms()) {
    Scalar term = c;
    for (const auto& [v, exp] : m.factors()) {
      const Scalar& val = assignment.at(v);
      for (int k = 0; k < exp; ++k) term *= val;
    }
    total += term;
  }
  return total;
}

JetExpr substitute(const JetExpr& e, VarKey v, const JetExpr& replacement) {
  // powers of the replacement, grown on demand
  std::vector<JetExpr> powers{JetExpr::constant(Scalar(1))};
  TermMap acc;
  for (const auto& [m, c] : e.terms()) {
    int exp = m.exponent(v);
    while (int(powers.size()) <= exp) powers.push_back(powers.back() * replacement);
    JetExpr piece = JetExpr::monomial(m.without(v, exp), c) * powers[exp];
    for (const auto& [pm, pc] : piece.terms()) {
      auto [it, fresh] = acc.emplace(pm, pc);
      if (!fresh) it->second += pc;
    }
  }
  return from_map(std::move(acc));
}

JetExpr reduce_mod_pde(const JetExpr& e, const JetExpr& g, DerivIndex leading,
                       const JetOptions& opts) {
  VarKey lead = VarKey::jet(leading);
  if (jet_partial(g, lead) != JetExpr::constant(Scalar(1)))
    throw Error("reduce_mod_pde: g must be linear in the leading derivative "
                "with unit coefficient");
  // solved form: w_leading = -rest
  JetExpr rest = g - JetExpr::variable(lead);
  for (VarKey v : rest.variables())
    if (v.kind() == VarKey::Kind::Jet && v.jet_index() != leading &&
        v.jet_index().dominates(leading))
      throw Error("reduce_mod_pde: solved form contains a descendant of the "
                  "leading derivative");

  // descendants may transiently exceed the user cap while the prolonged
  // solved forms are generated; double the cap as the nontermination guard
  JetOptions inner = opts;
  inner.max_order = std::max(2 * opts.max_order, opts.max_order + 8);

  // fully reduced replacement for each descendant, memoized; recursion is
  // well-founded because prolonging by D_t^i D_x^j D_y^k introduces only
  // descendants of strictly smaller t-order
  std::map<DerivIndex, JetExpr> repl;

  auto descendant_in = [&](const JetExpr& f) -> std::optional<DerivIndex> {
    std::optional<DerivIndex> best;
    for (const auto& [m, c] : f.terms())
      for (const auto& [v, exp] : m.factors())
        if (v.kind() == VarKey::Kind::Jet && v.jet_index().dominates(leading)) {
          DerivIndex i = v.jet_index();
          if (!best || *best < i) best = i;
        }
    return best;
  };

  std::function<JetExpr(DerivIndex)> replacement = [&](DerivIndex i) -> JetExpr {
    auto it = repl.find(i);
    if (it != repl.end()) return it->second;
    DerivIndex off{i.t - leading.t, i.x - leading.x, i.y - leading.y};
    JetExpr raw = -total_derivative(rest, off, inner);
    // reduce the prolonged right-hand side itself
    while (auto d = descendant_in(raw))
      raw = substitute(raw, VarKey::jet(*d), replacement(*d));
    repl.emplace(i, raw);
    return raw;
  };

  JetExpr out = e;
  int guard = 0;
  while (auto d = descendant_in(out)) {
    if (++guard > 100000)
      throw OrderCapError("reduce_mod_pde: rewriting did not terminate");
    out = substitute(out, VarKey::jet(*d), replacement(*d));
  }
  return out;
}

}  // namespace mkpkit
