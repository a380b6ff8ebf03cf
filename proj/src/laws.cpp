#include "mkpkit/laws.hpp"

#include "mkpkit/jet_io.hpp"

#include <map>
#include <sstream>

namespace mkpkit {

std::string to_string(MultLabel l) {
  switch (l) {
    case MultLabel::Q1: return "Q1";
    case MultLabel::Q2: return "Q2";
    case MultLabel::Q3: return "Q3";
    case MultLabel::Q4: return "Q4";
  }
  return "?";
}

std::string to_string(LawLabel l) {
  switch (l) {
    case LawLabel::CL1: return "CL1";
    case LawLabel::CL2: return "CL2";
    case LawLabel::CL3: return "CL3";
    case LawLabel::CL4: return "CL4";
  }
  return "?";
}

std::string to_string(CertMode m) {
  return m == CertMode::Exact ? "exact" : "modulo-PDE";
}

// ------------------------------------------------------------ data loading

namespace {

uint64_t fnv1a(const char* data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (const char* p = data; *p; ++p) {
    h ^= uint64_t(uint8_t(*p));
    h *= 0x100000001b3ULL;
  }
  return h;
}

// section name -> raw expression text
const std::map<std::string, std::string>& data_sections() {
  static const std::map<std::string, std::string> sections = [] {
    std::map<std::string, std::string> out;
    std::istringstream in(detail::kBuiltinLawData);
    std::string line, name, body;
    auto flush = [&] {
      if (!name.empty()) out[name] = body;
      body.clear();
    };
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] == '@') {
        flush();
        name = line.substr(1);
      } else {
        body += line;
        body += '\n';
      }
    }
    flush();
    return out;
  }();
  return sections;
}

JetExpr load_expr(const std::string& name, const CaseParams& params) {
  if (!builtin_data_intact())
    throw Error("builtin law data failed its checksum; transcription edited "
                "without re-review");
  ParseContext ctx;
  ctx.has_kappa = true;
  ctx.kappa = params.kappa;
  ctx.sigma1 = params.sigma1;
  ctx.sigma2 = params.sigma2;
  auto it = data_sections().find(name);
  if (it == data_sections().end())
    throw Error("builtin law data: missing section " + name);
  return parse_jet_expr(it->second, ctx);
}

}  // namespace

uint64_t builtin_data_checksum() { return fnv1a(detail::kBuiltinLawData); }

bool builtin_data_intact() {
  return builtin_data_checksum() == detail::kBuiltinLawChecksum;
}

// -------------------------------------------------------------- built-ins

std::vector<Multiplier> builtin_multipliers(const CaseParams& params) {
  std::vector<Multiplier> out;
  out.push_back({MultLabel::Q1, params, load_expr("Q1", params)});
  out.push_back({MultLabel::Q2, params, load_expr("Q2", params)});
  if (is_integrable(params)) {
    out.push_back({MultLabel::Q3, params, load_expr("Q3", params)});
    out.push_back({MultLabel::Q4, params, load_expr("Q4", params)});
  }
  return out;
}

std::vector<ConservationLaw> builtin_conservation_laws(const CaseParams& params) {
  auto mults = builtin_multipliers(params);
  std::vector<ConservationLaw> out;
  auto add = [&](LawLabel label, const Multiplier& q, const char* xn,
                 const char* yn) {
    out.push_back({label, params, q, JetExpr::zero(), load_expr(xn, params),
                   load_expr(yn, params)});
  };
  add(LawLabel::CL1, mults[0], "X1", "Y1");
  add(LawLabel::CL2, mults[1], "X2", "Y2");
  if (is_integrable(params)) {
    add(LawLabel::CL3, mults[2], "X3", "Y3");
    add(LawLabel::CL4, mults[3], "X4", "Y4");
  }
  return out;
}

// ----------------------------------------------------------- verification

DeterminingReport verify_determining(const Multiplier& q, const JetOptions& opts) {
  JetExpr residual = euler_operator(pde_expression(q.params) * q.expr, opts);
  return {residual.is_zero(), residual};
}

CharacteristicReport verify_characteristic(const ConservationLaw& law,
                                           const JetOptions& opts) {
  JetExpr lhs = total_derivative(law.T, Dir::T, opts) +
                total_derivative(law.X, Dir::X, opts) +
                total_derivative(law.Y, Dir::Y, opts);
  JetExpr residual = lhs - pde_expression(law.params) * law.multiplier.expr;
  if (residual.is_zero()) return {true, CertMode::Exact, residual};
  JetExpr reduced =
      reduce_mod_pde(residual, pde_expression(law.params), pde_leading(), opts);
  return {reduced.is_zero(), CertMode::ModuloPde, reduced};
}

PotentialSystem potential_system(const ConservationLaw& law) {
  std::array<JetExpr, 4> ones = {
      JetExpr::constant(Scalar(1)), JetExpr::constant(Scalar(1)),
      JetExpr::constant(Scalar(1)), JetExpr::constant(Scalar(1))};
  PotentialSystem ps;
  ps.source = law.label;
  ps.params = law.params;
  ps.phi_y = instantiate_time_functions(law.X, ones);
  ps.phi_x = -instantiate_time_functions(law.Y, ones);
  return ps;
}

JetExpr potential_compatibility_residual(const PotentialSystem& ps,
                                         const JetOptions& opts) {
  JetExpr mixed = total_derivative(ps.phi_x, Dir::Y, opts) -
                  total_derivative(ps.phi_y, Dir::X, opts);
  return reduce_mod_pde(mixed, pde_expression(ps.params), pde_leading(), opts);
}

JetExpr instantiate_time_functions(const JetExpr& e,
                                   const std::array<JetExpr, 4>& fs) {
  // k-th t-derivatives of the instances, grown on demand
  std::array<std::vector<JetExpr>, 4> chains;
  for (int i = 0; i < 4; ++i) chains[i].push_back(fs[i]);
  JetOptions opts;

  JetExpr out = e;
  // repeatedly substitute the highest-derivative symbols first so lower
  // ones introduced by polynomial instances are untouched (polynomials in
  // t contain no f symbols, so a single pass over the occurring symbols is
  // enough)
  for (VarKey v : e.variables()) {
    if (v.kind() != VarKey::Kind::TimeFunc) continue;
    int i = v.tf_index() - 1;
    int k = v.tf_deriv();
    auto& chain = chains[i];
    while (int(chain.size()) <= k)
      chain.push_back(total_derivative(chain.back(), Dir::T, opts));
    out = substitute(out, v, chain[k]);
  }
  return out;
}

}  // namespace mkpkit
