#pragma once

#include "mkpkit/jet.hpp"
#include "mkpkit/model.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace mkpkit {

enum class MultLabel { Q1, Q2, Q3, Q4 };
enum class LawLabel { CL1, CL2, CL3, CL4 };

std::string to_string(MultLabel l);
std::string to_string(LawLabel l);

/// Low-order conservation-law multiplier (differential order <= 3), with
/// the arbitrary time functions kept as formal symbols f1..f4.
struct Multiplier {
  MultLabel label;
  CaseParams params;
  JetExpr expr;
};

/// (T, X, Y) flux triple together with its multiplier. All four built-in
/// laws are topological: T = 0 identically.
struct ConservationLaw {
  LawLabel label;
  CaseParams params;
  Multiplier multiplier;
  JetExpr T, X, Y;
};

/// Q1, Q2 for every case; Q3, Q4 appear exactly in the integrable case.
std::vector<Multiplier> builtin_multipliers(const CaseParams& params);

/// CL1, CL2 for every case; CL3, CL4 exactly in the integrable case.
std::vector<ConservationLaw> builtin_conservation_laws(const CaseParams& params);

/// Residual of the multiplier determining equation E_w(G*Q). ok iff the
/// residual is the zero polynomial (an identity off solutions).
struct DeterminingReport {
  bool ok = false;
  JetExpr residual;
};
DeterminingReport verify_determining(const Multiplier& q,
                                     const JetOptions& opts = {});

enum class CertMode { Exact, ModuloPde };
std::string to_string(CertMode m);

/// Characteristic identity D_t T + D_x X + D_y Y - G*Q: first tried as an
/// exact canonical identity, then modulo the PDE ideal (leading w_tx).
/// The certifying mode is recorded; on failure the nonzero residual is
/// returned.
struct CharacteristicReport {
  bool ok = false;
  CertMode mode = CertMode::Exact;
  JetExpr residual;
};
CharacteristicReport verify_characteristic(const ConservationLaw& law,
                                           const JetOptions& opts = {});

/// Spatial potential system X = phi_y, Y = -phi_x with the arbitrary
/// function set to 1.
struct PotentialSystem {
  LawLabel source;
  CaseParams params;
  JetExpr phi_x, phi_y;
};
PotentialSystem potential_system(const ConservationLaw& law);

/// D_y(phi_x) - D_x(phi_y) reduced modulo the PDE ideal; zero certifies
/// compatibility on solutions.
JetExpr potential_compatibility_residual(const PotentialSystem& ps,
                                         const JetOptions& opts = {});

/// Substitute concrete polynomials (in t) for the formal time functions:
/// f_i^(k) becomes the k-th derivative of fs[i-1]. Pass JetExpr::zero() to
/// leave slots that do not occur; constants and polynomials in t are the
/// intended instances.
JetExpr instantiate_time_functions(const JetExpr& e,
                                   const std::array<JetExpr, 4>& fs);

/// Verification-report row serialized by the CLI.
struct VerificationRecord {
  std::string label;
  std::string mode;
  bool ok = false;
  std::size_t residual_monomial_count = 0;
  double elapsed_seconds = 0;
};

/// Integrity of the reviewed transcription blob backing the built-ins.
uint64_t builtin_data_checksum();
bool builtin_data_intact();

namespace detail {
extern const char* const kBuiltinLawData;
extern const uint64_t kBuiltinLawChecksum;
}  // namespace detail

}  // namespace mkpkit
