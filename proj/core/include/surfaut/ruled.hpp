#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "surfaut/fin_ab_group.hpp"

namespace surfaut::ruled {

// Rank-2 bundle datum behind a P^1-bundle P(E) -> B.  Line bundles on the
// base are tracked by degree plus explicit torsion flags only; every formula
// used here factors through those.
struct Decomposable {
  long long deg1 = 0;  // ctor sorts so deg1 >= deg2
  long long deg2 = 0;
  bool difference_nontrivial_2torsion = false;  // L1 - L2 a nonzero 2-torsion class
  bool summands_isomorphic = false;

  Decomposable() = default;
  Decomposable(long long d1, long long d2, bool diff_2tors, bool iso);
  bool operator==(const Decomposable&) const = default;
};

struct Indecomposable {
  long long e = 0;                // e = 2 deg L_max - deg E
  long long max_sub_degree = 0;   // deg of the maximal invertible subsheaf
  std::optional<FinAbGroup> delta;  // supplied when known; never guessed
  bool operator==(const Indecomposable&) const = default;
};

struct StableGiven {
  long long e = -1;  // must be negative
  std::optional<FinAbGroup> delta;
  bool operator==(const StableGiven&) const = default;
};

struct RuledDesc {
  long long base_genus = 0;
  std::variant<Decomposable, Indecomposable, StableGiven> bundle;

  RuledDesc(long long genus, std::variant<Decomposable, Indecomposable, StableGiven> b);
  bool operator==(const RuledDesc&) const = default;
};

// h^0 of a degree-`deg` line bundle on a genus-g curve, when degree data
// decides it: deg < 0 -> 0; deg = 0 -> needs the triviality flag;
// deg > 2g-2 -> deg - g + 1 (Riemann-Roch, h^1 = 0); otherwise unknown.
std::optional<long long> h0_line_bundle(long long deg, long long genus,
                                        std::optional<bool> trivial_when_deg0 = std::nullopt);

// e = max{2 deg L - deg E}; -e is the minimal self-intersection of a section.
long long invariant_e(const RuledDesc& desc);

// Fibre-preserving automorphisms of the bundle E itself:
//   stable -> C*; indecomposable -> H_r; decomposable L1 != L2 -> H'_r;
//   L + L -> GL(2).  dim: 1, r+1, r+2, 4.
enum class FibreAutKind { cstar, h_r, h_prime_r, gl2 };

struct FibreAutGroup {
  FibreAutKind kind = FibreAutKind::cstar;
  long long r = 0;
  long long dimension() const;
  std::string to_string() const;
  bool operator==(const FibreAutGroup&) const = default;
};

FibreAutGroup fibre_aut_group(const RuledDesc& desc);  // throws precondition_error on unknown h^0

// Delta = {L in Pic^0(B) : E (x) L = E}, always inside the 2-torsion.
// Unknown (nullopt) for indecomposable/stable bundles unless supplied.
std::optional<FinAbGroup> delta_group(const RuledDesc& desc);

// g(B) >= 2: Aut_Q = Aut_Z = Aut_B(X), Aut_0 = Aut_B(E)/C*,
// Gamma_Q = Gamma_Z = Delta, Gamma_sharp = Gamma_* = 1.
struct ComponentGroupsReport {
  FibreAutGroup fibre;
  long long aut0_dimension = 0;
  std::optional<FinAbGroup> gamma_q;  // = gamma_z = delta; nullopt when Delta unknown
  // gamma_sharp and gamma_star are trivial, always
};
ComponentGroupsReport component_groups_genus_ge2(const RuledDesc& desc);

// Structural restatement of the genus <= 1 case list (some entries are
// non-split extensions that are not resolved into group objects).
struct MaruyamaReport {
  std::string case_label;                  // "1", "1 (P1 x P1)", "2(a)", "2(c)", "2(d)", "3(a)", "3(b)"
  std::vector<std::string> sequences;      // exact sequences / descriptions, verbatim structure
  bool aut_equals_aut0 = false;            // case 1, e > 0
  bool aut_z_equals_aut0 = false;
  std::optional<FinAbGroup> gamma_z;       // 2(a): Aut_0(B)[e] = (Z/e)^2
  std::optional<FinAbGroup> delta_inside_aut0;  // 3(b): (Z/2)^2
  std::optional<long long> r;              // h^0 datum when computed
};
MaruyamaReport maruyama_report(const RuledDesc& desc);

// Pic^0(B)[2]-valued obstruction to lifting a fibrewise PGL(2) section to
// SL(2); order 4 over an elliptic base.
struct ObstructionClass {
  FinAbGroup target;  // (Z/2)^{2g}
  Int order() const { return target.order(); }
};

// X = P(O_E + O_E(D)), deg D = d = 2m > 0: Gamma_* surjects onto an
// index <= 4 subgroup of Ker(Phi_D) = (Z/d)^2, so |Gamma_*| >= m^2.
struct GammaStarBound {
  FinAbGroup kernel;          // (Z/d)^2
  ObstructionClass obstruction;  // (Z/2)^2
  Int lower_bound;            // (d/2)^2
};
GammaStarBound elliptic_ruled_gamma_star(long long d);  // throws unless d even, >= 2

}  // namespace surfaut::ruled
