#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfaut/fin_ab_group.hpp"

namespace surfaut::elliptic {

// Period lattice class of an elliptic curve F = C/(Z + Z*tau), keyed by the
// size of its unit group: square (Gaussian, units of order 4), hexagonal
// (equianharmonic/Fermat, order 6), generic (order 2).
enum class TauClass { generic, square, hexagonal };

const char* tau_name(TauClass tau);
unsigned unit_group_order(TauClass tau);

// 2x2 integer matrix acting on lattice coordinates in the basis (1, tau).
// Convention (documented constants; any faithful integral representation is
// correct up to conjugacy):
//   mult by i   on (1, i):     [[0,-1],[1,0]]
//   mult by w   on (1, w):     [[0,-1],[1,-1]]   (w a primitive cube root)
//   mult by -w:                [[0,1],[-1,1]]    (order 6, generates all units)
struct UnitMatrix {
  std::array<std::array<int, 2>, 2> m{{{1, 0}, {0, 1}}};

  static UnitMatrix identity() { return {}; }
  static UnitMatrix minus_identity() { return {{{{-1, 0}, {0, -1}}}}; }
  static UnitMatrix mult_by_i() { return {{{{0, -1}, {1, 0}}}}; }
  static UnitMatrix mult_by_omega() { return {{{{0, -1}, {1, -1}}}}; }
  static UnitMatrix mult_by_minus_omega() { return {{{{0, 1}, {-1, 1}}}}; }

  UnitMatrix operator*(const UnitMatrix& rhs) const;
  UnitMatrix inverse() const;  // valid for det +-1
  int determinant() const;
  bool operator==(const UnitMatrix&) const = default;
  auto operator<=>(const UnitMatrix&) const = default;
  std::string to_string() const;
};

// The full (cyclic) unit group as matrices; order 2 / 4 / 6.
std::vector<UnitMatrix> unit_group(TauClass tau);

// Torsion point of F in lattice coordinates, each held mod 1 in [0,1).
struct TorsionPoint {
  Rational x, y;

  TorsionPoint() = default;
  TorsionPoint(Rational a, Rational b);  // reduces mod 1

  static TorsionPoint zero() { return {}; }
  static TorsionPoint half(int which);  // 0:(1/2,0) 1:(0,1/2) 2:(1/2,1/2)

  bool is_zero() const { return x == 0 && y == 0; }
  TorsionPoint operator+(const TorsionPoint& rhs) const;
  TorsionPoint operator-() const;
  TorsionPoint transformed(const UnitMatrix& u) const;
  Int order() const;  // exact order in F

  bool operator==(const TorsionPoint&) const = default;
  bool operator<(const TorsionPoint& rhs) const {
    if (x != rhs.x) return x < rhs.x;
    return y < rhs.y;
  }
  std::string to_string() const;  // "(p/q, r/s)"
};

// Automorphism x -> u x + t of the elliptic curve, u a lattice unit and t a
// torsion translation.  Composition law: (u,t)(u',t') = (u u', u t' + t).
struct EllAut {
  UnitMatrix u;
  TorsionPoint t;

  static EllAut identity() { return {}; }
  static EllAut translation(TorsionPoint p) { return {UnitMatrix::identity(), std::move(p)}; }

  EllAut compose(const EllAut& rhs) const;
  EllAut inverse() const;
  EllAut conjugated_by(const EllAut& g) const;  // g * this * g^{-1}
  bool is_translation() const { return u == UnitMatrix::identity(); }
  bool is_identity() const { return is_translation() && t.is_zero(); }

  bool operator==(const EllAut&) const = default;
  bool operator<(const EllAut& rhs) const {
    if (!(u == rhs.u)) return u < rhs.u;
    return t < rhs.t;
  }
  std::string to_string() const;
};

// Closure of a generating set under composition; throws precondition_error if
// the closure exceeds `limit` elements (all groups here are small).
std::vector<EllAut> generated_group(const std::vector<EllAut>& generators, std::size_t limit = 4096);

// One of the seven families (F x E)/G of hyperelliptic surfaces, given by the
// G-action on the elliptic factor F.  Types 3,4 force the square curve,
// 5,6,7 the hexagonal one.  Type 2 needs the 2-torsion translation epsilon.
struct BdFDatum {
  int type_index = 1;
  TauClass tau = TauClass::generic;
  std::vector<EllAut> generators;

  static BdFDatum make(int type_index, TauClass tau,
                       std::optional<TorsionPoint> epsilon = std::nullopt);

  // Group order prescribed for the type: 2, 4, 4, 8, 3, 9, 6.
  static long long prescribed_order(int type_index);
  void validate() const;  // tau compatibility + generated order
};

// Isomorphism-class witness for a small finite group.  `name` is set only
// when (order, element-order multiset, abelian?) pins the class down among
// all groups of that order.
struct FiniteGroupId {
  Int order = 1;
  bool abelian = true;
  std::optional<FinAbGroup> abelian_invariants;  // present iff abelian
  std::map<long long, long long> order_multiset; // element order -> count
  std::optional<std::string> name;

  std::string to_string() const;
  bool operator==(const FiniteGroupId&) const = default;
};

// E[n] = (Z/n)^2.
FinAbGroup torsion_subgroup(const Int& n);

// Ker(Phi_D : E -> E), Phi_D(a) = t_a^* D - D, for deg D = d: again (Z/d)^2.
FinAbGroup phi_d_kernel(const Int& d);

struct NormalizerOptions {
  // Torsion escalation: search translations in E[N], doubling N until the
  // translation subgroup of the normalizer is unchanged across two
  // consecutive doublings.  forced_bound switches to a single round at
  // exactly that modulus.
  long long initial_bound = 48;
  std::optional<long long> forced_bound;
};

struct NormalizerResult {
  FiniteGroupId quotient;               // N_G/G
  std::vector<EllAut> group_elements;   // G, sorted
  std::vector<EllAut> normalizer_elements;  // N_G, sorted
  long long torsion_bound_used = 0;
};

// Brute-force normalizer of G inside Aut(F) = F x| units, and the quotient
// N_G/G identified as a FiniteGroupId.
NormalizerResult normalizer_quotient_full(const BdFDatum& datum, NormalizerOptions opts = {});
FiniteGroupId normalizer_quotient(const BdFDatum& datum, NormalizerOptions opts = {});

struct BdFKey {
  int type_index;
  TauClass tau;
  auto operator<=>(const BdFKey&) const = default;
};

// Every valid (type, curve) pair, each entry computed by normalizer_quotient.
// Type 2 uses the canonical epsilon: (1/2,1/2) on the square curve (the
// unit-invariant choice), (1/2,0) otherwise.
std::map<BdFKey, FiniteGroupId> bdf_table(NormalizerOptions opts = {});

// Canonical datum behind each bdf_table entry.
BdFDatum bdf_table_datum(int type_index, TauClass tau);
std::vector<BdFKey> bdf_valid_pairs();

}  // namespace surfaut::elliptic
