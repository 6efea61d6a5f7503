#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "surfaut/common.hpp"

namespace surfaut::blowup {

// Divisor class h*H + sum e_i*E_i on a blow-up of the plane; intersection
// form diag(1, -1, ..., -1).
struct PicardClass {
  Int h;
  std::vector<Int> e;

  bool operator==(const PicardClass&) const = default;
};

Int intersect(const PicardClass& a, const PicardClass& b);  // throws on length mismatch
PicardClass canonical_class(std::size_t k);                 // (-3; 1,...,1), K^2 = 9 - k
bool is_minus_one_class(const PicardClass& c);              // c^2 = -1 and c.K = -1 (purely numerical)

// Characters of the 1-parameter group sigma_a on the two local coordinates of
// a chart: (u, v) -> (a^{wu} u, a^{wv} v).  (0,0) is the trivial action.
struct WeightedChart {
  long long wu = 0;
  long long wv = 0;
  bool operator==(const WeightedChart&) const = default;
};

// The two standard charts over the blown-up origin:
// (u/v, v) has weights (wu - wv, wv); (u, v/u) has weights (wu, wv - wu).
std::pair<WeightedChart, WeightedChart> blow_up_fixed_point(WeightedChart chart);

enum class PointKind { origin, general_on_axis_u, general_on_axis_v, general_off_axes };

// Stabilizer of a point inside the 1-torus: the full torus or mu_n.
struct StabilizerDesc {
  bool full_torus = false;
  long long n = 1;  // meaningful when !full_torus; Mu(1) is the trivial group

  static StabilizerDesc torus() { return {true, 0}; }
  static StabilizerDesc mu(long long n) { return {false, n}; }
  bool operator==(const StabilizerDesc&) const = default;
  std::string to_string() const;
};

// general_on_axis_v means v = 0 with u generic (and symmetrically); a weight
// of 0 on the active coordinate means the whole torus fixes the point.
StabilizerDesc stabilizer_at(WeightedChart chart, PointKind kind);

// Where the last point of the chain sits on the final exceptional curve.
enum class ChainPoint { general, fixed_on_l4, fixed_on_prev_e };

struct ChainReport {
  long long n = 0;
  WeightedChart final_weights;   // (-(n+1), 1)
  StabilizerDesc aut_q;          // mu_{n+1} at a general point, full torus at the two fixed ones
};

// Runs the iterated blow-up starting from weights (0,1), always following the
// chart that contains the strict transform of the fixed line, through n+1
// steps, then evaluates the stabilizer of the chosen final point.
ChainReport rational_chain_report(long long n, ChainPoint point);

// Stabilizer taxonomy for point configurations in the plane.  Only torus1
// (diag(1,1,a)) and mu_n are ever produced by operations here; `disconnected`
// exists as a tag with no constructor because no operation decides
// connectedness in general.
enum class TorusTaxonomy {
  pgl3,
  aff2,
  torus_by_torus,  // C* x C*
  dilation_group,  // C^2 x| C*
  torus1,          // diag(1,1,a)
  mu_n,
  trivial_group,
  disconnected,
};

struct G4Description {
  TorusTaxonomy tag = TorusTaxonomy::torus1;
  std::string matrix_family;  // "diag(1,1,a), a in C*"
};

// Pointwise stabilizer of the four initial centres: the 1-torus diag(1,1,a).
// Seed of every chain.
G4Description g4_stabilizer();

// Concrete member diag(1,1,a) of the seed torus, for exercising the
// composition law with exact scalars.
struct G4Element {
  Rational a = 1;
  G4Element compose(const G4Element& rhs) const { return {a * rhs.a}; }
  bool is_identity() const { return a == 1; }
  std::vector<Rational> diagonal() const { return {1, 1, a}; }
};

}  // namespace surfaut::blowup
