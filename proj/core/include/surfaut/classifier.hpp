#pragma once

#include <map>
#include <string>

#include "surfaut/descriptor.hpp"
#include "surfaut/report.hpp"

namespace surfaut::classifier {

struct ClassifyOptions {
  elliptic::NormalizerOptions normalizer;  // forwarded to the brute-force search
};

// Rule engine: applies, in order, every rule matching the descriptor and
// returns the assembled ladder report.  The Kodaira-dimension tag of the
// descriptor is trusted, never inferred.
ClassificationReport classify(const SurfaceDescriptor& desc, const ClassifyOptions& opts = {});

struct Kod1MinimalReport {
  long long n = 0;
  Int genus_b;                                  // (n-2)/2
  std::map<std::string, long long> invariants;  // chi_top, p_g, q, b2
  Int index_lower_bound;                        // [Aut_Q : Aut_Z] >= n
  bool all_swaps_excluded = false;
};
Kod1MinimalReport kod1_minimal_example(long long n);

struct Kod1BlowupReport {
  long long n = 0;
  Int genus_c;             // from the covering datum, >= 2
  FinAbGroup aut_z;        // Z/stabilizer_order
  bool aut_star_trivial = true;
  long long chi_top = 1;   // one point blown up on a chi_top = 0 surface
};
// stabilizer_order defaults to n (the full-stabilizer parameter t0); pass the
// order of Stab_G(t) to move the blown-up point.
Kod1BlowupReport kod1_blowup_example(long long n, const orbifold::OrbifoldSignature& sig,
                                     std::optional<long long> stabilizer_order = std::nullopt);

std::string descriptor_kind_name(const SurfaceDescriptor& desc);

}  // namespace surfaut::classifier
