#pragma once

#include <memory>
#include <optional>
#include <variant>

#include "surfaut/blowup.hpp"
#include "surfaut/elliptic.hpp"
#include "surfaut/orbifold.hpp"
#include "surfaut/ruled.hpp"

namespace surfaut::classifier {

struct SurfaceDescriptor;

// Iterated blow-up of the plane along the standard chain; `n` as in
// rational_chain_report, `point` locates the final centre.
struct RationalBlowup {
  long long n = 0;
  blowup::ChainPoint point = blowup::ChainPoint::general;
};

struct RuledOverCurve {
  ruled::RuledDesc desc;
};

struct K3 {};
struct Enriques {};
struct Abelian {};

struct Hyperelliptic {
  elliptic::BdFDatum datum;
};

// Unmixed surface isogenous to a product (C1 x E)/G with E elliptic.
// sig is the quotient orbifold of the G-action on C1 (its multiplicities are
// the stabilizer orders).
struct SIPUnmixed {
  orbifold::OrbifoldSignature sig;
  long long genus_c1 = 2;
  long long group_order = 1;
  long long translation_order = 1;  // order of the translation part on E
  bool free_on_c1 = false;
  bool free_on_e = true;

  void validate() const;  // throws precondition_error naming the failed hypothesis
};

// Minimal Kodaira-dimension-1 surface (B x F)/(Z/2), B hyperelliptic with
// n = 2g(B)+2 branch points; n even, >= 6.
struct Kod1MinimalExample {
  long long n = 6;
};

// Blow-up of (C x E)/(Z/n) at a point of the fibre over a full-stabilizer
// parameter; sig is the quotient signature of the Z/n action on C.
struct Kod1BlowupExample {
  long long n = 2;
  orbifold::OrbifoldSignature sig;
};

struct GeneralType {
  long long chi = 1;  // chi(O_X) > 0
};

struct NonMinimal {
  std::shared_ptr<const SurfaceDescriptor> core;
  long long chi_top = 0;
  bool nonpositively_curved_target = false;
};

struct SurfaceDescriptor {
  std::variant<RationalBlowup, RuledOverCurve, K3, Enriques, Abelian, Hyperelliptic,
               SIPUnmixed, Kod1MinimalExample, Kod1BlowupExample, GeneralType, NonMinimal>
      value;
};

}  // namespace surfaut::classifier
