#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "surfaut/int_matrix.hpp"
#include "surfaut/smith.hpp"

namespace surfaut::orbifold {

// Base orbifold of a fibration: genus g plus the multiplicities m_i >= 2 of
// the multiple fibres.  The list order carries no meaning; every operation
// here is invariant under permutation of the multiplicities.
struct OrbifoldSignature {
  long long genus = 0;
  std::vector<long long> multiplicities;

  OrbifoldSignature(long long g, std::vector<long long> mults);
  std::size_t count() const { return multiplicities.size(); }
  std::string to_string() const;  // "(g; m1,...,mr)"
};

// Relation columns {m_i e_i : i} plus e = sum_i e_i, on r generators.
IntMatrix multiple_fibre_relations(const OrbifoldSignature& sig);

// Abelianization of
//   <a_1..a_g, b_1..b_g, c_1..c_r | prod [a_i,b_i] c_1...c_r = 1, c_j^{m_j} = 1>,
// i.e. Z^{2g} + coker({m_i e_i} u {sum e_i}).
FinAbGroup abelianized_orbifold_group(const OrbifoldSignature& sig);

// Can c_i and c_j share an image in the abelianized group?  True iff
// e_i - e_j lies in the integral column span of the relation vectors.
// Indices are 1-based (matching the c_1, c_2 labelling).
bool fibre_classes_identified(const OrbifoldSignature& sig, std::size_t i, std::size_t j);

// One-sided criterion: Excluded(reason) means no integrally-trivial
// automorphism can swap the two fibres; NotExcluded asserts nothing more
// (in particular never that a swap is realized).
struct SwapVerdict {
  bool excluded;
  std::string reason;  // empty iff not excluded
  static SwapVerdict not_excluded() { return {false, {}}; }
  static SwapVerdict excluded_because(std::string r) { return {true, std::move(r)}; }
};
SwapVerdict swap_excluded(const OrbifoldSignature& sig, long long base_genus,
                          std::size_t i, std::size_t j);

// Genus of the cover from 2g - 2 = |G| (2g' - 2 + sum(1 - 1/m_i)); throws
// precondition_error when some m_i does not divide |G| or the result is not
// a nonnegative integer (inconsistent datum).
Int hurwitz_genus(const Int& group_order, const OrbifoldSignature& quotient_sig);

// 2 - 2g - sum(1 - 1/m_i), exact.
Rational orbifold_euler(const OrbifoldSignature& sig);

}  // namespace surfaut::orbifold
