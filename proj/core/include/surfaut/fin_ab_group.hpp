#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "surfaut/common.hpp"

namespace surfaut {

// Finitely generated abelian group in canonical invariant-factor form:
// d_1 | d_2 | ... | d_k, every nonzero d_i >= 2, and 0 stands for an
// infinite cyclic factor (anything divides 0, so zeros sit at the end).
// Two groups are isomorphic iff their factor lists are equal.
struct FinAbGroup {
  std::vector<Int> invariant_factors;

  static FinAbGroup trivial() { return {}; }
  static FinAbGroup cyclic(const Int& n);          // n = 0 gives Z
  static FinAbGroup free_abelian(std::size_t rank);
  // (Z/n)^k and friends: canonicalizes an arbitrary factor multiset.
  static FinAbGroup from_factors(std::vector<Int> factors);

  bool is_trivial() const { return invariant_factors.empty(); }
  bool is_finite() const;
  Int order() const;        // 0 when infinite
  std::size_t free_rank() const;

  FinAbGroup direct_sum(const FinAbGroup& other) const;

  // "1", "Z/2", "(Z/2)^2 x Z/4", "Z^2", ...
  std::string to_string() const;

  bool operator==(const FinAbGroup&) const = default;
};

}  // namespace surfaut
