#pragma once

#include <optional>
#include <vector>

#include "surfaut/fin_ab_group.hpp"
#include "surfaut/int_matrix.hpp"

namespace surfaut {

// u * m * v = d with u, v unimodular and d diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithResult {
  IntMatrix u, d, v;
  std::vector<Int> diagonal() const;
};

// Deterministic Smith normal form: the pivot is always the nonzero entry of
// minimal absolute value in the remaining submatrix, scanned row-major with
// strict improvement, so u and v are reproducible across runs.
SmithResult smith_normal_form(const IntMatrix& m);

// Invariant factors of Z^n / column-span(relations), where n = relations.rows().
// Unit factors are dropped; a 0-row matrix presents the trivial group.
FinAbGroup cokernel(const IntMatrix& relations);

// A particular integer solution of m * x = v, if one exists; decided through
// the Smith form.  v.size() must equal m.rows().
std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& v);

// Same decision, plus the failing coordinate (index into U*v together with the
// diagonal entry that does not divide it) when unsolvable; the CLI prints this
// as the infeasibility certificate.
struct SolveCertificate {
  std::optional<std::vector<Int>> solution;
  // set only when solution is absent
  std::optional<std::size_t> failing_row;
  Int failing_value;    // (U*v)[failing_row]
  Int failing_divisor;  // diagonal entry at failing_row (0 = must vanish)
};
SolveCertificate solve_integer_certificate(const IntMatrix& m, const std::vector<Int>& v);

}  // namespace surfaut
