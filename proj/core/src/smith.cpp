#include "surfaut/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace surfaut {

namespace {

// First nonzero entry of minimal absolute value in the trailing submatrix,
// row-major scan, strict improvement only.  Keeps U, V reproducible.
bool find_pivot(const IntMatrix& d, std::size_t k, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = k; i < d.rows(); ++i)
    for (std::size_t j = k; j < d.cols(); ++j) {
      const Int& e = d.at(i, j);
      if (e == 0) continue;
      Int a = abs(e);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

std::vector<Int> SmithResult::diagonal() const {
  std::vector<Int> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(d.at(k, k));
  return out;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult res{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t k = 0; k < steps; ++k) {
    for (;;) {
      std::size_t pi = k, pj = k;
      if (!find_pivot(d, k, pi, pj)) {
        k = steps;  // trailing block is zero; nothing left to do
        break;
      }
      if (pi != k) {
        d.swap_rows(k, pi);
        u.swap_rows(k, pi);
      }
      if (pj != k) {
        d.swap_cols(k, pj);
        v.swap_cols(k, pj);
      }
      const Int p = d.at(k, k);

      // one Euclidean sweep; truncated division leaves |remainder| < |p|
      for (std::size_t i = k + 1; i < d.rows(); ++i) {
        if (d.at(i, k) == 0) continue;
        const Int q = d.at(i, k) / p;
        d.add_row_multiple(i, k, -q);
        u.add_row_multiple(i, k, -q);
      }
      for (std::size_t j = k + 1; j < d.cols(); ++j) {
        if (d.at(k, j) == 0) continue;
        const Int q = d.at(k, j) / p;
        d.add_col_multiple(j, k, -q);
        v.add_col_multiple(j, k, -q);
      }

      bool clean = true;
      for (std::size_t i = k + 1; clean && i < d.rows(); ++i)
        if (d.at(i, k) != 0) clean = false;
      for (std::size_t j = k + 1; clean && j < d.cols(); ++j)
        if (d.at(k, j) != 0) clean = false;
      if (!clean) continue;  // smaller remainders exist; re-pick the pivot

      // divisibility of the remaining block by the pivot
      bool fixed = false;
      for (std::size_t i = k + 1; !fixed && i < d.rows(); ++i)
        for (std::size_t j = k + 1; !fixed && j < d.cols(); ++j)
          if (d.at(i, j) % p != 0) {
            d.add_row_multiple(k, i, 1);
            u.add_row_multiple(k, i, 1);
            fixed = true;
          }
      if (!fixed) break;  // position k settled
    }
    if (k == steps) break;
  }

  for (std::size_t k = 0; k < steps; ++k)
    if (d.at(k, k) < 0) {
      d.negate_row(k);
      u.negate_row(k);
    }
  return res;
}

FinAbGroup cokernel(const IntMatrix& relations) {
  const std::size_t n = relations.rows();
  const auto snf = smith_normal_form(relations);
  const auto diag = snf.diagonal();
  std::vector<Int> factors;
  std::size_t rank = 0;
  for (const Int& e : diag)
    if (e != 0) {
      ++rank;
      if (e > 1) factors.push_back(e);
    }
  for (std::size_t i = rank; i < n; ++i) factors.push_back(0);
  return FinAbGroup::from_factors(std::move(factors));
}

SolveCertificate solve_integer_certificate(const IntMatrix& m, const std::vector<Int>& v) {
  if (v.size() != m.rows()) throw std::invalid_argument("solve_integer: v has wrong length");
  const auto snf = smith_normal_form(m);
  const std::vector<Int> w = snf.u.apply(v);
  const std::size_t nd = std::min(m.rows(), m.cols());

  std::vector<Int> y(m.cols());
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Int dk = k < nd ? snf.d.at(k, k) : Int(0);
    if (dk == 0) {
      if (w[k] != 0) return {std::nullopt, k, w[k], 0};
    } else {
      if (w[k] % dk != 0) return {std::nullopt, k, w[k], dk};
      y[k] = w[k] / dk;
    }
  }
  return {snf.v.apply(y), std::nullopt, 0, 0};
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& v) {
  return solve_integer_certificate(m, v).solution;
}

}  // namespace surfaut
