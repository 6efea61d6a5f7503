#include "surfaut/fin_ab_group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "surfaut/int_matrix.hpp"
#include "surfaut/smith.hpp"

namespace surfaut {

namespace {

// d_i | d_{i+1} with the convention that every d divides 0, so zeros trail.
bool chain_ok(const std::vector<Int>& f) {
  for (const Int& d : f)
    if (d == 1 || d < 0) return false;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if (f[i] == 0) {
      if (f[i + 1] != 0) return false;  // zeros must trail
    } else if (f[i + 1] != 0 && f[i + 1] % f[i] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

FinAbGroup FinAbGroup::cyclic(const Int& n) {
  if (n < 0) throw std::invalid_argument("cyclic: negative order");
  if (n == 1) return trivial();
  return FinAbGroup{{n}};
}

FinAbGroup FinAbGroup::free_abelian(std::size_t rank) {
  return FinAbGroup{std::vector<Int>(rank, 0)};
}

FinAbGroup FinAbGroup::from_factors(std::vector<Int> factors) {
  std::erase(factors, Int(1));
  for (const Int& d : factors)
    if (d < 0) throw std::invalid_argument("from_factors: negative factor");
  std::stable_partition(factors.begin(), factors.end(), [](const Int& d) { return d != 0; });
  if (chain_ok(factors)) return FinAbGroup{std::move(factors)};

  // canonicalize a general multiset through the Smith form of diag(factors)
  const std::size_t free = std::count(factors.begin(), factors.end(), Int(0));
  std::vector<Int> torsion;
  for (const Int& d : factors)
    if (d != 0) torsion.push_back(d);
  IntMatrix diag(torsion.size(), torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) diag.at(i, i) = torsion[i];
  auto snf = smith_normal_form(diag);
  std::vector<Int> out;
  for (const Int& d : snf.diagonal())
    if (d > 1) out.push_back(d);
  out.insert(out.end(), free, Int(0));
  return FinAbGroup{std::move(out)};
}

bool FinAbGroup::is_finite() const { return free_rank() == 0; }

Int FinAbGroup::order() const {
  Int n = 1;
  for (const Int& d : invariant_factors) {
    if (d == 0) return 0;
    n *= d;
  }
  return n;
}

std::size_t FinAbGroup::free_rank() const {
  return std::count(invariant_factors.begin(), invariant_factors.end(), Int(0));
}

FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& other) const {
  std::vector<Int> all = invariant_factors;
  all.insert(all.end(), other.invariant_factors.begin(), other.invariant_factors.end());
  return from_factors(std::move(all));
}

std::string FinAbGroup::to_string() const {
  if (invariant_factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < invariant_factors.size();) {
    std::size_t j = i;
    while (j < invariant_factors.size() && invariant_factors[j] == invariant_factors[i]) ++j;
    const std::size_t mult = j - i;
    const std::string base =
        invariant_factors[i] == 0 ? "Z" : "Z/" + invariant_factors[i].str();
    if (!first) os << " x ";
    if (mult == 1)
      os << base;
    else if (invariant_factors[i] == 0)
      os << "Z^" << mult;
    else
      os << "(" << base << ")^" << mult;
    first = false;
    i = j;
  }
  return os.str();
}

}  // namespace surfaut
