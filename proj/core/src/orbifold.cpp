#include "surfaut/orbifold.hpp"

#include <sstream>
#include <stdexcept>

namespace surfaut::orbifold {

OrbifoldSignature::OrbifoldSignature(long long g, std::vector<long long> mults)
    : genus(g), multiplicities(std::move(mults)) {
  if (g < 0) throw precondition_error("orbifold signature: genus must be >= 0");
  for (long long m : multiplicities)
    if (m < 2) throw precondition_error("orbifold signature: every multiplicity must be >= 2");
}

std::string OrbifoldSignature::to_string() const {
  std::ostringstream os;
  os << "(" << genus << ";";
  for (std::size_t i = 0; i < multiplicities.size(); ++i)
    os << (i ? "," : " ") << multiplicities[i];
  os << ")";
  return os.str();
}

IntMatrix multiple_fibre_relations(const OrbifoldSignature& sig) {
  const std::size_t r = sig.count();
  IntMatrix rel(r, r + 1);
  for (std::size_t i = 0; i < r; ++i) {
    rel.at(i, i) = sig.multiplicities[i];
    rel.at(i, r) = 1;  // the column e = sum e_i
  }
  return rel;
}

FinAbGroup abelianized_orbifold_group(const OrbifoldSignature& sig) {
  const FinAbGroup torsion = cokernel(multiple_fibre_relations(sig));
  return FinAbGroup::free_abelian(2 * static_cast<std::size_t>(sig.genus)).direct_sum(torsion);
}

namespace {

void check_indices(const OrbifoldSignature& sig, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > sig.count() || j > sig.count())
    throw precondition_error("fibre index out of range (indices are 1-based)");
  if (i == j) throw precondition_error("fibre indices must differ");
}

}  // namespace

bool fibre_classes_identified(const OrbifoldSignature& sig, std::size_t i, std::size_t j) {
  check_indices(sig, i, j);
  if (sig.multiplicities[i - 1] != sig.multiplicities[j - 1]) return false;
  std::vector<Int> target(sig.count());
  target[i - 1] = 1;
  target[j - 1] = -1;
  return solve_integer(multiple_fibre_relations(sig), target).has_value();
}

SwapVerdict swap_excluded(const OrbifoldSignature& sig, long long base_genus, std::size_t i,
                          std::size_t j) {
  check_indices(sig, i, j);
  if (base_genus >= 2) return SwapVerdict::excluded_because("base genus >= 2");
  if (sig.multiplicities[i - 1] != sig.multiplicities[j - 1])
    return SwapVerdict::excluded_because("multiplicities differ");
  if (sig.multiplicities[i - 1] != 2)
    return SwapVerdict::excluded_because("multiplicity not 2");
  for (std::size_t k = 0; k < sig.count(); ++k) {
    if (k == i - 1 || k == j - 1) continue;
    if (sig.multiplicities[k] % 2 == 0)
      return SwapVerdict::excluded_because("third even multiplicity");
  }
  return SwapVerdict::not_excluded();
}

Int hurwitz_genus(const Int& group_order, const OrbifoldSignature& quotient_sig) {
  if (group_order < 1) throw precondition_error("hurwitz_genus: group order must be positive");
  for (long long m : quotient_sig.multiplicities)
    if (group_order % m != 0)
      throw precondition_error("hurwitz_genus: multiplicity " + std::to_string(m) +
                               " does not divide the group order");
  // 2g - 2 = |G| (2g' - 2 + sum(1 - 1/m_i))
  Rational rhs = Rational(2 * quotient_sig.genus - 2);
  for (long long m : quotient_sig.multiplicities) rhs += Rational(m - 1, m);
  rhs *= Rational(group_order);
  const Int num = boost::multiprecision::numerator(rhs);
  const Int den = boost::multiprecision::denominator(rhs);
  if (den != 1 || (num + 2) % 2 != 0 || num < -2)
    throw precondition_error("hurwitz_genus: datum is inconsistent (2g-2 = " + to_string(rhs) +
                             " is not an even integer >= -2)");
  return (num + 2) / 2;
}

Rational orbifold_euler(const OrbifoldSignature& sig) {
  Rational chi = Rational(2 - 2 * sig.genus);
  for (long long m : sig.multiplicities) chi -= Rational(m - 1, m);
  return chi;
}

}  // namespace surfaut::orbifold
