#include "surfaut/ruled.hpp"

#include <algorithm>

namespace surfaut::ruled {

Decomposable::Decomposable(long long d1, long long d2, bool diff_2tors, bool iso)
    : deg1(std::max(d1, d2)), deg2(std::min(d1, d2)),
      difference_nontrivial_2torsion(diff_2tors), summands_isomorphic(iso) {
  if (iso && deg1 != deg2)
    throw precondition_error("isomorphic summands must have equal degree");
  if (iso && diff_2tors)
    throw precondition_error("isomorphic summands have trivial difference class");
}

RuledDesc::RuledDesc(long long genus, std::variant<Decomposable, Indecomposable, StableGiven> b)
    : base_genus(genus), bundle(std::move(b)) {
  if (genus < 0) throw precondition_error("base genus must be >= 0");
  if (const auto* s = std::get_if<StableGiven>(&bundle); s && s->e >= 0)
    throw precondition_error("a stable bundle has e < 0");
  auto check_delta = [&](const std::optional<FinAbGroup>& delta) {
    if (!delta) return;
    for (const Int& d : delta->invariant_factors)
      if (d != 2) throw precondition_error("Delta must be 2-torsion");
    if (static_cast<long long>(delta->invariant_factors.size()) > 2 * genus)
      throw precondition_error("Delta cannot exceed Pic^0(B)[2] = (Z/2)^{2g}");
  };
  if (const auto* i = std::get_if<Indecomposable>(&bundle)) check_delta(i->delta);
  if (const auto* s = std::get_if<StableGiven>(&bundle)) check_delta(s->delta);
}

std::optional<long long> h0_line_bundle(long long deg, long long genus,
                                        std::optional<bool> trivial_when_deg0) {
  if (deg < 0) return 0;
  if (deg == 0) {
    if (!trivial_when_deg0) return std::nullopt;
    return *trivial_when_deg0 ? 1 : 0;
  }
  if (deg > 2 * genus - 2) return deg - genus + 1;
  return std::nullopt;
}

long long invariant_e(const RuledDesc& desc) {
  if (const auto* d = std::get_if<Decomposable>(&desc.bundle)) return d->deg1 - d->deg2;
  if (const auto* i = std::get_if<Indecomposable>(&desc.bundle)) return i->e;
  return std::get<StableGiven>(desc.bundle).e;
}

long long FibreAutGroup::dimension() const {
  switch (kind) {
    case FibreAutKind::cstar: return 1;
    case FibreAutKind::h_r: return r + 1;
    case FibreAutKind::h_prime_r: return r + 2;
    case FibreAutKind::gl2: return 4;
  }
  return 0;
}

std::string FibreAutGroup::to_string() const {
  switch (kind) {
    case FibreAutKind::cstar: return "C*";
    case FibreAutKind::h_r: return "H_" + std::to_string(r);
    case FibreAutKind::h_prime_r: return "H'_" + std::to_string(r);
    case FibreAutKind::gl2: return "GL(2,C)";
  }
  return "?";
}

FibreAutGroup fibre_aut_group(const RuledDesc& desc) {
  const long long e = invariant_e(desc);
  if (e < 0) return {FibreAutKind::cstar, 0};  // stable
  if (const auto* d = std::get_if<Decomposable>(&desc.bundle)) {
    if (d->summands_isomorphic) return {FibreAutKind::gl2, 0};
    // r = h^0(L1^2 (x) det(E)^{-1}); that bundle has degree e, and for e = 0
    // it is the nontrivial class L1 - L2
    const auto r = h0_line_bundle(e, desc.base_genus, e == 0 ? std::optional<bool>(false)
                                                             : std::nullopt);
    if (!r) throw precondition_error("h^0 undetermined by degree data (0 < e <= 2g-2)");
    return {FibreAutKind::h_prime_r, *r};
  }
  // indecomposable with e >= 0: degree-e bundle, triviality unknown at e = 0
  const auto r = h0_line_bundle(e, desc.base_genus);
  if (!r)
    throw precondition_error("h^0 undetermined by degree data for the indecomposable bundle");
  return {FibreAutKind::h_r, *r};
}

std::optional<FinAbGroup> delta_group(const RuledDesc& desc) {
  if (const auto* d = std::get_if<Decomposable>(&desc.bundle)) {
    if (d->summands_isomorphic) return FinAbGroup::trivial();
    // E (x) L = E forces L = L1 - L2 with L^2 trivial, or L = 0
    return d->difference_nontrivial_2torsion ? FinAbGroup::cyclic(2) : FinAbGroup::trivial();
  }
  if (const auto* i = std::get_if<Indecomposable>(&desc.bundle)) return i->delta;
  return std::get<StableGiven>(desc.bundle).delta;
}

ComponentGroupsReport component_groups_genus_ge2(const RuledDesc& desc) {
  if (desc.base_genus < 2)
    throw precondition_error("component_groups_genus_ge2 requires base genus >= 2");
  ComponentGroupsReport rep;
  rep.fibre = fibre_aut_group(desc);
  rep.aut0_dimension = rep.fibre.dimension() - 1;
  rep.gamma_q = delta_group(desc);
  return rep;
}

MaruyamaReport maruyama_report(const RuledDesc& desc) {
  if (desc.base_genus > 1)
    throw precondition_error("maruyama_report requires base genus <= 1");
  MaruyamaReport rep;
  const long long e = invariant_e(desc);

  if (desc.base_genus == 0) {
    if (e > 0) {
      rep.case_label = "1";
      rep.aut_equals_aut0 = true;
      rep.aut_z_equals_aut0 = true;
      rep.sequences = {"1 -> H_" + std::to_string(e + 1) + "/C* -> Aut(X) -> PGL(2,C) -> 1",
                       "Aut(X) = Aut_0(X)"};
    } else {
      rep.case_label = "1 (P1 x P1)";
      rep.sequences = {"Aut_0(X) = Aut_Q(X) = PGL(2,C) x PGL(2,C)",
                       "[Aut(X) : Aut_0(X)] = 2 (the factor swap)"};
    }
    return rep;
  }

  // elliptic base
  if (const auto* d = std::get_if<Decomposable>(&desc.bundle)) {
    if (d->summands_isomorphic) {
      rep.case_label = "2(d)";
      rep.aut_z_equals_aut0 = true;
      rep.sequences = {"Aut(X) = PGL(2,C) x Aut(B)", "Aut_Z(X) = Aut_0(X) = PGL(2,C) x Aut_0(B)"};
      return rep;
    }
    if (e > 0) {
      rep.case_label = "2(a)";
      const auto r = h0_line_bundle(e, 1);
      rep.r = r;
      rep.gamma_z = FinAbGroup::from_factors({Int(e), Int(e)});
      rep.sequences = {"Aut_B(X) = Aut_0(X) = H'_" + std::to_string(r.value_or(-1)) + "/C*",
                       "1 -> Aut_B(X) -> Aut_Z(X) -> Aut_0(B)[e] -> 1",
                       "Aut_0(B)[e] = (Z/" + std::to_string(e) + ")^2"};
      return rep;
    }
    rep.case_label = "2(c)";
    rep.sequences = {"exactly two minimal sections C1, C2",
                     "Aut_0(X) = X \\ (C1 u C2) as an algebraic group",
                     "Aut_B(X) = Aut_0(X) x| Z/2 (the section swap)"};
    return rep;
  }

  // indecomposable over the elliptic base: e = 0 or the odd-degree case
  if (e == 0) {
    rep.case_label = "3(a)";
    rep.aut_z_equals_aut0 = true;
    rep.sequences = {"1 -> C* -> Aut(X) -> Aut(B) -> 1",
                     "Aut_Z(X) = Aut_0(X) = X \\ C (C the unique minimal section),",
                     "a nontrivial extension of Aut_0(B) by C*"};
    return rep;
  }
  if (e == 1) {
    rep.case_label = "3(b)";
    rep.aut_z_equals_aut0 = true;
    rep.delta_inside_aut0 = FinAbGroup::from_factors({2, 2});
    rep.sequences = {"1 -> Delta -> Aut(X) -> Aut(B) -> 1, Delta = Pic^0(B)[2] = (Z/2)^2",
                     "Aut_Z(X) = Aut_0(X), with Delta contained in Aut_0(X)",
                     "1 -> Delta -> Aut_0(X) -> Aut_0(B) -> 1"};
    return rep;
  }
  throw precondition_error("no structure case applies to an indecomposable elliptic bundle with e = " +
                           std::to_string(e));
}

GammaStarBound elliptic_ruled_gamma_star(long long d) {
  if (d < 2 || d % 2 != 0)
    throw precondition_error("elliptic_ruled_gamma_star requires even d >= 2");
  const long long m = d / 2;
  GammaStarBound out;
  out.kernel = FinAbGroup::from_factors({Int(d), Int(d)});
  out.obstruction = ObstructionClass{FinAbGroup::from_factors({2, 2})};
  out.lower_bound = Int(m) * m;
  return out;
}

}  // namespace surfaut::ruled
