#include "surfaut/classifier.hpp"

#include <sstream>

namespace surfaut::classifier {

namespace {

using elliptic::FiniteGroupId;

const FinAbGroup kTrivial = FinAbGroup::trivial();

// Rule citations.  The anchor is the statement the rule encodes.
const RuleCite R1{"R1", "K3: Aut_Q(X) = {id_X} (Burns-Rapoport)"};
const RuleCite R2{"R2", "Enriques: |Aut_Q(X)| <= 4 and |Aut_Z(X)| <= 2, both bounds sharp"};
const RuleCite R3{"R3", "abelian surface: Aut_Q(X) = Aut_0(X) = X, acting by translations"};
const RuleCite R4{"R4",
                  "hyperelliptic: Aut_Z(X) = Aut_0(X) = E, and Aut_Q(X)/Aut_Z(X) = N_G/G with "
                  "N_G the normalizer of G in Aut(F)"};
const RuleCite R5a{"R5", "kappa = 0: Aut_sharp(X) = Aut_0(X)"};
const RuleCite R5b{"R5", "kappa = 0: [Aut_Q(X) : Aut_0(X)] <= 12"};
const RuleCite R6{"R6", "general type with chi(O_X) >= 189: |Aut_Q(X)| <= 4"};
const RuleCite R7{"R7", "rational surface: Aut_*(X) = Aut_Z(X) = Aut_Q(X)"};
const RuleCite R7chain{"R7",
                       "iterated plane blow-up chain: Aut_Q = mu_{n+1} at a general point of the "
                       "last exceptional curve, the full torus diag(1,1,a) at its two fixed points"};
const RuleCite R8{"R8",
                  "unmixed SIP with elliptic factor E, G translating E freely, stabilizer orders "
                  "on C1 not of the shape (2,2,odd,...): Aut_Z(X) = Aut_0(X) = E"};
const RuleCite R9{"R9",
                  "chi_top(X) != 0 plus a generically finite map onto a nonpositively curved "
                  "target: Aut_sharp(X) = {id_X}"};
const RuleCite R10ge2{"R10",
                      "P^1-bundle over genus >= 2: Gamma_Q = Gamma_Z = Delta, while Gamma_sharp "
                      "and Gamma_* are trivial"};
const RuleCite R10tf{"R10", "P^1-bundle: H^*(X,Z) is torsion-free, so Aut_Q(X) = Aut_Z(X)"};
const RuleCite R10low{"R10", "P^1-bundle over genus <= 1: structure case list"};
const RuleCite R10gs{"R10",
                     "P(O + O(D)) over an elliptic curve, deg D = d = 2m > 0: Gamma_*(X) maps "
                     "onto an index <= 4 subgroup of Ker(Phi_D) = (Z/d)^2, so |Gamma_*| >= m^2"};
const RuleCite R11min{"R11",
                      "minimal kappa = 1 family: a cyclic group of order n acts trivially on "
                      "rational but not integral cohomology, so [Aut_Q(X) : Aut_Z(X)] >= n"};
const RuleCite R11blow{"R11",
                       "kappa = 1 blow-up family: Aut_Z(X) = Stab_G(t) at the blown-up fibre, "
                       "and Aut_*(X) = {id_X} by the rigidity rule"};

bool kappa_zero(const SurfaceDescriptor& desc) {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, K3> || std::is_same_v<T, Enriques> ||
                      std::is_same_v<T, Abelian> || std::is_same_v<T, Hyperelliptic>) {
          return true;
        } else if constexpr (std::is_same_v<T, NonMinimal>) {
          return v.core && kappa_zero(*v.core);
        } else {
          return false;
        }
      },
      desc.value);
}

void set_all_quotients_trivial(ClassificationReport& rep, const RuleCite& cite) {
  report_set(rep, slot::gamma_star, kTrivial, cite);
  report_set(rep, slot::gamma_sharp_over_star, kTrivial, cite);
  report_set(rep, slot::gamma_z_over_sharp, kTrivial, cite);
  report_set(rep, slot::gamma_q_over_z, kTrivial, cite);
  report_set(rep, slot::gamma_z, kTrivial, cite);
  report_set(rep, slot::gamma_q, kTrivial, cite);
  report_set(rep, slot::index_q_over_0, Cardinal{1}, cite);
}

// Aut_Z = Aut_0 collapses everything below Aut_Z.
void set_lower_ladder_trivial(ClassificationReport& rep, const RuleCite& cite) {
  report_set(rep, slot::gamma_star, kTrivial, cite);
  report_set(rep, slot::gamma_sharp_over_star, kTrivial, cite);
  report_set(rep, slot::gamma_z_over_sharp, kTrivial, cite);
  report_set(rep, slot::gamma_z, kTrivial, cite);
}

void apply_kappa_zero_rules(ClassificationReport& rep) {
  // Aut_sharp = Aut_0: the two lowest component groups vanish
  report_set(rep, slot::gamma_star, kTrivial, R5a);
  report_set(rep, slot::gamma_sharp_over_star, kTrivial, R5a);
  report_set(rep, slot::index_q_over_0, Bound{Bound::Rel::at_most, 12}, R5b);
}

// (2,2,odd,...) stabilizer shape, phrased through the swap criterion: some
// pair of fibres survives every exclusion over a genus <= 1 base.
bool has_unexcluded_pair_shape(const orbifold::OrbifoldSignature& sig) {
  for (std::size_t i = 1; i <= sig.count(); ++i)
    for (std::size_t j = i + 1; j <= sig.count(); ++j)
      if (!orbifold::swap_excluded(sig, 0, i, j).excluded) return true;
  return false;
}

struct Classifier {
  ClassificationReport rep;
  ClassifyOptions opts;

  void operator()(const K3&) {
    for (const char* s : {slot::aut0, slot::aut_star, slot::aut_sharp, slot::aut_z, slot::aut_q})
      report_set(rep, s, kTrivial, R1);
    set_all_quotients_trivial(rep, R1);
    apply_kappa_zero_rules(rep);
  }

  void operator()(const Enriques&) {
    report_set(rep, slot::order_aut_q, Bound{Bound::Rel::at_most, 4}, R2);
    report_set(rep, slot::order_aut_z, Bound{Bound::Rel::at_most, 2}, R2);
    rep.notes.push_back("both Enriques bounds are attained by known examples");
    apply_kappa_zero_rules(rep);
  }

  void operator()(const Abelian&) {
    const Symbolic x{"X (the surface itself, acting by translations)"};
    for (const char* s : {slot::aut0, slot::aut_star, slot::aut_sharp, slot::aut_z, slot::aut_q})
      report_set(rep, s, x, R3);
    set_all_quotients_trivial(rep, R3);
    apply_kappa_zero_rules(rep);
  }

  void operator()(const Hyperelliptic& h) {
    const auto result = elliptic::normalizer_quotient_full(h.datum, opts.normalizer);
    const Symbolic e{"E (the elliptic factor, acting by translations)"};
    for (const char* s : {slot::aut0, slot::aut_star, slot::aut_sharp, slot::aut_z})
      report_set(rep, s, e, R4);
    set_lower_ladder_trivial(rep, R4);
    report_set(rep, slot::gamma_q_over_z, result.quotient, R4);
    report_set(rep, slot::gamma_q, result.quotient, R4);
    report_set(rep, slot::index_q_over_0, Cardinal{result.quotient.order}, R4);
    apply_kappa_zero_rules(rep);
    if (result.quotient.order == 12)
      rep.notes.push_back(
          "maximum attained: [Aut_Q : Aut_0] = 12, the hexagonal curve with G of order 2");
  }

  void operator()(const GeneralType& g) {
    if (g.chi < 1) throw precondition_error("general type requires chi(O_X) >= 1");
    if (g.chi >= 189) {
      report_set(rep, slot::order_aut_q, Bound{Bound::Rel::at_most, 4}, R6);
    } else {
      rep.notes.push_back(
          "general type: |Aut_Q(X)| is finite; the <= 4 bound applies once chi(O_X) >= 189");
    }
  }

  void operator()(const RationalBlowup& r) {
    const auto chain = blowup::rational_chain_report(r.n, r.point);
    if (chain.aut_q.full_torus) {
      const Symbolic torus{"C* (the seed torus diag(1,1,a))"};
      for (const char* s : {slot::aut0, slot::aut_star, slot::aut_sharp, slot::aut_z, slot::aut_q})
        report_set(rep, s, torus, R7chain);
      set_all_quotients_trivial(rep, R7chain);
    } else {
      const FinAbGroup mu = FinAbGroup::cyclic(chain.aut_q.n);
      report_set(rep, slot::aut0, kTrivial, R7chain);
      for (const char* s : {slot::aut_star, slot::aut_z, slot::aut_q})
        report_set(rep, s, mu, R7);
      report_set(rep, slot::aut_sharp, mu, R7);  // sandwiched between Aut_* and Aut_Z
      report_set(rep, slot::gamma_star, mu, R7);
      report_set(rep, slot::gamma_q, mu, R7);
      report_set(rep, slot::gamma_sharp_over_star, kTrivial, R7);
      report_set(rep, slot::gamma_z_over_sharp, kTrivial, R7);
      report_set(rep, slot::gamma_q_over_z, kTrivial, R7);
      report_set(rep, slot::index_q_over_0, Cardinal{chain.aut_q.n}, R7chain);
    }
    std::ostringstream os;
    os << "chain of length n+1 = " << chain.n + 1 << ": final chart weights (" << chain.final_weights.wu
       << ", " << chain.final_weights.wv << ")";
    rep.notes.push_back(os.str());
  }

  void operator()(const RuledOverCurve& rc) {
    const auto& d = rc.desc;
    report_set(rep, slot::gamma_q_over_z, kTrivial, R10tf);
    if (d.base_genus >= 2) {
      const auto cg = ruled::component_groups_genus_ge2(d);
      report_set(rep, slot::gamma_star, kTrivial, R10ge2);
      report_set(rep, slot::gamma_sharp_over_star, kTrivial, R10ge2);
      report_set(rep, slot::aut_q, Symbolic{"Aut_B(X) (fibre-preserving automorphisms)"}, R10ge2);
      report_set(rep, slot::aut_z, Symbolic{"Aut_B(X) (fibre-preserving automorphisms)"}, R10ge2);
      {
        std::ostringstream os;
        os << cg.fibre.to_string() << "/C*, dimension " << cg.aut0_dimension;
        report_set(rep, slot::aut0, Symbolic{os.str()}, R10ge2);
      }
      if (cg.gamma_q) {
        report_set(rep, slot::gamma_z_over_sharp, *cg.gamma_q, R10ge2);
        report_set(rep, slot::gamma_z, *cg.gamma_q, R10ge2);
        report_set(rep, slot::gamma_q, *cg.gamma_q, R10ge2);
        report_set(rep, slot::index_q_over_0, Cardinal{cg.gamma_q->order()}, R10ge2);
      } else {
        rep.notes.push_back("Delta unknown for this bundle datum; Gamma_Q = Gamma_Z left open");
      }
      return;
    }

    const auto mr = ruled::maruyama_report(d);
    rep.notes.push_back("structure case " + mr.case_label);
    for (const auto& s : mr.sequences) rep.notes.push_back(s);
    if (mr.aut_equals_aut0 || mr.case_label == "1 (P1 x P1)") {
      // every component group in the ladder collapses
      set_all_quotients_trivial(rep, R10low);
    }
    if (mr.aut_z_equals_aut0) set_lower_ladder_trivial(rep, R10low);
    if (mr.gamma_z) {  // elliptic decomposable, e > 0
      report_set(rep, slot::gamma_z, *mr.gamma_z, R10low);
      report_set(rep, slot::gamma_q, *mr.gamma_z, R10low);
      report_set(rep, slot::index_q_over_0, Cardinal{mr.gamma_z->order()}, R10low);
    }
    if (mr.delta_inside_aut0)
      rep.notes.push_back("Delta = Pic^0(B)[2] = " + mr.delta_inside_aut0->to_string() +
                          " sits inside Aut_0(X)");
    const long long e = ruled::invariant_e(d);
    if (d.base_genus == 1 && std::holds_alternative<ruled::Decomposable>(d.bundle) &&
        !std::get<ruled::Decomposable>(d.bundle).summands_isomorphic && e > 0 && e % 2 == 0) {
      const auto gs = ruled::elliptic_ruled_gamma_star(e);
      report_set(rep, slot::order_gamma_star, Bound{Bound::Rel::at_least, gs.lower_bound}, R10gs);
      rep.notes.push_back("translation kernel Ker(Phi_D) = " + gs.kernel.to_string() +
                          ", lifting obstruction group of order " + gs.obstruction.order().str());
    }
  }

  void operator()(const SIPUnmixed& s) {
    s.validate();
    if (s.free_on_e)
      rep.notes.push_back(
          "components of Aut_Q act on the elliptic factor by translations (unmixed SIP, E free)");
    if (s.genus_c1 >= 2 && s.free_on_c1)
      rep.notes.push_back(
          "Aut_Q(X) is represented by pairs (id_C1, h2) with h2 in Z_G, the centralizer of G in "
          "Aut(C2)");
    const bool bad_shape = s.genus_c1 >= 2 && has_unexcluded_pair_shape(s.sig);
    if (s.free_on_e && !bad_shape) {
      const Symbolic e{"E (the elliptic factor, acting by translations)"};
      report_set(rep, slot::aut0, e, R8);
      report_set(rep, slot::aut_z, e, R8);
      set_lower_ladder_trivial(rep, R8);
    } else if (s.free_on_e && bad_shape) {
      rep.notes.push_back(
          "stabilizer orders on C1 have the shape (2,2,odd,...): the swap criterion does not "
          "exclude a double-fibre swap, no rule pins Aut_Z down");
    }
  }

  void operator()(const Kod1MinimalExample& k) {
    const auto ex = kod1_minimal_example(k.n);
    rep.invariants = ex.invariants;
    report_set(rep, slot::index_q_over_z, Bound{Bound::Rel::at_least, ex.index_lower_bound},
               R11min);
    const Symbolic e{"F (the elliptic factor, acting by translations)"};
    report_set(rep, slot::aut0, e, R8);
    report_set(rep, slot::aut_z, e, R8);
    set_lower_ladder_trivial(rep, R8);
    std::ostringstream os;
    os << "base B hyperelliptic of genus " << ex.genus_b << "; the " << ex.n
       << " double fibres admit no integrally-trivial swap (third even multiplicity)";
    rep.notes.push_back(os.str());
  }

  void operator()(const Kod1BlowupExample& k) {
    const auto ex = kod1_blowup_example(k.n, k.sig);
    rep.invariants["chi_top"] = ex.chi_top;
    report_set(rep, slot::aut_z, ex.aut_z, R11blow);
    report_set(rep, slot::gamma_z_over_sharp, ex.aut_z, R11blow);
    report_set(rep, slot::gamma_z, ex.aut_z, R11blow);
    for (const char* s : {slot::aut0, slot::aut_star, slot::aut_sharp})
      report_set(rep, s, kTrivial, R9);
    report_set(rep, slot::gamma_star, kTrivial, R9);
    report_set(rep, slot::gamma_sharp_over_star, kTrivial, R9);
    std::ostringstream os;
    os << "covering curve C of genus " << ex.genus_c << "; blow-up sits on the full-stabilizer fibre";
    rep.notes.push_back(os.str());
  }

  void operator()(const NonMinimal& nm) {
    if (!nm.core) throw precondition_error("non-minimal descriptor needs a core descriptor");
    rep.invariants["chi_top"] = nm.chi_top;
    rep.notes.push_back("core: " + descriptor_kind_name(*nm.core));
    if (nm.chi_top != 0 && nm.nonpositively_curved_target) {
      for (const char* s : {slot::aut0, slot::aut_star, slot::aut_sharp})
        report_set(rep, s, kTrivial, R9);
      report_set(rep, slot::gamma_star, kTrivial, R9);
      report_set(rep, slot::gamma_sharp_over_star, kTrivial, R9);
    }
  }
};

}  // namespace

ClassificationReport classify(const SurfaceDescriptor& desc, const ClassifyOptions& opts) {
  Classifier c;
  c.opts = opts;
  std::visit(c, desc.value);
  if (kappa_zero(desc) && !std::holds_alternative<K3>(desc.value) &&
      !std::holds_alternative<Enriques>(desc.value) &&
      !std::holds_alternative<Abelian>(desc.value) &&
      !std::holds_alternative<Hyperelliptic>(desc.value)) {
    apply_kappa_zero_rules(c.rep);  // non-minimal surface over a kappa = 0 core
  }
  return std::move(c.rep);
}

void SIPUnmixed::validate() const {
  if (group_order < 1) throw precondition_error("group order must be positive");
  if (translation_order < 1 || group_order % translation_order != 0)
    throw precondition_error(
        "translation order must divide the group order (diagonal translation action on E)");
  if (free_on_c1 && !sig.multiplicities.empty())
    throw precondition_error("a free action on C1 admits no multiple fibres in its signature");
  const Int g = orbifold::hurwitz_genus(group_order, sig);
  if (g != genus_c1)
    throw precondition_error("covering datum is inconsistent: the signature and group order give "
                             "g(C1) = " + g.str() + ", descriptor says " +
                             std::to_string(genus_c1));
}

Kod1MinimalReport kod1_minimal_example(long long n) {
  if (n < 6 || n % 2 != 0)
    throw precondition_error("n = 2g(B)+2 must be an even integer >= 6, got " + std::to_string(n));
  const orbifold::OrbifoldSignature sig(0, std::vector<long long>(n, 2));
  Kod1MinimalReport rep;
  rep.n = n;
  rep.genus_b = orbifold::hurwitz_genus(2, sig);

  rep.all_swaps_excluded = true;
  for (std::size_t i = 1; i <= sig.count() && rep.all_swaps_excluded; ++i)
    for (std::size_t j = i + 1; j <= sig.count(); ++j)
      if (!orbifold::swap_excluded(sig, 0, i, j).excluded) {
        rep.all_swaps_excluded = false;
        break;
      }
  if (!rep.all_swaps_excluded)
    throw precondition_error("internal inconsistency: a double-fibre swap is not excluded");

  rep.invariants = {{"b2", 2}, {"chi_top", 0}, {"kappa", 1}, {"p_g", 0}, {"q", 1}};
  rep.index_lower_bound = n;
  return rep;
}

Kod1BlowupReport kod1_blowup_example(long long n, const orbifold::OrbifoldSignature& sig,
                                     std::optional<long long> stabilizer_order) {
  if (n < 1) throw precondition_error("the cyclic order n must be positive");
  bool has_fixed_point = false;
  for (long long m : sig.multiplicities)
    if (m == n) has_fixed_point = true;
  if (n == 1) has_fixed_point = true;
  if (!has_fixed_point)
    throw precondition_error("no multiplicity equals n = " + std::to_string(n) +
                             ": the generator has no fixed point on C");
  if (sig.genus < 1)
    throw precondition_error("the quotient C/G must have genus >= 1, got genus " +
                             std::to_string(sig.genus));
  const Int g = orbifold::hurwitz_genus(n, sig);
  if (g < 2)
    throw precondition_error("the covering curve C must have genus >= 2, the datum gives g(C) = " +
                             g.str());
  const long long stab = stabilizer_order.value_or(n);
  if (stab < 1 || n % stab != 0)
    throw precondition_error("stabilizer order must divide n");

  Kod1BlowupReport rep;
  rep.n = n;
  rep.genus_c = g;
  rep.aut_z = FinAbGroup::cyclic(stab);
  rep.aut_star_trivial = true;
  rep.chi_top = 1;
  return rep;
}

std::string descriptor_kind_name(const SurfaceDescriptor& desc) {
  struct Namer {
    std::string operator()(const RationalBlowup&) const { return "rational_blowup"; }
    std::string operator()(const RuledOverCurve&) const { return "ruled"; }
    std::string operator()(const K3&) const { return "k3"; }
    std::string operator()(const Enriques&) const { return "enriques"; }
    std::string operator()(const Abelian&) const { return "abelian"; }
    std::string operator()(const Hyperelliptic&) const { return "hyperelliptic"; }
    std::string operator()(const SIPUnmixed&) const { return "sip_unmixed"; }
    std::string operator()(const Kod1MinimalExample&) const { return "kod1_minimal"; }
    std::string operator()(const Kod1BlowupExample&) const { return "kod1_blowup"; }
    std::string operator()(const GeneralType&) const { return "general_type"; }
    std::string operator()(const NonMinimal&) const { return "non_minimal"; }
  };
  return std::visit(Namer{}, desc.value);
}

}  // namespace surfaut::classifier
