#include <doctest.h>

#include "surfaut/ruled.hpp"

using namespace surfaut;
using namespace surfaut::ruled;

TEST_CASE("h0_line_bundle by degree") {
  CHECK(h0_line_bundle(-3, 5) == 0);
  CHECK(h0_line_bundle(0, 2, true) == 1);
  CHECK(h0_line_bundle(0, 2, false) == 0);
  CHECK_FALSE(h0_line_bundle(0, 2).has_value());
  CHECK(h0_line_bundle(4, 1) == 4);   // elliptic base, positive degree
  CHECK(h0_line_bundle(3, 2) == 2);   // 3 - 2 + 1
  CHECK(h0_line_bundle(1, 0) == 2);   // P^1
  CHECK_FALSE(h0_line_bundle(2, 2).has_value());  // 0 < deg <= 2g-2
}

TEST_CASE("invariant e") {
  CHECK(invariant_e({0, Decomposable(0, 0, false, true)}) == 0);
  CHECK(invariant_e({1, Decomposable(4, 0, false, false)}) == 4);
  // constructor pre-sorts, so the summand order cannot flip the sign
  CHECK(invariant_e({1, Decomposable(0, 4, false, false)}) == 4);
  CHECK(invariant_e({2, StableGiven{-1, {}}}) == -1);
  CHECK(invariant_e({1, Indecomposable{0, 0, {}}}) == 0);
  CHECK_THROWS_AS(RuledDesc(2, StableGiven{0, {}}), precondition_error);
  CHECK_THROWS_AS(Decomposable(1, 0, false, true), precondition_error);
}

TEST_CASE("fibre automorphism groups of the bundle") {
  CHECK(fibre_aut_group({2, StableGiven{-1, {}}}) == FibreAutGroup{FibreAutKind::cstar, 0});
  // decomposable over an elliptic base, degrees (m, 0): H'_r with r = h^0(m) = m
  for (long long m = 1; m <= 5; ++m)
    CHECK(fibre_aut_group({1, Decomposable(m, 0, false, false)}) ==
          FibreAutGroup{FibreAutKind::h_prime_r, m});
  CHECK(fibre_aut_group({1, Decomposable(2, 2, false, true)}) ==
        FibreAutGroup{FibreAutKind::gl2, 0});
  // indecomposable elliptic bundle with e = 0: degree-0 twist undetermined
  CHECK_THROWS_AS((void)fibre_aut_group({1, Indecomposable{0, 0, {}}}), precondition_error);
  // genus 2, decomposable with 0 < e <= 2g-2: h^0 not decided by degree
  CHECK_THROWS_AS((void)fibre_aut_group({2, Decomposable(1, -1, false, false)}),
                  precondition_error);

  CHECK(FibreAutGroup{FibreAutKind::cstar, 0}.dimension() == 1);
  CHECK(FibreAutGroup{FibreAutKind::h_r, 3}.dimension() == 4);
  CHECK(FibreAutGroup{FibreAutKind::h_prime_r, 3}.dimension() == 5);
  CHECK(FibreAutGroup{FibreAutKind::gl2, 0}.dimension() == 4);
}

TEST_CASE("Delta") {
  CHECK(delta_group({1, Decomposable(2, 2, false, true)}) == FinAbGroup::trivial());
  CHECK(delta_group({3, Decomposable(0, 0, true, false)}) == FinAbGroup::cyclic(2));
  CHECK(delta_group({3, Decomposable(4, 0, false, false)}) == FinAbGroup::trivial());
  CHECK_FALSE(delta_group({2, Indecomposable{0, 0, {}}}).has_value());
  CHECK(delta_group({2, Indecomposable{0, 0, FinAbGroup::cyclic(2)}}) == FinAbGroup::cyclic(2));
  // supplied Delta must embed in Pic^0[2]
  CHECK_THROWS_AS(RuledDesc(1, Indecomposable{0, 0, FinAbGroup::cyclic(3)}), precondition_error);
  CHECK_THROWS_AS(RuledDesc(0, StableGiven{-1, FinAbGroup::cyclic(2)}), precondition_error);
}

TEST_CASE("component groups over a genus >= 2 base") {
  SUBCASE("stable bundle with Delta supplied trivial") {
    const auto rep = component_groups_genus_ge2({2, StableGiven{-1, FinAbGroup::trivial()}});
    CHECK(rep.aut0_dimension == 0);
    CHECK(rep.gamma_q == FinAbGroup::trivial());
  }
  SUBCASE("decomposable with 2-torsion difference: Gamma_Q = Z/2") {
    const auto rep = component_groups_genus_ge2({3, Decomposable(0, 0, true, false)});
    CHECK(rep.gamma_q == FinAbGroup::cyclic(2));
  }
  SUBCASE("L + L: Aut_0 of dimension 3, Gamma_Q trivial") {
    const auto rep = component_groups_genus_ge2({2, Decomposable(1, 1, false, true)});
    CHECK(rep.aut0_dimension == 3);
    CHECK(rep.gamma_q == FinAbGroup::trivial());
  }
  SUBCASE("fibre dimension minus one is the reported Aut_0 dimension") {
    for (const RuledDesc& d : {RuledDesc{2, StableGiven{-2, {}}},
                              RuledDesc{2, Decomposable(3, 0, false, false)},
                              RuledDesc{2, Indecomposable{3, 1, {}}},
                              RuledDesc{2, Decomposable(1, 1, false, true)}}) {
      const auto rep = component_groups_genus_ge2(d);
      CHECK(rep.aut0_dimension == rep.fibre.dimension() - 1);
    }
  }
  CHECK_THROWS_AS((void)component_groups_genus_ge2({1, StableGiven{-1, {}}}), precondition_error);
}

TEST_CASE("genus <= 1 structure cases") {
  SUBCASE("rational base, e > 0: no extra components at all") {
    const auto rep = maruyama_report({0, Decomposable(2, 0, false, false)});
    CHECK(rep.case_label == "1");
    CHECK(rep.aut_equals_aut0);
  }
  SUBCASE("elliptic decomposable, e = 3") {
    const auto rep = maruyama_report({1, Decomposable(3, 0, false, false)});
    CHECK(rep.case_label == "2(a)");
    REQUIRE(rep.gamma_z.has_value());
    CHECK(*rep.gamma_z == FinAbGroup::from_factors({3, 3}));
    CHECK(rep.gamma_z->order() == 9);
    CHECK(rep.r == 3);
  }
  SUBCASE("elliptic decomposable, e = 0, distinct summands: two minimal sections") {
    CHECK(maruyama_report({1, Decomposable(0, 0, true, false)}).case_label == "2(c)");
  }
  SUBCASE("product with P^1") {
    CHECK(maruyama_report({1, Decomposable(1, 1, false, true)}).case_label == "2(d)");
  }
  SUBCASE("elliptic indecomposable, e = 0 and e = 1") {
    CHECK(maruyama_report({1, Indecomposable{0, 0, {}}}).case_label == "3(a)");
    const auto rep = maruyama_report({1, Indecomposable{1, 0, {}}});
    CHECK(rep.case_label == "3(b)");
    CHECK(rep.delta_inside_aut0 == FinAbGroup::from_factors({2, 2}));
  }
  CHECK_THROWS_AS((void)maruyama_report({2, StableGiven{-1, {}}}), precondition_error);
}

TEST_CASE("Gamma_* lower bound for elliptic decomposable bundles") {
  SUBCASE("stated values") {
    const auto d2 = elliptic_ruled_gamma_star(2);
    CHECK(d2.kernel == FinAbGroup::from_factors({2, 2}));
    CHECK(d2.lower_bound == 1);
    const auto d4 = elliptic_ruled_gamma_star(4);
    CHECK(d4.kernel == FinAbGroup::from_factors({4, 4}));
    CHECK(d4.lower_bound == 4);
    const auto d10 = elliptic_ruled_gamma_star(10);
    CHECK(d10.kernel.order() == 100);
    CHECK(d10.lower_bound == 25);
  }
  SUBCASE("whole even range") {
    for (long long d = 2; d <= 100; d += 2) {
      const auto b = elliptic_ruled_gamma_star(d);
      CHECK(b.kernel.order() == Int(d) * d);
      CHECK(b.obstruction.order() == 4);
      CHECK(b.lower_bound == Int(d / 2) * (d / 2));
      CHECK(b.lower_bound * 4 == b.kernel.order());  // index 4 is the worst case
    }
  }
  CHECK_THROWS_AS((void)elliptic_ruled_gamma_star(3), precondition_error);
  CHECK_THROWS_AS((void)elliptic_ruled_gamma_star(0), precondition_error);
  CHECK_THROWS_AS((void)elliptic_ruled_gamma_star(-2), precondition_error);
}

TEST_CASE("Delta always lands in the 2-torsion of Pic^0") {
  for (const RuledDesc& d : {RuledDesc{1, Decomposable(2, 0, false, false)},
                            RuledDesc{3, Decomposable(0, 0, true, false)},
                            RuledDesc{2, Decomposable(1, 1, false, true)},
                            RuledDesc{2, Indecomposable{0, 0, FinAbGroup::from_factors({2, 2})}}}) {
    const auto delta = delta_group(d);
    if (!delta) continue;
    Int order = delta->order();
    Int bound = 1;
    for (long long i = 0; i < 2 * d.base_genus; ++i) bound *= 2;
    CHECK(bound % order == 0);
  }
}
