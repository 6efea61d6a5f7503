#include <doctest.h>

#include "surfaut/blowup.hpp"
#include "test_helpers.hpp"

using namespace surfaut;
using namespace surfaut::blowup;
using surfaut_test::Rng;

namespace {

// count integral classes with c^2 = c.K = -1 inside a coefficient box
long long count_minus_one_classes(std::size_t k, long long hmax, long long emax) {
  long long count = 0;
  std::vector<Int> e(k, -emax);
  for (long long h = 0; h <= hmax; ++h) {
    std::fill(e.begin(), e.end(), Int(-emax));
    for (;;) {
      if (is_minus_one_class({Int(h), e})) ++count;
      std::size_t i = 0;
      while (i < k && ++e[i] > emax) e[i++] = -emax;
      if (i == k) break;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("intersection form and canonical class") {
  const PicardClass h{1, {0, 0}};
  const PicardClass e1{0, {1, 0}};
  const PicardClass hmee{1, {-1, -1}};
  CHECK(intersect(h, h) == 1);
  CHECK(intersect(e1, e1) == -1);
  CHECK(intersect(h, e1) == 0);
  CHECK(intersect(hmee, hmee) == -1);
  CHECK_THROWS_AS((void)intersect(h, PicardClass{1, {0}}), std::invalid_argument);

  CHECK(canonical_class(0) == PicardClass{-3, {}});
  CHECK(intersect(canonical_class(0), canonical_class(0)) == 9);
  CHECK(intersect(canonical_class(1), canonical_class(1)) == 8);
  CHECK(intersect(canonical_class(6), canonical_class(6)) == 3);
}

TEST_CASE("minus-one classes") {
  CHECK(is_minus_one_class({0, {1, 0}}));
  CHECK(is_minus_one_class({1, {-1, -1}}));
  CHECK_FALSE(is_minus_one_class({1, {0, 0}}));
  CHECK_FALSE(is_minus_one_class({0, {-1, 0}}));  // -E_1 has square -1 but wrong K-degree
}

TEST_CASE("minus-one class counts on small blow-ups") {
  // three points: the three exceptional curves and the three connecting lines
  CHECK(count_minus_one_classes(3, 3, 1) == 6);
  // the full k = 8 count (240) runs in the acceptance suite
}

TEST_CASE("blow-up charts: stated weight transitions") {
  CHECK(blow_up_fixed_point({0, 1}) == std::pair<WeightedChart, WeightedChart>{{-1, 1}, {0, 1}});
  CHECK(blow_up_fixed_point({-1, 1}) == std::pair<WeightedChart, WeightedChart>{{-2, 1}, {-1, 2}});
  CHECK(blow_up_fixed_point({0, 0}) == std::pair<WeightedChart, WeightedChart>{{0, 0}, {0, 0}});
}

TEST_CASE("stabilizers at chart points") {
  CHECK(stabilizer_at({-4, 1}, PointKind::general_on_axis_v) == StabilizerDesc::mu(4));
  CHECK(stabilizer_at({-4, 1}, PointKind::origin) == StabilizerDesc::torus());
  CHECK(stabilizer_at({-1, 1}, PointKind::general_on_axis_v) == StabilizerDesc::mu(1));
  CHECK(stabilizer_at({0, 5}, PointKind::general_on_axis_v) == StabilizerDesc::torus());
  CHECK(stabilizer_at({2, 3}, PointKind::general_off_axes) == StabilizerDesc::mu(1));
  CHECK(stabilizer_at({4, 6}, PointKind::general_off_axes) == StabilizerDesc::mu(2));
  CHECK(stabilizer_at({0, 0}, PointKind::general_off_axes) == StabilizerDesc::torus());
}

TEST_CASE("both charts of a blow-up give the exceptional curve one stabilizer") {
  Rng rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const WeightedChart w{rng.range(-6, 6), rng.range(-6, 6)};
    const auto [a, b] = blow_up_fixed_point(w);
    // E is v' = 0 in the first chart and u'' = 0 in the second
    const auto sa = stabilizer_at(a, PointKind::general_on_axis_v);
    const auto sb = stabilizer_at(b, PointKind::general_on_axis_u);
    CHECK(sa == sb);
    const long long diff = std::llabs(w.wu - w.wv);
    CHECK(sa == (diff == 0 ? StabilizerDesc::torus() : StabilizerDesc::mu(diff)));
  }
}

TEST_CASE("rational chain: weights and stabilizers") {
  for (long long n = 0; n <= 50; ++n) {
    const auto rep = rational_chain_report(n, ChainPoint::general);
    CHECK(rep.final_weights == WeightedChart{-(n + 1), 1});
    CHECK(rep.aut_q == StabilizerDesc::mu(n + 1));
    CHECK(rational_chain_report(n, ChainPoint::fixed_on_l4).aut_q == StabilizerDesc::torus());
    CHECK(rational_chain_report(n, ChainPoint::fixed_on_prev_e).aut_q == StabilizerDesc::torus());
  }
  // the chain chart after k steps carries weights (-k, 1)
  WeightedChart w{0, 1};
  for (long long k = 1; k <= 50; ++k) {
    w = blow_up_fixed_point(w).first;
    CHECK(w == WeightedChart{-k, 1});
  }
  CHECK(rational_chain_report(0, ChainPoint::general).aut_q == StabilizerDesc::mu(1));
  CHECK(rational_chain_report(3, ChainPoint::general).aut_q == StabilizerDesc::mu(4));
  CHECK(rational_chain_report(7, ChainPoint::fixed_on_l4).aut_q.full_torus);
  CHECK_THROWS_AS((void)rational_chain_report(-1, ChainPoint::general), std::invalid_argument);
}

TEST_CASE("seed torus") {
  const auto g4 = g4_stabilizer();
  CHECK(g4.tag == TorusTaxonomy::torus1);
  CHECK(g4.matrix_family == "diag(1,1,a), a in C*");

  const G4Element a{Rational(2, 3)};
  const G4Element b{Rational(3, 2)};
  CHECK(a.compose(b).is_identity());
  CHECK(a.compose(G4Element{5}).a == Rational(10, 3));
  CHECK(G4Element{1}.is_identity());
  CHECK(a.diagonal() == std::vector<Rational>{1, 1, Rational(2, 3)});
}
