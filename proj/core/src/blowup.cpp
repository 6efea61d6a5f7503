#include "surfaut/blowup.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace surfaut::blowup {

Int intersect(const PicardClass& a, const PicardClass& b) {
  if (a.e.size() != b.e.size())
    throw std::invalid_argument("intersect: classes live on different blow-ups");
  Int out = a.h * b.h;
  for (std::size_t i = 0; i < a.e.size(); ++i) out -= a.e[i] * b.e[i];
  return out;
}

PicardClass canonical_class(std::size_t k) {
  return {Int(-3), std::vector<Int>(k, Int(1))};
}

bool is_minus_one_class(const PicardClass& c) {
  const PicardClass k = canonical_class(c.e.size());
  return intersect(c, c) == -1 && intersect(c, k) == -1;
}

std::pair<WeightedChart, WeightedChart> blow_up_fixed_point(WeightedChart chart) {
  return {{chart.wu - chart.wv, chart.wv}, {chart.wu, chart.wv - chart.wu}};
}

std::string StabilizerDesc::to_string() const {
  if (full_torus) return "C*";
  if (n == 1) return "trivial";
  return "mu_" + std::to_string(n);
}

StabilizerDesc stabilizer_at(WeightedChart chart, PointKind kind) {
  auto mu_or_torus = [](long long w) {
    return w == 0 ? StabilizerDesc::torus() : StabilizerDesc::mu(std::llabs(w));
  };
  switch (kind) {
    case PointKind::origin: return StabilizerDesc::torus();
    case PointKind::general_on_axis_v: return mu_or_torus(chart.wu);  // v = 0, u generic
    case PointKind::general_on_axis_u: return mu_or_torus(chart.wv);  // u = 0, v generic
    case PointKind::general_off_axes:
      return mu_or_torus(std::gcd(std::llabs(chart.wu), std::llabs(chart.wv)));
  }
  throw std::invalid_argument("stabilizer_at: bad point kind");
}

ChainReport rational_chain_report(long long n, ChainPoint point) {
  if (n < 0) throw std::invalid_argument("rational_chain_report: n must be >= 0");
  // start in the chart at the fourth centre, where the torus acts as (u, a v);
  // the chain always follows the chart containing the strict transform of the
  // fixed line, which is the (u/v, v) chart.
  WeightedChart w{0, 1};
  for (long long k = 0; k <= n; ++k) w = blow_up_fixed_point(w).first;

  ChainReport rep;
  rep.n = n;
  rep.final_weights = w;  // (-(n+1), 1); the exceptional curve is v = 0
  switch (point) {
    case ChainPoint::general:
      rep.aut_q = stabilizer_at(w, PointKind::general_on_axis_v);
      break;
    case ChainPoint::fixed_on_l4:
      rep.aut_q = stabilizer_at(w, PointKind::origin);
      break;
    case ChainPoint::fixed_on_prev_e:
      // intersection with the previous exceptional curve: origin of the
      // sibling chart, torus-fixed as well
      rep.aut_q = StabilizerDesc::torus();
      break;
  }
  return rep;
}

G4Description g4_stabilizer() {
  return {TorusTaxonomy::torus1, "diag(1,1,a), a in C*"};
}

}  // namespace surfaut::blowup
