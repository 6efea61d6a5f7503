#include "surfaut/elliptic.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <tuple>

#include "surfaut/int_matrix.hpp"
#include "surfaut/smith.hpp"

namespace surfaut::elliptic {

const char* tau_name(TauClass tau) {
  switch (tau) {
    case TauClass::generic: return "generic";
    case TauClass::square: return "square";
    case TauClass::hexagonal: return "hexagonal";
  }
  return "?";
}

unsigned unit_group_order(TauClass tau) {
  switch (tau) {
    case TauClass::generic: return 2;
    case TauClass::square: return 4;
    case TauClass::hexagonal: return 6;
  }
  return 0;
}

UnitMatrix UnitMatrix::operator*(const UnitMatrix& rhs) const {
  UnitMatrix out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.m[i][j] = m[i][0] * rhs.m[0][j] + m[i][1] * rhs.m[1][j];
  return out;
}

int UnitMatrix::determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

UnitMatrix UnitMatrix::inverse() const {
  const int det = determinant();
  UnitMatrix adj{{{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}}};
  if (det == 1) return adj;
  if (det == -1) {
    for (auto& row : adj.m)
      for (int& e : row) e = -e;
    return adj;
  }
  throw std::invalid_argument("UnitMatrix::inverse: determinant not a unit");
}

std::string UnitMatrix::to_string() const {
  std::ostringstream os;
  os << "[" << m[0][0] << " " << m[0][1] << "; " << m[1][0] << " " << m[1][1] << "]";
  return os.str();
}

std::vector<UnitMatrix> unit_group(TauClass tau) {
  UnitMatrix gen;
  switch (tau) {
    case TauClass::generic: gen = UnitMatrix::minus_identity(); break;
    case TauClass::square: gen = UnitMatrix::mult_by_i(); break;
    case TauClass::hexagonal: gen = UnitMatrix::mult_by_minus_omega(); break;
  }
  std::vector<UnitMatrix> out;
  UnitMatrix cur = UnitMatrix::identity();
  do {
    out.push_back(cur);
    cur = cur * gen;
  } while (!(cur == UnitMatrix::identity()));
  return out;
}

namespace {

Rational mod1(const Rational& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  Int q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return r - Rational(q);
}

}  // namespace

TorsionPoint::TorsionPoint(Rational a, Rational b) : x(mod1(a)), y(mod1(b)) {}

TorsionPoint TorsionPoint::half(int which) {
  switch (which) {
    case 0: return {Rational(1, 2), 0};
    case 1: return {0, Rational(1, 2)};
    default: return {Rational(1, 2), Rational(1, 2)};
  }
}

TorsionPoint TorsionPoint::operator+(const TorsionPoint& rhs) const {
  return {x + rhs.x, y + rhs.y};
}

TorsionPoint TorsionPoint::operator-() const { return {-x, -y}; }

TorsionPoint TorsionPoint::transformed(const UnitMatrix& u) const {
  return {u.m[0][0] * x + u.m[0][1] * y, u.m[1][0] * x + u.m[1][1] * y};
}

Int TorsionPoint::order() const {
  return boost::multiprecision::lcm(boost::multiprecision::denominator(x),
                                    boost::multiprecision::denominator(y));
}

std::string TorsionPoint::to_string() const {
  return "(" + surfaut::to_string(x) + ", " + surfaut::to_string(y) + ")";
}

EllAut EllAut::compose(const EllAut& rhs) const {
  return {u * rhs.u, rhs.t.transformed(u) + t};
}

EllAut EllAut::inverse() const {
  const UnitMatrix ui = u.inverse();
  return {ui, (-t).transformed(ui)};
}

EllAut EllAut::conjugated_by(const EllAut& g) const {
  return g.compose(*this).compose(g.inverse());
}

std::string EllAut::to_string() const {
  return "(u=" + u.to_string() + ", t=" + t.to_string() + ")";
}

std::vector<EllAut> generated_group(const std::vector<EllAut>& generators, std::size_t limit) {
  std::set<EllAut> seen{EllAut::identity()};
  std::vector<EllAut> frontier{EllAut::identity()};
  while (!frontier.empty()) {
    std::vector<EllAut> next;
    for (const EllAut& a : frontier)
      for (const EllAut& g : generators) {
        EllAut b = a.compose(g);
        if (seen.insert(b).second) next.push_back(b);
        if (seen.size() > limit)
          throw precondition_error("generated_group: closure exceeds limit (not a small group)");
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

long long BdFDatum::prescribed_order(int type_index) {
  static constexpr long long orders[] = {2, 4, 4, 8, 3, 9, 6};
  if (type_index < 1 || type_index > 7)
    throw precondition_error("type index must be between 1 and 7");
  return orders[type_index - 1];
}

BdFDatum BdFDatum::make(int type_index, TauClass tau, std::optional<TorsionPoint> epsilon) {
  prescribed_order(type_index);  // range check
  const bool needs_square = type_index == 3 || type_index == 4;
  const bool needs_hex = type_index >= 5;
  if (needs_square && tau != TauClass::square)
    throw precondition_error("type " + std::to_string(type_index) +
                             " requires the square (unit group of order 4) curve");
  if (needs_hex && tau != TauClass::hexagonal)
    throw precondition_error("type " + std::to_string(type_index) +
                             " requires the hexagonal (unit group of order 6) curve");
  if (epsilon && type_index != 2)
    throw precondition_error("only type 2 takes a translation datum epsilon");

  const EllAut neg{UnitMatrix::minus_identity(), {}};
  BdFDatum d{type_index, tau, {}};
  switch (type_index) {
    case 1: d.generators = {neg}; break;
    case 2: {
      if (!epsilon)
        throw precondition_error("type 2 requires epsilon, a nontrivial 2-torsion point");
      if (epsilon->is_zero() || epsilon->order() != 2)
        throw precondition_error("epsilon must be a nontrivial 2-torsion point");
      d.generators = {neg, EllAut::translation(*epsilon)};
      break;
    }
    case 3: d.generators = {{UnitMatrix::mult_by_i(), {}}}; break;
    case 4:
      // the translation must be fixed by multiplication by i: epsilon = (1+i)/2
      d.generators = {{UnitMatrix::mult_by_i(), {}}, EllAut::translation(TorsionPoint::half(2))};
      break;
    case 5: d.generators = {{UnitMatrix::mult_by_omega(), {}}}; break;
    case 6:
      // translation by (1-omega)/3 = (1/3, -1/3) in the (1, omega) basis
      d.generators = {{UnitMatrix::mult_by_omega(), {}},
                      EllAut::translation({Rational(1, 3), Rational(-1, 3)})};
      break;
    case 7: d.generators = {{UnitMatrix::mult_by_minus_omega(), {}}}; break;
  }
  d.validate();
  return d;
}

void BdFDatum::validate() const {
  const long long want = prescribed_order(type_index);
  const auto units = unit_group(tau);
  for (const EllAut& g : generators)
    if (std::find(units.begin(), units.end(), g.u) == units.end())
      throw precondition_error("generator linear part is not a unit of the given curve class");
  const auto group = generated_group(generators);
  if (static_cast<long long>(group.size()) != want)
    throw precondition_error("generators produce a group of order " +
                             std::to_string(group.size()) + ", type " +
                             std::to_string(type_index) + " requires order " +
                             std::to_string(want));
}

FinAbGroup torsion_subgroup(const Int& n) {
  if (n < 1) throw precondition_error("torsion_subgroup: n must be >= 1");
  return FinAbGroup::from_factors({n, n});
}

FinAbGroup phi_d_kernel(const Int& d) {
  if (d < 1) throw precondition_error("phi_d_kernel: d must be >= 1");
  return FinAbGroup::from_factors({d, d});
}

// ---------------------------------------------------------------------------
// normalizer search
//
// Candidates are gamma = (u, t) with u a unit and t in E[N].  Working at a
// fixed modulus N keeps all arithmetic in integers mod N.  Every constraint
// has the shape (1-w)t in {finite torsion set}, so solutions are torsion of
// bounded order and the escalation loop stabilizes.

namespace {

struct ModAut {
  int ui;          // index into the unit list
  long long p, q;  // translation (p/N, q/N)
  auto operator<=>(const ModAut&) const = default;
};

struct ModContext {
  long long n = 0;
  std::vector<UnitMatrix> units;
  std::vector<std::vector<int>> mul;  // unit index multiplication table
  std::vector<int> inv;

  explicit ModContext(TauClass tau, long long modulus) : n(modulus), units(unit_group(tau)) {
    const int k = static_cast<int>(units.size());
    mul.assign(k, std::vector<int>(k));
    inv.assign(k, 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) mul[i][j] = index_of(units[i] * units[j]);
      inv[i] = index_of(units[i].inverse());
    }
  }

  int index_of(const UnitMatrix& u) const {
    for (std::size_t i = 0; i < units.size(); ++i)
      if (units[i] == u) return static_cast<int>(i);
    throw precondition_error("matrix is not a unit of this curve class");
  }

  long long norm(long long v) const { return ((v % n) + n) % n; }

  std::pair<long long, long long> apply(int ui, long long p, long long q) const {
    const auto& m = units[ui].m;
    return {norm(m[0][0] * p + m[0][1] * q), norm(m[1][0] * p + m[1][1] * q)};
  }

  ModAut compose(const ModAut& a, const ModAut& b) const {
    auto [tp, tq] = apply(a.ui, b.p, b.q);
    return {mul[a.ui][b.ui], norm(a.p + tp), norm(a.q + tq)};
  }

  ModAut inverse(const ModAut& a) const {
    const int ui = inv[a.ui];
    auto [tp, tq] = apply(ui, a.p, a.q);
    return {ui, norm(-tp), norm(-tq)};
  }

  ModAut to_mod(const EllAut& g) const {
    const Rational px = g.t.x * n, py = g.t.y * n;
    if (boost::multiprecision::denominator(px) != 1 ||
        boost::multiprecision::denominator(py) != 1)
      throw precondition_error("torsion bound " + std::to_string(n) +
                               " does not contain the group's translations");
    return {index_of(g.u), norm(boost::multiprecision::numerator(px).convert_to<long long>()),
            norm(boost::multiprecision::numerator(py).convert_to<long long>())};
  }

  EllAut to_rational(const ModAut& a) const {
    return {units[a.ui], TorsionPoint(Rational(a.p, n), Rational(a.q, n))};
  }
};

std::vector<ModAut> normalizer_at_modulus(const ModContext& ctx, const std::vector<ModAut>& gens,
                                          const std::vector<ModAut>& group) {
  const int nu = static_cast<int>(ctx.units.size());
  const long long n = ctx.n;
  auto encode = [&](const ModAut& a) { return (a.ui * n + a.p) * n + a.q; };
  std::vector<std::uint8_t> member(static_cast<std::size_t>(nu) * n * n, 0);
  for (const ModAut& g : group) member[static_cast<std::size_t>(encode(g))] = 1;

  std::vector<ModAut> out;
  for (int ui = 0; ui < nu; ++ui)
    for (long long p = 0; p < n; ++p)
      for (long long q = 0; q < n; ++q) {
        const ModAut gamma{ui, p, q};
        const ModAut gamma_inv = ctx.inverse(gamma);
        bool ok = true;
        for (const ModAut& g : gens)
          if (!member[static_cast<std::size_t>(
                  encode(ctx.compose(ctx.compose(gamma, g), gamma_inv)))]) {
            ok = false;
            break;
          }
        if (ok) out.push_back(gamma);
      }
  return out;
}

std::set<TorsionPoint> pure_translations(const ModContext& ctx, const std::vector<ModAut>& ns) {
  std::set<TorsionPoint> out;
  for (const ModAut& a : ns)
    if (ctx.units[a.ui] == UnitMatrix::identity())
      out.insert(TorsionPoint(Rational(a.p, ctx.n), Rational(a.q, ctx.n)));
  return out;
}

// Quotient N_G/G from explicit element lists (G normal in N_G).
FiniteGroupId identify_quotient(const std::vector<EllAut>& normalizer,
                                const std::vector<EllAut>& group) {
  std::map<EllAut, int> coset_of;
  std::vector<EllAut> reps;
  for (const EllAut& a : normalizer) {
    if (coset_of.count(a)) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(a);
    for (const EllAut& g : group) coset_of[a.compose(g)] = c;
  }
  const int k = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[i][j] = coset_of.at(reps[i].compose(reps[j]));
  const int id = coset_of.at(EllAut::identity());

  FiniteGroupId out;
  out.order = k;
  out.abelian = true;
  for (int i = 0; i < k && out.abelian; ++i)
    for (int j = i + 1; j < k; ++j)
      if (table[i][j] != table[j][i]) {
        out.abelian = false;
        break;
      }
  for (int i = 0; i < k; ++i) {
    long long ord = 1;
    int cur = i;
    while (cur != id) {
      cur = table[cur][i];
      ++ord;
    }
    ++out.order_multiset[ord];
  }
  if (out.abelian) {
    // present the coset table as an abelian presentation and reduce it
    IntMatrix rel(k, static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const std::size_t col = static_cast<std::size_t>(i) * k + j;
        rel.at(i, col) += 1;
        rel.at(j, col) += 1;
        rel.at(table[i][j], col) -= 1;
      }
    out.abelian_invariants = cokernel(rel);
  }

  // name only when (order, multiset, abelian?) is decisive
  if (k == 1) {
    out.name = "trivial";
  } else if (out.abelian) {
    std::string name;
    for (const Int& d : out.abelian_invariants->invariant_factors)
      name += (name.empty() ? "C" : "xC") + d.str();
    out.name = name;
  } else {
    const auto& ms = out.order_multiset;
    auto is = [&](std::map<long long, long long> want) { return ms == want; };
    if (k == 6 && is({{1, 1}, {2, 3}, {3, 2}})) out.name = "S3";
    else if (k == 8 && is({{1, 1}, {2, 5}, {4, 2}})) out.name = "D4";
    else if (k == 8 && is({{1, 1}, {2, 1}, {4, 6}})) out.name = "Q8";
    else if (k == 10 && is({{1, 1}, {2, 5}, {5, 4}})) out.name = "D5";
    else if (k == 12 && is({{1, 1}, {2, 3}, {3, 8}})) out.name = "A4";
    else if (k == 12 && is({{1, 1}, {2, 7}, {3, 2}, {6, 2}})) out.name = "D6";
    else if (k == 12 && is({{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}})) out.name = "Dic3";
  }
  return out;
}

long long lcm_of_translation_orders(const std::vector<EllAut>& group) {
  Int l = 1;
  for (const EllAut& g : group) l = boost::multiprecision::lcm(l, g.t.order());
  return l.convert_to<long long>();
}

}  // namespace

std::string FiniteGroupId::to_string() const {
  std::string s = name ? *name : "group of order " + order.str();
  if (name) s += " (order " + order.str() + ")";
  return s;
}

NormalizerResult normalizer_quotient_full(const BdFDatum& datum, NormalizerOptions opts) {
  datum.validate();
  const auto group = generated_group(datum.generators);
  const long long denom = lcm_of_translation_orders(group);

  auto run = [&](long long modulus) {
    ModContext ctx(datum.tau, modulus);
    std::vector<ModAut> gens;
    for (const EllAut& g : datum.generators) gens.push_back(ctx.to_mod(g));
    std::vector<ModAut> gmod;
    for (const EllAut& g : group) gmod.push_back(ctx.to_mod(g));
    return std::pair{normalizer_at_modulus(ctx, gens, gmod), std::move(ctx)};
  };

  long long modulus;
  std::vector<ModAut> found;
  std::optional<ModContext> ctx;
  if (opts.forced_bound) {
    modulus = *opts.forced_bound;
    if (modulus < 1 || modulus % denom != 0)
      throw precondition_error("torsion bound must be a positive multiple of " +
                               std::to_string(denom));
    auto [n0, c0] = run(modulus);
    found = std::move(n0);
    ctx.emplace(std::move(c0));
  } else {
    modulus = opts.initial_bound;
    if (modulus % denom != 0) modulus *= denom;  // 48 already covers every built-in type
    auto [n0, c0] = run(modulus);
    found = std::move(n0);
    ctx.emplace(std::move(c0));
    auto trans = pure_translations(*ctx, found);
    int stable = 0;
    while (stable < 2) {
      const long long next = modulus * 2;
      auto [n1, c1] = run(next);
      auto t1 = pure_translations(c1, n1);
      stable = (t1 == trans) ? stable + 1 : 0;
      trans = std::move(t1);
      found = std::move(n1);
      ctx.emplace(std::move(c1));
      modulus = next;
    }
  }

  NormalizerResult res;
  res.torsion_bound_used = modulus;
  res.group_elements = group;
  res.normalizer_elements.reserve(found.size());
  for (const ModAut& a : found) res.normalizer_elements.push_back(ctx->to_rational(a));
  std::sort(res.normalizer_elements.begin(), res.normalizer_elements.end());
  res.quotient = identify_quotient(res.normalizer_elements, group);
  return res;
}

FiniteGroupId normalizer_quotient(const BdFDatum& datum, NormalizerOptions opts) {
  return normalizer_quotient_full(datum, opts).quotient;
}

std::vector<BdFKey> bdf_valid_pairs() {
  std::vector<BdFKey> out;
  for (int type = 1; type <= 7; ++type) {
    if (type <= 2) {
      for (TauClass tau : {TauClass::generic, TauClass::square, TauClass::hexagonal})
        out.push_back({type, tau});
    } else if (type <= 4) {
      out.push_back({type, TauClass::square});
    } else {
      out.push_back({type, TauClass::hexagonal});
    }
  }
  return out;
}

BdFDatum bdf_table_datum(int type_index, TauClass tau) {
  if (type_index == 2)
    return BdFDatum::make(2, tau,
                          tau == TauClass::square ? TorsionPoint::half(2) : TorsionPoint::half(0));
  return BdFDatum::make(type_index, tau);
}

std::map<BdFKey, FiniteGroupId> bdf_table(NormalizerOptions opts) {
  std::map<BdFKey, FiniteGroupId> out;
  for (const BdFKey& key : bdf_valid_pairs())
    out.emplace(key, normalizer_quotient(bdf_table_datum(key.type_index, key.tau), opts));
  return out;
}

}  // namespace surfaut::elliptic
