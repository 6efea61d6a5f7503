#include "surfaut/serialize.hpp"

#include <json.hpp>

#include "surfaut/version.hpp"

namespace surfaut::io {

using nlohmann::ordered_json;
using namespace surfaut::classifier;

namespace {

// -- strict helpers ----------------------------------------------------------

[[noreturn]] void bad(const std::string& msg) { throw surfaut::parse_error(msg); }

void check_keys(const ordered_json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) bad(where + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) bad(where + ": unknown key '" + key + "'");
  }
}

const ordered_json& need(const ordered_json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(where + ": missing key '" + std::string(key) + "'");
  return *it;
}

long long need_int(const ordered_json& obj, const std::string& where, const char* key) {
  const auto& v = need(obj, where, key);
  if (!v.is_number_integer()) bad(where + ": '" + key + "' must be an integer");
  return v.get<long long>();
}

bool need_bool(const ordered_json& obj, const std::string& where, const char* key) {
  const auto& v = need(obj, where, key);
  if (!v.is_boolean()) bad(where + ": '" + key + "' must be a boolean");
  return v.get<bool>();
}

std::string need_string(const ordered_json& obj, const std::string& where, const char* key) {
  const auto& v = need(obj, where, key);
  if (!v.is_string()) bad(where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

Int int_from_json(const ordered_json& v, const std::string& where) {
  if (!v.is_string()) bad(where + ": arbitrary-precision integers are encoded as strings");
  try {
    return Int(v.get<std::string>());
  } catch (const std::runtime_error&) {
    bad(where + ": not an integer: " + v.get<std::string>());
  }
}

// -- orbifold signature -------------------------------------------------------

ordered_json signature_to_json(const orbifold::OrbifoldSignature& sig) {
  ordered_json j;
  j["genus"] = sig.genus;
  j["multiplicities"] = sig.multiplicities;
  return j;
}

orbifold::OrbifoldSignature signature_from_json(const ordered_json& j, const std::string& where) {
  check_keys(j, where, {"genus", "multiplicities"});
  const auto& mj = need(j, where, "multiplicities");
  if (!mj.is_array()) bad(where + ": 'multiplicities' must be an array");
  std::vector<long long> mults;
  for (const auto& m : mj) {
    if (!m.is_number_integer()) bad(where + ": multiplicities must be integers");
    mults.push_back(m.get<long long>());
  }
  try {
    return orbifold::OrbifoldSignature(need_int(j, where, "genus"), std::move(mults));
  } catch (const precondition_error& e) {
    bad(where + ": " + e.what());
  }
}

// -- FinAbGroup / FiniteGroupId ----------------------------------------------

ordered_json fin_ab_to_json(const FinAbGroup& g) {
  ordered_json factors = ordered_json::array();
  for (const Int& d : g.invariant_factors) factors.push_back(d.str());
  return factors;
}

FinAbGroup fin_ab_from_json(const ordered_json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": invariant factors must be an array");
  std::vector<Int> factors;
  for (const auto& d : j) factors.push_back(int_from_json(d, where));
  return FinAbGroup::from_factors(std::move(factors));
}

ordered_json group_id_to_json(const elliptic::FiniteGroupId& g) {
  ordered_json j;
  j["order"] = g.order.str();
  j["abelian"] = g.abelian;
  if (g.abelian_invariants) j["abelian_invariants"] = fin_ab_to_json(*g.abelian_invariants);
  ordered_json ms = ordered_json::object();
  for (const auto& [ord, count] : g.order_multiset) ms[std::to_string(ord)] = count;
  j["order_multiset"] = ms;
  if (g.name) j["name"] = *g.name;
  return j;
}

elliptic::FiniteGroupId group_id_from_json(const ordered_json& j, const std::string& where) {
  check_keys(j, where, {"order", "abelian", "abelian_invariants", "order_multiset", "name"});
  elliptic::FiniteGroupId g;
  g.order = int_from_json(need(j, where, "order"), where);
  g.abelian = need_bool(j, where, "abelian");
  if (j.contains("abelian_invariants"))
    g.abelian_invariants = fin_ab_from_json(j["abelian_invariants"], where);
  for (const auto& [k, v] : need(j, where, "order_multiset").items()) {
    if (!v.is_number_integer()) bad(where + ": multiset counts must be integers");
    g.order_multiset[std::stoll(k)] = v.get<long long>();
  }
  if (j.contains("name")) g.name = need_string(j, where, "name");
  return g;
}

// -- ladder values -------------------------------------------------------------

ordered_json value_to_json(const LadderValue& v) {
  struct Emitter {
    ordered_json operator()(std::monostate) const { return {{"kind", "unknown"}}; }
    ordered_json operator()(const FinAbGroup& g) const {
      return {{"kind", "fin_ab_group"}, {"invariant_factors", fin_ab_to_json(g)}};
    }
    ordered_json operator()(const elliptic::FiniteGroupId& g) const {
      ordered_json j = group_id_to_json(g);
      ordered_json out;
      out["kind"] = "finite_group";
      for (auto& [k, val] : j.items()) out[k] = val;
      return out;
    }
    ordered_json operator()(const Bound& b) const {
      return {{"kind", "bound"},
              {"rel", b.rel == Bound::Rel::at_most ? "<=" : ">="},
              {"n", b.n.str()}};
    }
    ordered_json operator()(const Cardinal& c) const {
      return {{"kind", "cardinal"}, {"n", c.n.str()}};
    }
    ordered_json operator()(const Symbolic& s) const {
      return {{"kind", "symbolic"}, {"text", s.text}};
    }
  };
  return std::visit(Emitter{}, v);
}

LadderValue value_from_json(const ordered_json& j, const std::string& where) {
  const std::string kind = need_string(j, where, "kind");
  if (kind == "unknown") {
    check_keys(j, where, {"kind"});
    return std::monostate{};
  }
  if (kind == "fin_ab_group") {
    check_keys(j, where, {"kind", "invariant_factors"});
    return fin_ab_from_json(need(j, where, "invariant_factors"), where);
  }
  if (kind == "finite_group") {
    ordered_json inner = j;
    inner.erase("kind");
    return group_id_from_json(inner, where);
  }
  if (kind == "bound") {
    check_keys(j, where, {"kind", "rel", "n"});
    const std::string rel = need_string(j, where, "rel");
    if (rel != "<=" && rel != ">=") bad(where + ": bound rel must be <= or >=");
    return Bound{rel == "<=" ? Bound::Rel::at_most : Bound::Rel::at_least,
                 int_from_json(need(j, where, "n"), where)};
  }
  if (kind == "cardinal") {
    check_keys(j, where, {"kind", "n"});
    return Cardinal{int_from_json(need(j, where, "n"), where)};
  }
  if (kind == "symbolic") {
    check_keys(j, where, {"kind", "text"});
    return Symbolic{need_string(j, where, "text")};
  }
  bad(where + ": unknown value kind '" + kind + "'");
}

// -- bundle / descriptor --------------------------------------------------------

ordered_json bundle_to_json(const ruled::RuledDesc& d) {
  ordered_json j;
  if (const auto* dec = std::get_if<ruled::Decomposable>(&d.bundle)) {
    j["kind"] = "decomposable";
    j["deg1"] = dec->deg1;
    j["deg2"] = dec->deg2;
    j["difference_nontrivial_2torsion"] = dec->difference_nontrivial_2torsion;
    j["summands_isomorphic"] = dec->summands_isomorphic;
  } else if (const auto* ind = std::get_if<ruled::Indecomposable>(&d.bundle)) {
    j["kind"] = "indecomposable";
    j["e"] = ind->e;
    j["max_sub_degree"] = ind->max_sub_degree;
    if (ind->delta) j["delta"] = fin_ab_to_json(*ind->delta);
  } else {
    const auto& st = std::get<ruled::StableGiven>(d.bundle);
    j["kind"] = "stable";
    j["e"] = st.e;
    if (st.delta) j["delta"] = fin_ab_to_json(*st.delta);
  }
  return j;
}

ruled::RuledDesc ruled_from_json(const ordered_json& j, const std::string& where) {
  check_keys(j, where, {"kind", "base_genus", "bundle"});
  const auto& bj = need(j, where, "bundle");
  const std::string kind = need_string(bj, where + ".bundle", "kind");
  const std::string bw = where + ".bundle";
  try {
    if (kind == "decomposable") {
      check_keys(bj, bw,
                 {"kind", "deg1", "deg2", "difference_nontrivial_2torsion", "summands_isomorphic"});
      return ruled::RuledDesc(
          need_int(j, where, "base_genus"),
          ruled::Decomposable(need_int(bj, bw, "deg1"), need_int(bj, bw, "deg2"),
                              need_bool(bj, bw, "difference_nontrivial_2torsion"),
                              need_bool(bj, bw, "summands_isomorphic")));
    }
    if (kind == "indecomposable") {
      check_keys(bj, bw, {"kind", "e", "max_sub_degree", "delta"});
      ruled::Indecomposable ind;
      ind.e = need_int(bj, bw, "e");
      ind.max_sub_degree = need_int(bj, bw, "max_sub_degree");
      if (bj.contains("delta")) ind.delta = fin_ab_from_json(bj["delta"], bw);
      return ruled::RuledDesc(need_int(j, where, "base_genus"), ind);
    }
    if (kind == "stable") {
      check_keys(bj, bw, {"kind", "e", "delta"});
      ruled::StableGiven st;
      st.e = need_int(bj, bw, "e");
      if (bj.contains("delta")) st.delta = fin_ab_from_json(bj["delta"], bw);
      return ruled::RuledDesc(need_int(j, where, "base_genus"), st);
    }
  } catch (const precondition_error&) {
    throw;  // well-formed but mathematically invalid: precondition, not parse
  }
  bad(bw + ": unknown bundle kind '" + kind + "'");
}

elliptic::TauClass tau_from_string(const std::string& s, const std::string& where) {
  if (s == "generic") return elliptic::TauClass::generic;
  if (s == "square") return elliptic::TauClass::square;
  if (s == "hexagonal") return elliptic::TauClass::hexagonal;
  bad(where + ": curve must be one of generic|square|hexagonal");
}

elliptic::TorsionPoint epsilon_from_string(const std::string& s, const std::string& where) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) bad(where + ": epsilon must look like \"1/2,0\"");
  try {
    return elliptic::TorsionPoint(parse_rational(s.substr(0, comma)),
                                  parse_rational(s.substr(comma + 1)));
  } catch (const parse_error& e) {
    bad(where + ": " + e.what());
  }
}

std::string chain_point_name(blowup::ChainPoint p) {
  switch (p) {
    case blowup::ChainPoint::general: return "general";
    case blowup::ChainPoint::fixed_on_l4: return "fixed-l4";
    case blowup::ChainPoint::fixed_on_prev_e: return "fixed-preve";
  }
  return "?";
}

blowup::ChainPoint chain_point_from_string(const std::string& s, const std::string& where) {
  if (s == "general") return blowup::ChainPoint::general;
  if (s == "fixed-l4") return blowup::ChainPoint::fixed_on_l4;
  if (s == "fixed-preve") return blowup::ChainPoint::fixed_on_prev_e;
  bad(where + ": point must be one of general|fixed-l4|fixed-preve");
}

ordered_json surface_to_json(const SurfaceDescriptor& desc);

ordered_json surface_to_json_impl(const SurfaceDescriptor& desc) {
  struct Emitter {
    ordered_json operator()(const RationalBlowup& r) const {
      return {{"kind", "rational_blowup"}, {"n", r.n}, {"point", chain_point_name(r.point)}};
    }
    ordered_json operator()(const RuledOverCurve& r) const {
      ordered_json j;
      j["kind"] = "ruled";
      j["base_genus"] = r.desc.base_genus;
      j["bundle"] = bundle_to_json(r.desc);
      return j;
    }
    ordered_json operator()(const K3&) const { return {{"kind", "k3"}}; }
    ordered_json operator()(const Enriques&) const { return {{"kind", "enriques"}}; }
    ordered_json operator()(const Abelian&) const { return {{"kind", "abelian"}}; }
    ordered_json operator()(const Hyperelliptic& h) const {
      ordered_json j;
      j["kind"] = "hyperelliptic";
      j["type"] = h.datum.type_index;
      j["curve"] = elliptic::tau_name(h.datum.tau);
      if (h.datum.type_index == 2) {
        for (const auto& g : h.datum.generators)
          if (g.is_translation() && !g.t.is_zero())
            j["epsilon"] = surfaut::to_string(g.t.x) + "," + surfaut::to_string(g.t.y);
      }
      return j;
    }
    ordered_json operator()(const SIPUnmixed& s) const {
      ordered_json j;
      j["kind"] = "sip_unmixed";
      j["signature"] = signature_to_json(s.sig);
      j["genus_c1"] = s.genus_c1;
      j["group_order"] = s.group_order;
      j["translation_order"] = s.translation_order;
      j["free_on_c1"] = s.free_on_c1;
      j["free_on_e"] = s.free_on_e;
      return j;
    }
    ordered_json operator()(const Kod1MinimalExample& k) const {
      return {{"kind", "kod1_minimal"}, {"n", k.n}};
    }
    ordered_json operator()(const Kod1BlowupExample& k) const {
      ordered_json j;
      j["kind"] = "kod1_blowup";
      j["n"] = k.n;
      j["signature"] = signature_to_json(k.sig);
      return j;
    }
    ordered_json operator()(const GeneralType& g) const {
      return {{"kind", "general_type"}, {"chi", g.chi}};
    }
    ordered_json operator()(const NonMinimal& nm) const {
      if (!nm.core) throw precondition_error("non-minimal descriptor needs a core descriptor");
      ordered_json j;
      j["kind"] = "non_minimal";
      j["core"] = surface_to_json(*nm.core);
      j["chi_top"] = nm.chi_top;
      j["nonpositively_curved_target"] = nm.nonpositively_curved_target;
      return j;
    }
  };
  return std::visit(Emitter{}, desc.value);
}

ordered_json surface_to_json(const SurfaceDescriptor& desc) { return surface_to_json_impl(desc); }

SurfaceDescriptor surface_from_json(const ordered_json& j, const std::string& where) {
  const std::string kind = need_string(j, where, "kind");
  try {
    if (kind == "k3") {
      check_keys(j, where, {"kind"});
      return {K3{}};
    }
    if (kind == "enriques") {
      check_keys(j, where, {"kind"});
      return {Enriques{}};
    }
    if (kind == "abelian") {
      check_keys(j, where, {"kind"});
      return {Abelian{}};
    }
    if (kind == "rational_blowup") {
      check_keys(j, where, {"kind", "n", "point"});
      const long long n = need_int(j, where, "n");
      if (n < 0) bad(where + ": n must be >= 0");
      return {RationalBlowup{n, chain_point_from_string(need_string(j, where, "point"), where)}};
    }
    if (kind == "ruled") return {RuledOverCurve{ruled_from_json(j, where)}};
    if (kind == "hyperelliptic") {
      check_keys(j, where, {"kind", "type", "curve", "epsilon"});
      const int type = static_cast<int>(need_int(j, where, "type"));
      const auto tau = tau_from_string(need_string(j, where, "curve"), where);
      std::optional<elliptic::TorsionPoint> eps;
      if (j.contains("epsilon"))
        eps = epsilon_from_string(need_string(j, where, "epsilon"), where);
      return {Hyperelliptic{elliptic::BdFDatum::make(type, tau, eps)}};
    }
    if (kind == "sip_unmixed") {
      check_keys(j, where,
                 {"kind", "signature", "genus_c1", "group_order", "translation_order",
                  "free_on_c1", "free_on_e"});
      SIPUnmixed s{signature_from_json(need(j, where, "signature"), where + ".signature"),
                   need_int(j, where, "genus_c1"),
                   need_int(j, where, "group_order"),
                   need_int(j, where, "translation_order"),
                   need_bool(j, where, "free_on_c1"),
                   need_bool(j, where, "free_on_e")};
      return {std::move(s)};
    }
    if (kind == "kod1_minimal") {
      check_keys(j, where, {"kind", "n"});
      return {Kod1MinimalExample{need_int(j, where, "n")}};
    }
    if (kind == "kod1_blowup") {
      check_keys(j, where, {"kind", "n", "signature"});
      return {Kod1BlowupExample{need_int(j, where, "n"),
                                signature_from_json(need(j, where, "signature"),
                                                    where + ".signature")}};
    }
    if (kind == "general_type") {
      check_keys(j, where, {"kind", "chi"});
      const long long chi = need_int(j, where, "chi");
      if (chi < 1) bad(where + ": chi must be a positive integer");
      return {GeneralType{chi}};
    }
    if (kind == "non_minimal") {
      check_keys(j, where, {"kind", "core", "chi_top", "nonpositively_curved_target"});
      NonMinimal nm;
      nm.core = std::make_shared<SurfaceDescriptor>(
          surface_from_json(need(j, where, "core"), where + ".core"));
      nm.chi_top = need_int(j, where, "chi_top");
      nm.nonpositively_curved_target = need_bool(j, where, "nonpositively_curved_target");
      return {std::move(nm)};
    }
  } catch (const precondition_error&) {
    throw;  // descriptor parsed but describes an invalid datum: exit 3 territory
  }
  bad(where + ": unknown surface kind '" + kind + "'");
}

ordered_json parse_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

SurfaceDescriptor descriptor_from_json(const std::string& text) {
  const ordered_json j = parse_text(text);
  check_keys(j, "descriptor", {"format_version", "surface"});
  const std::string version = need_string(j, "descriptor", "format_version");
  if (version != kDescriptorFormatVersion)
    bad("unsupported format_version '" + version + "' (supported: " +
        std::string(kDescriptorFormatVersion) + ")");
  return surface_from_json(need(j, "descriptor", "surface"), "surface");
}

std::string descriptor_to_json(const SurfaceDescriptor& desc) {
  ordered_json j;
  j["format_version"] = kDescriptorFormatVersion;
  j["surface"] = surface_to_json(desc);
  return j.dump(2) + "\n";
}

std::string report_document(const SurfaceDescriptor& desc, const ClassificationReport& report) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["descriptor"] = {{"format_version", kDescriptorFormatVersion},
                     {"surface", surface_to_json(desc)}};
  ordered_json ladder = ordered_json::object();
  for (const auto& [slot, entry] : report.ladder) {
    ordered_json rules = ordered_json::array();
    for (const auto& cite : entry.rules)
      rules.push_back({{"rule", cite.rule}, {"anchor", cite.anchor}});
    ladder[slot] = {{"value", value_to_json(entry.value)}, {"rules", rules}};
  }
  j["ladder"] = ladder;
  ordered_json inv = ordered_json::object();
  for (const auto& [k, v] : report.invariants) inv[k] = v;
  j["invariants"] = inv;
  j["notes"] = report.notes;
  ordered_json applied = ordered_json::array();
  for (const auto& cite : report.rules_applied)
    applied.push_back({{"rule", cite.rule}, {"anchor", cite.anchor}});
  j["rules_applied"] = applied;
  return j.dump(2) + "\n";
}

ParsedDocument report_document_parse(const std::string& text) {
  const ordered_json j = parse_text(text);
  check_keys(j, "report", {"schema", "tool", "descriptor", "ladder", "invariants", "notes",
                           "rules_applied"});
  if (need_string(j, "report", "schema") != kReportSchema)
    bad("unsupported report schema");
  const auto& dj = need(j, "report", "descriptor");
  check_keys(dj, "report.descriptor", {"format_version", "surface"});
  ParsedDocument out{surface_from_json(need(dj, "report.descriptor", "surface"), "surface"), {}};

  auto cite_from = [](const ordered_json& cj, const std::string& where) {
    check_keys(cj, where, {"rule", "anchor"});
    return RuleCite{need_string(cj, where, "rule"), need_string(cj, where, "anchor")};
  };

  for (const auto& [slot, ej] : need(j, "report", "ladder").items()) {
    check_keys(ej, "ladder." + slot, {"value", "rules"});
    Entry e;
    e.value = value_from_json(need(ej, "ladder." + slot, "value"), "ladder." + slot);
    for (const auto& cj : need(ej, "ladder." + slot, "rules"))
      e.rules.push_back(cite_from(cj, "ladder." + slot));
    out.report.ladder.emplace(slot, std::move(e));
  }
  for (const auto& [k, v] : need(j, "report", "invariants").items()) {
    if (!v.is_number_integer()) bad("invariants must be integers");
    out.report.invariants[k] = v.get<long long>();
  }
  for (const auto& n : need(j, "report", "notes")) {
    if (!n.is_string()) bad("notes must be strings");
    out.report.notes.push_back(n.get<std::string>());
  }
  for (const auto& cj : need(j, "report", "rules_applied"))
    out.report.rules_applied.push_back(cite_from(cj, "rules_applied"));
  return out;
}

}  // namespace surfaut::io
