#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "surfaut/elliptic.hpp"
#include "surfaut/fin_ab_group.hpp"

namespace surfaut::classifier {

// One- or two-sided bound on a cardinality or index.
struct Bound {
  enum class Rel { at_most, at_least };
  Rel rel = Rel::at_most;
  Int n = 1;
  bool operator==(const Bound&) const = default;
};

// Exactly-known finite cardinality (of an index).
struct Cardinal {
  Int n = 1;
  bool operator==(const Cardinal&) const = default;
};

// A group known only through a structural description ("E", "Aut_B(X)", ...).
struct Symbolic {
  std::string text;
  bool operator==(const Symbolic&) const = default;
};

// monostate = Unknown (first-class: open questions stay open).
using LadderValue =
    std::variant<std::monostate, FinAbGroup, elliptic::FiniteGroupId, Bound, Cardinal, Symbolic>;

bool ladder_value_equal(const LadderValue& a, const LadderValue& b);
std::string ladder_value_to_string(const LadderValue& v);

struct RuleCite {
  std::string rule;    // "R4"
  std::string anchor;  // the mathematical statement the rule encodes
  bool operator==(const RuleCite&) const = default;
};

struct Entry {
  LadderValue value;
  std::vector<RuleCite> rules;  // nonempty for every non-Unknown entry
  bool operator==(const Entry&) const = default;
};

// Slot names (keys of ClassificationReport::ladder).  Component groups:
// gamma_star = Aut_*/Aut_0 and the successive quotients up the ladder;
// absolute groups and order/index bounds where a rule pins them down.
namespace slot {
inline constexpr const char* aut0 = "aut0";
inline constexpr const char* aut_star = "aut_star";
inline constexpr const char* aut_sharp = "aut_sharp";
inline constexpr const char* aut_z = "aut_z";
inline constexpr const char* aut_q = "aut_q";
inline constexpr const char* gamma_star = "gamma_star";
inline constexpr const char* gamma_sharp_over_star = "gamma_sharp_over_star";
inline constexpr const char* gamma_z_over_sharp = "gamma_z_over_sharp";
inline constexpr const char* gamma_q_over_z = "gamma_q_over_z";
inline constexpr const char* gamma_z = "gamma_z";
inline constexpr const char* gamma_q = "gamma_q";
inline constexpr const char* order_aut_q = "order_aut_q";
inline constexpr const char* order_aut_z = "order_aut_z";
inline constexpr const char* order_gamma_star = "order_gamma_star";
inline constexpr const char* index_q_over_0 = "index_aut_q_over_aut0";
inline constexpr const char* index_q_over_z = "index_aut_q_over_aut_z";
}  // namespace slot

struct ClassificationReport {
  std::map<std::string, Entry> ladder;          // alphabetical = canonical order
  std::map<std::string, long long> invariants;  // chi_top, p_g, q, b2, ...
  std::vector<std::string> notes;
  std::vector<RuleCite> rules_applied;

  bool operator==(const ClassificationReport&) const = default;
};

// Merge policy: a rule may fill an Unknown slot, restate an equal value, or
// refine a compatible bound; a genuine conflict between two rules aborts with
// a diagnostic naming both.  Bounds never tighten a concrete value.
void report_set(ClassificationReport& report, const std::string& slot, LadderValue value,
                const RuleCite& cite);

struct classifier_contradiction : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace surfaut::classifier
