#include "surfaut/report.hpp"

#include <sstream>

namespace surfaut::classifier {

bool ladder_value_equal(const LadderValue& a, const LadderValue& b) { return a == b; }

std::string ladder_value_to_string(const LadderValue& v) {
  struct Printer {
    std::string operator()(std::monostate) const { return "unknown"; }
    std::string operator()(const FinAbGroup& g) const { return g.to_string(); }
    std::string operator()(const elliptic::FiniteGroupId& g) const { return g.to_string(); }
    std::string operator()(const Bound& b) const {
      return (b.rel == Bound::Rel::at_most ? "<= " : ">= ") + b.n.str();
    }
    std::string operator()(const Cardinal& c) const { return "= " + c.n.str(); }
    std::string operator()(const Symbolic& s) const { return s.text; }
  };
  return std::visit(Printer{}, v);
}

namespace {

bool is_unknown(const LadderValue& v) { return std::holds_alternative<std::monostate>(v); }

// finite cardinality carried by a value, when it has one
std::optional<Int> value_order(const LadderValue& v) {
  if (const auto* g = std::get_if<FinAbGroup>(&v)) {
    if (g->is_finite()) return g->order();
    return std::nullopt;
  }
  if (const auto* g = std::get_if<elliptic::FiniteGroupId>(&v)) return g->order;
  if (const auto* c = std::get_if<Cardinal>(&v)) return c->n;
  return std::nullopt;
}

bool satisfies(const Int& n, const Bound& b) {
  return b.rel == Bound::Rel::at_most ? n <= b.n : n >= b.n;
}

[[noreturn]] void conflict(const std::string& slot, const Entry& existing, const RuleCite& cite,
                           const LadderValue& incoming) {
  std::ostringstream os;
  os << "contradictory rule outputs on slot '" << slot << "': ";
  os << (existing.rules.empty() ? std::string("?") : existing.rules.front().rule) << " gave '"
     << ladder_value_to_string(existing.value) << "', " << cite.rule << " gave '"
     << ladder_value_to_string(incoming) << "'";
  throw classifier_contradiction(os.str());
}

void add_cite(Entry& e, const RuleCite& cite) {
  for (const RuleCite& r : e.rules)
    if (r == cite) return;
  e.rules.push_back(cite);
}

}  // namespace

void report_set(ClassificationReport& report, const std::string& slot, LadderValue value,
                const RuleCite& cite) {
  if (is_unknown(value)) return;  // rules never write Unknown explicitly

  Entry& e = report.ladder[slot];
  bool applied = false;
  if (is_unknown(e.value)) {
    e.value = std::move(value);
    applied = true;
  } else if (ladder_value_equal(e.value, value)) {
    applied = true;  // restated by another rule; keep both citations
  } else if (const auto* nb = std::get_if<Bound>(&value)) {
    if (const auto* eb = std::get_if<Bound>(&e.value)) {
      if (eb->rel == nb->rel) {
        const bool tighter =
            nb->rel == Bound::Rel::at_most ? nb->n < eb->n : nb->n > eb->n;
        if (tighter) {
          e.value = value;
          applied = true;
        }
        // looser restatement: already covered, no citation needed
      } else {
        // mixed <= / >=: consistent iff the interval is nonempty; keep the first
        const Int lo = eb->rel == Bound::Rel::at_least ? eb->n : nb->n;
        const Int hi = eb->rel == Bound::Rel::at_most ? eb->n : nb->n;
        if (lo > hi) conflict(slot, e, cite, value);
      }
    } else if (const auto ord = value_order(e.value)) {
      if (!satisfies(*ord, *nb)) conflict(slot, e, cite, value);
      // concrete value already finer than the bound: nothing to record
    } else {
      conflict(slot, e, cite, value);  // bound against a symbolic value
    }
  } else if (const auto* eb = std::get_if<Bound>(&e.value)) {
    const auto ord = value_order(value);
    if (!ord || !satisfies(*ord, *eb))
      conflict(slot, e, cite, value);  // unverifiable or violating: never degrade a bound
    e.value = std::move(value);        // concrete refinement of the bound
    applied = true;
  } else {
    conflict(slot, e, cite, value);
  }

  if (applied) add_cite(e, cite);

  bool seen = false;
  for (const RuleCite& r : report.rules_applied)
    if (r == cite) seen = true;
  if (!seen) report.rules_applied.push_back(cite);
}

}  // namespace surfaut::classifier
