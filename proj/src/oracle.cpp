#include "tsglab/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tsglab {

namespace {

RuleSet active_rules(GroupName group, const OracleOptions& options) {
  RuleSet rules = options.with_congruence_rules ? rule_set(group) : profile_rules(group);
  if (!options.dropped_rules.empty()) {
    // Validate ids against the full list so dropping a congruence rule is not
    // an error when those rules are off.
    (void)without_rules(rule_set(group), options.dropped_rules);
    RuleSet kept;
    for (auto& rule : rules) {
      if (std::find(options.dropped_rules.begin(), options.dropped_rules.end(), rule.id) ==
          options.dropped_rules.end()) {
        kept.push_back(std::move(rule));
      }
    }
    rules = std::move(kept);
  }
  return rules;
}

FixedVertexProfile profile_of(GroupName group, const std::map<ClassLabel, int>& counts, std::optional<long> m) {
  return FixedVertexProfile::from_counts(group, counts, m);
}

}  // namespace

int OrbitMultiset::orbit_total() const {
  int total = 0;
  for (const auto& [type, count] : parts) total += count;
  return total;
}

std::string OrbitMultiset::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [type, count] : parts) {
    out << (first ? "" : " + ") << count << "×deg" << type.degree;
    first = false;
  }
  if (first) out << "∅";
  return out.str();
}

std::vector<TransitiveType> transitive_types(GroupName group) {
  auto g = standard_group(group);
  std::vector<TransitiveType> out;
  const auto subgroups = subgroups_up_to_conjugacy(*g);
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    const GroupAction action = coset_action(g, subgroups[i]);
    TransitiveType type{group, static_cast<int>(i), subgroups[i], action.m, {}};
    for (ElementId e = 1; e < g->order(); ++e) {
      const int fixed = fixed_count(action, e);
      auto [it, inserted] = type.fix_vector.emplace(g->class_of(e), fixed);
      if (!inserted && it->second != fixed) throw std::logic_error("fixed count is not a class function");
    }
    out.push_back(std::move(type));
  }
  return out;
}

std::vector<TransitiveType> admissible_types(GroupName group, const OracleOptions& options) {
  const RuleSet rules = active_rules(group, options);
  std::vector<TransitiveType> out;
  for (auto& type : transitive_types(group)) {
    const auto labels = std::vector<std::pair<ClassLabel, int>>(type.fix_vector.begin(), type.fix_vector.end());
    if (std::any_of(labels.begin(), labels.end(), [](const auto& kv) { return kv.second > 3; })) continue;
    // Walk every capped profile dominating the fix vector.
    std::vector<int> current(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) current[i] = labels[i].second;
    bool survives = false;
    while (true) {
      std::map<ClassLabel, int> counts;
      for (std::size_t i = 0; i < labels.size(); ++i) counts[labels[i].first] = current[i];
      if (first_violation(rules, profile_of(group, counts, std::nullopt)) == nullptr) {
        survives = true;
        break;
      }
      std::size_t i = 0;
      while (i < current.size() && current[i] == 3) {
        current[i] = labels[i].second;
        ++i;
      }
      if (i == current.size()) break;
      ++current[i];
    }
    if (survives) out.push_back(std::move(type));
  }
  return out;
}

GroupAction materialize(const OrbitMultiset& multiset) {
  auto g = standard_group(multiset.group);
  std::vector<GroupAction> pieces;
  for (const auto& [type, count] : multiset.parts) {
    const GroupAction piece = coset_action(g, type.subgroup);
    for (int i = 0; i < count; ++i) pieces.push_back(piece);
  }
  if (pieces.empty()) {
    GroupAction empty{g, 0, std::vector<Permutation>(static_cast<std::size_t>(g->order()), Permutation::identity(0))};
    return empty;
  }
  return direct_sum(pieces);
}

std::vector<OrbitMultiset> feasible_multisets(GroupName group, long m, const OracleOptions& options) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  const RuleSet rules = active_rules(group, options);
  const auto types = admissible_types(group, options);
  std::vector<OrbitMultiset> out;
  std::vector<int> counts(types.size(), 0);

  auto consider = [&] {
    std::map<ClassLabel, int> fixed;
    for (std::size_t i = 0; i < types.size(); ++i) {
      for (const auto& [label, value] : types[i].fix_vector) fixed[label] += counts[i] * value;
    }
    OrbitMultiset candidate;
    candidate.group = group;
    candidate.m = m;
    candidate.aggregate = profile_of(group, fixed, m);
    if (first_violation(rules, candidate.aggregate) != nullptr) return;
    for (std::size_t i = 0; i < types.size(); ++i) {
      if (counts[i] > 0) candidate.parts.emplace_back(types[i], counts[i]);
    }
    if (m >= 4 && !is_faithful(materialize(candidate))) return;
    out.push_back(std::move(candidate));
  };

  // Bounded knapsack over the type degrees.
  auto recurse = [&](auto&& self, std::size_t index, long remaining) -> void {
    if (index == types.size()) {
      if (remaining == 0) consider();
      return;
    }
    const int degree = types[index].degree;
    for (int c = 0; static_cast<long>(c) * degree <= remaining; ++c) {
      counts[index] = c;
      self(self, index + 1, remaining - static_cast<long>(c) * degree);
    }
    counts[index] = 0;
  };
  recurse(recurse, 0, m);
  return out;
}

CongruenceSet oracle_residues(GroupName group, const OracleOptions& options) {
  const int order = group_order(group);
  const long limit = options.max_m.value_or(3L * order);
  if (limit < order) {
    throw std::invalid_argument("max_m = " + std::to_string(limit) + " is below |G| = " + std::to_string(order));
  }
  CongruenceSet out{order, {}};
  for (int r = 0; r < order; ++r) {
    std::optional<bool> verdict;
    for (long m = r; m < limit; m += order) {
      const bool feasible = !feasible_multisets(group, m, options).empty();
      if (verdict && *verdict != feasible) {
        throw std::runtime_error("feasibility of residue " + std::to_string(r) + " (mod " + std::to_string(order) +
                                 ") changes at m = " + std::to_string(m));
      }
      verdict = feasible;
    }
    if (verdict.value_or(false)) out.residues.insert(r);
  }
  return out;
}

}  // namespace tsglab
