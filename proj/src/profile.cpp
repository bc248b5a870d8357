#include "tsglab/profile.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tsglab {

namespace {

constexpr ClassLabel kInvolution{2, true};
constexpr ClassLabel kOddInvolution{2, false};
constexpr ClassLabel kOrder3{3, true};
constexpr ClassLabel kOrder4{4, false};
constexpr ClassLabel kOrder5{5, true};

std::string join_ints(const std::set<int>& values) {
  std::ostringstream out;
  bool first = true;
  for (int v : values) {
    out << (first ? "" : ", ") << v;
    first = false;
  }
  return out.str();
}

LemmaRule profile_rule(std::string id, std::string statement, std::string reason,
                       std::function<bool(const FixedVertexProfile&)> holds) {
  return LemmaRule{std::move(id), std::move(statement), std::move(reason), RuleKind::Profile, std::move(holds)};
}

LemmaRule congruence_rule(std::string id, std::string statement, std::string reason,
                          std::function<bool(long)> holds_for_m) {
  return LemmaRule{std::move(id), std::move(statement), std::move(reason), RuleKind::Congruence,
                   [holds_for_m = std::move(holds_for_m)](const FixedVertexProfile& p) {
                     return !p.n1.has_value() || holds_for_m(*p.n1);
                   }};
}

int max_count(const FixedVertexProfile& p) {
  int out = std::max(p.n2, p.n3);
  for (const auto& v : {p.n2p, p.n4, p.n5}) {
    if (v) out = std::max(out, *v);
  }
  return out;
}

// Rules that hold for G = A4 and are inherited by S4 and A5 through their A4
// subgroups.
void append_a4_rules(RuleSet& rules) {
  rules.push_back(profile_rule("inv-le1", "n_2 ≤ 1",
                               "two involutions of a D2 subgroup cannot both fix an edge pointwise",
                               [](const FixedVertexProfile& p) { return p.n2 <= 1; }));
  rules.push_back(profile_rule(
      "inv-excl-n3eq3", "n_2 = 1 ⇒ n_3 ≠ 3",
      "a vertex fixed by an involution is fixed by all of A4, so two order-3 circles holding 3 vertices "
      "would share an edge",
      [](const FixedVertexProfile& p) { return p.n2 != 1 || p.n3 != 3; }));
  rules.push_back(profile_rule("n3zero-n2zero", "n_3 = 0 ⇒ n_2 = 0",
                               "a vertex fixed by an involution is fixed by every element of A4",
                               [](const FixedVertexProfile& p) { return p.n3 != 0 || p.n2 == 0; }));
}

void append_caps(RuleSet& rules) {
  rules.push_back(profile_rule("cap3", "n_k ≤ 3 for every k > 1",
                               "a rotation fixes one circle, and a circle holds at most 3 vertices of an embedded "
                               "complete graph",
                               [](const FixedVertexProfile& p) { return max_count(p) <= 3; }));
  rules.push_back(profile_rule("cap-inv2", "n_2 ≤ 2 and n_2' ≤ 2",
                               "an involution fixing 3 vertices would fix a point inside an edge it inverts",
                               [](const FixedVertexProfile& p) { return p.n2 <= 2 && p.n2p.value_or(0) <= 2; }));
}

template <class Fn>
void for_each_in_box(GroupName group, int bound, Fn&& fn) {
  FixedVertexProfile p = FixedVertexProfile::zero(group);
  switch (group) {
    case GroupName::A4:
      for (p.n2 = 0; p.n2 <= bound; ++p.n2)
        for (p.n3 = 0; p.n3 <= bound; ++p.n3) fn(p);
      break;
    case GroupName::S4:
      for (p.n2 = 0; p.n2 <= bound; ++p.n2)
        for (int n2p = 0; n2p <= bound; ++n2p)
          for (p.n3 = 0; p.n3 <= bound; ++p.n3)
            for (int n4 = 0; n4 <= bound; ++n4) {
              p.n2p = n2p;
              p.n4 = n4;
              fn(p);
            }
      break;
    case GroupName::A5:
      for (p.n2 = 0; p.n2 <= bound; ++p.n2)
        for (p.n3 = 0; p.n3 <= bound; ++p.n3)
          for (int n5 = 0; n5 <= bound; ++n5) {
            p.n5 = n5;
            fn(p);
          }
      break;
  }
}

long burnside_weight(GroupName group, const FixedVertexProfile& p) {
  long total = 0;
  for (const auto& [label, size] : class_sizes(group)) total += static_cast<long>(size) * p.count(label);
  return total;
}

}  // namespace

// ---------------------------------------------------------------------------
// FixedVertexProfile

FixedVertexProfile FixedVertexProfile::zero(GroupName group) {
  FixedVertexProfile p;
  p.group = group;
  if (group == GroupName::S4) {
    p.n2p = 0;
    p.n4 = 0;
  }
  if (group == GroupName::A5) p.n5 = 0;
  return p;
}

FixedVertexProfile FixedVertexProfile::from_counts(GroupName group, const std::map<ClassLabel, int>& counts,
                                                   std::optional<long> m) {
  auto get = [&](const ClassLabel& label) {
    auto it = counts.find(label);
    return it == counts.end() ? 0 : it->second;
  };
  FixedVertexProfile p = zero(group);
  p.n1 = m;
  p.n2 = get(kInvolution);
  p.n3 = get(kOrder3);
  if (group == GroupName::S4) {
    p.n2p = get(kOddInvolution);
    p.n4 = get(kOrder4);
  }
  if (group == GroupName::A5) p.n5 = get(kOrder5);
  return p;
}

int FixedVertexProfile::count(const ClassLabel& label) const {
  if (label.order == 1) return n1 ? static_cast<int>(*n1) : 0;
  if (label == kInvolution) return n2;
  if (label == kOddInvolution) return n2p.value_or(0);
  if (label == kOrder3) return n3;
  if (label == kOrder4) return n4.value_or(0);
  if (label == kOrder5) return n5.value_or(0);
  return 0;
}

std::vector<std::pair<ClassLabel, int>> FixedVertexProfile::entries() const {
  std::vector<std::pair<ClassLabel, int>> out{{kInvolution, n2}};
  if (n2p) out.emplace_back(kOddInvolution, *n2p);
  out.emplace_back(kOrder3, n3);
  if (n4) out.emplace_back(kOrder4, *n4);
  if (n5) out.emplace_back(kOrder5, *n5);
  return out;
}

void FixedVertexProfile::validate() const {
  const bool s4 = group == GroupName::S4;
  const bool a5 = group == GroupName::A5;
  if (n2p.has_value() != s4 || n4.has_value() != s4 || n5.has_value() != a5) {
    throw std::domain_error("profile fields do not match group " + std::string(tsglab::to_string(group)));
  }
  if (n1 && *n1 < 0) throw std::domain_error("negative vertex count");
  for (const auto& [label, value] : entries()) {
    if (value < 0) throw std::domain_error("negative fixed count for " + tsglab::to_string(label));
    if (value > 3) {
      throw std::domain_error(tsglab::to_string(label) + " element fixes " + std::to_string(value) +
                              " > 3 vertices");
    }
    if (label.order == 2 && value > 2) {
      throw std::domain_error("an involution fixes " + std::to_string(value) + " > 2 vertices");
    }
  }
}

std::string FixedVertexProfile::to_string() const {
  std::ostringstream names;
  std::ostringstream values;
  names << "(n2";
  values << "(" << n2;
  if (n2p) {
    names << ", n2'";
    values << ", " << *n2p;
  }
  names << ", n3";
  values << ", " << n3;
  if (n4) {
    names << ", n4";
    values << ", " << *n4;
  }
  if (n5) {
    names << ", n5";
    values << ", " << *n5;
  }
  names << ")";
  values << ")";
  return names.str() + " = " + values.str();
}

const std::map<ClassLabel, int>& class_sizes(GroupName group) {
  static const std::map<GroupName, std::map<ClassLabel, int>> sizes = [] {
    std::map<GroupName, std::map<ClassLabel, int>> out;
    for (GroupName name : {GroupName::A4, GroupName::S4, GroupName::A5}) {
      auto g = standard_group(name);
      for (const auto& label : g->class_labels()) {
        if (label.order == 1) continue;
        out[name][label] = static_cast<int>(g->elements_with_label(label).size());
      }
    }
    return out;
  }();
  return sizes.at(group);
}

// ---------------------------------------------------------------------------
// Rules

RuleSet rule_set(GroupName group) {
  RuleSet rules;
  append_caps(rules);
  switch (group) {
    case GroupName::A4:
      append_a4_rules(rules);
      break;
    case GroupName::A5:
      rules.push_back(profile_rule("nk-le2", "n_k ≤ 2 for every k > 1",
                                   "in A5 an element fixing 3 vertices leads to two non-commuting elements "
                                   "fixing a common edge",
                                   [](const FixedVertexProfile& p) { return max_count(p) <= 2; }));
      append_a4_rules(rules);
      rules.push_back(profile_rule(
          "single-fix-global", "n_3 = 1 or n_5 = 1 ⇒ n_2 = n_3 = n_5 = 1",
          "an odd-order element fixing a single vertex forces that vertex to be the only vertex fixed by any "
          "non-trivial element",
          [](const FixedVertexProfile& p) {
            const int n5 = p.n5.value_or(0);
            return !(p.n3 == 1 || n5 == 1) || (p.n2 == 1 && p.n3 == 1 && n5 == 1);
          }));
      rules.push_back(profile_rule("n5ne2", "n_5 ≠ 2",
                                   "two vertices on an order-5 rotation circle span an edge whose midpoint "
                                   "would be shared with other edges of its orbit",
                                   [](const FixedVertexProfile& p) { return p.n5.value_or(0) != 2; }));
      break;
    case GroupName::S4:
      rules.push_back(profile_rule("n4zero", "n_4 = 0",
                                   "an order-4 element with a fixed circle would fix a point on an edge whose "
                                   "endpoints it moves",
                                   [](const FixedVertexProfile& p) { return p.n4.value_or(0) == 0; }));
      rules.push_back(congruence_rule("m-0mod4", "m ≡ 0 (mod 4)",
                                      "fixed-point-free order-4 elements force m even, and the A4 subgroup "
                                      "leaves m ≡ 0, 1 (mod 4)",
                                      [](long m) { return m % 4 == 0; }));
      append_a4_rules(rules);
      rules.push_back(congruence_rule("m-not16mod24", "m ≢ 16 (mod 24)",
                                      "for m ≡ 16 (mod 24) each order-3 circle holds one vertex, which an "
                                      "inverting involution would have to fix",
                                      [](long m) { return m % 24 != 16; }));
      break;
  }
  return rules;
}

RuleSet profile_rules(GroupName group) {
  RuleSet out;
  for (auto& rule : rule_set(group)) {
    if (rule.kind == RuleKind::Profile) out.push_back(std::move(rule));
  }
  return out;
}

RuleSet without_rules(const RuleSet& rules, std::span<const std::string> ids) {
  for (const auto& id : ids) {
    if (std::none_of(rules.begin(), rules.end(), [&](const LemmaRule& r) { return r.id == id; })) {
      throw std::invalid_argument("unknown rule id '" + id + "'");
    }
  }
  RuleSet out;
  for (const auto& rule : rules) {
    if (std::find(ids.begin(), ids.end(), rule.id) == ids.end()) out.push_back(rule);
  }
  return out;
}

const LemmaRule* first_violation(const RuleSet& rules, const FixedVertexProfile& profile) {
  for (const auto& rule : rules) {
    if (!rule.holds(profile)) return &rule;
  }
  return nullptr;
}

std::string CongruenceSet::to_string() const {
  return "{" + join_ints(residues) + "} (mod " + std::to_string(modulus) + ")";
}

// ---------------------------------------------------------------------------
// Tables and verdicts

std::vector<FixedVertexProfile> enumerate_profiles(GroupName group) {
  if (group == GroupName::S4) {
    throw std::invalid_argument("S4 is classified through its congruence chain; use necessity_check");
  }
  const RuleSet rules = profile_rules(group);
  std::vector<FixedVertexProfile> out;
  for_each_in_box(group, 3, [&](const FixedVertexProfile& p) {
    if (first_violation(rules, p) == nullptr) out.push_back(p);
  });
  return out;
}

int residue_from_profile(GroupName group, const FixedVertexProfile& profile) {
  const long order = group_order(group);
  const long weight = burnside_weight(group, profile) % order;
  return static_cast<int>((order - weight) % order);
}

CongruenceSet admissible_residues(GroupName group) {
  CongruenceSet out{group_order(group), {}};
  if (group != GroupName::S4) {
    for (const auto& p : enumerate_profiles(group)) out.residues.insert(residue_from_profile(group, p));
    return out;
  }
  // S4: lift the A4 residues to mod 24, then apply the congruence rules.
  const CongruenceSet a4 = admissible_residues(GroupName::A4);
  RuleSet congruences;
  for (auto& rule : rule_set(GroupName::S4)) {
    if (rule.kind == RuleKind::Congruence) congruences.push_back(std::move(rule));
  }
  for (int r = 0; r < out.modulus; ++r) {
    if (!a4.contains(r)) continue;
    FixedVertexProfile p = FixedVertexProfile::zero(GroupName::S4);
    p.n1 = r;
    if (first_violation(congruences, p) == nullptr) out.residues.insert(r);
  }
  return out;
}

Verdict necessity_check(GroupName group, long m) {
  if (m < 4) {
    throw std::domain_error("m = " + std::to_string(m) + " < 4: A4, S4 and A5 do not act faithfully on fewer than 4 vertices");
  }
  Verdict verdict;
  verdict.group = group;
  verdict.m = m;
  const int order = group_order(group);
  const int residue = static_cast<int>(m % order);
  const CongruenceSet admissible = admissible_residues(group);
  const RuleSet rules = rule_set(group);

  if (group == GroupName::S4) {
    FixedVertexProfile probe = FixedVertexProfile::zero(group);
    probe.n1 = m;
    for (const auto& rule : rules) {
      if (rule.kind == RuleKind::Congruence && !rule.holds(probe)) {
        verdict.violated_rule = rule;
        verdict.reason = "m = " + std::to_string(m) + " violates " + rule.statement;
        return verdict;
      }
    }
    for_each_in_box(group, 3, [&](const FixedVertexProfile& candidate) {
      FixedVertexProfile p = candidate;
      p.n1 = m;
      if (residue_from_profile(group, p) == residue && first_violation(rules, p) == nullptr) {
        verdict.witnesses.push_back(p);
      }
    });
    if (verdict.witnesses.empty()) throw std::logic_error("S4 congruence chain admits m without a witness profile");
    verdict.admissible = true;
    verdict.reason = "m ≡ " + std::to_string(residue) + " (mod 24) is in " + admissible.to_string();
    return verdict;
  }

  if (admissible.contains(m)) {
    for (auto p : enumerate_profiles(group)) {
      if (residue_from_profile(group, p) == residue) {
        p.n1 = m;
        verdict.witnesses.push_back(p);
      }
    }
    verdict.admissible = true;
    verdict.reason = "m ≡ " + std::to_string(residue) + " (mod " + std::to_string(order) + ") is in " +
                     admissible.to_string();
    return verdict;
  }

  // Eliminate the Burnside-consistent profiles rule by rule; the rule that
  // removes the last candidate is the one reported.
  std::vector<FixedVertexProfile> candidates;
  const int bound = static_cast<int>(std::min<long>(m, order - 1));
  for_each_in_box(group, bound, [&](const FixedVertexProfile& candidate) {
    FixedVertexProfile p = candidate;
    p.n1 = m;
    if (residue_from_profile(group, p) == residue) candidates.push_back(p);
  });
  for (const auto& rule : rules) {
    std::vector<FixedVertexProfile> survivors;
    for (const auto& p : candidates) {
      if (rule.holds(p)) survivors.push_back(p);
    }
    if (survivors.empty()) {
      verdict.violated_rule = rule;
      std::string last = candidates.empty() ? std::string("none") : candidates.back().to_string();
      verdict.reason = "m ≡ " + std::to_string(residue) + " (mod " + std::to_string(order) +
                       ") is not in " + admissible.to_string() + "; the last Burnside-consistent profile " + last +
                       " violates " + rule.statement;
      return verdict;
    }
    candidates = std::move(survivors);
  }
  throw std::logic_error("inadmissible residue survived every rule");
}

}  // namespace tsglab
