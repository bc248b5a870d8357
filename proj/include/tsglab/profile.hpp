#ifndef TSGLAB_PROFILE_HPP
#define TSGLAB_PROFILE_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tsglab/perm.hpp"

namespace tsglab {

/// Number of vertices fixed by an element of each class. `n2` counts
/// involutions of the even subgroup; `n2p` (S4 only) involutions outside it.
struct FixedVertexProfile {
  GroupName group = GroupName::A4;
  std::optional<long> n1;  // m, when the profile belongs to a concrete action
  int n2 = 0;
  std::optional<int> n2p;  // S4
  int n3 = 0;
  std::optional<int> n4;   // S4
  std::optional<int> n5;   // A5

  static FixedVertexProfile zero(GroupName group);
  /// Builds a profile from per-class fixed counts; missing classes count 0.
  static FixedVertexProfile from_counts(GroupName group, const std::map<ClassLabel, int>& counts,
                                        std::optional<long> m = std::nullopt);

  int count(const ClassLabel& label) const;
  /// (label, count) for every non-identity class of the group.
  std::vector<std::pair<ClassLabel, int>> entries() const;

  /// Throws std::domain_error if a count is negative, exceeds the fixed
  /// circle caps (n_k <= 3, involutions <= 2), or a field does not match the
  /// group.
  void validate() const;

  /// Compact form such as "(n2, n3) = (1, 2)".
  std::string to_string() const;

  bool operator==(const FixedVertexProfile&) const = default;
};

/// Number of group elements in each non-identity class.
const std::map<ClassLabel, int>& class_sizes(GroupName group);

enum class RuleKind {
  Profile,     // constrains the fixed-vertex counts
  Congruence,  // constrains m directly
};

struct LemmaRule {
  std::string id;
  std::string statement;  // the constraint as a formula, e.g. "n_5 ≠ 2"
  std::string reason;     // where the constraint comes from
  RuleKind kind = RuleKind::Profile;
  /// Congruence rules read `n1`; they hold vacuously when it is unset.
  std::function<bool(const FixedVertexProfile&)> holds;
};

using RuleSet = std::vector<LemmaRule>;

/// All constraints for `group`, in the order they are derived.
RuleSet rule_set(GroupName group);
RuleSet profile_rules(GroupName group);
/// `rules` minus the listed ids; throws std::invalid_argument on unknown ids.
RuleSet without_rules(const RuleSet& rules, std::span<const std::string> ids);
/// First rule in `rules` that `profile` violates.
const LemmaRule* first_violation(const RuleSet& rules, const FixedVertexProfile& profile);

struct CongruenceSet {
  int modulus = 1;
  std::set<int> residues;

  bool contains(long m) const { return residues.contains(static_cast<int>(((m % modulus) + modulus) % modulus)); }
  std::string to_string() const;  // "{0, 4, 8} (mod 24)"
  bool operator==(const CongruenceSet&) const = default;
};

/// Every profile in the box {0..3}^k that satisfies every profile rule.
/// Only A4 and A5 are tabulated; S4 throws std::invalid_argument.
std::vector<FixedVertexProfile> enumerate_profiles(GroupName group);

/// The residue r (mod |G|) for which Burnside's count
/// (r + sum of class_size * n_k) / |G| is an integer.
int residue_from_profile(GroupName group, const FixedVertexProfile& profile);

CongruenceSet admissible_residues(GroupName group);

struct Verdict {
  GroupName group = GroupName::A4;
  long m = 0;
  bool admissible = false;
  std::vector<FixedVertexProfile> witnesses;  // set iff admissible
  std::optional<LemmaRule> violated_rule;     // set iff not admissible
  std::string reason;
};

/// Throws std::domain_error for m < 4.
Verdict necessity_check(GroupName group, long m);

}  // namespace tsglab

#endif  // TSGLAB_PROFILE_HPP
