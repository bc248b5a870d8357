#ifndef TSGLAB_ORACLE_HPP
#define TSGLAB_ORACLE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsglab/perm.hpp"
#include "tsglab/profile.hpp"

namespace tsglab {

/// A transitive action of a standard group, up to isomorphism: the action on
/// the cosets of `subgroup`.
struct TransitiveType {
  GroupName group = GroupName::A4;
  int subgroup_index = 0;  // position in subgroups_up_to_conjugacy
  ElementSet subgroup;
  int degree = 0;
  std::map<ClassLabel, int> fix_vector;  // non-identity classes only
};

struct OrbitMultiset {
  GroupName group = GroupName::A4;
  std::vector<std::pair<TransitiveType, int>> parts;  // (type, multiplicity), multiplicity > 0
  long m = 0;
  FixedVertexProfile aggregate;

  int orbit_total() const;
  std::string to_string() const;
};

struct OracleOptions {
  std::vector<std::string> dropped_rules;  // ids removed from the rule set
  bool with_congruence_rules = false;      // also apply rules that read m directly
  std::optional<long> max_m;               // window is [0, max_m); default 3|G|
};

std::vector<TransitiveType> transitive_types(GroupName group);

/// Types that can occur in some feasible action: at least one capped profile
/// dominating the type's fix vector passes every active rule.
std::vector<TransitiveType> admissible_types(GroupName group, const OracleOptions& options = {});

/// All orbit multisets on m vertices whose aggregate profile passes every
/// active rule and, for m >= 4, whose direct-sum action is faithful.
std::vector<OrbitMultiset> feasible_multisets(GroupName group, long m, const OracleOptions& options = {});

/// The direct sum of coset actions described by `multiset`.
GroupAction materialize(const OrbitMultiset& multiset);

/// Residues r < |G| feasible at every r + k|G| in the window. Throws
/// std::runtime_error when feasibility is not |G|-periodic on the window,
/// std::invalid_argument when max_m < |G|.
CongruenceSet oracle_residues(GroupName group, const OracleOptions& options = {});

}  // namespace tsglab

#endif  // TSGLAB_ORACLE_HPP
