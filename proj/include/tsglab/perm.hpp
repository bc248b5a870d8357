#ifndef TSGLAB_PERM_HPP
#define TSGLAB_PERM_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tsglab {

/// The three polyhedral groups handled by this library.
enum class GroupName { A4, S4, A5 };

std::string_view to_string(GroupName name);
/// Parses "A4", "S4" or "A5"; throws std::invalid_argument otherwise.
GroupName parse_group_name(std::string_view text);
/// |A4| = 12, |S4| = 24, |A5| = 60.
int group_order(GroupName name);

/// A bijection of {0..degree-1} stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  /// (this * rhs)(i) = this(rhs(i)); rhs is applied first.
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  bool is_identity() const;
  int order() const;
  /// True for even permutations.
  bool is_even() const;
  int fixed_points() const;

  std::string cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

using ElementId = int;
using ElementSet = std::vector<ElementId>;  // sorted, duplicate-free

/// Element order plus whether the element lies in the even subgroup; this
/// separates the two involution classes of S4.
struct ClassLabel {
  int order = 1;
  bool in_even_subgroup = true;

  auto operator<=>(const ClassLabel&) const = default;
};

std::string to_string(const ClassLabel& label);

/// A fully enumerated permutation group with its multiplication table.
/// Element 0 is always the identity; the remaining elements are sorted by
/// their image lists.
class PermGroup {
 public:
  /// Closes `generators` under composition. The result is named `name`
  /// (A4 also names the A4 subgroups of S4 and A5, which act on 4 or 5
  /// letters).
  static PermGroup generate(GroupName name, const std::vector<Permutation>& generators);

  GroupName name() const { return name_; }
  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }

  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(ElementId id) const { return elements_[static_cast<std::size_t>(id)]; }
  const std::vector<Permutation>& generators() const { return generators_; }

  ElementId identity() const { return 0; }
  ElementId multiply(ElementId lhs, ElementId rhs) const {
    return mul_[static_cast<std::size_t>(lhs) * elements_.size() + static_cast<std::size_t>(rhs)];
  }
  ElementId inverse(ElementId id) const { return inv_[static_cast<std::size_t>(id)]; }
  ElementId conjugate(ElementId x, ElementId by) const { return multiply(multiply(by, x), inverse(by)); }

  /// Throws std::out_of_range when `perm` is not an element.
  ElementId find(const Permutation& perm) const;
  bool contains(const Permutation& perm) const;

  const ClassLabel& class_of(ElementId id) const { return class_of_[static_cast<std::size_t>(id)]; }
  /// Distinct labels in increasing order.
  std::vector<ClassLabel> class_labels() const;
  std::vector<ElementId> elements_with_label(const ClassLabel& label) const;

  bool is_subgroup(std::span<const ElementId> ids) const;
  ElementSet closure(std::span<const ElementId> generators) const;
  ElementSet conjugate_set(std::span<const ElementId> ids, ElementId by) const;
  bool is_normal(std::span<const ElementId> ids) const;

 private:
  PermGroup() = default;

  GroupName name_ = GroupName::A4;
  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::vector<ElementId> mul_;
  std::vector<ElementId> inv_;
  std::vector<ClassLabel> class_of_;
};

/// Canonical A4 and S4 on four letters, A5 on five letters.
std::shared_ptr<const PermGroup> standard_group(GroupName name);

/// One representative per conjugacy class of subgroups, ordered by size and
/// then lexicographically.
std::vector<ElementSet> subgroups_up_to_conjugacy(const PermGroup& group);

/// A homomorphism from a group into the permutations of {0..m-1}.
struct GroupAction {
  std::shared_ptr<const PermGroup> group;
  int m = 0;
  std::vector<Permutation> act;  // indexed by ElementId

  const Permutation& operator[](ElementId id) const { return act[static_cast<std::size_t>(id)]; }
};

/// Left multiplication on the left cosets of `subgroup`. Cosets are numbered
/// in order of their smallest element; `representatives` (if non-null)
/// receives that smallest element for each coset.
GroupAction coset_action(std::shared_ptr<const PermGroup> group, const ElementSet& subgroup,
                         std::vector<ElementId>* representatives = nullptr);

/// The group acting on its own letters.
GroupAction natural_action(std::shared_ptr<const PermGroup> group);

/// Concatenates actions of the same group on disjoint vertex sets.
GroupAction direct_sum(std::span<const GroupAction> parts);

/// Restricts `action` to a subgroup; `subgroup` becomes the acting group and
/// `parent_ids` (if non-null) receives the parent id of each new element.
GroupAction restrict_action(const GroupAction& action, GroupName subgroup_name, const ElementSet& subgroup,
                            std::vector<ElementId>* parent_ids = nullptr);

/// Throws std::logic_error when `action` is not a homomorphism.
void check_homomorphism(const GroupAction& action);

int fixed_count(const GroupAction& action, ElementId element);

/// Orbit count via Burnside's lemma. Throws std::logic_error if the
/// fixed-point total is not divisible by |G|.
int burnside_orbit_count(const GroupAction& action);

/// Orbit index of each vertex, computed by union-find over the action.
std::vector<int> orbit_partition(const GroupAction& action);
int orbit_count(const GroupAction& action);

bool is_faithful(const GroupAction& action);

/// Stabilizer of each vertex as a bit mask over element ids (|G| <= 64).
std::vector<std::uint64_t> stabilizer_masks(const GroupAction& action);

/// Elements fixing both u and v. Throws std::invalid_argument if u == v or
/// either is out of range.
ElementSet pair_stabilizer(const GroupAction& action, int u, int v);

}  // namespace tsglab

#endif  // TSGLAB_PERM_HPP
