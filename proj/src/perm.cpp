#include "tsglab/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tsglab {

std::string_view to_string(GroupName name) {
  switch (name) {
    case GroupName::A4:
      return "A4";
    case GroupName::S4:
      return "S4";
    case GroupName::A5:
      return "A5";
  }
  return "?";
}

GroupName parse_group_name(std::string_view text) {
  if (text == "A4") return GroupName::A4;
  if (text == "S4") return GroupName::S4;
  if (text == "A5") return GroupName::A5;
  throw std::invalid_argument("unknown group '" + std::string(text) + "' (expected A4, S4 or A5)");
}

int group_order(GroupName name) {
  switch (name) {
    case GroupName::A4:
      return 12;
    case GroupName::S4:
      return 24;
    case GroupName::A5:
      return 60;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int image : images_) {
    if (image < 0 || image >= degree() || seen[static_cast<std::size_t>(image)]) {
      throw std::invalid_argument("image list is not a bijection");
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      if (from < 0 || from >= degree) throw std::invalid_argument("cycle entry out of range");
      images[static_cast<std::size_t>(from)] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw std::invalid_argument("degree mismatch in composition");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[i] = images_[static_cast<std::size_t>(rhs.images_[i])];
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

int Permutation::order() const {
  int result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(images_[i])) {
      seen[i] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

bool Permutation::is_even() const {
  int transpositions = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(images_[i])) {
      seen[i] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0;
}

int Permutation::fixed_points() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == static_cast<int>(i);
  return count;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    out << '(';
    bool first = true;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(images_[i])) {
      seen[i] = true;
      if (!first) out << ' ';
      out << i;
      first = false;
    }
    out << ')';
  }
  std::string text = out.str();
  return text.empty() ? "()" : text;
}

std::string to_string(const ClassLabel& label) {
  std::string text = "order " + std::to_string(label.order);
  if (label.order == 2 && !label.in_even_subgroup) text += " (odd)";
  return text;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup PermGroup::generate(GroupName name, const std::vector<Permutation>& generators) {
  if (generators.empty()) throw std::invalid_argument("at least one generator is required");
  const int degree = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generators of differing degree");
  }

  std::set<Permutation> found{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        Permutation y = x * g;
        if (found.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  if (found.size() > 64) throw std::invalid_argument("groups larger than 64 elements are not supported");

  PermGroup group;
  group.name_ = name;
  group.degree_ = degree;
  group.generators_ = generators;
  // std::set orders lexicographically, so the identity comes first.
  group.elements_.assign(found.begin(), found.end());

  const std::size_t n = group.elements_.size();
  std::map<Permutation, ElementId> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(group.elements_[i], static_cast<ElementId>(i));

  group.mul_.resize(n * n);
  group.inv_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      group.mul_[i * n + j] = index.at(group.elements_[i] * group.elements_[j]);
    }
    group.inv_[i] = index.at(group.elements_[i].inverse());
  }

  group.class_of_.reserve(n);
  for (const auto& e : group.elements_) group.class_of_.push_back(ClassLabel{e.order(), e.is_even()});
  return group;
}

ElementId PermGroup::find(const Permutation& perm) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), perm);
  if (it == elements_.end() || *it != perm) throw std::out_of_range("permutation is not a group element");
  return static_cast<ElementId>(it - elements_.begin());
}

bool PermGroup::contains(const Permutation& perm) const {
  if (perm.degree() != degree_) return false;
  return std::binary_search(elements_.begin(), elements_.end(), perm);
}

std::vector<ClassLabel> PermGroup::class_labels() const {
  std::set<ClassLabel> labels(class_of_.begin(), class_of_.end());
  return {labels.begin(), labels.end()};
}

std::vector<ElementId> PermGroup::elements_with_label(const ClassLabel& label) const {
  std::vector<ElementId> ids;
  for (std::size_t i = 0; i < class_of_.size(); ++i) {
    if (class_of_[i] == label) ids.push_back(static_cast<ElementId>(i));
  }
  return ids;
}

bool PermGroup::is_subgroup(std::span<const ElementId> ids) const {
  std::vector<bool> member(elements_.size(), false);
  for (ElementId id : ids) {
    if (id < 0 || id >= order()) return false;
    member[static_cast<std::size_t>(id)] = true;
  }
  if (!member[0]) return false;
  for (ElementId a : ids) {
    for (ElementId b : ids) {
      if (!member[static_cast<std::size_t>(multiply(a, b))]) return false;
    }
  }
  return true;
}

ElementSet PermGroup::closure(std::span<const ElementId> generators) const {
  std::vector<bool> member(elements_.size(), false);
  member[0] = true;
  std::vector<ElementId> members{0};
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (ElementId g : generators) {
      ElementId y = multiply(members[i], g);
      if (!member[static_cast<std::size_t>(y)]) {
        member[static_cast<std::size_t>(y)] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

ElementSet PermGroup::conjugate_set(std::span<const ElementId> ids, ElementId by) const {
  ElementSet out;
  out.reserve(ids.size());
  for (ElementId id : ids) out.push_back(conjugate(id, by));
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::is_normal(std::span<const ElementId> ids) const {
  ElementSet sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  for (ElementId g = 0; g < order(); ++g) {
    if (conjugate_set(sorted, g) != sorted) return false;
  }
  return true;
}

std::shared_ptr<const PermGroup> standard_group(GroupName name) {
  switch (name) {
    case GroupName::A4:
      return std::make_shared<const PermGroup>(PermGroup::generate(
          name, {Permutation::from_cycles(4, {{0, 1, 2}}), Permutation::from_cycles(4, {{0, 1}, {2, 3}})}));
    case GroupName::S4:
      return std::make_shared<const PermGroup>(
          PermGroup::generate(name, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 1}})}));
    case GroupName::A5:
      return std::make_shared<const PermGroup>(PermGroup::generate(
          name, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{0, 1, 2}})}));
  }
  throw std::invalid_argument("unknown group");
}

std::vector<ElementSet> subgroups_up_to_conjugacy(const PermGroup& group) {
  // Every subgroup of A4, S4 and A5 is generated by at most two elements.
  std::set<ElementSet> all;
  for (ElementId a = 0; a < group.order(); ++a) {
    for (ElementId b = a; b < group.order(); ++b) {
      const ElementId gens[] = {a, b};
      all.insert(group.closure(gens));
    }
  }

  std::vector<ElementSet> ordered(all.begin(), all.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const ElementSet& x, const ElementSet& y) { return x.size() < y.size(); });

  std::set<ElementSet> covered;
  std::vector<ElementSet> representatives;
  for (const auto& h : ordered) {
    if (covered.contains(h)) continue;
    representatives.push_back(h);
    for (ElementId g = 0; g < group.order(); ++g) covered.insert(group.conjugate_set(h, g));
  }
  return representatives;
}

// ---------------------------------------------------------------------------
// Actions

GroupAction coset_action(std::shared_ptr<const PermGroup> group, const ElementSet& subgroup,
                         std::vector<ElementId>* representatives) {
  if (!group->is_subgroup(subgroup)) throw std::invalid_argument("coset_action: not a subgroup");

  const int n = group->order();
  std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < n; ++x) {
    if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    const int index = static_cast<int>(reps.size());
    reps.push_back(x);
    for (ElementId h : subgroup) coset_of[static_cast<std::size_t>(group->multiply(x, h))] = index;
  }

  GroupAction action{group, static_cast<int>(reps.size()), {}};
  action.act.reserve(static_cast<std::size_t>(n));
  for (ElementId g = 0; g < n; ++g) {
    std::vector<int> images(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      images[i] = coset_of[static_cast<std::size_t>(group->multiply(g, reps[i]))];
    }
    action.act.emplace_back(std::move(images));
  }
  if (representatives != nullptr) *representatives = std::move(reps);
  return action;
}

GroupAction natural_action(std::shared_ptr<const PermGroup> group) {
  GroupAction action{group, group->degree(), group->elements()};
  return action;
}

GroupAction direct_sum(std::span<const GroupAction> parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of no actions");
  const auto& group = parts.front().group;
  GroupAction out{group, 0, {}};
  for (const auto& part : parts) {
    if (part.group != group) throw std::invalid_argument("direct_sum: actions of different groups");
    out.m += part.m;
  }
  for (ElementId g = 0; g < group->order(); ++g) {
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(out.m));
    int offset = 0;
    for (const auto& part : parts) {
      for (int image : part[g].images()) images.push_back(image + offset);
      offset += part.m;
    }
    out.act.emplace_back(std::move(images));
  }
  return out;
}

GroupAction restrict_action(const GroupAction& action, GroupName subgroup_name, const ElementSet& subgroup,
                            std::vector<ElementId>* parent_ids) {
  const PermGroup& parent = *action.group;
  if (!parent.is_subgroup(subgroup)) throw std::invalid_argument("restrict_action: not a subgroup");

  std::vector<Permutation> generators;
  for (ElementId id : subgroup) generators.push_back(parent.element(id));
  auto sub = std::make_shared<const PermGroup>(PermGroup::generate(subgroup_name, generators));

  GroupAction out{sub, action.m, {}};
  std::vector<ElementId> ids;
  for (const auto& e : sub->elements()) {
    ElementId pid = parent.find(e);
    ids.push_back(pid);
    out.act.push_back(action[pid]);
  }
  if (parent_ids != nullptr) *parent_ids = std::move(ids);
  return out;
}

void check_homomorphism(const GroupAction& action) {
  const PermGroup& g = *action.group;
  if (static_cast<int>(action.act.size()) != g.order()) throw std::logic_error("action size differs from |G|");
  for (const auto& p : action.act) {
    if (p.degree() != action.m) throw std::logic_error("action permutation of wrong degree");
  }
  if (!action[g.identity()].is_identity()) throw std::logic_error("identity does not act trivially");
  for (ElementId a = 0; a < g.order(); ++a) {
    for (ElementId b = 0; b < g.order(); ++b) {
      if (action[g.multiply(a, b)] != action[a] * action[b]) {
        throw std::logic_error("action is not a homomorphism at (" + std::to_string(a) + ", " + std::to_string(b) +
                               ")");
      }
    }
  }
}

int fixed_count(const GroupAction& action, ElementId element) { return action[element].fixed_points(); }

int burnside_orbit_count(const GroupAction& action) {
  long total = 0;
  for (ElementId g = 0; g < action.group->order(); ++g) total += fixed_count(action, g);
  if (total % action.group->order() != 0) {
    throw std::logic_error("Burnside sum " + std::to_string(total) + " is not divisible by |G| = " +
                           std::to_string(action.group->order()));
  }
  return static_cast<int>(total / action.group->order());
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

std::vector<int> orbit_partition(const GroupAction& action) {
  std::vector<int> parent(static_cast<std::size_t>(action.m));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& p : action.act) {
    for (int v = 0; v < action.m; ++v) {
      int a = find_root(parent, v);
      int b = find_root(parent, p(v));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<int> orbit(static_cast<std::size_t>(action.m));
  std::map<int, int> numbering;
  for (int v = 0; v < action.m; ++v) {
    int root = find_root(parent, v);
    auto [it, inserted] = numbering.emplace(root, static_cast<int>(numbering.size()));
    orbit[static_cast<std::size_t>(v)] = it->second;
  }
  return orbit;
}

int orbit_count(const GroupAction& action) {
  auto orbit = orbit_partition(action);
  return orbit.empty() ? 0 : *std::max_element(orbit.begin(), orbit.end()) + 1;
}

bool is_faithful(const GroupAction& action) {
  std::set<Permutation> images(action.act.begin(), action.act.end());
  return static_cast<int>(images.size()) == action.group->order();
}

std::vector<std::uint64_t> stabilizer_masks(const GroupAction& action) {
  if (action.group->order() > 64) throw std::invalid_argument("stabilizer masks need |G| <= 64");
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(action.m), 0);
  for (ElementId g = 0; g < action.group->order(); ++g) {
    const auto& p = action[g];
    for (int v = 0; v < action.m; ++v) {
      if (p(v) == v) masks[static_cast<std::size_t>(v)] |= std::uint64_t{1} << g;
    }
  }
  return masks;
}

ElementSet pair_stabilizer(const GroupAction& action, int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= action.m || v >= action.m) {
    throw std::invalid_argument("pair_stabilizer needs two distinct vertices");
  }
  ElementSet out;
  for (ElementId g = 0; g < action.group->order(); ++g) {
    if (action[g](u) == u && action[g](v) == v) out.push_back(g);
  }
  return out;
}

}  // namespace tsglab
