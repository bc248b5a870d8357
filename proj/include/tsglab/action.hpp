#ifndef TSGLAB_ACTION_HPP
#define TSGLAB_ACTION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsglab/perm.hpp"
#include "tsglab/profile.hpp"

namespace tsglab {

enum class PartKind { Free, V4, V8, V12, W5, W20, FixedPoint, KnottedSpecial };

/// Geometric model the plan is meant to be realized in.
enum class ModelTag { TETRA_FULL_S4, TETRA_ROT_A4, SIMPLEX4_A5, DODECA_ROT_A5, KNOTTED };

enum class Restriction { None, A4_of_S4, A4_of_A5 };

std::string_view to_string(PartKind kind);
std::string_view to_string(ModelTag tag);
std::string_view to_string(Restriction r);
PartKind parse_part_kind(std::string_view text);
ModelTag parse_model_tag(std::string_view text);
Restriction parse_restriction(std::string_view text);

struct PlanPart {
  PartKind kind = PartKind::Free;
  int count = 1;         // number of regular orbits (Free only)
  std::string knot_tag;  // "m4" or "m5" (KnottedSpecial only)

  bool operator==(const PlanPart&) const = default;
};

struct OrbitPlan {
  GroupName group = GroupName::A4;  // the symmetry group asked for
  long m = 0;
  std::vector<PlanPart> parts;
  ModelTag model = ModelTag::TETRA_FULL_S4;
  Restriction restriction = Restriction::None;

  /// Group whose action is built before any restriction.
  GroupName build_group() const;
  /// Orbit count of the built action; Free(n) counts n.
  int orbit_count() const;
  bool knotted() const { return model == ModelTag::KNOTTED; }
  std::string to_string() const;
};

class NotAdmissible : public std::domain_error {
 public:
  explicit NotAdmissible(const std::string& what) : std::domain_error(what) {}
};

/// One orbit of the built (pre-restriction) action. Vertex first_vertex + j
/// is reps[j] applied to the orbit's base vertex, whose stabilizer is
/// `stabilizer`.
struct Orbit {
  PartKind kind = PartKind::Free;
  int first_vertex = 0;
  int size = 0;
  ElementSet stabilizer;
  std::vector<ElementId> reps;
};

struct VertexAction {
  OrbitPlan plan;
  GroupAction action;                   // the group of `plan.group` acting on the vertices
  GroupAction built;                    // the action before restriction (equals `action` otherwise)
  std::vector<ElementId> parent_ids;    // element of action.group -> element of built.group
  std::vector<Orbit> orbits;            // orbits of `built`
  std::vector<int> vertex_orbit;        // vertex -> index into orbits

  int m() const { return action.m; }
};

/// The fixed A4 subgroup of A5, generated by (0 1)(2 3) and (0 1 2).
ElementSet a4_in_a5();
/// The even elements of S4.
ElementSet a4_in_s4();

/// Throws NotAdmissible when necessity_check rejects (group, m) and
/// std::domain_error for m < 4.
OrbitPlan plan(GroupName group, long m);
VertexAction build(const OrbitPlan& plan);

/// Per-class fixed counts. Throws std::logic_error if two elements of one
/// class fix different numbers of vertices.
FixedVertexProfile measured_profile(const GroupAction& action);
inline FixedVertexProfile measured_profile(const VertexAction& a) { return measured_profile(a.action); }

/// True iff some pair of vertices is fixed only by the identity.
bool has_free_edge(const GroupAction& action);
inline bool has_free_edge(const VertexAction& a) { return has_free_edge(a.action); }

}  // namespace tsglab

#endif  // TSGLAB_ACTION_HPP
