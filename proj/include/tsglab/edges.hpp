#ifndef TSGLAB_EDGES_HPP
#define TSGLAB_EDGES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tsglab/geom.hpp"

namespace tsglab {

using VertexPair = std::pair<int, int>;  // first < second

/// A great-circle arc: the points cos(a) frame_u + sin(a) frame_w for a in
/// [start, end], swept counterclockwise; 0 <= start < end <= 2pi.
struct Arc {
  VertexPair pair;
  ElementId circle_element = 0;  // a non-trivial element fixing the pair
  Vec4 frame_u = Vec4::Zero();
  Vec4 frame_w = Vec4::Zero();
  double start = 0.0;
  double end = 0.0;

  Vec4 point(double angle) const;
  Vec4 midpoint() const { return point(0.5 * (start + end)); }
  bool on_circle(const Vec4& p, double tol = 1e-9) const;
  /// On the circle and strictly between the endpoints.
  bool in_interior(const Vec4& p, double tol = 1e-9) const;
};

struct ArcAssignment {
  std::vector<Arc> arcs;
  const Arc* find(VertexPair pair) const;
};

class NonConsecutivePair : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HypothesisVerdict {
  bool pass = true;
  std::string detail;  // counterexample on failure, summary otherwise
};

struct HypothesisReport {
  HypothesisVerdict h1, h2, h3, h4, h5;
  std::optional<ArcAssignment> arcs;
  bool consistent = false;  // coordinates invariant under the representation
  bool faithful = false;

  bool passed() const { return consistent && faithful && h1.pass && h2.pass && h3.pass && h4.pass && h5.pass; }
};

/// Pairs pointwise fixed by some non-trivial element.
std::vector<VertexPair> required_pairs(const GroupAction& action);
/// Elements g with g(u) = v and g(v) = u for some u != v.
std::vector<ElementId> interchangers(const GroupAction& action);

/// Fixers of a required pair share one circle, which holds both vertices;
/// geometric and combinatorial fixed vertices agree.
HypothesisVerdict check_h1(const GroupAction& action, const RealizedVertices& r);

/// For each required pair, an arc of the common fixed circle with no vertex
/// inside and whose interior meets other circles only at points fixed by an
/// element interchanging the pair; the shorter arc wins when both qualify.
/// Throws NonConsecutivePair when neither arc qualifies.
ArcAssignment assign_arcs(const GroupAction& action, const RealizedVertices& r);
/// Validates an assignment: coverage, endpoints, empty interiors, pairwise
/// disjoint interiors, and the circle-crossing guard above.
HypothesisVerdict check_h2(const GroupAction& action, const RealizedVertices& r, const ArcAssignment& arcs);
/// Arcs map to arcs under every element, and an element fixing an interior
/// point of an arc preserves the arc's pair.
HypothesisVerdict check_h3(const GroupAction& action, const RealizedVertices& r, const ArcAssignment& arcs);
/// Every interchanger fixes at most 2 vertices.
HypothesisVerdict check_h4(const GroupAction& action);
/// Every interchanger has a non-empty fixed circle shared by no other
/// non-trivial element.
HypothesisVerdict check_h5(const GroupAction& action, const RealizedVertices& r);

HypothesisReport full_report(const GroupAction& action, const RealizedVertices& r);

}  // namespace tsglab

#endif  // TSGLAB_EDGES_HPP
