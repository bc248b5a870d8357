#include "tsglab/edges.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace tsglab {

namespace {

constexpr double kTol = 1e-9;
constexpr double kCircleTol = 1e-8;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string pair_string(VertexPair p) {
  return "{" + std::to_string(p.first) + ", " + std::to_string(p.second) + "}";
}

std::string element_string(const GroupAction& action, ElementId e) {
  return action.group->element(e).cycle_string();
}

bool fixes_point(const Mat4& m, const Vec4& p) { return (m * p - p).cwiseAbs().maxCoeff() <= kTol; }

bool interchanges(const GroupAction& action, ElementId f, VertexPair p) {
  return action[f](p.first) == p.second && action[f](p.second) == p.first;
}

bool stabilizes(const GroupAction& action, ElementId f, VertexPair p) {
  const int a = action[f](p.first);
  const int b = action[f](p.second);
  return (a == p.first && b == p.second) || (a == p.second && b == p.first);
}

FixedCircle circle_of(const Arc& arc) { return FixedCircle{false, arc.frame_u, arc.frame_w}; }

// Non-trivial circles of the action, deduplicated.
std::vector<FixedCircle> distinct_circles(const RealizedVertices& r) {
  std::vector<FixedCircle> out;
  for (std::size_t e = 1; e < r.circles.size(); ++e) {
    const auto& c = r.circles[e];
    if (c.empty) continue;
    if (std::none_of(out.begin(), out.end(), [&](const FixedCircle& o) { return o.same_as(c, kCircleTol); })) {
      out.push_back(c);
    }
  }
  return out;
}

// Points where `circle` meets other circles.
std::vector<Vec4> crossing_points(const FixedCircle& circle, const std::vector<FixedCircle>& circles) {
  std::vector<Vec4> out;
  for (const auto& other : circles) {
    bool same = false;
    for (const auto& p : circle.intersection(other, &same)) out.push_back(p);
  }
  return out;
}

bool crossing_allowed(const GroupAction& action, const RealizedVertices& r, VertexPair pair, const Vec4& p) {
  for (ElementId f = 1; f < action.group->order(); ++f) {
    if (interchanges(action, f, pair) && fixes_point(r.rep[static_cast<std::size_t>(f)], p)) return true;
  }
  return false;
}

// Empty string when the arc qualifies, otherwise why not.
std::string arc_obstruction(const GroupAction& action, const RealizedVertices& r, const Arc& arc,
                            const std::vector<Vec4>& crossings) {
  for (int v = 0; v < action.m; ++v) {
    if (arc.in_interior(r.coords[static_cast<std::size_t>(v)])) return "vertex " + std::to_string(v) + " lies inside";
  }
  for (const auto& p : crossings) {
    if (arc.in_interior(p) && !crossing_allowed(action, r, arc.pair, p)) {
      return "it crosses another fixed circle at a point no interchanger of the pair fixes";
    }
  }
  return {};
}

bool interiors_overlap(const Arc& a, const Arc& b) {
  bool same = false;
  const auto points = circle_of(a).intersection(circle_of(b), &same);
  if (same) {
    for (const Vec4& p : {b.point(b.start), b.point(b.end), b.midpoint()})
      if (a.in_interior(p)) return true;
    for (const Vec4& p : {a.point(a.start), a.point(a.end), a.midpoint()})
      if (b.in_interior(p)) return true;
    return false;
  }
  for (const auto& p : points)
    if (a.in_interior(p) && b.in_interior(p)) return true;
  return false;
}

}  // namespace

Vec4 Arc::point(double angle) const { return std::cos(angle) * frame_u + std::sin(angle) * frame_w; }

bool Arc::on_circle(const Vec4& p, double tol) const { return circle_of(*this).distance(p) <= tol; }

bool Arc::in_interior(const Vec4& p, double tol) const {
  if (!on_circle(p, tol)) return false;
  double a = std::atan2(p.dot(frame_w), p.dot(frame_u));
  if (a < 0) a += kTwoPi;
  // Angular slack equivalent to the distance tolerance.
  const double slack = 2.0 * tol;
  if (a > start + slack && a < end - slack) return true;
  // An arc ending at 2pi also covers angles just above 0.
  return end > kTwoPi - slack && a + kTwoPi > start + slack && a + kTwoPi < end - slack;
}

const Arc* ArcAssignment::find(VertexPair pair) const {
  if (pair.first > pair.second) std::swap(pair.first, pair.second);
  for (const auto& arc : arcs)
    if (arc.pair == pair) return &arc;
  return nullptr;
}

std::vector<VertexPair> required_pairs(const GroupAction& action) {
  const auto masks = stabilizer_masks(action);
  std::vector<VertexPair> out;
  for (int u = 0; u < action.m; ++u)
    for (int v = u + 1; v < action.m; ++v)
      if ((masks[static_cast<std::size_t>(u)] & masks[static_cast<std::size_t>(v)]) != 1u) out.emplace_back(u, v);
  return out;
}

std::vector<ElementId> interchangers(const GroupAction& action) {
  std::vector<ElementId> out;
  for (ElementId g = 1; g < action.group->order(); ++g) {
    for (int v = 0; v < action.m; ++v) {
      const int w = action[g](v);
      if (w != v && action[g](w) == v) {
        out.push_back(g);
        break;
      }
    }
  }
  return out;
}

HypothesisVerdict check_h1(const GroupAction& action, const RealizedVertices& r) {
  for (ElementId e = 1; e < action.group->order(); ++e) {
    for (int v = 0; v < action.m; ++v) {
      const bool combinatorial = action[e](v) == v;
      const bool geometric = r.circles[static_cast<std::size_t>(e)].contains(r.coords[static_cast<std::size_t>(v)]);
      if (combinatorial != geometric) {
        return {false, "vertex " + std::to_string(v) + (geometric ? " lies on" : " is off") + " the fixed circle of " +
                           element_string(action, e) + (combinatorial ? ", which fixes it" : ", which moves it")};
      }
    }
  }
  const auto pairs = required_pairs(action);
  for (const auto& pair : pairs) {
    const auto stab = pair_stabilizer(action, pair.first, pair.second);
    const FixedCircle& first = r.circles[static_cast<std::size_t>(stab[1])];
    for (std::size_t i = 2; i < stab.size(); ++i) {
      if (!r.circles[static_cast<std::size_t>(stab[i])].same_as(first, kCircleTol)) {
        return {false, "pair " + pair_string(pair) + " is fixed by " + element_string(action, stab[1]) + " and " +
                           element_string(action, stab[i]) + ", whose fixed circles differ"};
      }
    }
  }
  return {true, std::to_string(pairs.size()) + " fixed pairs, each on a single circle"};
}

ArcAssignment assign_arcs(const GroupAction& action, const RealizedVertices& r) {
  const auto circles = distinct_circles(r);
  ArcAssignment out;
  for (const auto& pair : required_pairs(action)) {
    const ElementId g = pair_stabilizer(action, pair.first, pair.second)[1];
    const FixedCircle& circle = r.circles[static_cast<std::size_t>(g)];
    if (circle.empty) throw NonConsecutivePair("pair " + pair_string(pair) + " is fixed by an element with no circle");

    const Vec4& xu = r.coords[static_cast<std::size_t>(pair.first)];
    const Vec4& xv = r.coords[static_cast<std::size_t>(pair.second)];
    const Vec4 fu = (xu.dot(circle.u) * circle.u + xu.dot(circle.w) * circle.w).normalized();
    const double a = fu.dot(circle.u);
    const double b = fu.dot(circle.w);
    const Vec4 fw = -b * circle.u + a * circle.w;
    double alpha = std::atan2(xv.dot(fw), xv.dot(fu));
    if (alpha < 0) alpha += kTwoPi;

    const Arc first{pair, g, fu, fw, 0.0, alpha};
    const Arc second{pair, g, fu, fw, alpha, kTwoPi};
    const auto crossings = crossing_points(circle, circles);
    const std::string why_first = arc_obstruction(action, r, first, crossings);
    const std::string why_second = arc_obstruction(action, r, second, crossings);
    if (!why_first.empty() && !why_second.empty()) {
      throw NonConsecutivePair("pair " + pair_string(pair) + " on the circle of " + element_string(action, g) +
                               ": one arc fails because " + why_first + ", the other because " + why_second);
    }
    if (why_first.empty() && (!why_second.empty() || alpha <= kTwoPi - alpha)) {
      out.arcs.push_back(first);
    } else {
      out.arcs.push_back(second);
    }
  }
  return out;
}

HypothesisVerdict check_h2(const GroupAction& action, const RealizedVertices& r, const ArcAssignment& arcs) {
  const auto circles = distinct_circles(r);
  const auto pairs = required_pairs(action);
  for (const auto& pair : pairs) {
    if (arcs.find(pair) == nullptr) return {false, "no arc for fixed pair " + pair_string(pair)};
  }
  for (const auto& arc : arcs.arcs) {
    const auto& [u, v] = arc.pair;
    const Vec4 s = arc.point(arc.start);
    const Vec4 e = arc.point(arc.end);
    const Vec4& xu = r.coords[static_cast<std::size_t>(u)];
    const Vec4& xv = r.coords[static_cast<std::size_t>(v)];
    const bool endpoints = ((s - xu).norm() <= kCircleTol && (e - xv).norm() <= kCircleTol) ||
                           ((s - xv).norm() <= kCircleTol && (e - xu).norm() <= kCircleTol);
    if (!endpoints) return {false, "arc of " + pair_string(arc.pair) + " does not end at its pair"};
    if (!(arc.start >= 0.0 && arc.start < arc.end && arc.end <= kTwoPi + kTol)) {
      return {false, "arc of " + pair_string(arc.pair) + " has an invalid angular range"};
    }
    const FixedCircle& fixer = r.circles[static_cast<std::size_t>(arc.circle_element)];
    if (action[arc.circle_element](u) != u || action[arc.circle_element](v) != v ||
        !fixer.same_as(circle_of(arc), kCircleTol)) {
      return {false, "arc of " + pair_string(arc.pair) + " is not on the fixed circle of its pair"};
    }
    const std::string why = arc_obstruction(action, r, arc, crossing_points(circle_of(arc), circles));
    if (!why.empty()) return {false, "arc of " + pair_string(arc.pair) + " is blocked: " + why};
  }
  for (std::size_t i = 0; i < arcs.arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.arcs.size(); ++j)
      if (interiors_overlap(arcs.arcs[i], arcs.arcs[j])) {
        return {false, "arcs of " + pair_string(arcs.arcs[i].pair) + " and " + pair_string(arcs.arcs[j].pair) +
                           " overlap"};
      }
  return {true, std::to_string(arcs.arcs.size()) + " arcs with empty, disjoint interiors"};
}

HypothesisVerdict check_h3(const GroupAction& action, const RealizedVertices& r, const ArcAssignment& arcs) {
  for (const auto& arc : arcs.arcs) {
    for (ElementId f = 0; f < action.group->order(); ++f) {
      const Mat4& m = r.rep[static_cast<std::size_t>(f)];
      VertexPair image{action[f](arc.pair.first), action[f](arc.pair.second)};
      if (image.first > image.second) std::swap(image.first, image.second);
      const Arc* target = arcs.find(image);
      if (target == nullptr) {
        return {false, element_string(action, f) + " maps " + pair_string(arc.pair) + " to " + pair_string(image) +
                           ", which has no arc"};
      }
      if (!target->in_interior(m * arc.midpoint(), kCircleTol)) {
        return {false, element_string(action, f) + " does not map the arc of " + pair_string(arc.pair) +
                           " onto the arc of " + pair_string(image)};
      }
      if (f == 0) continue;
      const FixedCircle& fix = r.circles[static_cast<std::size_t>(f)];
      bool same = false;
      const auto points = fix.intersection(circle_of(arc), &same);
      bool fixes_interior = same;
      for (const auto& p : points) fixes_interior = fixes_interior || arc.in_interior(p);
      if (fixes_interior && !stabilizes(action, f, arc.pair)) {
        return {false, element_string(action, f) + " fixes an interior point of the arc of " + pair_string(arc.pair) +
                           " but moves the pair"};
      }
    }
  }
  return {true, "arc system is invariant"};
}

HypothesisVerdict check_h4(const GroupAction& action) {
  for (ElementId g : interchangers(action)) {
    const int fixed = fixed_count(action, g);
    if (fixed > 2) {
      return {false, element_string(action, g) + " interchanges a pair and fixes " + std::to_string(fixed) +
                         " vertices, whose complete graph does not fit in an arc"};
    }
  }
  return {true, "every interchanger fixes at most 2 vertices"};
}

HypothesisVerdict check_h5(const GroupAction& action, const RealizedVertices& r) {
  const auto swaps = interchangers(action);
  for (ElementId g : swaps) {
    const FixedCircle& c = r.circles[static_cast<std::size_t>(g)];
    if (c.empty) return {false, element_string(action, g) + " interchanges a pair but has no fixed points"};
    for (ElementId h = 1; h < action.group->order(); ++h) {
      if (h != g && r.circles[static_cast<std::size_t>(h)].same_as(c, kCircleTol)) {
        return {false, element_string(action, g) + " shares its fixed circle with " + element_string(action, h)};
      }
    }
  }
  return {true, std::to_string(swaps.size()) + " interchangers, each with its own circle"};
}

HypothesisReport full_report(const GroupAction& action, const RealizedVertices& r) {
  HypothesisReport report;
  report.consistent = invariance_error(action, r) <= kTol;
  report.faithful = is_faithful(action);
  report.h1 = check_h1(action, r);
  try {
    report.arcs = assign_arcs(action, r);
    report.h2 = check_h2(action, r, *report.arcs);
    report.h3 = check_h3(action, r, *report.arcs);
  } catch (const NonConsecutivePair& e) {
    report.h2 = {false, e.what()};
    report.h3 = {false, "no arc system to check"};
  }
  report.h4 = check_h4(action);
  report.h5 = check_h5(action, r);
  return report;
}

}  // namespace tsglab
