#include "tsglab/geom.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <random>

namespace tsglab {

namespace {

constexpr double kKernelThreshold = 1e-7;
constexpr double kAmbiguousBand = 1e-6;
constexpr double kInvariantTol = 1e-9;
constexpr double kCircleClearance = 0.05;
constexpr double kOrbitSeparation = 1e-3;
constexpr int kPlacementAttempts = 10000;

// Helmert basis of the sum-zero subspace of R^n, one column per direction.
Eigen::MatrixXd helmert(int n) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n - 1);
  for (int k = 1; k < n; ++k) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) b(i, k - 1) = scale;
    b(k, k - 1) = -k * scale;
  }
  return b;
}

Eigen::MatrixXd permutation_matrix(const Permutation& p) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p.degree(), p.degree());
  for (int i = 0; i < p.degree(); ++i) m(p(i), i) = 1.0;
  return m;
}

Mat4 embed3(const Eigen::Matrix3d& r, double last) {
  Mat4 m = Mat4::Zero();
  m.topLeftCorner<3, 3>() = r;
  m(3, 3) = last;
  return m;
}

std::vector<Mat4> tetra_rep(const PermGroup& g, bool with_sign) {
  const Eigen::MatrixXd b = helmert(4);
  std::vector<Mat4> out;
  for (const auto& p : g.elements()) {
    if (!with_sign && !p.is_even()) throw std::invalid_argument("rotation model needs an even permutation group");
    const Eigen::Matrix3d r = b.transpose() * permutation_matrix(p) * b;
    out.push_back(embed3(r, p.is_even() ? 1.0 : -1.0));
  }
  return out;
}

std::vector<Mat4> simplex_rep(const PermGroup& g) {
  const Eigen::MatrixXd b = helmert(5);
  std::vector<Mat4> out;
  for (const auto& p : g.elements()) out.push_back(b.transpose() * permutation_matrix(p) * b);
  return out;
}

// Icosahedral rotations matched to A5 through a^5 = b^2 = (ab)^3 = 1.
std::vector<Mat4> dodeca_rep(const PermGroup& g) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const Eigen::Matrix3d a_mat =
      Eigen::AngleAxisd(2.0 * std::numbers::pi / 5.0, Eigen::Vector3d(0, 1, phi).normalized()).toRotationMatrix();

  std::vector<Eigen::Vector3d> verts;
  for (double s1 : {-1.0, 1.0})
    for (double s2 : {-phi, phi}) {
      verts.emplace_back(0, s1, s2);
      verts.emplace_back(s1, s2, 0);
      verts.emplace_back(s2, 0, s1);
    }
  Eigen::Matrix3d b_mat;
  bool found = false;
  for (std::size_t i = 0; i < verts.size() && !found; ++i)
    for (std::size_t j = i + 1; j < verts.size() && !found; ++j) {
      if (std::abs((verts[i] - verts[j]).norm() - 2.0) > 1e-9) continue;
      const Eigen::Vector3d axis = (verts[i] + verts[j]).normalized();
      const Eigen::Matrix3d r = 2.0 * axis * axis.transpose() - Eigen::Matrix3d::Identity();
      if (std::abs((a_mat * r).trace()) < 1e-9) {
        b_mat = r;
        found = true;
      }
    }
  if (!found) throw std::logic_error("no icosahedral 2-fold axis pairs with the 5-fold generator");

  const ElementId a = g.find(Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}));
  ElementId b = -1;
  for (ElementId e = 1; e < g.order() && b < 0; ++e) {
    if (g.element(e).order() == 2 && g.element(g.multiply(a, e)).order() == 3) b = e;
  }
  if (b < 0) throw std::logic_error("no involution completes the (2,3,5) presentation");

  std::vector<std::optional<Mat4>> rep(static_cast<std::size_t>(g.order()));
  rep[0] = Mat4::Identity();
  std::deque<ElementId> queue{0};
  const std::pair<ElementId, Mat4> gens[] = {{a, embed3(a_mat, 1.0)}, {b, embed3(b_mat, 1.0)}};
  while (!queue.empty()) {
    const ElementId x = queue.front();
    queue.pop_front();
    for (const auto& [gen, mat] : gens) {
      const ElementId y = g.multiply(gen, x);
      if (!rep[static_cast<std::size_t>(y)]) {
        rep[static_cast<std::size_t>(y)] = mat * *rep[static_cast<std::size_t>(x)];
        queue.push_back(y);
      }
    }
  }
  std::vector<Mat4> out;
  for (auto& m : rep) {
    if (!m) throw std::logic_error("generators do not reach every element");
    out.push_back(*m);
  }
  return out;
}

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

// ---------------------------------------------------------------------------
// FixedCircle

Mat4 FixedCircle::projector() const {
  if (empty) return Mat4::Zero();
  return u * u.transpose() + w * w.transpose();
}

double FixedCircle::distance(const Vec4& p) const {
  if (empty) return std::numeric_limits<double>::infinity();
  const Vec4 q = p.dot(u) * u + p.dot(w) * w;
  const double n = q.norm();
  if (n < 1e-15) return std::sqrt(2.0);
  return (p - q / n).norm();
}

bool FixedCircle::same_as(const FixedCircle& other, double tol) const {
  if (empty || other.empty) return empty == other.empty;
  return max_abs(projector() - other.projector()) <= tol;
}

std::vector<Vec4> FixedCircle::intersection(const FixedCircle& other, bool* same) const {
  if (same) *same = false;
  if (empty || other.empty) return {};
  Eigen::Matrix<double, 4, 2> basis;
  basis << u, w;
  const Eigen::Matrix2d k = basis.transpose() * other.projector() * basis;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(k);
  const auto& values = solver.eigenvalues();  // ascending
  constexpr double tol = 1e-10;
  if (values(0) > 1.0 - tol) {
    if (same) *same = true;
    return {};
  }
  if (values(1) < 1.0 - tol) return {};
  const Vec4 x = (basis * solver.eigenvectors().col(1)).normalized();
  return {x, -x};
}

// ---------------------------------------------------------------------------

std::vector<Mat4> representation(const PermGroup& group, ModelTag model) {
  switch (model) {
    case ModelTag::TETRA_FULL_S4:
    case ModelTag::TETRA_ROT_A4:
      if (group.degree() != 4) throw std::invalid_argument("tetrahedral models act on four letters");
      return tetra_rep(group, model == ModelTag::TETRA_FULL_S4);
    case ModelTag::SIMPLEX4_A5:
      if (group.degree() != 5) throw std::invalid_argument("the simplex model acts on five letters");
      return simplex_rep(group);
    case ModelTag::DODECA_ROT_A5:
      if (group.name() != GroupName::A5 || group.order() != 60) {
        throw std::invalid_argument("the dodecahedral model is written for A5");
      }
      return dodeca_rep(group);
    case ModelTag::KNOTTED: break;
  }
  throw UnsupportedGeometry("knotted constructions carry no isometry model");
}

FixedCircle fixed_set(const Mat4& m) {
  Eigen::JacobiSVD<Mat4> svd(m - Mat4::Identity(), Eigen::ComputeFullV);
  const Vec4 sigma = svd.singularValues();  // descending
  int kernel = 0;
  for (int i = 0; i < 4; ++i) {
    if (sigma(i) < kKernelThreshold) {
      ++kernel;
    } else if (sigma(i) < kAmbiguousBand) {
      throw PrecisionError("singular value " + std::to_string(sigma(i)) + " is too close to the kernel threshold");
    }
  }
  if (kernel == 4) throw std::invalid_argument("the identity fixes the whole sphere");
  FixedCircle out;
  if (kernel == 0) return out;
  if (kernel != 2) throw PrecisionError("fixed subspace of odd dimension " + std::to_string(kernel));
  out.empty = false;
  out.u = svd.matrixV().col(2);
  out.w = svd.matrixV().col(3);
  return out;
}

Vec4 simplex_corner(int letters, int i) {
  const Eigen::MatrixXd b = helmert(letters);
  const Eigen::VectorXd c = b.row(i).transpose().normalized();
  Vec4 out = Vec4::Zero();
  out.head(c.size()) = c;
  return out;
}

Vec4 slerp(const Vec4& a, const Vec4& b, double t) {
  const double omega = std::acos(std::clamp(a.dot(b), -1.0, 1.0));
  const double s = std::sin(omega);
  return (std::sin((1.0 - t) * omega) / s) * a + (std::sin(t * omega) / s) * b;
}

Vec4 special_base_point(ModelTag model, PartKind kind, const ModelParams& params) {
  const bool tetra = model == ModelTag::TETRA_FULL_S4 || model == ModelTag::TETRA_ROT_A4;
  if (kind == PartKind::FixedPoint && (model == ModelTag::TETRA_ROT_A4 || model == ModelTag::DODECA_ROT_A5)) {
    return Vec4::UnitW();
  }
  if (tetra && kind == PartKind::V4) return simplex_corner(4, 3);
  if (model == ModelTag::TETRA_FULL_S4 && kind == PartKind::V8) {
    Vec4 p = std::cos(params.theta) * simplex_corner(4, 3);
    p(3) = std::sin(params.theta);
    return p;
  }
  if (model == ModelTag::TETRA_FULL_S4 && kind == PartKind::V12) {
    return slerp(simplex_corner(4, 2), simplex_corner(4, 3), params.t);
  }
  if (model == ModelTag::SIMPLEX4_A5 && kind == PartKind::W5) return simplex_corner(5, 4);
  if (model == ModelTag::SIMPLEX4_A5 && kind == PartKind::W20) {
    return slerp(simplex_corner(5, 3), simplex_corner(5, 4), params.t);
  }
  throw UnsupportedGeometry(std::string(to_string(kind)) + " has no placement in model " +
                            std::string(to_string(model)));
}

std::vector<Vec4> free_orbit_coords(const PermGroup& group, const std::vector<Mat4>& rep,
                                    const std::vector<FixedCircle>& circles, int n, std::uint64_t seed,
                                    const std::vector<Vec4>& existing) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Vec4> placed = existing;
  std::vector<Vec4> bases;
  for (int k = 0; k < n; ++k) {
    bool accepted = false;
    for (int attempt = 0; attempt < kPlacementAttempts && !accepted; ++attempt) {
      Vec4 x(normal(rng), normal(rng), normal(rng), normal(rng));
      if (x.norm() < 1e-6) continue;
      x.normalize();
      bool clear = true;
      for (ElementId e = 1; e < group.order() && clear; ++e) {
        if (!circles[static_cast<std::size_t>(e)].empty && circles[static_cast<std::size_t>(e)].distance(x) < kCircleClearance) {
          clear = false;
        }
      }
      if (!clear) continue;
      std::vector<Vec4> orbit;
      for (ElementId e = 0; e < group.order(); ++e) orbit.push_back(rep[static_cast<std::size_t>(e)] * x);
      for (std::size_t i = 0; i < orbit.size() && clear; ++i) {
        for (std::size_t j = i + 1; j < orbit.size() && clear; ++j)
          if ((orbit[i] - orbit[j]).norm() < kOrbitSeparation) clear = false;
        for (const auto& q : placed)
          if ((orbit[i] - q).norm() < kOrbitSeparation) {
            clear = false;
            break;
          }
      }
      if (!clear) continue;
      placed.insert(placed.end(), orbit.begin(), orbit.end());
      bases.push_back(x);
      accepted = true;
    }
    if (!accepted) {
      throw PlacementError("no admissible free-orbit base point after " + std::to_string(kPlacementAttempts) +
                           " attempts");
    }
  }
  return bases;
}

RealizedVertices realize(const VertexAction& a, const ModelParams& params) {
  if (a.plan.knotted()) {
    throw UnsupportedGeometry("plan " + a.plan.to_string() +
                              " needs a knotted construction; its geometry is out of scope");
  }
  if (!(params.theta > 0.0 && params.theta < std::numbers::pi / 2)) {
    throw std::invalid_argument("theta must lie in (0, pi/2)");
  }
  if (params.t == 0.5) {
    throw ParameterCollision("t = 1/2 puts edge points on the midpoints fixed by edge-reversing involutions");
  }
  if (!(params.t > 0.0 && params.t < 0.5)) throw std::invalid_argument("t must lie in (0, 1/2)");

  const PermGroup& parent = *a.built.group;
  const std::vector<Mat4> parent_rep = representation(parent, a.plan.model);
  std::vector<FixedCircle> parent_circles(parent_rep.size());
  for (ElementId e = 1; e < parent.order(); ++e) parent_circles[static_cast<std::size_t>(e)] = fixed_set(parent_rep[static_cast<std::size_t>(e)]);

  RealizedVertices r;
  r.model = a.plan.model;
  r.params = params;
  r.coords.assign(static_cast<std::size_t>(a.m()), Vec4::Zero());

  std::vector<Vec4> special;
  int free_count = 0;
  for (const auto& orbit : a.orbits) {
    if (orbit.kind == PartKind::Free) {
      ++free_count;
      continue;
    }
    const Vec4 base = special_base_point(a.plan.model, orbit.kind, params);
    for (ElementId e = 0; e < parent.order(); ++e) {
      const bool fixes = (parent_rep[static_cast<std::size_t>(e)] * base - base).cwiseAbs().maxCoeff() <= kInvariantTol;
      const bool planned = std::binary_search(orbit.stabilizer.begin(), orbit.stabilizer.end(), e);
      if (fixes != planned) {
        throw ParameterCollision("base point of " + std::string(to_string(orbit.kind)) +
                                 " has a stabilizer other than the planned one");
      }
    }
    for (int j = 0; j < orbit.size; ++j) {
      const Vec4 x = parent_rep[static_cast<std::size_t>(orbit.reps[static_cast<std::size_t>(j)])] * base;
      r.coords[static_cast<std::size_t>(orbit.first_vertex + j)] = x;
      special.push_back(x);
    }
  }
  if (free_count > 0) {
    const auto bases = free_orbit_coords(parent, parent_rep, parent_circles, free_count, params.seed, special);
    std::size_t next = 0;
    for (const auto& orbit : a.orbits) {
      if (orbit.kind != PartKind::Free) continue;
      for (int j = 0; j < orbit.size; ++j) {
        r.coords[static_cast<std::size_t>(orbit.first_vertex + j)] =
            parent_rep[static_cast<std::size_t>(orbit.reps[static_cast<std::size_t>(j)])] * bases[next];
      }
      ++next;
    }
  }

  for (ElementId parent_id : a.parent_ids) {
    r.rep.push_back(parent_rep[static_cast<std::size_t>(parent_id)]);
    r.circles.push_back(parent_circles[static_cast<std::size_t>(parent_id)]);
  }

  if (invariance_error(a.action, r) > kInvariantTol) throw std::logic_error("realized vertices are not invariant");
  if (min_vertex_distance(r.coords) < 1e-6) throw PlacementError("two realized vertices coincide");
  return r;
}

FixedVertexProfile geometric_profile(const GroupAction& action, const RealizedVertices& r) {
  const auto& g = *action.group;
  std::map<ClassLabel, int> counts;
  for (ElementId e = 1; e < g.order(); ++e) {
    int fixed = 0;
    for (const auto& x : r.coords)
      if (r.circles[static_cast<std::size_t>(e)].contains(x, kInvariantTol)) ++fixed;
    auto [it, inserted] = counts.emplace(g.class_of(e), fixed);
    if (!inserted && it->second != fixed) {
      throw std::logic_error("geometric fixed counts differ inside class " + to_string(g.class_of(e)));
    }
  }
  return FixedVertexProfile::from_counts(g.name(), counts, action.m);
}

double homomorphism_error(const PermGroup& group, const std::vector<Mat4>& rep) {
  double worst = 0.0;
  for (ElementId x = 0; x < group.order(); ++x)
    for (ElementId y = 0; y < group.order(); ++y) {
      const Mat4 diff = rep[static_cast<std::size_t>(group.multiply(x, y))] -
                        rep[static_cast<std::size_t>(x)] * rep[static_cast<std::size_t>(y)];
      worst = std::max(worst, max_abs(diff));
    }
  return worst;
}

double orthogonality_error(const std::vector<Mat4>& rep) {
  double worst = 0.0;
  for (const auto& m : rep) {
    worst = std::max(worst, max_abs(m.transpose() * m - Mat4::Identity()));
    worst = std::max(worst, std::abs(m.determinant() - 1.0));
  }
  return worst;
}

double invariance_error(const GroupAction& action, const RealizedVertices& r) {
  double worst = 0.0;
  for (ElementId e = 0; e < action.group->order(); ++e)
    for (int v = 0; v < action.m; ++v) {
      const Vec4 image = r.rep[static_cast<std::size_t>(e)] * r.coords[static_cast<std::size_t>(v)];
      worst = std::max(worst, (image - r.coords[static_cast<std::size_t>(action[e](v))]).cwiseAbs().maxCoeff());
    }
  return worst;
}

double min_vertex_distance(const std::vector<Vec4>& coords) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = i + 1; j < coords.size(); ++j) best = std::min(best, (coords[i] - coords[j]).norm());
  return best;
}

}  // namespace tsglab
