#ifndef TSGLAB_GEOM_HPP
#define TSGLAB_GEOM_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "tsglab/action.hpp"

namespace tsglab {

using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;

struct ModelParams {
  double theta = std::numbers::pi / 6;  // latitude of the V8 copies
  double t = 1.0 / 3;                   // edge parameter of V12 / W20 points
  std::uint64_t seed = 1;               // free-orbit placement
};

class ParameterCollision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class UnsupportedGeometry : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class PlacementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// +1 eigenspace of a non-identity isometry: a great circle spanned by the
/// orthonormal pair (u, w), or empty.
struct FixedCircle {
  bool empty = true;
  Vec4 u = Vec4::Zero();
  Vec4 w = Vec4::Zero();

  Mat4 projector() const;
  /// Distance from a unit vector to the nearest point of the circle.
  double distance(const Vec4& p) const;
  bool contains(const Vec4& p, double tol = 1e-9) const { return !empty && distance(p) <= tol; }
  bool same_as(const FixedCircle& other, double tol = 1e-8) const;
  /// Points common to both circles: none, an antipodal pair, or (same circle)
  /// reported through `same`.
  std::vector<Vec4> intersection(const FixedCircle& other, bool* same = nullptr) const;
};

/// Matrices for every element of `group` (indexed by ElementId). The group
/// must be the standard group the model is written for: A4 or S4 on four
/// letters for the tetrahedral models, A5 for the others.
std::vector<Mat4> representation(const PermGroup& group, ModelTag model);

/// Kernel of M - I from its singular values (threshold 1e-7). Throws
/// std::invalid_argument for the identity and PrecisionError when a singular
/// value lies in the ambiguous band [1e-7, 1e-6) or the kernel has odd
/// dimension.
FixedCircle fixed_set(const Mat4& m);

struct RealizedVertices {
  ModelTag model = ModelTag::TETRA_FULL_S4;
  ModelParams params;
  std::vector<Mat4> rep;             // indexed by element of the acting group
  std::vector<FixedCircle> circles;  // fixed_set of each rep; entry 0 (identity) is empty
  std::vector<Vec4> coords;          // vertex -> unit 4-vector
};

/// Corners of the regular simplex on `letters` points inside the sum-zero
/// subspace (letters = 4: tetrahedron in the first three coordinates).
Vec4 simplex_corner(int letters, int i);
Vec4 slerp(const Vec4& a, const Vec4& b, double t);

/// Base points of the special orbits; each is fixed by the stabilizer the
/// action builder uses for that part.
Vec4 special_base_point(ModelTag model, PartKind kind, const ModelParams& params);

/// `n` base points for free orbits, each at distance >= 0.05 from every
/// fixed circle and with every orbit point >= 1e-3 from `existing` and from
/// the other new orbit points.
std::vector<Vec4> free_orbit_coords(const PermGroup& group, const std::vector<Mat4>& rep,
                                    const std::vector<FixedCircle>& circles, int n, std::uint64_t seed,
                                    const std::vector<Vec4>& existing = {});

/// Throws UnsupportedGeometry for knotted plans, ParameterCollision for
/// t = 1/2, std::invalid_argument for parameters out of range.
RealizedVertices realize(const VertexAction& a, const ModelParams& params = {});

/// Per-class count of vertices within 1e-9 of each fixed circle.
FixedVertexProfile geometric_profile(const GroupAction& action, const RealizedVertices& r);

double homomorphism_error(const PermGroup& group, const std::vector<Mat4>& rep);
double orthogonality_error(const std::vector<Mat4>& rep);
/// max over g, v of ||M(g) x_v - x_{g(v)}||_inf.
double invariance_error(const GroupAction& action, const RealizedVertices& r);
double min_vertex_distance(const std::vector<Vec4>& coords);

}  // namespace tsglab

#endif  // TSGLAB_GEOM_HPP
