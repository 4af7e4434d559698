#pragma once

#include "lsa/algebra.hpp"

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lsa {

using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;
using Mat4 = Eigen::Matrix4d;

struct AffineMap3 {
  Mat3 linear = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  static AffineMap3 identity() { return {}; }
  static AffineMap3 from_homogeneous(const Mat4& m);
  Mat4 homogeneous() const;
  Vec3 apply(const Vec3& x) const { return linear * x + translation; }
};

/// (A1, v1) ∘ (A2, v2) = (A1 A2, A1 v2 + v1)
AffineMap3 compose(const AffineMap3& p, const AffineMap3& q);
/// max |entry| of the difference (linear and translation parts)
double max_abs_diff(const AffineMap3& p, const AffineMap3& q);

/// X_i = (L_ei, e_i); homogeneous form has bottom row zero.
struct AffRep {
  std::array<QMatrix, 3> linear;
  std::array<QVector, 3> translation;
  std::array<Mat4, 3> homogeneous;
};

/// Throws InvariantError if x -> (L_x, x) is not a Lie homomorphism.
AffRep affine_rep(const Algebra& a);

/// Scaling and squaring with a degree-13 Taylor polynomial.
Mat4 expm4(const Mat4& m);

struct GroupFamily {
  std::string name;       // GA30 ... GE3zeta
  std::string entry;      // paired catalog entry
  std::string param_name;  // "", "t", "mu", "zeta"
  double param = 0.0;
  Rational exact_param = 0;
  std::function<AffineMap3(double, double, double)> element;
  /// The parameter a recovered from a group element.
  std::function<double(const AffineMap3&)> seed_a;
  /// Translation components (indices 1, 2) are affine in (b, c) at fixed a.
  bool affine_in_bc = true;
};

/// The eleven families with their default parameters (t = 2, mu = 1/2, zeta = 1).
std::vector<GroupFamily> group_families();
/// By family or catalog-entry name ("GD31mu" or "D31mu"); p overrides the parameter.
GroupFamily make_group_family(const std::string& name, std::optional<Rational> p = std::nullopt);
std::vector<std::string> group_family_names();

AffineMap3 group_element(const GroupFamily& fam, double a, double b, double c);

/// exp(a X1 + b X2 + c X3) of the affine representation; used as a diagnostic family.
GroupFamily exp_family(const Algebra& a, const std::string& name);

}  // namespace lsa
