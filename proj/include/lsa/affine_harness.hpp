#pragma once

#include "lsa/affine.hpp"
#include "lsa/random.hpp"

#include <cstdint>
#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace lsa {

inline constexpr double kClosureTol = 1e-9;
inline constexpr double kJacobianTol = 1e-8;
inline constexpr double kInjectivityTol = 1e-9;
inline constexpr double kNewtonTol = 1e-10;
inline constexpr double kTangentTol = 1e-6;
inline constexpr double kDiffStep = 1e-6;

/// Translation part of group_element(a, b, c), i.e. the orbit of the origin.
Vec3 orbit(const GroupFamily& fam, const Vec3& p);
/// Central-difference Jacobian of the orbit map.
Mat3 orbit_jacobian(const GroupFamily& fam, const Vec3& p);

struct NewtonResult {
  Vec3 params = Vec3::Zero();
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Damped Newton on orbit(p) = target from the given start.
NewtonResult invert_orbit(const GroupFamily& fam, const Vec3& target, const Vec3& start);
/// Start point from the family's distinguished coordinate plus a linear solve in (b, c).
Vec3 initial_guess(const GroupFamily& fam, const AffineMap3& m);

struct ClosureReport {
  std::size_t samples = 0;
  double max_residual = 0.0;
  std::size_t newton_failures = 0;
  std::string worst;
};

using SamplePair = std::pair<Vec3, Vec3>;
std::vector<SamplePair> closure_samples(Rng& rng, std::size_t n, double range = 2.0);
ClosureReport check_closure(const GroupFamily& fam, const std::vector<SamplePair>& pairs);

struct GridSpec {
  double lo = -2.0, hi = 2.0, step = 0.5;
  std::vector<Vec3> points() const;
};

struct TransitivityReport {
  double jacobian_min_abs_det = 0.0;
  Vec3 jacobian_argmin = Vec3::Zero();
  double injectivity_min_distance = 0.0;
  std::size_t targets = 0;
  std::size_t newton_failures = 0;
  double max_newton_residual = 0.0;
  bool pass = false;
  std::string witness;
};

TransitivityReport check_simply_transitive(const GroupFamily& fam, const GridSpec& grid, Rng& rng,
                                           std::size_t targets = 20);

struct TangentReport {
  double bracket_residual = 0.0;   // commutators outside span{X1, X2, X3}
  double structure_error = 0.0;    // vs the Lie algebra of the paired entry
  double generator_error = 0.0;    // X_i vs (L_ei, e_i)
  bool pass = false;
  std::string witness;
};

/// Basis correspondence X_i <-> e_i.
TangentReport check_tangent_algebra(const GroupFamily& fam, const Algebra& a);

struct FamilyReport {
  std::string family;
  std::string entry;
  std::string param;
  ClosureReport closure;
  TransitivityReport transitivity;
  TangentReport tangent;
  bool pass() const;
  std::vector<std::string> failures() const;
};

FamilyReport verify_family(const GroupFamily& fam, const Algebra& paired, std::uint64_t seed,
                           std::size_t samples = 50);

struct AffineReport {
  std::vector<FamilyReport> families;
  /// Not counted: exp of the affine representation of the catalog D32.
  std::vector<FamilyReport> supplementary;
  bool pass() const;
};

AffineReport verify_affine(std::uint64_t seed, std::size_t samples = 50);

nlohmann::json to_json(const FamilyReport& r);
nlohmann::json to_json(const AffineReport& r);
std::string to_text(const AffineReport& r);

namespace serial {
double jacobian_min_abs_det(const GroupFamily& fam, const GridSpec& grid);
double injectivity_min_distance(const GroupFamily& fam, const GridSpec& grid);
ClosureReport check_closure(const GroupFamily& fam, const std::vector<SamplePair>& pairs);
}  // namespace serial

double jacobian_min_abs_det(const GroupFamily& fam, const GridSpec& grid);
double injectivity_min_distance(const GroupFamily& fam, const GridSpec& grid);

}  // namespace lsa
