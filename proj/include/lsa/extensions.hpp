#pragma once

#include "lsa/algebra.hpp"
#include "lsa/random.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lsa {

/// lambda[i] = λ_{e_i}, rho[i] = ρ_{e_i}, each V_dim x V_dim.
struct BimoduleAction {
  std::size_t K_dim = 0;
  std::size_t V_dim = 0;
  std::vector<QMatrix> lambda;
  std::vector<QMatrix> rho;

  static BimoduleAction zero(std::size_t k_dim, std::size_t v_dim);
  QMatrix lambda_of(const QVector& x) const;
  QMatrix rho_of(const QVector& x) const;
  void validate() const;
};

/// g(e_i, e_j) stored at i * K_dim + j.
struct Cocycle2 {
  std::size_t K_dim = 0;
  std::size_t V_dim = 0;
  std::vector<QVector> values;

  static Cocycle2 zero(std::size_t k_dim, std::size_t v_dim);
  /// From a K_dim x K_dim table of V-vectors.
  static Cocycle2 from_table(const std::vector<std::vector<QVector>>& table);
  /// For V_dim = 1: g(e_i, e_j) = m(i, j).
  static Cocycle2 from_scalar_matrix(const QMatrix& m);

  const QVector& at(std::size_t i, std::size_t j) const { return values[i * K_dim + j]; }
  QVector& at(std::size_t i, std::size_t j) { return values[i * K_dim + j]; }
  QVector eval(const QVector& x, const QVector& y) const;

  /// Coordinate ((i * K_dim + j) * V_dim + a).
  QVector flatten() const;
  static Cocycle2 unflatten(const QVector& v, std::size_t k_dim, std::size_t v_dim);

  bool operator==(const Cocycle2& o) const = default;
};

Cocycle2 operator+(const Cocycle2& a, const Cocycle2& b);

struct ExtensionData {
  Algebra K;
  Algebra V;
  BimoduleAction action;
  Cocycle2 g;

  void validate() const;
};

struct ConditionResult {
  bool pass = true;
  std::string witness;
};

struct KimReport {
  std::array<ConditionResult, 5> conditions;
  /// (i)-(iii), evaluated only when V has zero product.
  std::optional<std::array<ConditionResult, 3>> simplified;

  bool all_pass() const;
  /// 1-based index of the first failing condition, 0 if none.
  int first_failure() const;
};

KimReport check_kim_conditions(const ExtensionData& d);

/// Extended product on K ⊕ V (K basis first). Throws ExtensionConditionError.
Algebra build_extension(const ExtensionData& d);

/// h is V_dim x K_dim with column i = h(e_i).
Cocycle2 delta1(const BimoduleAction& act, const Algebra& K, const QMatrix& h);

/// delta2 g at (e_i, e_j, e_k) stored at (i * n + j) * n + k.
std::vector<QVector> delta2(const BimoduleAction& act, const Algebra& K, const Cocycle2& g);

/// Matrix of δ1: (n*n*m) x (n*m); h coordinate i * m + a is h(e_i)_a.
QMatrix delta1_matrix(const BimoduleAction& act, const Algebra& K);
/// Matrix of δ2: (n*n*n*m) x (n*n*m).
QMatrix delta2_matrix(const BimoduleAction& act, const Algebra& K);

struct H2Result {
  std::size_t dim = 0;
  std::vector<Cocycle2> representatives;
  std::vector<Cocycle2> Z;
  std::vector<Cocycle2> B;
  /// B² ⊆ Z² (fails only when λ, ρ are not a bimodule).
  bool coboundaries_closed = true;
};

H2Result h2(const BimoduleAction& act, const Algebra& K);

/// I_[g] = {x : xy = yx = 0, g(x,y) = g(y,x) = 0 for all y}.
Subspace i_g(const ExtensionData& d);
inline bool is_exact_extension(const ExtensionData& d) { return i_g(d).dim() == 0; }

bool is_central_extension(const ExtensionData& d);

/// True iff eta is invertible and eta(x y) = eta(x) eta(y) (product of A on the left,
/// of B on the right).
bool verify_iso_witness(const Algebra& A, const Algebra& B, const QMatrix& eta);

/// (μ, η)·g (x, y) = μ(g(η x, η y)). Throws InputError unless μ ∈ Aut(V), η ∈ Aut(K).
Cocycle2 act_on_cocycle(const Algebra& K, const Algebra& V, const QMatrix& mu, const QMatrix& eta,
                        const Cocycle2& g);

struct AutGroup {
  std::string kind;         // "N2", "zero", "e2e2=e1", "unknown"
  std::string description;  // closed form
  bool supported = false;
  std::function<QMatrix(Rng&)> sample;
};

AutGroup aut_group_dim2(const Algebra& a);

/// Classify A up to basis: "N2", "zero", "e2e2=e1", or "" when none matches literally.
std::string dim2_kind(const Algebra& a);

struct OrbitWitness {
  QMatrix mu, eta;
};

/// Searches sampled automorphism pairs for one with (μ,η)·g - g2 ∈ B². Over a
/// one-dimensional kernel with zero product μ is solved for rather than sampled.
std::optional<OrbitWitness> search_orbit_witness(const ExtensionData& d, const Cocycle2& g2,
                                                 std::size_t samples, Rng& rng);

// Lie algebra extensions.

struct LieExtensionData {
  Algebra G;
  Algebra A;
  std::vector<QMatrix> phi;  // phi[i] = φ(e_i) ∈ Der(A)
  Cocycle2 omega;
};

ConditionResult check_lie_extension(const LieExtensionData& d);
/// Throws ExtensionConditionError with the failing identity (1 or 2; 0 for shape/derivation).
Algebra build_lie_extension(const LieExtensionData& d);

/// φ = λ - ρ, ω = g - gᵀ, on the Lie algebras of K and V.
LieExtensionData induced_lie_data(const ExtensionData& d);

}  // namespace lsa
