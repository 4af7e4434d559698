#pragma once

#include "lsa/algebra.hpp"

#include <optional>
#include <string>

namespace lsa {

/// Brackets [e_i, e_j] = e_i e_j - e_j e_i. Throws InvariantError if Jacobi fails.
Algebra lie_algebra_of(const Algebra& a);

/// Throws InputError unless the table is antisymmetric and satisfies Jacobi.
void require_lie(const Algebra& l);

QMatrix ad(const Algebra& l, const QVector& x);
/// Coefficients of the linear form x -> tr ad_x.
QVector trace_form(const Algebra& l);
bool is_unimodular(const Algebra& l);
bool is_solvable(const Algebra& l);

struct MilnorForm {
  QMatrix D;                          // ad_{e1} on U = ker tr ad, in the basis u1, u2
  std::vector<QVector> adapted_basis;  // e1, u1, u2
  Rational detD;
};

/// Throws NotInScopeError for dim != 3, unimodular input, or non-abelian U.
MilnorForm milnor_normal_form(const Algebra& l);

struct LieTag {
  enum class Kind { G31, G32, G33, G34, G35, NotInScope };
  Kind kind = Kind::NotInScope;
  std::optional<Rational> exact_param;  // mu or zeta when rational
  double param = 0.0;
  std::string reason;

  bool exact() const { return exact_param.has_value(); }
  bool has_param() const { return kind == Kind::G34 || kind == Kind::G35; }
};

bool same_tag(const LieTag& a, const LieTag& b, double tol = 1e-12);

/// "G31", "G34(mu=1/2)", "G35(zeta~1.41421356237)", "NotInScope(...)"
std::string to_string(const LieTag& t);

/// Tag from the normalized determinant d = det D.
LieTag tag_from_milnor(const MilnorForm& m);
LieTag identify_lie_algebra(const Algebra& l);

/// Canonical det D of each family (for G34 / G35 the parameter is needed).
Rational canonical_detD(LieTag::Kind kind, const Rational& param = 0);

}  // namespace lsa
