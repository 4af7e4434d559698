#pragma once

#include "lsa/algebra.hpp"

#include <optional>

namespace lsa {

/// Basis indices (0-based) and both sides of a failed identity.
struct TripleWitness {
  std::size_t i = 0, j = 0, k = 0;
  QVector lhs, rhs;
};

struct Verdict {
  bool holds = true;
  std::size_t triples_checked = 0;
  std::optional<TripleWitness> witness;

  explicit operator bool() const { return holds; }
};

/// (xy)z - (yx)z = x(yz) - y(xz)
Verdict check_left_symmetric(const Algebra& a);
/// (xy)z = (xz)y, cross-checked against [R_ei, R_ej] = 0; throws InvariantError on disagreement.
Verdict check_novikov(const Algebra& a);
/// (xy)z = (zy)x
Verdict check_derivation(const Algebra& a);
/// [x,y] z = 0
Verdict check_S(const Algebra& a);

inline bool is_left_symmetric(const Algebra& a) { return check_left_symmetric(a).holds; }
inline bool is_novikov(const Algebra& a) { return check_novikov(a).holds; }
inline bool is_derivation_algebra(const Algebra& a) { return check_derivation(a).holds; }
inline bool satisfies_S(const Algebra& a) { return check_S(a).holds; }

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 for a bracket table.
Verdict check_jacobi(const Algebra& bracket);

std::string to_string(const TripleWitness& w);

}  // namespace lsa
