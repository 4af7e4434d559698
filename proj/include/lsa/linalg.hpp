#pragma once

#include "lsa/qmatrix.hpp"

#include <vector>

namespace lsa {

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);
std::vector<QVector> nullspace_basis(const QMatrix& m);

/// Row-reduced basis of span(vs); all vectors must share length n.
std::vector<QVector> span_basis(const std::vector<QVector>& vs, std::size_t n);
std::size_t span_dim(const std::vector<QVector>& vs, std::size_t n);
bool in_span(const std::vector<QVector>& basis, const QVector& v);
bool span_contains(const std::vector<QVector>& big, const std::vector<QVector>& small, std::size_t n);
std::vector<QVector> intersect_spans(const std::vector<QVector>& a, const std::vector<QVector>& b,
                                     std::size_t n);

/// Complement representatives of span(sub) inside span(ambient).
/// Throws InvariantError if sub is not contained in ambient.
std::vector<QVector> quotient_basis(const std::vector<QVector>& ambient,
                                    const std::vector<QVector>& sub);

/// Coefficients in ascending order: result[k] multiplies λ^k, result[n] = 1.
std::vector<Rational> char_poly(const QMatrix& m);
bool is_nilpotent(const QMatrix& m);
Rational det(const QMatrix& m);
QMatrix inverse(const QMatrix& m);
bool is_invertible(const QMatrix& m);

/// Some solution of m x = b, or nullopt if inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

/// Distinct rational roots of an integer-or-rational polynomial (ascending coefficients).
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

QMatrix matrix_power(const QMatrix& m, unsigned k);

}  // namespace lsa
