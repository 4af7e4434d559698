#pragma once

#include "lsa/algebra.hpp"

#include <functional>
#include <optional>

namespace lsa {

/// Number of points of the grid {0..n}^n.
std::size_t grid_size(std::size_t n);
/// The idx-th grid point (mixed radix n+1).
QVector grid_point(std::size_t n, std::size_t idx);

/// R_x nilpotent for every x. A char-poly coefficient of R_x has degree <= n in each
/// coordinate, so vanishing on {0..n}^n means vanishing identically.
bool is_complete(const Algebra& a);
/// First grid point whose R_x is not nilpotent.
std::optional<QVector> completeness_witness(const Algebra& a);

/// max over the grid of rank(op(x)); equals the generic rank (minors have degree <= n
/// per coordinate).
std::size_t generic_rank(const Algebra& a, const std::function<QMatrix(const Algebra&, const QVector&)>& op);

namespace serial {
bool is_complete(const Algebra& a);
std::optional<QVector> completeness_witness(const Algebra& a);
std::size_t generic_rank(const Algebra& a, const std::function<QMatrix(const Algebra&, const QVector&)>& op);
}  // namespace serial

}  // namespace lsa
