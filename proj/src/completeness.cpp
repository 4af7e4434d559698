#include "lsa/completeness.hpp"

#include "lsa/linalg.hpp"

#include <algorithm>
#include <limits>
#include <omp.h>

namespace lsa {

std::size_t grid_size(std::size_t n) {
  std::size_t s = 1;
  for (std::size_t i = 0; i < n; ++i) s *= n + 1;
  return s;
}

QVector grid_point(std::size_t n, std::size_t idx) {
  QVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<long>(idx % (n + 1));
    idx /= n + 1;
  }
  return x;
}

std::optional<QVector> completeness_witness(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto total = static_cast<long long>(grid_size(n));
  long long first = std::numeric_limits<long long>::max();
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first)
  for (long long p = 0; p < total; ++p) {
    if (p >= first) continue;
    if (!is_nilpotent(right_mult(a, grid_point(n, static_cast<std::size_t>(p))))) first = std::min(first, p);
  }
  if (first == std::numeric_limits<long long>::max()) return std::nullopt;
  return grid_point(n, static_cast<std::size_t>(first));
}

bool is_complete(const Algebra& a) { return !completeness_witness(a).has_value(); }

std::size_t generic_rank(const Algebra& a,
                         const std::function<QMatrix(const Algebra&, const QVector&)>& op) {
  const std::size_t n = a.dim();
  const auto total = static_cast<long long>(grid_size(n));
  std::size_t best = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(max : best)
  for (long long p = 0; p < total; ++p) {
    if (best == n) continue;
    best = std::max(best, rank(op(a, grid_point(n, static_cast<std::size_t>(p)))));
  }
  return best;
}

namespace serial {

std::optional<QVector> completeness_witness(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t p = 0, total = grid_size(n); p < total; ++p) {
    QVector x = grid_point(n, p);
    if (!is_nilpotent(right_mult(a, x))) return x;
  }
  return std::nullopt;
}

bool is_complete(const Algebra& a) { return !serial::completeness_witness(a).has_value(); }

std::size_t generic_rank(const Algebra& a,
                         const std::function<QMatrix(const Algebra&, const QVector&)>& op) {
  const std::size_t n = a.dim();
  std::size_t best = 0;
  for (std::size_t p = 0, total = grid_size(n); p < total && best < n; ++p)
    best = std::max(best, rank(op(a, grid_point(n, p))));
  return best;
}

}  // namespace serial

}  // namespace lsa
