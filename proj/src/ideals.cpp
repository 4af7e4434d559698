#include "lsa/ideals.hpp"

#include "lsa/error.hpp"
#include "lsa/linalg.hpp"

#include <set>

namespace lsa {

Subspace center(const Algebra& a) {
  std::size_t n = a.dim();
  std::vector<QMatrix> blocks;
  for (std::size_t j = 0; j < n; ++j) {
    blocks.push_back(right_mult(a, unit_vector(n, j)));
    blocks.push_back(left_mult(a, unit_vector(n, j)));
  }
  if (n == 0) return {0, {}};
  return make_subspace(n, nullspace_basis(stack_rows(blocks)));
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& w) {
  std::size_t n = a.dim();
  if (w.ambient_dim != n) throw DimensionError("subspace ambient dimension mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& v : w.basis) {
      if (!w.contains(multiply(a, unit_vector(n, i), v))) return false;
      if (!w.contains(multiply(a, v, unit_vector(n, i)))) return false;
    }
  return true;
}

namespace {

// Subspaces of the common eigenspaces of ops, found by branching over rational
// eigenvalues operator by operator.
void common_eigenspaces(const std::vector<QMatrix>& ops, std::size_t idx, const std::vector<QVector>& w,
                        std::size_t n, std::vector<std::vector<QVector>>& out) {
  if (w.empty()) return;
  if (idx == ops.size()) {
    out.push_back(w);
    return;
  }
  const QMatrix& t = ops[idx];
  for (const auto& lam : rational_roots(char_poly(t))) {
    QMatrix shifted = t - lam * QMatrix::identity(n);
    auto ker = nullspace_basis(shifted);
    common_eigenspaces(ops, idx + 1, intersect_spans(w, ker, n), n, out);
  }
}

std::vector<QVector> standard_basis(std::size_t n) {
  std::vector<QVector> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vector(n, i));
  return b;
}

}  // namespace

std::vector<Subspace> find_ideals_dim_le3(const Algebra& a) {
  std::size_t n = a.dim();
  if (n > 3) throw DimensionError("find_ideals_dim_le3 needs dim <= 3");
  std::vector<QMatrix> ops, dual;
  for (std::size_t i = 0; i < n; ++i) {
    ops.push_back(left_mult(a, unit_vector(n, i)));
    ops.push_back(right_mult(a, unit_vector(n, i)));
  }
  for (const auto& t : ops) dual.push_back(t.transpose());

  std::vector<Subspace> found;
  std::set<std::string> seen;
  auto add = [&](const std::vector<QVector>& vs) {
    Subspace s = make_subspace(n, vs);
    if (s.dim() == 0 || s.dim() == n) return;
    std::string key;
    for (const auto& v : s.basis) key += to_string(v);
    if (!seen.insert(key).second) return;
    if (!is_two_sided_ideal(a, s)) throw InvariantError("ideal search produced a non-ideal");
    found.push_back(std::move(s));
  };

  std::vector<std::vector<QVector>> spaces;
  common_eigenspaces(ops, 0, standard_basis(n), n, spaces);
  for (const auto& sp : spaces) {
    for (const auto& v : sp) add({v});
    if (sp.size() >= 2) add(sp);
  }

  std::vector<std::vector<QVector>> cospaces;
  common_eigenspaces(dual, 0, standard_basis(n), n, cospaces);
  for (const auto& sp : cospaces) {
    for (const auto& phi : sp) add(nullspace_basis(QMatrix::from_rows({phi}, n)));
    if (sp.size() >= 2) add(nullspace_basis(QMatrix::from_rows(sp, n)));
  }
  return found;
}

}  // namespace lsa
