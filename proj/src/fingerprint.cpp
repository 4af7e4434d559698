#include "lsa/fingerprint.hpp"

#include "lsa/completeness.hpp"
#include "lsa/error.hpp"
#include "lsa/identities.hpp"
#include "lsa/ideals.hpp"
#include "lsa/linalg.hpp"

#include <fmt/format.h>

namespace lsa {

std::pair<std::size_t, std::size_t> inertia(const QMatrix& m) {
  if (!m.is_square() || !(m == m.transpose())) throw InputError("inertia needs a symmetric matrix");
  QMatrix s = m;
  std::size_t n = s.rows(), pos = 0, neg = 0;
  auto add_to = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t c = 0; c < n; ++c) s(dst, c) += f * s(src, c);
    for (std::size_t r = 0; r < n; ++r) s(r, dst) += f * s(r, src);
  };
  auto swap_idx = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < n; ++c) std::swap(s(a, c), s(b, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(s(r, a), s(r, b));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && s(p, p) == 0) ++p;
    if (p == n) {
      bool fixed = false;
      for (std::size_t i = k; i < n && !fixed; ++i)
        for (std::size_t j = i + 1; j < n && !fixed; ++j)
          if (s(i, j) != 0) {
            add_to(i, j, 1);
            p = i;
            fixed = true;
          }
      if (!fixed) break;
    }
    if (p != k) swap_idx(p, k);
    for (std::size_t r = k + 1; r < n; ++r)
      if (s(r, k) != 0) add_to(r, k, -s(r, k) / s(k, k));
    (s(k, k) > 0 ? pos : neg)++;
  }
  return {pos, neg};
}

Fingerprint fingerprint(const Algebra& a) {
  std::size_t n = a.dim();
  if (n != 3) throw DimensionError("fingerprint needs a 3-dimensional algebra");
  Fingerprint f;
  Algebra l = lie_algebra_of(a);
  try {
    f.lie = to_string(identify_lie_algebra(l));
  } catch (const NotInScopeError& e) {
    f.lie = std::string("NotInScope(") + e.what() + ")";
  }
  f.center_dim = center(a).dim();
  std::vector<QVector> prods;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prods.push_back(a.product(i, j));
  f.square_dim = span_dim(prods, n);
  f.flags = {is_novikov(a), is_derivation_algebra(a), satisfies_S(a)};
  f.rank_L = generic_rank(a, left_mult);
  f.rank_R = generic_rank(a, right_mult);

  QVector tau = trace_form(l);
  QMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = dot(tau, a.product(i, j) + a.product(j, i)) / 2;
  std::tie(f.q_pos, f.q_neg) = inertia(q);

  if (!is_zero(tau)) {
    auto ub = nullspace_basis(QMatrix::from_rows({tau}, n));
    Subspace u = make_subspace(n, ub);
    bool null_square = true;
    for (const auto& x : u.basis)
      for (const auto& y : u.basis) null_square = null_square && is_zero(multiply(a, x, y));
    if (null_square && is_two_sided_ideal(a, u)) {
      std::size_t first = 0;
      while (tau[first] == 0) ++first;
      QVector e1 = (Rational(2) / tau[first]) * unit_vector(n, first);
      QMatrix basis = QMatrix::from_columns(u.basis, n);
      QMatrix lu(2, 2), du(2, 2);
      for (std::size_t c = 0; c < 2; ++c) {
        lu.set_column(c, *solve(basis, multiply(a, e1, u.basis[c])));
        du.set_column(c, *solve(basis, multiply(l, e1, u.basis[c])));
      }
      f.u_trace = lu.trace();
      f.u_det = det(lu);
      QMatrix half = QMatrix::identity(2);
      QMatrix l0 = lu - (lu.trace() / 2) * half;
      QMatrix d0 = du - (du.trace() / 2) * half;
      if (!d0.is_zero()) {
        std::size_t r = 0, c = 0;
        while (d0(r, c) == 0) {
          if (++c == 2) { c = 0; ++r; }
        }
        Rational k = l0(r, c) / d0(r, c);
        if (l0 == k * d0) f.kappa = k;
      }
    }
  }
  f.complete = is_complete(a);
  return f;
}

std::string to_string(const Fingerprint& f) {
  auto opt = [](const std::optional<Rational>& q) { return q ? to_string(*q) : std::string("-"); };
  return fmt::format(
      "lie={} center={} square={} flags={} rankL={} rankR={} q=(+{},-{}) U[tr={},det={},kappa={}] complete={}",
      f.lie, f.center_dim, f.square_dim, to_string(f.flags), f.rank_L, f.rank_R, f.q_pos, f.q_neg,
      opt(f.u_trace), opt(f.u_det), opt(f.kappa), f.complete ? "yes" : "no");
}

}  // namespace lsa
