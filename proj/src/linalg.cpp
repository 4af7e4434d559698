#include "lsa/linalg.hpp"

#include "lsa/error.hpp"

#include <algorithm>
#include <set>

namespace lsa {

RrefResult rref(const QMatrix& m) {
  RrefResult out{m, {}};
  QMatrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (a(row, c) != 0) a(r, c) -= f * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

std::vector<QVector> nullspace_basis(const QMatrix& m) {
  auto [r, piv] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v = zero_vector(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QVector> span_basis(const std::vector<QVector>& vs, std::size_t n) {
  if (vs.empty()) return {};
  auto [r, piv] = rref(QMatrix::from_rows(vs, n));
  std::vector<QVector> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(r.row(i));
  return out;
}

std::size_t span_dim(const std::vector<QVector>& vs, std::size_t n) {
  if (vs.empty()) return 0;
  return rank(QMatrix::from_rows(vs, n));
}

bool in_span(const std::vector<QVector>& basis, const QVector& v) {
  std::size_t n = v.size();
  auto ext = basis;
  ext.push_back(v);
  return span_dim(ext, n) == span_dim(basis, n);
}

bool span_contains(const std::vector<QVector>& big, const std::vector<QVector>& small,
                   std::size_t n) {
  auto ext = big;
  ext.insert(ext.end(), small.begin(), small.end());
  return span_dim(ext, n) == span_dim(big, n);
}

std::vector<QVector> intersect_spans(const std::vector<QVector>& a, const std::vector<QVector>& b,
                                     std::size_t n) {
  auto ba = span_basis(a, n);
  auto bb = span_basis(b, n);
  if (ba.empty() || bb.empty()) return {};
  // Solve Σ x_i a_i = Σ y_j b_j; intersection is the image of the x-part.
  QMatrix m(n, ba.size() + bb.size());
  for (std::size_t i = 0; i < ba.size(); ++i) m.set_column(i, ba[i]);
  for (std::size_t j = 0; j < bb.size(); ++j) m.set_column(ba.size() + j, -bb[j]);
  std::vector<QVector> vs;
  for (const auto& k : nullspace_basis(m)) {
    QVector v = zero_vector(n);
    for (std::size_t i = 0; i < ba.size(); ++i) axpy(v, k[i], ba[i]);
    vs.push_back(std::move(v));
  }
  return span_basis(vs, n);
}

std::vector<QVector> quotient_basis(const std::vector<QVector>& ambient,
                                    const std::vector<QVector>& sub) {
  if (ambient.empty()) {
    for (const auto& s : sub)
      if (!is_zero(s)) throw InvariantError("quotient_basis: subspace not contained in ambient");
    return {};
  }
  std::size_t n = ambient.front().size();
  if (!span_contains(ambient, sub, n))
    throw InvariantError("quotient_basis: subspace not contained in ambient");
  auto cur = span_basis(sub, n);
  std::size_t d = cur.size();
  std::vector<QVector> reps;
  for (const auto& v : ambient) {
    auto ext = cur;
    ext.push_back(v);
    if (span_dim(ext, n) > d) {
      cur = std::move(ext);
      ++d;
      reps.push_back(v);
    }
  }
  return reps;
}

std::vector<Rational> char_poly(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("char_poly of non-square matrix");
  std::size_t n = m.rows();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix mk = QMatrix::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -(m * mk).trace() / static_cast<long>(k);
  }
  return c;
}

bool is_nilpotent(const QMatrix& m) {
  auto c = char_poly(m);
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    if (c[k] != 0) return false;
  return true;
}

Rational det(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("det of non-square matrix");
  QMatrix a = m;
  std::size_t n = a.rows();
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
      d = -d;
    }
    d *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return d;
}

bool is_invertible(const QMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto [red, piv] = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw InvariantError("matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  return inv;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw DimensionError("solve: rhs length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto [red, piv] = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  QVector x = zero_vector(m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red(i, m.cols());
  return x;
}

static std::vector<Integer> positive_divisors(Integer v) {
  if (v < 0) v = -v;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

static Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  std::vector<Rational> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.size() <= 1) return {};
  std::set<Rational> roots;
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  std::vector<Rational> p(c.begin() + static_cast<std::ptrdiff_t>(low), c.end());
  if (p.size() > 1) {
    Integer lcm = 1;
    for (const auto& q : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> ip;
    for (const auto& q : p) ip.emplace_back(Integer(q * lcm));
    for (const auto& num : positive_divisors(ip.front()))
      for (const auto& den : positive_divisors(ip.back()))
        for (int s : {1, -1}) {
          Rational cand(num * s, den);
          cand.canonicalize();
          if (eval_poly(p, cand) == 0) roots.insert(cand);
        }
  }
  return {roots.begin(), roots.end()};
}

QMatrix matrix_power(const QMatrix& m, unsigned k) {
  QMatrix r = QMatrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace lsa
