#include "lsa/algebra.hpp"

#include "lsa/error.hpp"
#include "lsa/linalg.hpp"

#include <sstream>

namespace lsa {

Algebra::Algebra(std::size_t dim, std::string name)
    : dim_(dim), name_(std::move(name)), c_(dim * dim * dim, Rational(0)) {}

QVector Algebra::product(std::size_t i, std::size_t j) const {
  QVector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
  return v;
}

void Algebra::set_product(std::size_t i, std::size_t j, const QVector& v) {
  if (v.size() != dim_) throw DimensionError("product vector length mismatch");
  for (std::size_t k = 0; k < dim_; ++k) c(i, j, k) = v[k];
}

bool Algebra::is_zero_product() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

Algebra make_algebra(std::size_t dim, const std::vector<ProductSpec>& products, std::string name) {
  Algebra a(dim, std::move(name));
  for (const auto& p : products) {
    if (p.i < 1 || p.i > dim || p.j < 1 || p.j > dim)
      throw DimensionError("product index out of range");
    a.set_product(p.i - 1, p.j - 1, p.value);
  }
  return a;
}

QVector multiply(const Algebra& a, const QVector& x, const QVector& y) {
  std::size_t n = a.dim();
  if (x.size() != n || y.size() != n) throw DimensionError("multiply: vector length mismatch");
  QVector r = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (a.c(i, j, k) != 0) r[k] += s * a.c(i, j, k);
    }
  }
  return r;
}

QMatrix left_mult(const Algebra& a, const QVector& x) {
  std::size_t n = a.dim();
  QMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, multiply(a, x, unit_vector(n, j)));
  return m;
}

QMatrix right_mult(const Algebra& a, const QVector& x) {
  std::size_t n = a.dim();
  QMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, multiply(a, unit_vector(n, j), x));
  return m;
}

Algebra change_basis(const Algebra& a, const QMatrix& p) {
  std::size_t n = a.dim();
  if (p.rows() != n || p.cols() != n) throw DimensionError("change_basis: matrix shape");
  QMatrix pinv = inverse(p);
  Algebra b(n, a.name());
  b.params = a.params;
  std::vector<QVector> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = p.column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.set_product(i, j, pinv * multiply(a, f[i], f[j]));
  return b;
}

bool Subspace::contains(const QVector& v) const { return in_span(basis, v); }

Subspace make_subspace(std::size_t n, const std::vector<QVector>& vs) {
  return Subspace{n, span_basis(vs, n)};
}

// Coordinates of v in the given independent vectors; throws if v is outside their span.
static QVector coordinates(const std::vector<QVector>& basis, const QVector& v) {
  QMatrix m = QMatrix::from_columns(basis, v.size());
  auto x = solve(m, v);
  if (!x) throw InvariantError("vector outside the expected span");
  return *x;
}

Algebra restriction(const Algebra& a, const Subspace& w) {
  std::size_t m = w.dim();
  Algebra r(m, a.name().empty() ? std::string{} : a.name() + "|W");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      r.set_product(i, j, coordinates(w.basis, multiply(a, w.basis[i], w.basis[j])));
  return r;
}

Algebra quotient(const Algebra& a, const Subspace& ideal) {
  std::size_t n = a.dim();
  std::vector<QVector> std_basis;
  for (std::size_t i = 0; i < n; ++i) std_basis.push_back(unit_vector(n, i));
  auto reps = quotient_basis(std_basis, ideal.basis);
  std::vector<QVector> full = reps;
  full.insert(full.end(), ideal.basis.begin(), ideal.basis.end());
  std::size_t m = reps.size();
  Algebra q(m, a.name().empty() ? std::string{} : a.name() + "/I");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      QVector coord = coordinates(full, multiply(a, reps[i], reps[j]));
      coord.resize(m);
      q.set_product(i, j, coord);
    }
  return q;
}

std::string to_string(const Algebra& a) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      QVector v = a.product(i, j);
      if (is_zero(v)) continue;
      if (any) os << ", ";
      any = true;
      os << 'e' << i + 1 << "e" << j + 1 << " = ";
      bool first = true;
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (v[k] == 0) continue;
        Rational c = v[k];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        Rational ac = abs(c);
        if (ac != 1) os << ac.get_str();
        os << 'e' << k + 1;
        first = false;
      }
    }
  if (!any) os << "(zero product)";
  return os.str();
}

}  // namespace lsa
