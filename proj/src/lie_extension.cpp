#include "lsa/error.hpp"
#include "lsa/extensions.hpp"
#include "lsa/identities.hpp"
#include "lsa/lie.hpp"

#include <fmt/format.h>

namespace lsa {

namespace {

// 0 = shape / derivation problem, 1 and 2 = the two compatibility identities.
std::pair<int, std::string> lie_extension_failure(const LieExtensionData& d) {
  std::size_t n = d.G.dim(), m = d.A.dim();
  if (d.phi.size() != n) return {0, "phi needs one matrix per basis vector of G"};
  for (const auto& p : d.phi)
    if (p.rows() != m || p.cols() != m) return {0, "phi matrix shape"};
  if (d.omega.K_dim != n || d.omega.V_dim != m) return {0, "omega shape"};
  auto bA = [&](const QVector& a, const QVector& b) { return multiply(d.A, a, b); };
  auto bG = [&](const QVector& x, const QVector& y) { return multiply(d.G, x, y); };
  auto phi_of = [&](const QVector& x) {
    QMatrix r = QMatrix::zero(m, m);
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] != 0) r += x[i] * d.phi[i];
    return r;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d.omega.at(i, j) != -d.omega.at(j, i))
        return {0, fmt::format("omega not alternating at (e{}, e{})", i + 1, j + 1)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        QVector fa = unit_vector(m, a), fb = unit_vector(m, b);
        if (d.phi[i] * bA(fa, fb) != bA(d.phi[i] * fa, fb) + bA(fa, d.phi[i] * fb))
          return {0, fmt::format("phi(e{}) is not a derivation", i + 1)};
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QVector x = unit_vector(n, i), y = unit_vector(n, j);
      QMatrix lhs = commutator(d.phi[i], d.phi[j]);
      QMatrix rhs = phi_of(bG(x, y)) + left_mult(d.A, d.omega.at(i, j));
      if (lhs != rhs)
        return {1, fmt::format("[phi(x),phi(y)] = phi([x,y]) + ad omega(x,y) fails at (e{}, e{})", i + 1, j + 1)};
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        QVector x = unit_vector(n, i), y = unit_vector(n, j), z = unit_vector(n, k);
        const auto& w = d.omega;
        QVector lhs = w.eval(bG(x, y), z) - w.eval(x, bG(y, z)) + w.eval(y, bG(x, z));
        QVector rhs = d.phi[i] * w.at(j, k) + d.phi[j] * w.at(k, i) + d.phi[k] * w.at(i, j);
        if (lhs != rhs)
          return {2, fmt::format("cyclic omega identity fails at (e{}, e{}, e{})", i + 1, j + 1, k + 1)};
      }
  return {-1, {}};
}

}  // namespace

ConditionResult check_lie_extension(const LieExtensionData& d) {
  auto [c, w] = lie_extension_failure(d);
  return {c < 0, w};
}

Algebra build_lie_extension(const LieExtensionData& d) {
  require_lie(d.G);
  require_lie(d.A);
  auto [c, w] = lie_extension_failure(d);
  if (c >= 0) throw ExtensionConditionError(c, w);
  std::size_t n = d.G.dim(), m = d.A.dim(), N = n + m;
  Algebra ext(N);
  auto put = [&](std::size_t i, std::size_t j, const QVector& gpart, const QVector& apart) {
    QVector v(N);
    for (std::size_t k = 0; k < n; ++k) v[k] = gpart[k];
    for (std::size_t a = 0; a < m; ++a) v[n + a] = apart[a];
    ext.set_product(i, j, v);
  };
  QVector g0 = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) put(i, j, d.G.product(i, j), d.omega.at(i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < m; ++b) {
      put(i, n + b, g0, d.phi[i].column(b));
      put(n + b, i, g0, -d.phi[i].column(b));
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) put(n + a, n + b, g0, d.A.product(a, b));
  Verdict jac = check_jacobi(ext);
  if (!jac.holds) throw InvariantError("extended bracket violates Jacobi at " + to_string(*jac.witness));
  return ext;
}

LieExtensionData induced_lie_data(const ExtensionData& d) {
  d.validate();
  LieExtensionData l{lie_algebra_of(d.K), lie_algebra_of(d.V), {}, Cocycle2::zero(d.K.dim(), d.V.dim())};
  for (std::size_t i = 0; i < d.K.dim(); ++i) l.phi.push_back(d.action.lambda[i] - d.action.rho[i]);
  for (std::size_t i = 0; i < d.K.dim(); ++i)
    for (std::size_t j = 0; j < d.K.dim(); ++j) l.omega.at(i, j) = d.g.at(i, j) - d.g.at(j, i);
  return l;
}

}  // namespace lsa
