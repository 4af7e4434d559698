#include "lsa/lie.hpp"

#include "lsa/error.hpp"
#include "lsa/identities.hpp"
#include "lsa/linalg.hpp"

#include <cmath>
#include <fmt/format.h>

namespace lsa {

Algebra lie_algebra_of(const Algebra& a) {
  std::size_t n = a.dim();
  Algebra l(n, a.name().empty() ? std::string{} : "lie(" + a.name() + ")");
  l.params = a.params;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) l.c(i, j, k) = a.c(i, j, k) - a.c(j, i, k);
  Verdict jac = check_jacobi(l);
  if (!jac.holds)
    throw InvariantError("Jacobi identity fails for the commutator at " + to_string(*jac.witness));
  return l;
}

void require_lie(const Algebra& l) {
  std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (l.c(i, j, k) != -l.c(j, i, k))
          throw InputError(fmt::format("bracket not antisymmetric at (e{}, e{})", i + 1, j + 1));
  Verdict jac = check_jacobi(l);
  if (!jac.holds) throw InputError("Jacobi identity fails at " + to_string(*jac.witness));
}

QMatrix ad(const Algebra& l, const QVector& x) { return left_mult(l, x); }

QVector trace_form(const Algebra& l) {
  QVector t(l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i) t[i] = ad(l, unit_vector(l.dim(), i)).trace();
  return t;
}

bool is_unimodular(const Algebra& l) { return is_zero(trace_form(l)); }

bool is_solvable(const Algebra& l) {
  std::size_t n = l.dim();
  std::vector<QVector> cur;
  for (std::size_t i = 0; i < n; ++i) cur.push_back(unit_vector(n, i));
  while (!cur.empty()) {
    std::vector<QVector> next;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) next.push_back(multiply(l, cur[i], cur[j]));
    next = span_basis(next, n);
    if (next.size() == cur.size()) return false;
    cur = std::move(next);
  }
  return true;
}

MilnorForm milnor_normal_form(const Algebra& l) {
  if (l.dim() != 3) throw NotInScopeError("Milnor form needs a 3-dimensional Lie algebra");
  QVector tau = trace_form(l);
  if (is_zero(tau)) throw NotInScopeError("unimodular Lie algebra");
  auto u = nullspace_basis(QMatrix::from_rows({tau}, 3));
  if (!is_zero(multiply(l, u[0], u[1])))
    throw NotInScopeError("kernel of the trace form is not abelian");
  std::size_t first = 0;
  while (tau[first] == 0) ++first;
  QVector e1 = (Rational(2) / tau[first]) * unit_vector(3, first);
  QMatrix ub = QMatrix::from_columns(u, 3);
  QMatrix d(2, 2);
  for (std::size_t c = 0; c < 2; ++c) {
    auto coord = solve(ub, multiply(l, e1, u[c]));
    if (!coord) throw InvariantError("ad_e1 does not preserve the trace kernel");
    d.set_column(c, *coord);
  }
  if (d.trace() != 2) throw InvariantError("normalized trace of D is not 2");
  return MilnorForm{d, {e1, u[0], u[1]}, det(d)};
}

LieTag tag_from_milnor(const MilnorForm& m) {
  LieTag t;
  const Rational& d = m.detD;
  if (d == 0) {
    t.kind = LieTag::Kind::G31;
  } else if (d == 1) {
    t.kind = m.D == QMatrix::identity(2) ? LieTag::Kind::G32 : LieTag::Kind::G33;
  } else if (d > 1) {
    t.kind = LieTag::Kind::G35;
    Rational r = d - 1;
    t.exact_param = exact_sqrt(r);
    t.param = t.exact_param ? to_double(*t.exact_param) : std::sqrt(to_double(r));
  } else {
    // 4 mu / (1 + mu)^2 = d with |mu| < 1
    t.kind = LieTag::Kind::G34;
    Rational r = 1 - d;
    if (auto s = exact_sqrt(r)) {
      t.exact_param = (2 - d - 2 * *s) / d;
      t.param = to_double(*t.exact_param);
    } else {
      double dd = to_double(d);
      t.param = (2.0 - dd - 2.0 * std::sqrt(1.0 - dd)) / dd;
    }
  }
  return t;
}

LieTag identify_lie_algebra(const Algebra& l) { return tag_from_milnor(milnor_normal_form(l)); }

Rational canonical_detD(LieTag::Kind kind, const Rational& p) {
  switch (kind) {
    case LieTag::Kind::G31: return 0;
    case LieTag::Kind::G32:
    case LieTag::Kind::G33: return 1;
    case LieTag::Kind::G34: return 4 * p / ((1 + p) * (1 + p));
    case LieTag::Kind::G35: return 1 + p * p;
    default: throw InputError("no canonical det D for an out-of-scope tag");
  }
}

bool same_tag(const LieTag& a, const LieTag& b, double tol) {
  if (a.kind != b.kind) return false;
  if (!a.has_param()) return true;
  if (a.exact() && b.exact()) return *a.exact_param == *b.exact_param;
  return std::abs(a.param - b.param) <= tol;
}

std::string to_string(const LieTag& t) {
  using K = LieTag::Kind;
  auto param = [&](const char* name) {
    if (t.exact_param) return fmt::format("({}={})", name, to_string(*t.exact_param));
    return fmt::format("({}~{:.12g})", name, t.param);
  };
  switch (t.kind) {
    case K::G31: return "G31";
    case K::G32: return "G32";
    case K::G33: return "G33";
    case K::G34: return "G34" + param("mu");
    case K::G35: return "G35" + param("zeta");
    default: return "NotInScope(" + t.reason + ")";
  }
}

}  // namespace lsa
