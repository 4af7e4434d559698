#include "lsa/identities.hpp"

#include "lsa/error.hpp"

#include <functional>
#include <sstream>

namespace lsa {

namespace {

using Sides = std::function<std::pair<QVector, QVector>(const QVector&, const QVector&, const QVector&)>;

Verdict check_triples(std::size_t n, const Sides& sides) {
  Verdict v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto [l, r] = sides(unit_vector(n, i), unit_vector(n, j), unit_vector(n, k));
        ++v.triples_checked;
        if (l != r) {
          v.holds = false;
          v.witness = TripleWitness{i, j, k, std::move(l), std::move(r)};
          return v;
        }
      }
  return v;
}

}  // namespace

Verdict check_left_symmetric(const Algebra& a) {
  auto m = [&](const QVector& x, const QVector& y) { return multiply(a, x, y); };
  return check_triples(a.dim(), [&](const QVector& x, const QVector& y, const QVector& z) {
    return std::pair{m(m(x, y), z) - m(m(y, x), z), m(x, m(y, z)) - m(y, m(x, z))};
  });
}

Verdict check_novikov(const Algebra& a) {
  auto m = [&](const QVector& x, const QVector& y) { return multiply(a, x, y); };
  Verdict v = check_triples(a.dim(), [&](const QVector& x, const QVector& y, const QVector& z) {
    return std::pair{m(m(x, y), z), m(m(x, z), y)};
  });
  std::size_t n = a.dim();
  bool commuting = true;
  for (std::size_t i = 0; i < n && commuting; ++i)
    for (std::size_t j = i + 1; j < n && commuting; ++j)
      commuting = commutator(right_mult(a, unit_vector(n, i)), right_mult(a, unit_vector(n, j))).is_zero();
  if (commuting != v.holds)
    throw InvariantError("Novikov characterizations disagree");
  return v;
}

Verdict check_derivation(const Algebra& a) {
  auto m = [&](const QVector& x, const QVector& y) { return multiply(a, x, y); };
  return check_triples(a.dim(), [&](const QVector& x, const QVector& y, const QVector& z) {
    return std::pair{m(m(x, y), z), m(m(z, y), x)};
  });
}

Verdict check_S(const Algebra& a) {
  auto m = [&](const QVector& x, const QVector& y) { return multiply(a, x, y); };
  return check_triples(a.dim(), [&](const QVector& x, const QVector& y, const QVector& z) {
    return std::pair{m(m(x, y) - m(y, x), z), zero_vector(a.dim())};
  });
}

Verdict check_jacobi(const Algebra& b) {
  auto br = [&](const QVector& x, const QVector& y) { return multiply(b, x, y); };
  return check_triples(b.dim(), [&](const QVector& x, const QVector& y, const QVector& z) {
    return std::pair{br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y)), zero_vector(b.dim())};
  });
}

std::string to_string(const TripleWitness& w) {
  std::ostringstream os;
  os << "(e" << w.i + 1 << ", e" << w.j + 1 << ", e" << w.k + 1 << "): lhs " << to_string(w.lhs)
     << ", rhs " << to_string(w.rhs);
  return os.str();
}

}  // namespace lsa
