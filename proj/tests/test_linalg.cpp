#include "lsa/error.hpp"
#include "lsa/linalg.hpp"
#include "lsa/random.hpp"

#include <doctest.h>

using namespace lsa;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
}

TEST_CASE("rref") {
  auto id = rref(QMatrix::identity(3));
  CHECK(id.reduced == QMatrix::identity(3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  auto r = rref(QMatrix{{2, 4}, {1, 2}});
  CHECK(r.reduced == QMatrix{{1, 2}, {0, 0}});
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rank of a sum of r rank-one terms") {
  Rng rng(11);
  for (std::size_t r = 0; r <= 4; ++r)
    for (int trial = 0; trial < 10; ++trial) {
      // independent u_i and v_i make sum u_i v_i^T rank exactly r
      QMatrix u = rng.invertible(4), v = rng.invertible(4);
      QMatrix m(4, 4);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t a = 0; a < 4; ++a)
          for (std::size_t b = 0; b < 4; ++b) m(a, b) += u(a, i) * v(b, i);
      CHECK(rref(m).pivots.size() == r);
    }
}

TEST_CASE("nullspace") {
  CHECK(nullspace_basis(QMatrix::identity(3)).empty());
  CHECK(nullspace_basis(QMatrix(2, 3)).size() == 3);
  QMatrix m{{1, 1, 0}};
  auto ns = nullspace_basis(m);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) CHECK(is_zero(m * v));
  CHECK(span_dim(ns, 3) == 2);

  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    QMatrix a = rng.matrix(3, 5, 3);
    auto b = nullspace_basis(a);
    CHECK(b.size() + rank(a) == 5);
    for (const auto& v : b) CHECK(is_zero(a * v));
  }
}

TEST_CASE("quotient basis") {
  auto e = [](std::size_t i, std::size_t n = 2) { return unit_vector(n, i); };
  auto q = quotient_basis({e(0), e(1)}, {e(0)});
  REQUIRE(q.size() == 1);
  CHECK(span_dim({e(0), q[0]}, 2) == 2);
  CHECK(quotient_basis({e(0), e(1)}, {e(0), e(1)}).empty());
  CHECK_THROWS_AS(quotient_basis({e(0)}, {e(1)}), InvariantError);

  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix p = rng.invertible(4);
    std::vector<QVector> ambient, sub{p.column(0) + p.column(1), p.column(2)};
    for (std::size_t i = 0; i < 4; ++i) ambient.push_back(p.column(i));
    auto reps = quotient_basis(ambient, sub);
    CHECK(reps.size() == 2);
    auto all = sub;
    all.insert(all.end(), reps.begin(), reps.end());
    CHECK(span_dim(all, 4) == 4);
  }
}

TEST_CASE("span intersection") {
  std::vector<QVector> a{{1, 0, 0}, {0, 1, 0}}, b{{0, 1, 0}, {0, 0, 1}};
  auto c = intersect_spans(a, b, 3);
  REQUIRE(c.size() == 1);
  CHECK(span_contains(c, {{0, 1, 0}}, 3));
}

TEST_CASE("characteristic polynomial") {
  CHECK(char_poly(QMatrix(3, 3)) == std::vector<Rational>{0, 0, 0, 1});
  CHECK(char_poly(QMatrix::diagonal({1, 2})) == std::vector<Rational>{2, -3, 1});
  // companion matrix of x^3 - 2x + 5
  QMatrix comp{{0, 0, -5}, {1, 0, 2}, {0, 1, 0}};
  CHECK(char_poly(comp) == std::vector<Rational>{5, -2, 0, 1});

  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix m = rng.matrix(3, 3);
    auto c = char_poly(m);
    CHECK(c[0] == -det(m));
    CHECK(c[2] == -m.trace());
    QMatrix p = rng.invertible(3);
    CHECK(char_poly(inverse(p) * m * p) == c);
  }
}

TEST_CASE("nilpotency, inverse, roots") {
  CHECK(is_nilpotent(QMatrix{{0, 1, 2}, {0, 0, 3}, {0, 0, 0}}));
  CHECK_FALSE(is_nilpotent(QMatrix::identity(3)));
  QMatrix m{{2, 1}, {1, 1}};
  CHECK(m * inverse(m) == QMatrix::identity(2));
  CHECK_FALSE(is_invertible(QMatrix{{1, 2}, {2, 4}}));
  // (x - 1/2)(x + 3)(x - 3) = x^3 - x^2/2 - 9x + 9/2
  CHECK(rational_roots({Rational(9, 2), -9, Rational(-1, 2), 1}) == std::vector<Rational>{-3, Rational(1, 2), 3});
  CHECK(rational_roots({1, 0, 1}).empty());
  CHECK(matrix_power(QMatrix{{1, 1}, {0, 1}}, 5) == QMatrix{{1, 5}, {0, 1}});
  auto x = solve(m, {3, 2});
  REQUIRE(x);
  CHECK(m * *x == QVector{3, 2});
  CHECK_FALSE(solve(QMatrix{{1, 1}, {1, 1}}, {0, 1}).has_value());
}
