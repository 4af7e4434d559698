#include "lsa/catalog.hpp"
#include "lsa/completeness.hpp"
#include "lsa/error.hpp"
#include "lsa/identities.hpp"
#include "lsa/ideals.hpp"
#include "lsa/lie.hpp"
#include "lsa/linalg.hpp"

#include <doctest.h>

using namespace lsa;

namespace {

QVector e(std::size_t i, std::size_t n = 3) { return unit_vector(n, i - 1); }

Algebra entry(const std::string& name) { return catalog_entry(name).algebra(catalog_entry(name).defaults.empty() ? 0 : catalog_entry(name).defaults[0]); }

Algebra random_algebra(Rng& rng, std::size_t n, long height = 2) {
  Algebra a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (rng.integer(0, 2) == 0) a.c(i, j, k) = rng.integer(-height, height);
  return a;
}

// (xy)z - x(yz) - (yx)z + y(xz) on explicit vectors
QVector ls_defect(const Algebra& a, const QVector& x, const QVector& y, const QVector& z) {
  return multiply(a, multiply(a, x, y), z) - multiply(a, x, multiply(a, y, z)) - multiply(a, multiply(a, y, x), z) +
         multiply(a, y, multiply(a, x, z));
}

}  // namespace

TEST_CASE("multiply") {
  CHECK(multiply(entry("N30"), e(1), e(2)) == e(2));
  CHECK(multiply(entry("N30"), zero_vector(3), e(2)) == zero_vector(3));
  CHECK(multiply(d32_table_row(), e(2), e(2)) == e(1));
  // bilinearity
  Algebra a = entry("E31zeta");
  QVector x{1, 2, 3}, y{-1, 0, Rational(1, 2)};
  QVector expect = zero_vector(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) axpy(expect, x[i] * y[j], a.product(i, j));
  CHECK(multiply(a, x, y) == expect);
}

TEST_CASE("left and right multiplication") {
  CHECK(left_mult(entry("B30"), e(1)) == QMatrix::diagonal({0, 1, 1}));
  CHECK(right_mult(Algebra(3), e(2)).is_zero());
  QMatrix r3 = right_mult(fixture("A1inv"), e(3));
  CHECK(r3.apply(e(1)) == -e(3));
  CHECK(r3.apply(e(2)) == e(1));
  CHECK(r3.apply(e(3)) == zero_vector(3));
}

TEST_CASE("left-symmetry") {
  for (const auto& en : catalog_lsas()) CHECK_MESSAGE(is_left_symmetric(en.algebra(en.defaults.empty() ? 0 : en.defaults[0])), en.name);
  CHECK(is_left_symmetric(Algebra(3)));

  // e1e1 = e2, e2e1 = e1: at (x, y, z) = (e1, e2, e1) the left side (e1e2)e1 - e1(e2e1) = -e2
  // while (e2e1)e1 - e2(e1e1) = e2.
  Algebra a = make_algebra(2, {{1, 1, {0, 1}}, {2, 1, {1, 0}}});
  Verdict v = check_left_symmetric(a);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->lhs != v.witness->rhs);
  CHECK(ls_defect(a, e(1, 2), e(2, 2), e(1, 2)) == QVector{0, -2});

  Verdict bad = check_left_symmetric(d32_table_row());
  CHECK_FALSE(bad.holds);
}

TEST_CASE("left-symmetry agrees with evaluation on random vectors") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Algebra a = random_algebra(rng, 2, 1);
    bool basis = is_left_symmetric(a);
    bool sampled = true;
    for (int s = 0; s < 6 && sampled; ++s)
      sampled = is_zero(ls_defect(a, rng.vector(2, 7), rng.vector(2, 7), rng.vector(2, 7)));
    CHECK(basis == sampled);
  }
}

TEST_CASE("Novikov check agrees with the right-multiplication criterion on random algebras") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    Algebra a = random_algebra(rng, trial % 2 ? 3 : 2, 1);
    bool commuting = true;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        commuting = commuting && commutator(right_mult(a, unit_vector(a.dim(), i)), right_mult(a, unit_vector(a.dim(), j))).is_zero();
    CHECK_NOTHROW(check_novikov(a));
    CHECK(is_novikov(a) == commuting);
  }
}

TEST_CASE("Lie algebra of an LSA") {
  Algebra l = lie_algebra_of(entry("N31"));
  CHECK(l.product(0, 1) == e(2));
  CHECK(l.product(1, 0) == -e(2));
  CHECK(l.product(0, 2) == zero_vector(3));
  CHECK(l.product(1, 2) == zero_vector(3));

  Algebra comm = make_algebra(2, {{1, 1, {0, 1}}, {1, 2, {1, 0}}, {2, 1, {1, 0}}});
  CHECK(lie_algebra_of(comm).is_zero_product());

  Algebra e31 = lie_algebra_of(entry("E31zeta"));
  CHECK(e31.product(0, 1) == QVector{0, 1, 1});
  CHECK(e31.product(0, 2) == QVector{0, -1, 1});
  CHECK(e31.product(1, 2) == zero_vector(3));
}

TEST_CASE("completeness") {
  for (const auto& en : catalog_lsas())
    for (const auto& p : en.parametrized() ? en.defaults : std::vector<Rational>{0}) CHECK_MESSAGE(is_complete(en.algebra(p)), en.name);
  CHECK(is_complete(Algebra(3)));
  Algebra idem = make_algebra(1, {{1, 1, {1}}});
  CHECK_FALSE(is_complete(idem));
  CHECK(completeness_witness(idem) == QVector{1});
  // the table row D32 has R_e2 with eigenvalues +-1
  CHECK_FALSE(is_complete(d32_table_row()));
  CHECK(is_nilpotent(right_mult(entry("B30"), e(2))));
}

TEST_CASE("identities and completeness are basis independent") {
  Rng rng(99);
  for (const auto& en : catalog_lsas()) {
    Algebra a = en.algebra(en.parametrized() ? en.sample_param(rng) : 0);
    bool n = is_novikov(a), d = is_derivation_algebra(a), s = satisfies_S(a);
    for (int trial = 0; trial < 10; ++trial) {
      Algebra b = change_basis(a, rng.invertible(3));
      CHECK(is_left_symmetric(b));
      CHECK(is_complete(b));
      CHECK(is_novikov(b) == n);
      CHECK(is_derivation_algebra(b) == d);
      CHECK(satisfies_S(b) == s);
    }
  }
}

TEST_CASE("flags on specific rows") {
  Algebra n30 = entry("N30");
  CHECK(is_novikov(n30));
  CHECK(is_derivation_algebra(n30));
  CHECK(satisfies_S(n30));
  CHECK(is_derivation_algebra(entry("B31")));
  Algebra z(2);
  CHECK((is_novikov(z) && is_derivation_algebra(z) && satisfies_S(z)));
}

TEST_CASE("center") {
  CHECK(center(Algebra(2)).dim() == 2);
  Subspace c = center(entry("N30"));
  REQUIRE(c.dim() == 1);
  CHECK(c.contains(e(3)));
  CHECK(center(entry("B30")).dim() == 0);
}

TEST_CASE("two-sided ideals") {
  Algebra n30 = entry("N30");
  CHECK(is_two_sided_ideal(n30, make_subspace(3, {e(2), e(3)})));
  CHECK(is_two_sided_ideal(n30, make_subspace(3, {e(1), e(2), e(3)})));
  CHECK_FALSE(is_two_sided_ideal(entry("B30"), make_subspace(3, {e(1)})));

  auto ideals = find_ideals_dim_le3(n30);
  auto has = [&](const std::vector<QVector>& vs) {
    Subspace w = make_subspace(3, vs);
    for (const auto& i : ideals)
      if (i.dim() == w.dim() && span_contains(i.basis, w.basis, 3)) return true;
    return false;
  };
  CHECK(has({e(2)}));
  CHECK(has({e(3)}));
  CHECK(has({e(2), e(3)}));

  auto zero_lines = find_ideals_dim_le3(Algebra(2));
  CHECK(zero_lines.size() >= 2);
  for (const auto& w : zero_lines) CHECK(w.basis == make_subspace(2, w.basis).basis);

  Rng rng(8);
  for (const auto& en : catalog_lsas()) {
    Algebra a = en.algebra(en.parametrized() ? en.sample_param(rng) : 0);
    auto found = find_ideals_dim_le3(a);
    CHECK_MESSAGE(!found.empty(), en.name);
    for (const auto& w : found) {
      CHECK((w.dim() >= 1 && w.dim() <= 2));
      for (std::size_t i = 0; i < 3; ++i)
        for (const auto& v : w.basis) {
          CHECK(w.contains(multiply(a, e(i + 1), v)));
          CHECK(w.contains(multiply(a, v, e(i + 1))));
        }
    }
  }
}

TEST_CASE("restriction and quotient") {
  Algebra b30 = entry("B30");
  Subspace w = make_subspace(3, {e(2), e(3)});
  Algebra r = restriction(b30, w);
  CHECK(r.dim() == 2);
  CHECK(r.is_zero_product());
  Algebra q = quotient(b30, w);
  CHECK(q.dim() == 1);
  CHECK(q.is_zero_product());

  Algebra n31 = entry("N31");
  Algebra q3 = quotient(n31, make_subspace(3, {e(3)}));
  CHECK(q3.product(0, 1) == QVector{0, 1});
  CHECK(q3.product(0, 0) == QVector{0, 0});
}

TEST_CASE("unimodular and solvable") {
  Algebra l = lie_algebra_of(fixture("A1inv"));
  CHECK(is_unimodular(l));
  CHECK(is_zero(trace_form(l)));
  Algebra g32 = catalog_lie_algebras()[1].build(0);
  CHECK_FALSE(is_unimodular(g32));
  CHECK(trace_form(g32) == QVector{2, 0, 0});
  CHECK(is_solvable(g32));
  CHECK(is_unimodular(Algebra(3)));
  CHECK(is_solvable(Algebra(3)));
  CHECK_THROWS_AS(require_lie(entry("N31")), InputError);
}

TEST_CASE("Milnor normal form") {
  const auto& lies = catalog_lie_algebras();
  CHECK(milnor_normal_form(lies[0].build(0)).detD == 0);
  MilnorForm g32 = milnor_normal_form(lies[1].build(0));
  CHECK(g32.detD == 1);
  CHECK(g32.D == QMatrix::identity(2));
  CHECK(milnor_normal_form(lies[4].build(2)).detD == 5);
  CHECK_THROWS_AS(milnor_normal_form(lie_algebra_of(fixture("A1inv"))), NotInScopeError);
  CHECK_THROWS_AS(milnor_normal_form(Algebra(2)), NotInScopeError);
  // D has trace 2 after normalization
  for (const auto& f : lies) {
    MilnorForm m = milnor_normal_form(f.build(f.defaults.empty() ? 0 : f.defaults[0]));
    CHECK(m.D.trace() == 2);
    CHECK(det(m.D) == m.detD);
  }
}

TEST_CASE("Lie algebra identification") {
  LieTag d31 = identify_lie_algebra(lie_algebra_of(catalog_entry("D31mu").algebra(Rational(1, 2))));
  CHECK(d31.kind == LieTag::Kind::G34);
  REQUIRE(d31.exact_param);
  CHECK(*d31.exact_param == Rational(1, 2));
  // 4 mu / (1 + mu)^2 at mu = 1/2
  CHECK(canonical_detD(LieTag::Kind::G34, Rational(1, 2)) == Rational(8, 9));
  CHECK(identify_lie_algebra(lie_algebra_of(entry("C31"))).kind == LieTag::Kind::G33);

  Rng rng(404);
  Algebra g32 = catalog_lie_algebras()[1].build(0);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(identify_lie_algebra(change_basis(g32, rng.invertible(3))).kind == LieTag::Kind::G32);

  // mu and 1/mu are the same algebra
  LieTag inv = identify_lie_algebra(catalog_lie_algebras()[3].build(Rational(-1, 2)));
  CHECK(inv.kind == LieTag::Kind::G34);
  CHECK(*inv.exact_param == Rational(-1, 2));

  LieTag z = identify_lie_algebra(catalog_lie_algebras()[4].build(Rational(3, 2)));
  CHECK(z.kind == LieTag::Kind::G35);
  CHECK(z.exact_param == Rational(3, 2));
  LieTag irr = identify_lie_algebra(catalog_lie_algebras()[4].build(Rational(1, 3)));
  CHECK(irr.kind == LieTag::Kind::G35);
  CHECK(std::abs(irr.param - 1.0 / 3) < 1e-12);
}

TEST_CASE("completeness grid") {
  CHECK(grid_size(3) == 64);
  CHECK(grid_point(3, 0) == QVector{0, 0, 0});
  CHECK(grid_point(3, 63) == QVector{3, 3, 3});
  Algebra a = entry("N31");
  CHECK(generic_rank(a, left_mult) == 2);
  CHECK(generic_rank(a, right_mult) == 1);
}
