#include "lsa/affine_harness.hpp"
#include "lsa/catalog.hpp"
#include "lsa/completeness.hpp"
#include "lsa/verify.hpp"

#include <doctest.h>
#include <omp.h>

using namespace lsa;

TEST_CASE("completeness kernels match the serial reference") {
  Rng rng(55);
  std::vector<Algebra> algebras;
  for (const auto& en : catalog_lsas()) algebras.push_back(change_basis(en.algebra(en.parametrized() ? en.sample_param(rng) : 0), rng.invertible(3)));
  for (int i = 0; i < 20; ++i) {
    Algebra a(3);
    for (std::size_t p = 0; p < 27; ++p)
      if (rng.integer(0, 3) == 0) a.c(p / 9, (p / 3) % 3, p % 3) = rng.integer(-1, 1);
    algebras.push_back(a);
  }
  for (int threads : {1, 3}) {
    omp_set_num_threads(threads);
    for (const auto& a : algebras) {
      CHECK(is_complete(a) == serial::is_complete(a));
      CHECK(completeness_witness(a) == serial::completeness_witness(a));
      CHECK(generic_rank(a, left_mult) == serial::generic_rank(a, left_mult));
      CHECK(generic_rank(a, right_mult) == serial::generic_rank(a, right_mult));
    }
  }
}

TEST_CASE("affine kernels match the serial reference") {
  Rng rng(8);
  auto pairs = closure_samples(rng, 30);
  for (int threads : {1, 3}) {
    omp_set_num_threads(threads);
    for (const auto& f : group_families()) {
      CHECK(jacobian_min_abs_det(f, GridSpec{}) == serial::jacobian_min_abs_det(f, GridSpec{}));
      CHECK(injectivity_min_distance(f, GridSpec{}) == serial::injectivity_min_distance(f, GridSpec{}));
      ClosureReport p = check_closure(f, pairs), s = serial::check_closure(f, pairs);
      CHECK(p.max_residual == s.max_residual);
      CHECK(p.worst == s.worst);
      CHECK(p.newton_failures == s.newton_failures);
    }
  }
}

TEST_CASE("suite reports do not depend on the thread count") {
  omp_set_num_threads(1);
  std::string c1 = to_json(verify_catalog({7, 3})).dump(), a1 = to_json(verify_affine(7, 10)).dump();
  omp_set_num_threads(4);
  CHECK(to_json(verify_catalog({7, 3})).dump() == c1);
  CHECK(to_json(verify_affine(7, 10)).dump() == a1);
}
