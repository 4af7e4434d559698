#pragma once

#include "lsa/qmatrix.hpp"

#include <cstdint>
#include <random>

namespace lsa {

/// Seeded sampler; every randomized check draws from one of these.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi);
  double uniform(double lo, double hi);
  /// p/q with |p| <= height, 1 <= q <= height.
  Rational rational(long height = 5);
  Rational nonzero_rational(long height = 5);
  QVector vector(std::size_t n, long height = 5);
  QMatrix matrix(std::size_t rows, std::size_t cols, long height = 5);
  /// Random invertible matrix with small entries (rejection sampling).
  QMatrix invertible(std::size_t n, long height = 3);

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace lsa
