#include "lsa/random.hpp"

#include "lsa/linalg.hpp"

namespace lsa {

// Uniform draws from raw 64-bit output, so sequences do not depend on the
// standard library's distribution implementations.
long Rng::integer(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(gen_() % span);
}

double Rng::uniform(double lo, double hi) {
  double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Rational Rng::rational(long height) {
  Rational q(integer(-height, height), integer(1, height));
  q.canonicalize();
  return q;
}

Rational Rng::nonzero_rational(long height) {
  Rational q;
  do q = rational(height);
  while (q == 0);
  return q;
}

QVector Rng::vector(std::size_t n, long height) {
  QVector v(n);
  for (auto& x : v) x = rational(height);
  return v;
}

QMatrix Rng::matrix(std::size_t rows, std::size_t cols, long height) {
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(height);
  return m;
}

QMatrix Rng::invertible(std::size_t n, long height) {
  for (;;) {
    QMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = integer(-height, height);
    if (det(m) != 0) return m;
  }
}

}  // namespace lsa
