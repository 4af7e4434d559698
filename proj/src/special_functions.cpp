#include "lsa/special_functions.hpp"

#include <cmath>

namespace lsa {

namespace {

constexpr double kTermCutoff = 1e-18;

template <class Next>
double sum_series(double first, Next next, int start) {
  double sum = 0.0, term = first;
  for (int n = start; n < start + 400; ++n) {
    sum += term;
    if (std::abs(term) < kTermCutoff) break;
    term = next(term, n);
  }
  return sum;
}

}  // namespace

namespace series {

double f(double x) {
  return sum_series(1.0, [x](double t, int n) { return t * x / (n + 2); }, 0);
}

double g(double x) {
  return sum_series(0.5, [x](double t, int n) { return t * x / (n + 3); }, 0);
}

double h(double x) {
  // sum_{n>=2} (-1)^n x^(2n-1) / (2n)!
  double x2 = x * x;
  return sum_series(x * x2 / 24.0, [x2](double t, int n) { return -t * x2 / ((2.0 * n + 1) * (2.0 * n + 2)); }, 2);
}

double k(double x) {
  // sum_{n>=1} (-1)^n x^(2n) / (2n+1)!
  double x2 = x * x;
  return sum_series(-x2 / 6.0, [x2](double t, int n) { return -t * x2 / ((2.0 * n + 2) * (2.0 * n + 3)); }, 1);
}

double phi(double x) {
  // n a_n with a_n = x^n / (n+1)!
  double sum = 0.0, a = x / 2.0;
  for (int n = 1; n < 400; ++n) {
    double term = n * a;
    sum += term;
    if (std::abs(term) < kTermCutoff) break;
    a *= x / (n + 2);
  }
  return sum;
}

}  // namespace series

namespace closed {

double f(double x) { return std::expm1(x) / x; }
double g(double x) { return (std::expm1(x) - x) / (x * x); }
double h(double x) {
  double s = std::sin(x / 2);
  return -2.0 * s * s / x + x / 2;
}
double k(double x) { return std::sin(x) / x - 1.0; }
double phi(double x) { return std::exp(x) - std::expm1(x) / x; }

}  // namespace closed

double special_f(double x) { return std::abs(x) < kSeriesThreshold ? series::f(x) : closed::f(x); }
double special_g(double x) { return std::abs(x) < kSeriesThreshold ? series::g(x) : closed::g(x); }
double special_h(double x) { return std::abs(x) < kSeriesThreshold ? series::h(x) : closed::h(x); }
double special_k(double x) { return std::abs(x) < kSeriesThreshold ? series::k(x) : closed::k(x); }
double special_phi(double x) { return std::abs(x) < kSeriesThreshold ? series::phi(x) : closed::phi(x); }

}  // namespace lsa
