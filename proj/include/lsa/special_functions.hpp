#pragma once

namespace lsa {

/// Below this |x| the series branch is used.
inline constexpr double kSeriesThreshold = 0.25;

double special_f(double x);    // (e^x - 1) / x
double special_g(double x);    // (e^x - x - 1) / x^2
double special_h(double x);    // (cos x - 1) / x + x / 2
double special_k(double x);    // (sin x - x) / x
double special_phi(double x);  // sum n x^n / (n+1)!  =  ((x - 1) e^x + 1) / x

namespace series {
// Power series, truncated once |term| < 1e-18.
double f(double x);
double g(double x);
double h(double x);
double k(double x);
double phi(double x);
}  // namespace series

namespace closed {
// Closed forms; undefined at 0.
double f(double x);
double g(double x);
double h(double x);
double k(double x);
double phi(double x);
}  // namespace closed

}  // namespace lsa
