#include "lsa/affine_harness.hpp"

#include "lsa/catalog.hpp"
#include "lsa/lie.hpp"

#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <sstream>

namespace lsa {

Vec3 orbit(const GroupFamily& fam, const Vec3& p) { return fam.element(p(0), p(1), p(2)).translation; }

Mat3 orbit_jacobian(const GroupFamily& fam, const Vec3& p) {
  Mat3 j;
  for (int i = 0; i < 3; ++i) {
    Vec3 d = Vec3::Zero();
    d(i) = kDiffStep;
    j.col(i) = (orbit(fam, p + d) - orbit(fam, p - d)) / (2 * kDiffStep);
  }
  return j;
}

NewtonResult invert_orbit(const GroupFamily& fam, const Vec3& target, const Vec3& start) {
  NewtonResult r;
  Vec3 p = start;
  auto resid = [&](const Vec3& q) {
    Vec3 v = orbit(fam, q) - target;
    return std::isfinite(v.sum()) ? v.cwiseAbs().maxCoeff() : std::numeric_limits<double>::infinity();
  };
  double res = resid(p);
  for (int it = 0; it < 100 && res > 0; ++it) {
    r.iterations = it + 1;
    Mat3 j = orbit_jacobian(fam, p);
    Vec3 step = j.fullPivLu().solve(-(orbit(fam, p) - target));
    if (!std::isfinite(step.sum())) break;
    double lam = 1.0, next = res;
    Vec3 q = p;
    while (lam > 1e-6) {
      q = p + lam * step;
      next = resid(q);
      if (next < res) break;
      lam /= 2;
    }
    if (!(next < res)) break;
    p = q;
    res = next;
  }
  r.params = p;
  r.residual = res;
  r.converged = res < kNewtonTol;
  return r;
}

Vec3 initial_guess(const GroupFamily& fam, const AffineMap3& m) {
  const Vec3& t = m.translation;
  if (!fam.affine_in_bc) return t;
  double a = fam.seed_a(m);
  if (!std::isfinite(a)) a = t(0);
  Vec3 base = orbit(fam, Vec3(a, 0, 0));
  Vec3 jb = orbit(fam, Vec3(a, 1, 0)) - base, jc = orbit(fam, Vec3(a, 0, 1)) - base;
  Eigen::Matrix2d j;
  j << jb(1), jc(1), jb(2), jc(2);
  Eigen::Vector2d rhs(t(1) - base(1), t(2) - base(2));
  if (std::abs(j.determinant()) < 1e-300) return Vec3(a, 0, 0);
  Eigen::Vector2d bc = j.inverse() * rhs;
  return Vec3(a, bc(0), bc(1));
}

std::vector<SamplePair> closure_samples(Rng& rng, std::size_t n, double range) {
  std::vector<SamplePair> v;
  auto draw = [&] { return Vec3(rng.uniform(-range, range), rng.uniform(-range, range), rng.uniform(-range, range)); };
  for (std::size_t i = 0; i < n; ++i) {
    Vec3 p = draw();
    v.emplace_back(p, draw());
  }
  return v;
}

namespace {

struct PairOutcome {
  double residual;
  bool converged;
};

PairOutcome close_pair(const GroupFamily& fam, const SamplePair& s) {
  AffineMap3 m = compose(fam.element(s.first(0), s.first(1), s.first(2)),
                         fam.element(s.second(0), s.second(1), s.second(2)));
  NewtonResult nr = invert_orbit(fam, m.translation, initial_guess(fam, m));
  const Vec3& p = nr.params;
  double res = max_abs_diff(fam.element(p(0), p(1), p(2)), m);
  if (!std::isfinite(res)) res = std::numeric_limits<double>::infinity();
  return {res, nr.converged};
}

std::string fmt_vec(const Vec3& v) { return fmt::format("({:.6g}, {:.6g}, {:.6g})", v(0), v(1), v(2)); }

ClosureReport summarize(const std::vector<SamplePair>& pairs, const std::vector<PairOutcome>& out) {
  ClosureReport r;
  r.samples = pairs.size();
  std::size_t worst = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    r.newton_failures += !out[i].converged;
    if (out[i].residual > r.max_residual) {
      r.max_residual = out[i].residual;
      worst = i;
    }
  }
  if (!pairs.empty())
    r.worst = fmt::format("{} * {} -> residual {:.3e}", fmt_vec(pairs[worst].first), fmt_vec(pairs[worst].second),
                          out[worst].residual);
  return r;
}

}  // namespace

ClosureReport check_closure(const GroupFamily& fam, const std::vector<SamplePair>& pairs) {
  std::vector<PairOutcome> out(pairs.size());
  const long n = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = close_pair(fam, pairs[static_cast<std::size_t>(i)]);
  return summarize(pairs, out);
}

std::vector<Vec3> GridSpec::points() const {
  std::vector<double> axis;
  int steps = static_cast<int>(std::lround((hi - lo) / step));
  for (int i = 0; i <= steps; ++i) axis.push_back(lo + i * step);
  std::vector<Vec3> pts;
  for (double a : axis)
    for (double b : axis)
      for (double c : axis) pts.emplace_back(a, b, c);
  return pts;
}

double jacobian_min_abs_det(const GroupFamily& fam, const GridSpec& grid) {
  auto pts = grid.points();
  double best = std::numeric_limits<double>::infinity();
  const long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(static) reduction(min : best)
  for (long i = 0; i < n; ++i) {
    double d = std::abs(orbit_jacobian(fam, pts[static_cast<std::size_t>(i)]).determinant());
    if (!std::isfinite(d)) d = 0.0;
    best = std::min(best, d);
  }
  return best;
}

double injectivity_min_distance(const GroupFamily& fam, const GridSpec& grid) {
  auto pts = grid.points();
  std::vector<Vec3> img(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) img[i] = orbit(fam, pts[i]);
  double best = std::numeric_limits<double>::infinity();
  const long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j)
      best = std::min(best, (img[static_cast<std::size_t>(i)] - img[static_cast<std::size_t>(j)]).cwiseAbs().maxCoeff());
  return best;
}

namespace serial {

double jacobian_min_abs_det(const GroupFamily& fam, const GridSpec& grid) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : grid.points()) {
    double d = std::abs(orbit_jacobian(fam, p).determinant());
    best = std::min(best, std::isfinite(d) ? d : 0.0);
  }
  return best;
}

double injectivity_min_distance(const GroupFamily& fam, const GridSpec& grid) {
  auto pts = grid.points();
  std::vector<Vec3> img;
  for (const auto& p : pts) img.push_back(orbit(fam, p));
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j) best = std::min(best, (img[i] - img[j]).cwiseAbs().maxCoeff());
  return best;
}

ClosureReport check_closure(const GroupFamily& fam, const std::vector<SamplePair>& pairs) {
  std::vector<PairOutcome> out;
  for (const auto& s : pairs) out.push_back(close_pair(fam, s));
  return summarize(pairs, out);
}

}  // namespace serial

TransitivityReport check_simply_transitive(const GroupFamily& fam, const GridSpec& grid, Rng& rng,
                                           std::size_t targets) {
  TransitivityReport r;
  auto pts = grid.points();
  r.jacobian_min_abs_det = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) {
    double d = std::abs(orbit_jacobian(fam, p).determinant());
    if (!std::isfinite(d)) d = 0.0;
    if (d < r.jacobian_min_abs_det) {
      r.jacobian_min_abs_det = d;
      r.jacobian_argmin = p;
    }
  }
  r.injectivity_min_distance = injectivity_min_distance(fam, grid);
  r.targets = targets;
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < targets; ++i) {
    Vec3 t(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3));
    AffineMap3 probe;
    probe.translation = t;
    NewtonResult nr = invert_orbit(fam, t, initial_guess(fam, probe));
    r.max_newton_residual = std::max(r.max_newton_residual, nr.residual);
    if (!nr.converged) {
      ++r.newton_failures;
      if (bad.size() < 3) bad.push_back(fmt::format("target {} residual {:.3e}", fmt_vec(t), nr.residual));
    }
  }
  std::vector<std::string> why;
  if (!(r.jacobian_min_abs_det > kJacobianTol))
    why.push_back(fmt::format("|det J| = {:.3e} at {}", r.jacobian_min_abs_det, fmt_vec(r.jacobian_argmin)));
  if (!(r.injectivity_min_distance > kInjectivityTol))
    why.push_back(fmt::format("grid images within {:.3e}", r.injectivity_min_distance));
  for (const auto& b : bad) why.push_back("Newton failed: " + b);
  r.pass = why.empty();
  for (std::size_t i = 0; i < why.size(); ++i) r.witness += (i ? "; " : "") + why[i];
  if (r.pass)
    r.witness = fmt::format("min |det J| {:.3e} at {}, min image distance {:.3e}, {} targets inverted",
                            r.jacobian_min_abs_det, fmt_vec(r.jacobian_argmin), r.injectivity_min_distance, targets);
  return r;
}

TangentReport check_tangent_algebra(const GroupFamily& fam, const Algebra& a) {
  TangentReport r;
  AffRep rep = affine_rep(a);
  Algebra lie = lie_algebra_of(a);
  std::array<Mat4, 3> x;
  for (int i = 0; i < 3; ++i) {
    Vec3 d = Vec3::Zero();
    d(i) = kDiffStep;
    x[i] = (fam.element(d(0), d(1), d(2)).homogeneous() - fam.element(-d(0), -d(1), -d(2)).homogeneous()) /
           (2 * kDiffStep);
    r.generator_error = std::max(r.generator_error, (x[i] - rep.homogeneous[i]).cwiseAbs().maxCoeff());
  }
  Eigen::Matrix<double, 16, 3> m;
  for (int i = 0; i < 3; ++i) m.col(i) = Eigen::Map<const Eigen::Matrix<double, 16, 1>>(x[i].data());
  auto qr = m.colPivHouseholderQr();
  std::string worst;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      Mat4 c = x[i] * x[j] - x[j] * x[i];
      Eigen::Matrix<double, 16, 1> v = Eigen::Map<const Eigen::Matrix<double, 16, 1>>(c.data());
      Eigen::Vector3d coef = qr.solve(v);
      double res = (m * coef - v).cwiseAbs().maxCoeff();
      r.bracket_residual = std::max(r.bracket_residual, res);
      for (std::size_t k = 0; k < 3; ++k) {
        double err = std::abs(coef(static_cast<int>(k)) - to_double(lie.c(i, j, k)));
        if (err > r.structure_error) {
          r.structure_error = err;
          worst = fmt::format("[X{}, X{}] coefficient of X{}: {:.9g} vs {}", i + 1, j + 1, k + 1,
                              coef(static_cast<int>(k)), to_string(lie.c(i, j, k)));
        }
      }
    }
  r.pass = r.bracket_residual <= kTangentTol && r.structure_error <= kTangentTol && r.generator_error <= kTangentTol;
  r.witness = fmt::format("bracket residual {:.3e}, structure error {:.3e}, generator error {:.3e}", r.bracket_residual,
                          r.structure_error, r.generator_error);
  if (!worst.empty() && r.structure_error > kTangentTol) r.witness += "; worst " + worst;
  return r;
}

bool FamilyReport::pass() const { return failures().empty(); }

std::vector<std::string> FamilyReport::failures() const {
  std::vector<std::string> f;
  if (!(closure.max_residual < kClosureTol)) f.push_back("closure: " + closure.worst);
  if (closure.newton_failures) f.push_back(fmt::format("closure: {} parameter solves did not converge", closure.newton_failures));
  if (!transitivity.pass) f.push_back("transitivity: " + transitivity.witness);
  if (!tangent.pass) f.push_back("tangent: " + tangent.witness);
  return f;
}

FamilyReport verify_family(const GroupFamily& fam, const Algebra& paired, std::uint64_t seed, std::size_t samples) {
  FamilyReport r;
  r.family = fam.name;
  r.entry = fam.entry;
  if (!fam.param_name.empty()) r.param = fam.param_name + "=" + to_string(fam.exact_param);
  Rng rng(seed);
  r.closure = check_closure(fam, closure_samples(rng, samples));
  r.transitivity = check_simply_transitive(fam, GridSpec{}, rng);
  r.tangent = check_tangent_algebra(fam, paired);
  return r;
}

bool AffineReport::pass() const {
  for (const auto& f : families)
    if (!f.pass()) return false;
  return true;
}

AffineReport verify_affine(std::uint64_t seed, std::size_t samples) {
  AffineReport rep;
  auto fams = group_families();
  rep.families.resize(fams.size());
  const long n = static_cast<long>(fams.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    const auto& f = fams[static_cast<std::size_t>(i)];
    Algebra paired = catalog_entry(f.entry).algebra(f.exact_param);
    rep.families[static_cast<std::size_t>(i)] =
        verify_family(f, paired, seed * 1000003u + static_cast<std::uint64_t>(i) + 1, samples);
  }
  Algebra d32 = catalog_entry("D32").algebra();
  rep.supplementary.push_back(verify_family(exp_family(d32, "exp(D32)"), d32, seed * 1000003u + 97, samples));
  return rep;
}

nlohmann::json to_json(const FamilyReport& r) {
  return {{"family", r.family},
          {"entry", r.entry},
          {"param", r.param},
          {"samples", r.closure.samples},
          {"max_closure_residual", r.closure.max_residual},
          {"jacobian_min_abs_det", r.transitivity.jacobian_min_abs_det},
          {"injectivity_min_distance", r.transitivity.injectivity_min_distance},
          {"newton_failures", r.transitivity.newton_failures + r.closure.newton_failures},
          {"max_newton_residual", r.transitivity.max_newton_residual},
          {"tangent_bracket_residual", r.tangent.bracket_residual},
          {"tangent_structure_error", r.tangent.structure_error},
          {"generator_error", r.tangent.generator_error},
          {"pass", r.pass()},
          {"failures", r.failures()}};
}

nlohmann::json to_json(const AffineReport& r) {
  nlohmann::json fams = nlohmann::json::array(), sup = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& f : r.families) {
    fams.push_back(to_json(f));
    failed += !f.pass();
  }
  for (const auto& f : r.supplementary) sup.push_back(to_json(f));
  return {{"families", fams},
          {"supplementary", sup},
          {"summary", {{"families", r.families.size()}, {"failed", failed}, {"pass", r.pass()}}}};
}

std::string to_text(const AffineReport& r) {
  std::ostringstream os;
  auto line = [&](const FamilyReport& f) {
    os << fmt::format("{:<9} {:<8} closure {:.2e}  min|detJ| {:.2e}  newton fails {}  tangent {:.2e}/{:.2e}  {}\n",
                      f.family, f.param.empty() ? "-" : f.param, f.closure.max_residual,
                      f.transitivity.jacobian_min_abs_det, f.transitivity.newton_failures + f.closure.newton_failures,
                      f.tangent.bracket_residual, f.tangent.structure_error, f.pass() ? "PASS" : "FAIL");
    for (const auto& why : f.failures()) os << "    " << why << '\n';
  };
  for (const auto& f : r.families) line(f);
  os << "supplementary (not counted):\n";
  for (const auto& f : r.supplementary) line(f);
  return os.str();
}

}  // namespace lsa
