// One line per acceptance criterion; exit status is nonzero if any criterion fails.
#include "lsa/affine_harness.hpp"
#include "lsa/catalog.hpp"
#include "lsa/completeness.hpp"
#include "lsa/extensions.hpp"
#include "lsa/identities.hpp"
#include "lsa/ideals.hpp"
#include "lsa/lie.hpp"
#include "lsa/linalg.hpp"
#include "lsa/reconstruction.hpp"
#include "lsa/special_functions.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fmt/format.h>
#include <functional>
#include <set>
#include <string>

using namespace lsa;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail.clear();
    if (!detail.empty()) detail += "; ";
    detail += why;
    pass = false;
  }
};

// defaults plus five seeded samples for parametrized entries
std::vector<Rational> params_for(const CatalogEntry& en, Rng& rng) {
  if (!en.parametrized()) return {0};
  std::vector<Rational> ps = en.defaults;
  for (int i = 0; i < 5; ++i) ps.push_back(en.sample_param(rng));
  return ps;
}

std::string label(const CatalogEntry& en, const Rational& p) {
  return en.parametrized() ? fmt::format("{}({}={})", en.name, en.param_name, to_string(p)) : en.name;
}

Outcome classification() {
  Outcome o;
  Rng rng(kSeed);
  std::size_t n = 0;
  for (const auto& en : catalog_lsas())
    for (const auto& p : params_for(en, rng)) {
      Algebra a = en.algebra(p);
      ++n;
      if (!is_left_symmetric(a)) o.fail(label(en, p) + " not left-symmetric");
      if (!is_complete(a)) o.fail(label(en, p) + " not complete");
      LieTag got = identify_lie_algebra(lie_algebra_of(a)), want = en.claimed_tag(p);
      if (!same_tag(got, want)) o.fail(fmt::format("{}: {} vs table {}", label(en, p), to_string(got), to_string(want)));
    }
  if (o.pass) o.detail = fmt::format("{} algebras: left-symmetric, complete, Lie algebra as tabulated", n);
  return o;
}

using Identity = std::function<std::pair<QVector, QVector>(const Algebra&, const QVector&, const QVector&, const QVector&)>;

Outcome flags_audit() {
  const std::array<std::pair<const char*, Identity>, 3> ids{{
      {"N", [](const Algebra& a, const QVector& x, const QVector& y, const QVector& z) {
         return std::pair{multiply(a, multiply(a, x, y), z), multiply(a, multiply(a, x, z), y)};
       }},
      {"D", [](const Algebra& a, const QVector& x, const QVector& y, const QVector& z) {
         return std::pair{multiply(a, multiply(a, x, y), z), multiply(a, multiply(a, z, y), x)};
       }},
      {"S", [](const Algebra& a, const QVector& x, const QVector& y, const QVector& z) {
         return std::pair{multiply(a, multiply(a, x, y) - multiply(a, y, x), z), zero_vector(a.dim())};
       }},
  }};
  Outcome o;
  Rng rng(kSeed);
  std::vector<std::string> mismatches;
  std::size_t flags = 0;
  for (const auto& en : catalog_lsas())
    for (const auto& p : params_for(en, rng)) {
      Algebra a = en.algebra(p);
      std::array<Verdict, 3> v{check_novikov(a), check_derivation(a), check_S(a)};
      std::array<bool, 3> claimed{en.claimed_flags.N, en.claimed_flags.D, en.claimed_flags.S};
      for (std::size_t f = 0; f < 3; ++f) {
        ++flags;
        const auto& [name, id] = ids[f];
        if (v[f].holds) {
          if (v[f].triples_checked != 27) o.fail(fmt::format("{} {}: only {} triples", label(en, p), name, v[f].triples_checked));
        } else if (!v[f].witness) {
          o.fail(fmt::format("{} {}: failure without witness", label(en, p), name));
        } else {
          const auto& w = *v[f].witness;
          auto [lhs, rhs] = id(a, unit_vector(3, w.i), unit_vector(3, w.j), unit_vector(3, w.k));
          if (lhs == rhs) o.fail(fmt::format("{} {}: witness {} does not refute", label(en, p), name, to_string(w)));
        }
        if (v[f].holds != claimed[f]) mismatches.push_back(fmt::format("{} {}", label(en, p), name));
      }
    }
  if (o.pass)
    o.detail = fmt::format("{} flags backed by basis triples; {} disagree with the table{}", flags, mismatches.size(),
                           mismatches.empty() ? "" : ": " + mismatches.front());
  return o;
}

Outcome cohomology() {
  Outcome o;
  Rng rng(kSeed);
  std::vector<std::pair<Algebra, BimoduleAction>> acts;
  for (const auto& en : catalog_lsas()) {
    Algebra k = change_basis(en.algebra(en.parametrized() ? en.sample_param(rng) : 0), rng.invertible(3));
    BimoduleAction reg = BimoduleAction::zero(3, 3), left = BimoduleAction::zero(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      reg.lambda[i] = left.lambda[i] = left_mult(k, unit_vector(3, i));
      reg.rho[i] = right_mult(k, unit_vector(3, i));
    }
    acts.emplace_back(k, reg);
    acts.emplace_back(k, left);
  }
  BimoduleAction c1 = BimoduleAction::zero(2, 1);
  c1.lambda[0] = QMatrix{{Rational(3, 2)}};
  acts.emplace_back(fixture("R2zero"), c1);
  acts.emplace_back(fixture("N2"), BimoduleAction::zero(2, 1));
  for (std::size_t i = 0; i < 100; ++i) {
    const auto& [k, act] = acts[i % acts.size()];
    for (const auto& v : delta2(act, k, delta1(act, k, rng.matrix(act.V_dim, k.dim()))))
      if (!is_zero(v)) {
        o.fail(fmt::format("delta2(delta1 h) != 0 in instance {}", i));
        break;
      }
  }
  H2Result h = h2(BimoduleAction::zero(2, 1), fixture("N2"));
  Cocycle2 e11 = Cocycle2::from_scalar_matrix(QMatrix{{1, 0}, {0, 0}}), e12 = Cocycle2::from_scalar_matrix(QMatrix{{0, 1}, {0, 0}});
  std::vector<QVector> z;
  for (const auto& g : h.Z) z.push_back(g.flatten());
  if (h.dim != 1) o.fail(fmt::format("dim H2(N2) = {}", h.dim));
  if (!(h.B.size() == 1 && span_contains({e12.flatten()}, {h.B[0].flatten()}, 4)))
    o.fail("B2(N2) is not span{(0 h12; 0 0)}");
  if (!(z.size() == 2 && span_contains(z, {e11.flatten(), e12.flatten()}, 4)))
    o.fail("Z2(N2) is not span{(g11 0; 0 0)} + B2");
  if (o.pass)
    o.detail = "100 instances of delta2(delta1 h) = 0; H2(N2, R0): dim 1, class (g11 0; 0 0), B2 = (0 h12; 0 0)";
  return o;
}

Outcome round_trips() {
  Outcome o;
  Rng rng(kSeed);
  auto recs = reconstructions(rng, 5);
  std::set<std::string> hit;
  for (const auto& r : recs) {
    ReconstructionResult res = check_reconstruction(r);
    if (!res.built || !res.iso) o.fail(r.label + ": " + res.detail);
    else hit.insert(r.target);
  }
  for (const char* t : {"N31", "N32", "N33", "B30", "B31", "C31", "C3t", "D31mu", "D32", "E31zeta"})
    if (!hit.count(t)) o.fail(std::string("no verified reconstruction of ") + t);
  if (o.pass) o.detail = fmt::format("{} extensions rebuilt, witnesses verified, all 10 targets reached", recs.size());
  return o;
}

Outcome propagation() {
  Outcome o;
  Rng rng(kSeed);
  std::size_t ideals = 0;
  for (const auto& en : catalog_lsas())
    for (const auto& p : params_for(en, rng)) {
      Algebra a = en.algebra(p);
      for (const auto& w : find_ideals_dim_le3(a)) {
        ++ideals;
        if (!is_complete(restriction(a, w))) o.fail(label(en, p) + ": restriction to an ideal not complete");
        if (!is_complete(quotient(a, w))) o.fail(label(en, p) + ": quotient not complete");
      }
    }
  if (o.pass) o.detail = fmt::format("{} (algebra, ideal) pairs: restriction and quotient complete", ideals);
  return o;
}

Outcome non_simplicity() {
  Outcome o;
  Rng rng(kSeed);
  for (const auto& en : catalog_lsas())
    for (const auto& p : params_for(en, rng))
      if (find_ideals_dim_le3(en.algebra(p)).empty()) o.fail(label(en, p) + ": no ideal found");
  Algebra l = lie_algebra_of(fixture("A1inv"));
  if (!is_zero(trace_form(l))) o.fail("Lie algebra of A1inv not unimodular");
  if (o.pass) o.detail = "every entry has a proper ideal; tr ad = 0 on the Lie algebra of A1inv";
  return o;
}

Outcome milnor() {
  Outcome o;
  Rng rng(kSeed);
  std::size_t conj = 0;
  for (const auto& f : catalog_lie_algebras()) {
    std::vector<Rational> ps = f.param_name.empty() ? std::vector<Rational>{0} : f.defaults;
    if (f.param_name == "mu") ps.push_back(Rational(-3, 7));
    if (f.param_name == "zeta") ps.push_back(Rational(5, 2));
    for (const auto& p : ps) {
      Algebra l = f.build(p);
      LieTag base = identify_lie_algebra(l);
      Rational want = canonical_detD(f.kind, p);
      if (base.kind != f.kind) o.fail(fmt::format("{}: tagged {}", f.name, to_string(base)));
      if (milnor_normal_form(l).detD != want) o.fail(fmt::format("{}: det D = {} vs {}", f.name, to_string(milnor_normal_form(l).detD), to_string(want)));
      for (int i = 0; i < 100; ++i) {
        Algebra c = change_basis(l, rng.invertible(3));
        ++conj;
        if (!same_tag(identify_lie_algebra(c), base) || milnor_normal_form(c).detD != want) {
          o.fail(fmt::format("{}: unstable under a basis change", f.name));
          break;
        }
      }
    }
  }
  if (o.pass) o.detail = fmt::format("{} random conjugates keep their tag; det D exact (0, 1, 1, 4mu/(1+mu)^2, 1+zeta^2)", conj);
  return o;
}

Outcome affine() {
  Outcome o;
  AffineReport r = verify_affine(kSeed, 50);
  std::size_t ok = 0;
  for (const auto& f : r.families) {
    if (f.pass()) {
      ++ok;
      continue;
    }
    o.fail(fmt::format("{}: closure {:.2e}, {} Newton failures, tangent structure error {:.2e}", f.family,
                       f.closure.max_residual, f.closure.newton_failures + f.transitivity.newton_failures,
                       f.tangent.structure_error));
  }
  double worst = 0;
  for (const auto& f : r.families)
    if (f.pass()) worst = std::max(worst, f.closure.max_residual);
  std::string summary = fmt::format("{}/{} families pass (max passing closure residual {:.1e})", ok, r.families.size(), worst);
  for (const auto& s : r.supplementary) summary += fmt::format("; diagnostic {} {}", s.family, s.pass() ? "passes" : "fails");
  o.detail = o.pass ? summary : summary + "; " + o.detail;
  return o;
}

Outcome special() {
  Outcome o;
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    double x = -5 + 10.0 * i / 999;
    worst = std::max({worst, std::abs(series::f(x) - closed::f(x)), std::abs(series::g(x) - closed::g(x)),
                      std::abs(series::h(x) - closed::h(x)), std::abs(series::k(x) - closed::k(x)),
                      std::abs(series::phi(x) - closed::phi(x))});
  }
  if (!(worst < 1e-12)) o.fail(fmt::format("max series/closed difference {:.2e}", worst));
  if (special_f(0) != 1 || special_g(0) != 0.5 || special_h(0) != 0 || special_k(0) != 0 || special_phi(0) != 0)
    o.fail("wrong values at 0");
  if (o.pass) o.detail = fmt::format("max series/closed difference {:.1e} on 1000 points; values at 0 exact", worst);
  return o;
}

std::pair<int, std::string> capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, out};
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {status, out};
}

Outcome determinism() {
  Outcome o;
  std::string cmd = std::string("\"") + LSA_CLI_PATH + "\" catalog-verify --json --seed 7";
  auto [s1, a] = capture(cmd);
  auto [s2, b] = capture(cmd);
  if (s1 != 0 || s2 != 0) o.fail(fmt::format("exit status {} / {}", s1, s2));
  if (a.empty()) o.fail("empty report");
  if (a != b) o.fail("reports differ");
  if (o.pass) o.detail = fmt::format("two runs, {} identical bytes", a.size());
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"classification table", classification},
      {"flags audit", flags_audit},
      {"cohomology identities", cohomology},
      {"extension round-trips", round_trips},
      {"completeness propagation", propagation},
      {"non-simplicity", non_simplicity},
      {"Milnor invariant", milnor},
      {"affine harness", affine},
      {"special functions", special},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("criterion %zu (%s): %s - %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
