#include "lsa/reconstruction.hpp"

#include "lsa/catalog.hpp"
#include "lsa/error.hpp"

#include <fmt/format.h>

namespace lsa {

namespace {

QMatrix scalar(const Rational& v) { return QMatrix{{v}}; }

// 1 / sqrt(|t|) when |t| is a rational square, used by the N32 / N33 witnesses.
Rational inv_sqrt_abs(const Rational& t) {
  auto s = exact_sqrt(abs(t));
  if (!s || *s == 0) throw InvariantError("witness needs |t| to be a nonzero rational square");
  return 1 / *s;
}

// Base R^2 (zero product or e2e2 = e1 or N2) extended by R0.
ExtensionData over_plane(const Algebra& k, const Rational& lam1, const QMatrix& g) {
  ExtensionData d{k, fixture("R0"), BimoduleAction::zero(2, 1), Cocycle2::from_scalar_matrix(g)};
  d.action.lambda[0] = scalar(lam1);
  return d;
}

// Base R0 extended by a 2-dimensional V, with e = g(x0, x0).
ExtensionData over_line(const Algebra& v, const QMatrix& lam, const QMatrix& rho, const QVector& e) {
  ExtensionData d{fixture("R0"), v, BimoduleAction::zero(1, 2), Cocycle2::zero(1, 2)};
  d.action.lambda[0] = lam;
  d.action.rho[0] = rho;
  d.g.at(0, 0) = e;
  return d;
}

std::string q(const Rational& r) { return to_string(r); }

Rational square(Rng& rng) {
  Rational s = rng.nonzero_rational(4);
  return s * s;
}

}  // namespace

Reconstruction printed_aff_ideal_witness(const Rational& t, const Rational& b, const Rational& d) {
  Rational c = t == 0 ? Rational(1) : inv_sqrt_abs(t);
  std::string target = t == 0 ? "N30" : (t > 0 ? "N32" : "N33");
  Reconstruction r{fmt::format("R0 by N2 (printed basis change), t={}, b={}, d={}", q(t), q(b), q(d)),
                   target, 0,
                   over_line(fixture("N2"), QMatrix{{0, 0}, {0, d}}, QMatrix{{0, 0}, {-b, 0}}, {t, -b * d}),
                   QMatrix{{0, 0, c}, {1, 0, -d * c}, {0, 1, -b * c}}};
  return r;
}

std::vector<Reconstruction> reconstructions(Rng& rng, std::size_t random_samples) {
  std::vector<Reconstruction> out;
  const Algebra r2 = fixture("R2zero"), a2 = fixture("A2ii"), n2 = fixture("N2");

  // R2zero by R0: lambda_e1 = alpha, g = (0 s; 0 0)  ->  N30
  auto plane_trivial = [&](const Rational& alpha, const Rational& s) {
    QMatrix p = QMatrix{{1 / alpha, 0, 0}, {0, 0, 1}, {0, 1, 0}} * QMatrix{{1, 0, 0}, {0, 1, -s / alpha}, {0, 0, 1}};
    out.push_back({fmt::format("R2zero by R0, lambda_e1={}, g12={}", q(alpha), q(s)), "N30", 0,
                   over_plane(r2, alpha, QMatrix{{0, s}, {0, 0}}), p});
  };
  plane_trivial(1, 0);
  plane_trivial(3, 2);

  // A2ii by R0: lambda_e1 = alpha, g = 0  ->  N32 (alpha > 0) or N33 (alpha < 0)
  auto plane_a2 = [&](const Rational& alpha) {
    Rational c = inv_sqrt_abs(alpha);
    out.push_back({fmt::format("A2ii by R0, lambda_e1={}", q(alpha)), alpha > 0 ? "N32" : "N33", 0,
                   over_plane(a2, alpha, QMatrix{{0, 0}, {0, 0}}), QMatrix{{1 / alpha, 0, 0}, {0, 0, c}, {0, 1, 0}}});
  };
  for (long a : {1, -1, 4}) plane_a2(a);

  // N2 by R0
  auto n3t = [&](const Rational& t) {
    out.push_back({fmt::format("N2 by R0, lambda=0, g11={}", q(t)), "N31", 0,
                   over_plane(n2, 0, QMatrix{{t, 0}, {0, 0}}), QMatrix::diagonal({1, 1, t})});
  };
  auto b3t = [&](const Rational& t) {
    out.push_back({fmt::format("N2 by R0, lambda_e1=1, g12=g21={}", q(t)), t == 0 ? "B30" : "B31", 0,
                   over_plane(n2, 1, QMatrix{{0, t}, {t, 0}}),
                   t == 0 ? QMatrix::identity(3) : QMatrix::diagonal({1, 1, t})});
  };
  auto c3t = [&](const Rational& t) {
    out.push_back({fmt::format("N2 by R0, lambda_e1=1, g12={}, g21={}", q(t), q(t - 1)), t == 1 ? "C31" : "C3t",
                   t == 1 ? Rational(0) : t, over_plane(n2, 1, QMatrix{{0, t}, {t - 1, 0}}), QMatrix::identity(3)});
  };
  auto d31 = [&](const Rational& mu) {
    out.push_back({fmt::format("N2 by R0, lambda_e1={}", q(mu)), "D31mu", mu,
                   over_plane(n2, mu, QMatrix{{0, 0}, {0, 0}}), QMatrix::identity(3)});
  };
  n3t(1);
  n3t(3);
  b3t(0);
  b3t(3);
  c3t(1);
  c3t(2);
  c3t(0);
  d31(Rational(1, 2));
  d31(Rational(-1, 2));

  // R0 by N2: lambda = (0 0; 0 d), rho = (0 0; -b 0), e = (t, -b d)
  auto aff_ideal = [&](const Rational& t, const Rational& b, const Rational& d) {
    Rational c = t == 0 ? Rational(1) : inv_sqrt_abs(t);
    out.push_back({fmt::format("R0 by N2, t={}, b={}, d={}", q(t), q(b), q(d)),
                   t == 0 ? "N30" : (t > 0 ? "N32" : "N33"), 0,
                   over_line(n2, QMatrix{{0, 0}, {0, d}}, QMatrix{{0, 0}, {-b, 0}}, {t, -b * d}),
                   QMatrix{{0, 0, c}, {1, 0, -d * c}, {0, 1, b * c}}});
  };
  for (long t : {1, -1, 0, 4}) aff_ideal(t, Rational(2, 3), Rational(-5, 4));
  aff_ideal(1, 0, 0);

  // R0 by R2zero
  auto line_diag10 = [&](const Rational& s, const Rational& t) {
    out.push_back({fmt::format("R0 by R2zero, lambda=diag(1,0), e=({}, {})", q(s), q(t)), "N31", 0,
                   over_line(r2, QMatrix{{1, 0}, {0, 0}}, QMatrix{{0, 0}, {0, 0}}, {s, t}),
                   QMatrix{{1, 0, 0}, {-s, 1, 0}, {0, 0, t}}});
  };
  auto line_b = [&](const Rational& a) {
    QMatrix p = a == 0 ? QMatrix::identity(3) : QMatrix{{1, 0, 0}, {a * a, 0, a}, {-a, 1, 0}};
    out.push_back({fmt::format("R0 by R2zero, lambda=(1 a; 0 1), rho=(0 a; 0 0), a={}", q(a)), a == 0 ? "B30" : "B31",
                   0, over_line(r2, QMatrix{{1, a}, {0, 1}}, QMatrix{{0, a}, {0, 0}}, {a * a, a}), p});
  };
  auto line_c = [&](const Rational& a) {
    out.push_back({fmt::format("R0 by R2zero, lambda=(1 a+1; 0 1), rho=(0 a; 0 0), a={}", q(a)),
                   a == 0 ? "C31" : "C3t", a == 0 ? Rational(0) : a + 1,
                   over_line(r2, QMatrix{{1, a + 1}, {0, 1}}, QMatrix{{0, a}, {0, 0}}, {a, a}),
                   QMatrix{{1, 0, 0}, {2 * a * a, 0, 1}, {-a, 1, 0}}});
  };
  auto line_mu = [&](const Rational& mu) {
    out.push_back({fmt::format("R0 by R2zero, lambda=diag(1,{})", q(mu)), "D31mu", mu,
                   over_line(r2, QMatrix{{1, 0}, {0, mu}}, QMatrix{{0, 0}, {0, 0}}, {1, mu}),
                   QMatrix{{1, 0, 0}, {-1, 1, 0}, {-1, 0, 1}}});
  };
  auto line_zeta = [&](const Rational& z) {
    out.push_back({fmt::format("R0 by R2zero, lambda=(1 -z; z 1), z={}", q(z)), "E31zeta", z,
                   over_line(r2, QMatrix{{1, -z}, {z, 1}}, QMatrix{{0, 0}, {0, 0}}, {2 * z, z * z - 1}),
                   QMatrix{{1, 0, 0}, {-z, 1, 0}, {1, 0, 1}}});
  };
  auto line_d32 = [&](const Rational& a, const Rational& t) {
    out.push_back({fmt::format("R0 by A2ii, lambda=(1 a; 0 1/2), rho=(0 a; 0 0), e=({}, a/2), a={}", q(t), q(a)),
                   "D32", 0,
                   over_line(a2, QMatrix{{1, a}, {0, Rational(1, 2)}}, QMatrix{{0, a}, {0, 0}}, {t, a / 2}),
                   QMatrix{{1, 0, 0}, {a * a - t, 1, 0}, {-a, 0, 1}}});
  };
  line_diag10(2, 5);
  line_b(0);
  line_b(Rational(3, 2));
  line_c(0);
  line_c(Rational(3, 2));
  line_mu(Rational(1, 2));
  line_mu(Rational(-1, 2));
  line_zeta(1);
  line_zeta(Rational(3, 4));
  line_d32(0, 0);
  line_d32(Rational(2, 3), 5);

  for (std::size_t k = 0; k < random_samples; ++k) {
    Rational alpha = rng.nonzero_rational(), s = rng.rational(), t = rng.nonzero_rational();
    plane_trivial(alpha, s);
    plane_a2(rng.integer(0, 1) ? square(rng) : -square(rng));
    n3t(t);
    b3t(t);
    c3t(rng.rational());
    Rational mu = make_rational(rng.integer(1, 8), rng.integer(9, 12)) * (rng.integer(0, 1) ? 1 : -1);
    mu.canonicalize();
    d31(mu);
    aff_ideal(rng.integer(0, 2) == 0 ? Rational(0) : (rng.integer(0, 1) ? square(rng) : -square(rng)),
              rng.rational(), rng.rational());
    line_diag10(rng.rational(), rng.nonzero_rational());
    line_b(rng.rational());
    line_c(rng.rational());
    line_mu(mu);
    Rational z = make_rational(rng.integer(1, 12), rng.integer(1, 6));
    z.canonicalize();
    line_zeta(z);
    line_d32(rng.rational(), rng.rational());
  }
  return out;
}

ReconstructionResult check_reconstruction(const Reconstruction& r) {
  ReconstructionResult res;
  Algebra built;
  try {
    built = build_extension(r.data);
    res.built = true;
  } catch (const Error& e) {
    res.detail = std::string("build failed: ") + e.what();
    return res;
  }
  const CatalogEntry& target = catalog_entry(r.target);
  Algebra tgt = target.algebra(r.target_param);
  res.iso = verify_iso_witness(tgt, built, r.witness);
  res.detail = fmt::format("built {}; witness {} {}", to_string(built), to_string(r.witness),
                           res.iso ? "verified" : "rejected");
  return res;
}

}  // namespace lsa
