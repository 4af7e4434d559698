#include "lsa/extensions.hpp"

#include "lsa/error.hpp"
#include "lsa/identities.hpp"
#include "lsa/ideals.hpp"
#include "lsa/linalg.hpp"

#include <fmt/format.h>

namespace lsa {

BimoduleAction BimoduleAction::zero(std::size_t k_dim, std::size_t v_dim) {
  return {k_dim, v_dim, std::vector<QMatrix>(k_dim, QMatrix::zero(v_dim, v_dim)),
          std::vector<QMatrix>(k_dim, QMatrix::zero(v_dim, v_dim))};
}

static QMatrix combine(const std::vector<QMatrix>& ms, const QVector& x, std::size_t m) {
  QMatrix r = QMatrix::zero(m, m);
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (x[i] != 0) r += x[i] * ms[i];
  return r;
}

QMatrix BimoduleAction::lambda_of(const QVector& x) const { return combine(lambda, x, V_dim); }
QMatrix BimoduleAction::rho_of(const QVector& x) const { return combine(rho, x, V_dim); }

void BimoduleAction::validate() const {
  if (lambda.size() != K_dim || rho.size() != K_dim)
    throw DimensionError("action needs one matrix per base basis vector");
  for (const auto* list : {&lambda, &rho})
    for (const auto& m : *list)
      if (m.rows() != V_dim || m.cols() != V_dim) throw DimensionError("action matrix shape");
}

Cocycle2 Cocycle2::zero(std::size_t k_dim, std::size_t v_dim) {
  return {k_dim, v_dim, std::vector<QVector>(k_dim * k_dim, zero_vector(v_dim))};
}

Cocycle2 Cocycle2::from_table(const std::vector<std::vector<QVector>>& table) {
  std::size_t n = table.size();
  std::size_t m = n ? table[0].at(0).size() : 0;
  Cocycle2 g = zero(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw DimensionError("cocycle table must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j].size() != m) throw DimensionError("cocycle value length mismatch");
      g.at(i, j) = table[i][j];
    }
  }
  return g;
}

Cocycle2 Cocycle2::from_scalar_matrix(const QMatrix& m) {
  Cocycle2 g = zero(m.rows(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g.at(i, j) = {m(i, j)};
  return g;
}

QVector Cocycle2::eval(const QVector& x, const QVector& y) const {
  QVector r = zero_vector(V_dim);
  for (std::size_t i = 0; i < K_dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < K_dim; ++j)
      if (y[j] != 0) axpy(r, x[i] * y[j], at(i, j));
  }
  return r;
}

QVector Cocycle2::flatten() const {
  QVector v;
  v.reserve(K_dim * K_dim * V_dim);
  for (const auto& x : values) v.insert(v.end(), x.begin(), x.end());
  return v;
}

Cocycle2 Cocycle2::unflatten(const QVector& v, std::size_t k_dim, std::size_t v_dim) {
  if (v.size() != k_dim * k_dim * v_dim) throw DimensionError("flattened cocycle length");
  Cocycle2 g = zero(k_dim, v_dim);
  for (std::size_t p = 0; p < k_dim * k_dim; ++p)
    for (std::size_t a = 0; a < v_dim; ++a) g.values[p][a] = v[p * v_dim + a];
  return g;
}

Cocycle2 operator+(const Cocycle2& a, const Cocycle2& b) {
  if (a.K_dim != b.K_dim || a.V_dim != b.V_dim) throw DimensionError("cocycle shape mismatch");
  Cocycle2 r = a;
  for (std::size_t p = 0; p < r.values.size(); ++p) r.values[p] += b.values[p];
  return r;
}

void ExtensionData::validate() const {
  action.validate();
  if (action.K_dim != K.dim() || action.V_dim != V.dim())
    throw DimensionError("action dimensions do not match K and V");
  if (g.K_dim != K.dim() || g.V_dim != V.dim() || g.values.size() != K.dim() * K.dim())
    throw DimensionError("cocycle dimensions do not match K and V");
}

namespace {

QVector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

std::string mat_witness(const char* label, std::size_t i, std::size_t j, const QMatrix& l, const QMatrix& r) {
  return fmt::format("{} at (x=e{}, y=e{}): lhs {}, rhs {}", label, i + 1, j + 1, to_string(l), to_string(r));
}

}  // namespace

std::vector<QVector> delta2(const BimoduleAction& act, const Algebra& K, const Cocycle2& g) {
  std::size_t n = K.dim();
  std::vector<QVector> out(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QVector x = e(n, i), y = e(n, j);
      QVector xy = multiply(K, x, y), yx = multiply(K, y, x);
      QVector br = xy - yx;
      QVector anti = g.at(i, j) - g.at(j, i);
      for (std::size_t k = 0; k < n; ++k) {
        QVector z = e(n, k);
        QVector v = g.eval(x, multiply(K, y, z)) - g.eval(y, multiply(K, x, z));
        v += act.lambda[i] * g.at(j, k);
        v = v - act.lambda[j] * g.at(i, k);
        v = v - g.eval(br, z);
        v = v - act.rho[k] * anti;
        out[(i * n + j) * n + k] = std::move(v);
      }
    }
  return out;
}

Cocycle2 delta1(const BimoduleAction& act, const Algebra& K, const QMatrix& h) {
  std::size_t n = K.dim(), m = act.V_dim;
  if (h.rows() != m || h.cols() != n) throw DimensionError("h must be V_dim x K_dim");
  Cocycle2 g = Cocycle2::zero(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g.at(i, j) = act.rho[j] * h.column(i) + act.lambda[i] * h.column(j) -
                   h * multiply(K, e(n, i), e(n, j));
  return g;
}

QMatrix delta1_matrix(const BimoduleAction& act, const Algebra& K) {
  std::size_t n = K.dim(), m = act.V_dim;
  QMatrix mat(n * n * m, n * m);
  for (std::size_t c = 0; c < n * m; ++c) {
    QMatrix h(m, n);
    h(c % m, c / m) = 1;
    mat.set_column(c, delta1(act, K, h).flatten());
  }
  return mat;
}

QMatrix delta2_matrix(const BimoduleAction& act, const Algebra& K) {
  std::size_t n = K.dim(), m = act.V_dim;
  QMatrix mat(n * n * n * m, n * n * m);
  for (std::size_t c = 0; c < n * n * m; ++c) {
    QVector unit = zero_vector(n * n * m);
    unit[c] = 1;
    auto t = delta2(act, K, Cocycle2::unflatten(unit, n, m));
    for (std::size_t p = 0; p < t.size(); ++p)
      for (std::size_t a = 0; a < m; ++a) mat(p * m + a, c) = t[p][a];
  }
  return mat;
}

KimReport check_kim_conditions(const ExtensionData& d) {
  d.validate();
  const Algebra& K = d.K;
  const Algebra& V = d.V;
  const auto& act = d.action;
  std::size_t n = K.dim(), m = V.dim();
  KimReport rep;
  auto fail = [](ConditionResult& c, std::string w) {
    if (c.pass) {
      c.pass = false;
      c.witness = std::move(w);
    }
  };
  auto vm = [&](const QVector& a, const QVector& b) { return multiply(V, a, b); };

  for (std::size_t x = 0; x < n; ++x) {
    const QMatrix& lx = act.lambda[x];
    const QMatrix& rx = act.rho[x];
    for (std::size_t ia = 0; ia < m; ++ia)
      for (std::size_t ib = 0; ib < m; ++ib) {
        QVector a = e(m, ia), b = e(m, ib);
        QVector l1 = lx * vm(a, b);
        QVector r1 = vm(lx * a, b) + vm(a, lx * b) - vm(rx * a, b);
        if (l1 != r1)
          fail(rep.conditions[0], fmt::format("x=e{}, a=f{}, b=f{}: lhs {}, rhs {}", x + 1, ia + 1,
                                              ib + 1, to_string(l1), to_string(r1)));
        QVector l2 = rx * (vm(a, b) - vm(b, a));
        QVector r2 = vm(a, rx * b) - vm(b, rx * a);
        if (l2 != r2)
          fail(rep.conditions[1], fmt::format("x=e{}, a=f{}, b=f{}: lhs {}, rhs {}", x + 1, ia + 1,
                                              ib + 1, to_string(l2), to_string(r2)));
      }
  }

  std::array<ConditionResult, 3> simp;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QVector x = e(n, i), y = e(n, j);
      QVector xy = multiply(K, x, y);
      QVector br = xy - multiply(K, y, x);
      QMatrix c3 = commutator(act.lambda[i], act.lambda[j]) - act.lambda_of(br);
      QMatrix l_of = left_mult(V, d.g.at(i, j) - d.g.at(j, i));
      if (c3 != l_of) fail(rep.conditions[2], mat_witness("condition 3", i, j, c3, l_of));
      if (!c3.is_zero()) fail(simp[0], mat_witness("(i)", i, j, commutator(act.lambda[i], act.lambda[j]), act.lambda_of(br)));
      QMatrix c4 = commutator(act.lambda[i], act.rho[j]) + act.rho[j] * act.rho[i] - act.rho_of(xy);
      QMatrix r_of = right_mult(V, d.g.at(i, j));
      if (c4 != r_of) fail(rep.conditions[3], mat_witness("condition 4", i, j, c4, r_of));
      if (!c4.is_zero())
        fail(simp[1], mat_witness("(ii)", i, j, commutator(act.lambda[i], act.rho[j]),
                                  act.rho_of(xy) - act.rho[j] * act.rho[i]));
    }

  auto t = delta2(act, K, d.g);
  for (std::size_t p = 0; p < t.size(); ++p)
    if (!is_zero(t[p])) {
      std::string w = fmt::format("(x,y,z)=(e{},e{},e{}): value {}", p / (n * n) + 1, (p / n) % n + 1,
                                  p % n + 1, to_string(t[p]));
      fail(rep.conditions[4], w);
      fail(simp[2], w);
      break;
    }

  if (V.is_zero_product()) {
    for (int c = 0; c < 3; ++c)
      if (simp[c].pass != rep.conditions[c + 2].pass)
        throw InvariantError(fmt::format("simplified condition {} disagrees with condition {}", c + 1, c + 3));
    rep.simplified = simp;
  }
  return rep;
}

bool KimReport::all_pass() const { return first_failure() == 0; }

int KimReport::first_failure() const {
  for (int c = 0; c < 5; ++c)
    if (!conditions[c].pass) return c + 1;
  return 0;
}

Algebra build_extension(const ExtensionData& d) {
  if (!is_left_symmetric(d.K)) throw InputError("base algebra K is not left-symmetric");
  if (!is_left_symmetric(d.V)) throw InputError("kernel algebra V is not left-symmetric");
  KimReport rep = check_kim_conditions(d);
  if (int c = rep.first_failure())
    throw ExtensionConditionError(c, fmt::format("extension condition {} fails: {}", c,
                                                 rep.conditions[c - 1].witness));
  std::size_t n = d.K.dim(), m = d.V.dim(), N = n + m;
  Algebra ext(N);
  auto put = [&](std::size_t i, std::size_t j, const QVector& kpart, const QVector& vpart) {
    QVector v(N);
    for (std::size_t k = 0; k < n; ++k) v[k] = kpart[k];
    for (std::size_t a = 0; a < m; ++a) v[n + a] = vpart[a];
    ext.set_product(i, j, v);
  };
  QVector k0 = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) put(i, j, d.K.product(i, j), d.g.at(i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < m; ++b) {
      put(i, n + b, k0, d.action.lambda[i].column(b));
      put(n + b, i, k0, d.action.rho[i].column(b));
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) put(n + a, n + b, k0, d.V.product(a, b));

  Verdict ls = check_left_symmetric(ext);
  if (!ls.holds)
    throw InvariantError("extension passed the conditions but is not left-symmetric at " +
                         to_string(*ls.witness));
  std::vector<QVector> vb;
  for (std::size_t a = 0; a < m; ++a) vb.push_back(e(N, n + a));
  Subspace vs = make_subspace(N, vb);
  if (!is_two_sided_ideal(ext, vs)) throw InvariantError("kernel block is not a two-sided ideal");
  if (!(quotient(ext, vs) == d.K)) throw InvariantError("quotient product differs from K");
  return ext;
}

H2Result h2(const BimoduleAction& act, const Algebra& K) {
  std::size_t n = K.dim(), m = act.V_dim;
  std::size_t len = n * n * m;
  H2Result r;
  auto z = nullspace_basis(delta2_matrix(act, K));
  QMatrix d1 = delta1_matrix(act, K);
  std::vector<QVector> cols;
  for (std::size_t c = 0; c < d1.cols(); ++c) cols.push_back(d1.column(c));
  auto b = span_basis(cols, len);
  r.coboundaries_closed = span_contains(z, b, len);
  auto bz = r.coboundaries_closed ? b : intersect_spans(b, z, len);
  auto reps = quotient_basis(z, bz);
  r.dim = reps.size();
  for (const auto& v : z) r.Z.push_back(Cocycle2::unflatten(v, n, m));
  for (const auto& v : bz) r.B.push_back(Cocycle2::unflatten(v, n, m));
  for (const auto& v : reps) r.representatives.push_back(Cocycle2::unflatten(v, n, m));
  return r;
}

Subspace i_g(const ExtensionData& d) {
  d.validate();
  std::size_t n = d.K.dim(), m = d.V.dim();
  std::vector<QMatrix> blocks;
  for (std::size_t j = 0; j < n; ++j) {
    blocks.push_back(right_mult(d.K, e(n, j)));
    blocks.push_back(left_mult(d.K, e(n, j)));
    QMatrix g1(m, n), g2(m, n);
    for (std::size_t i = 0; i < n; ++i) {
      g1.set_column(i, d.g.at(i, j));
      g2.set_column(i, d.g.at(j, i));
    }
    blocks.push_back(g1);
    blocks.push_back(g2);
  }
  if (n == 0) return {0, {}};
  return make_subspace(n, nullspace_basis(stack_rows(blocks)));
}

bool is_central_extension(const ExtensionData& d) {
  Algebra ext = build_extension(d);
  Subspace c = center(ext);
  std::size_t n = d.K.dim(), N = ext.dim();
  for (std::size_t a = 0; a < d.V.dim(); ++a)
    if (!c.contains(e(N, n + a))) return false;
  return true;
}

bool verify_iso_witness(const Algebra& A, const Algebra& B, const QMatrix& eta) {
  std::size_t n = A.dim();
  if (B.dim() != n || eta.rows() != n || eta.cols() != n)
    throw DimensionError("verify_iso_witness: dimension mismatch");
  if (!is_invertible(eta)) return false;
  std::vector<QVector> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = eta.column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (eta * A.product(i, j) != multiply(B, img[i], img[j])) return false;
  return true;
}

Cocycle2 act_on_cocycle(const Algebra& K, const Algebra& V, const QMatrix& mu, const QMatrix& eta,
                        const Cocycle2& g) {
  if (g.K_dim != K.dim() || g.V_dim != V.dim()) throw DimensionError("cocycle shape mismatch");
  if (!verify_iso_witness(K, K, eta)) throw InputError("eta is not an automorphism of K");
  if (!verify_iso_witness(V, V, mu)) throw InputError("mu is not an automorphism of V");
  std::size_t n = K.dim();
  Cocycle2 r = Cocycle2::zero(n, V.dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.at(i, j) = mu * g.eval(eta.column(i), eta.column(j));
  return r;
}

std::string dim2_kind(const Algebra& a) {
  if (a.dim() != 2) return "";
  if (a.is_zero_product()) return "zero";
  if (a == make_algebra(2, {{1, 2, {0, 1}}})) return "N2";
  if (a == make_algebra(2, {{2, 2, {1, 0}}})) return "e2e2=e1";
  return "";
}

AutGroup aut_group_dim2(const Algebra& a) {
  if (a.dim() != 2) throw DimensionError("aut_group_dim2 needs a 2-dimensional algebra");
  AutGroup g;
  g.kind = dim2_kind(a);
  auto checked = [a](std::function<QMatrix(Rng&)> f) {
    return [a, f](Rng& rng) {
      QMatrix m = f(rng);
      if (!verify_iso_witness(a, a, m)) throw InvariantError("sampled map is not an automorphism");
      return m;
    };
  };
  if (g.kind == "zero") {
    g.description = "GL(2): every invertible map";
    g.sample = checked([](Rng& rng) { return rng.invertible(2); });
  } else if (g.kind == "N2") {
    g.description = "diag(1, d), d != 0";
    g.sample = checked([](Rng& rng) { return QMatrix{{1, 0}, {0, rng.nonzero_rational()}}; });
  } else if (g.kind == "e2e2=e1") {
    g.description = "e1 -> s^2 e1, e2 -> q e1 + s e2, s != 0";
    g.sample = checked([](Rng& rng) {
      Rational s = rng.nonzero_rational(), q = rng.rational();
      return QMatrix{{s * s, q}, {0, s}};
    });
  } else {
    g.kind = "unknown";
    g.description = "unknown, verification-only mode";
    return g;
  }
  g.supported = true;
  return g;
}

std::optional<OrbitWitness> search_orbit_witness(const ExtensionData& d, const Cocycle2& g2,
                                                 std::size_t samples, Rng& rng) {
  std::function<QMatrix(Rng&)> eta_s, mu_s;
  if (d.K.dim() == 2) {
    auto aut = aut_group_dim2(d.K);
    if (!aut.supported) return std::nullopt;
    eta_s = aut.sample;
  } else if (d.K.dim() == 1) {
    if (d.K.is_zero_product()) eta_s = [](Rng& r) { return QMatrix{{r.nonzero_rational()}}; };
    else eta_s = [](Rng&) { return QMatrix::identity(1); };
  } else {
    return std::nullopt;
  }
  if (d.V.dim() == 2) {
    auto aut = aut_group_dim2(d.V);
    if (!aut.supported) return std::nullopt;
    mu_s = aut.sample;
  } else if (d.V.dim() == 1) {
    if (d.V.is_zero_product()) mu_s = [](Rng& r) { return QMatrix{{r.nonzero_rational()}}; };
    else mu_s = [](Rng&) { return QMatrix::identity(1); };
  } else {
    return std::nullopt;
  }
  QMatrix d1 = delta1_matrix(d.action, d.K);
  std::vector<QVector> cols;
  for (std::size_t c = 0; c < d1.cols(); ++c) cols.push_back(d1.column(c));
  // One-dimensional kernel with zero product: mu is a free scalar, so solve for it.
  const bool scalar_mu = d.V.dim() == 1 && d.V.is_zero_product();
  const QVector target = g2.flatten();
  for (std::size_t s = 0; s < samples; ++s) {
    if (scalar_mu) {
      QMatrix eta = eta_s(rng);
      QVector v = act_on_cocycle(d.K, d.V, QMatrix::identity(1), eta, d.g).flatten();
      if (in_span(cols, v)) {
        if (in_span(cols, target)) return OrbitWitness{QMatrix::identity(1), eta};
        continue;
      }
      std::vector<QVector> sys{v};
      sys.insert(sys.end(), cols.begin(), cols.end());
      auto x = solve(QMatrix::from_columns(sys, target.size()), target);
      if (x && (*x)[0] != 0) return OrbitWitness{QMatrix{{(*x)[0]}}, eta};
      continue;
    }
    QMatrix mu = mu_s(rng), eta = eta_s(rng);
    Cocycle2 moved = act_on_cocycle(d.K, d.V, mu, eta, d.g);
    if (in_span(cols, moved.flatten() - g2.flatten())) return OrbitWitness{mu, eta};
  }
  return std::nullopt;
}

}  // namespace lsa
