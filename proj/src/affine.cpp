#include "lsa/affine.hpp"

#include "lsa/catalog.hpp"
#include "lsa/error.hpp"
#include "lsa/identities.hpp"
#include "lsa/lie.hpp"
#include "lsa/special_functions.hpp"

#include <cmath>

namespace lsa {

AffineMap3 AffineMap3::from_homogeneous(const Mat4& m) {
  AffineMap3 r;
  r.linear = m.topLeftCorner<3, 3>();
  r.translation = m.topRightCorner<3, 1>();
  return r;
}

Mat4 AffineMap3::homogeneous() const {
  Mat4 m = Mat4::Identity();
  m.topLeftCorner<3, 3>() = linear;
  m.topRightCorner<3, 1>() = translation;
  return m;
}

AffineMap3 compose(const AffineMap3& p, const AffineMap3& q) {
  return {p.linear * q.linear, p.linear * q.translation + p.translation};
}

double max_abs_diff(const AffineMap3& p, const AffineMap3& q) {
  return std::max((p.linear - q.linear).cwiseAbs().maxCoeff(), (p.translation - q.translation).cwiseAbs().maxCoeff());
}

namespace {

QMatrix rep_matrix(const QMatrix& l, const QVector& v) {
  QMatrix m(4, 4);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = l(r, c);
    m(r, 3) = v[r];
  }
  return m;
}

}  // namespace

AffRep affine_rep(const Algebra& a) {
  if (a.dim() != 3) throw DimensionError("affine_rep needs a 3-dimensional algebra");
  AffRep rep;
  std::array<QMatrix, 3> x;
  for (std::size_t i = 0; i < 3; ++i) {
    rep.linear[i] = left_mult(a, unit_vector(3, i));
    rep.translation[i] = unit_vector(3, i);
    x[i] = rep_matrix(rep.linear[i], rep.translation[i]);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        rep.homogeneous[i](r, c) = to_double(x[i](static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      QVector br = a.product(i, j) - a.product(j, i);
      if (commutator(x[i], x[j]) != rep_matrix(left_mult(a, br), br))
        throw InvariantError("x -> (L_x, x) is not a Lie homomorphism (input is not left-symmetric)");
    }
  return rep;
}

Mat4 expm4(const Mat4& m) {
  double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  while (norm > 0.25) {
    norm /= 2;
    ++s;
  }
  Mat4 a = m / std::ldexp(1.0, s);
  Mat4 term = Mat4::Identity(), sum = Mat4::Identity();
  for (int k = 1; k <= 13; ++k) {
    term = term * a / k;
    sum += term;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

namespace {

AffineMap3 make(const Mat3& l, const Vec3& v) { return {l, v}; }

double seed_translation0(const AffineMap3& m) { return m.translation(0); }

GroupFamily family(std::string name, std::string entry, std::function<AffineMap3(double, double, double)> el,
                   std::function<double(const AffineMap3&)> seed = seed_translation0) {
  GroupFamily f;
  f.name = std::move(name);
  f.entry = std::move(entry);
  f.element = std::move(el);
  f.seed_a = std::move(seed);
  return f;
}

const std::vector<std::pair<std::string, std::string>>& name_table() {
  static const std::vector<std::pair<std::string, std::string>> t = {
      {"GA30", "N30"}, {"GA31", "N31"}, {"GA32", "N32"}, {"GA33", "N33"},     {"GB30", "B30"},   {"GB31", "B31"},
      {"GC31", "C31"}, {"GC3t", "C3t"}, {"GD31mu", "D31mu"}, {"GD32", "D32"}, {"GE3zeta", "E31zeta"}};
  return t;
}

}  // namespace

std::vector<std::string> group_family_names() {
  std::vector<std::string> v;
  for (const auto& [f, e] : name_table()) v.push_back(f);
  return v;
}

GroupFamily make_group_family(const std::string& requested, std::optional<Rational> p) {
  std::string name, entry;
  for (const auto& [f, e] : name_table())
    if (requested == f || requested == e || (requested == "GE31zeta" && f == "GE3zeta")) {
      name = f;
      entry = e;
    }
  if (name.empty()) throw InputError("unknown group family '" + requested + "'");
  const CatalogEntry& ce = catalog_entry(entry);
  Rational q = 0;
  if (ce.parametrized()) {
    q = p ? *p : ce.defaults.front();
    check_param_constraint(ce.param_name, q);
  } else if (p) {
    throw InputError("family " + name + " takes no parameter");
  }
  const double P = to_double(q);
  using std::exp;
  auto f = special_f;
  GroupFamily fam;
  if (name == "GA30") {
    fam = family(name, entry, [=](double a, double b, double c) {
      return make(Eigen::DiagonalMatrix<double, 3>(1, exp(a), 1).toDenseMatrix(), Vec3(a, b * f(a), c));
    });
  } else if (name == "GA31") {
    fam = family(name, entry, [=](double a, double b, double c) {
      Mat3 l;
      l << 1, 0, 0, 0, exp(a), 0, a, 0, 1;
      return make(l, Vec3(a, b * f(a), c + a * a / 2));
    });
  } else if (name == "GA32" || name == "GA33") {
    double sg = name == "GA32" ? 1.0 : -1.0;
    fam = family(
        name, entry,
        [=](double a, double b, double c) {
          Mat3 l;
          l << 1, 0, sg * c, 0, exp(a), 0, 0, 0, 1;
          return make(l, Vec3(a + sg * c * c / 2, b * f(a), c));
        },
        [=](const AffineMap3& m) { return m.translation(0) - sg * m.translation(2) * m.translation(2) / 2; });
  } else if (name == "GB30") {
    fam = family(name, entry, [=](double a, double b, double c) {
      return make(Eigen::DiagonalMatrix<double, 3>(1, exp(a), exp(a)).toDenseMatrix(), Vec3(a, b * f(a), c * f(a)));
    });
  } else if (name == "GB31") {
    fam = family(name, entry, [=](double a, double b, double c) {
      Mat3 l;
      l << 1, 0, 0, 0, exp(a), 0, b * f(a), a * exp(a), exp(a);
      return make(l, Vec3(a, b * f(a), (a * b + c) * f(a)));
    });
  } else if (name == "GC31") {
    fam = family(name, entry, [=](double a, double b, double c) {
      Mat3 l;
      l << 1, 0, 0, 0, exp(a), 0, 0, a * exp(a), exp(a);
      return make(l, Vec3(a, b * f(a), c * f(a) + b * special_phi(a)));
    });
  } else if (name == "GC3t") {
    fam = family(name, entry, [=](double a, double b, double c) {
      Mat3 l;
      l << 1, 0, 0, 0, exp(a), 0, (P - 1) * b * f(a), P * a * exp(a), exp(a);
      return make(l, Vec3(a, b * f(a), (P * a * b + c - b) * f(a) + b));
    });
  } else if (name == "GD31mu") {
    fam = family(name, entry, [=](double a, double b, double c) {
      return make(Eigen::DiagonalMatrix<double, 3>(1, exp(a), exp(P * a)).toDenseMatrix(),
                  Vec3(a, b * f(a), c * f(P * a)));
    });
  } else if (name == "GD32") {
    fam = family(
        name, entry,
        [=](double a, double b, double c) {
          Mat3 l;
          l << 1, b * f(a), 0, 0, exp(a), 0, 0, 0, exp(a / 2);
          return make(l, Vec3(a + b * b * special_g(a), b * f(a), c * f(a / 2)));
        },
        [](const AffineMap3& m) { return std::log(m.linear(1, 1)); });
  } else {
    fam = family(name, entry, [=](double a, double b, double c) {
      double ea = exp(a), cs = std::cos(P * a), sn = std::sin(P * a);
      double fk = f(a) + special_k(P * a), hp = special_h(P * a) - P * special_phi(a);
      Mat3 l;
      l << 1, 0, 0, 0, ea * cs, -ea * sn, 0, ea * sn, ea * cs;
      return make(l, Vec3(a, b * fk + c * hp, -b * hp + c * fk));
    });
  }
  fam.param_name = ce.param_name;
  fam.exact_param = q;
  fam.param = P;
  return fam;
}

std::vector<GroupFamily> group_families() {
  std::vector<GroupFamily> v;
  for (const auto& n : group_family_names()) v.push_back(make_group_family(n));
  return v;
}

AffineMap3 group_element(const GroupFamily& fam, double a, double b, double c) { return fam.element(a, b, c); }

GroupFamily exp_family(const Algebra& alg, const std::string& name) {
  AffRep rep = affine_rep(alg);
  GroupFamily f;
  f.name = name;
  f.entry = alg.name();
  f.affine_in_bc = false;
  f.element = [rep](double a, double b, double c) {
    return AffineMap3::from_homogeneous(expm4(a * rep.homogeneous[0] + b * rep.homogeneous[1] + c * rep.homogeneous[2]));
  };
  f.seed_a = seed_translation0;
  return f;
}

}  // namespace lsa
