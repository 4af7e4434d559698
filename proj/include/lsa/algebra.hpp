#pragma once

#include "lsa/qmatrix.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace lsa {

struct ParamBinding {
  Rational value;
  std::string constraint;  // e.g. "t != 1", "0 < |mu| < 1", "zeta > 0"
};

/// Structure constants c[i][j][k]: e_i e_j = sum_k c[i][j][k] e_k (0-based internally).
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(std::size_t dim, std::string name = {});

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  Rational& c(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }

  QVector product(std::size_t i, std::size_t j) const;
  void set_product(std::size_t i, std::size_t j, const QVector& v);

  bool is_zero_product() const;

  std::map<std::string, ParamBinding> params;

  bool operator==(const Algebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }

 private:
  std::size_t dim_ = 0;
  std::string name_;
  std::vector<Rational> c_;
};

/// 1-based product list entry, used for literal fixtures.
struct ProductSpec {
  std::size_t i, j;
  QVector value;
};

Algebra make_algebra(std::size_t dim, const std::vector<ProductSpec>& products,
                     std::string name = {});

QVector multiply(const Algebra& a, const QVector& x, const QVector& y);
QMatrix left_mult(const Algebra& a, const QVector& x);
QMatrix right_mult(const Algebra& a, const QVector& x);

/// Structure constants in the basis f_i = P e_i (columns of P).
Algebra change_basis(const Algebra& a, const QMatrix& p);

struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<QVector> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(const QVector& v) const;
};

/// Canonical subspace: basis replaced by its reduced row echelon rows.
Subspace make_subspace(std::size_t n, const std::vector<QVector>& vs);

/// Product restricted to W (W must be closed under the product), in W's basis.
Algebra restriction(const Algebra& a, const Subspace& w);

/// Induced product on A / I for a two-sided ideal I. Complement representatives are
/// standard basis vectors chosen greedily.
Algebra quotient(const Algebra& a, const Subspace& ideal);

std::string to_string(const Algebra& a);

}  // namespace lsa
