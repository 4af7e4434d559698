#pragma once

#include "lsa/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace lsa {

using QVector = std::vector<Rational>;

QVector zero_vector(std::size_t n);
QVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const QVector& v);
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator-(const QVector& a);
QVector operator*(const Rational& s, const QVector& v);
QVector& operator+=(QVector& a, const QVector& b);
/// a += s * b
void axpy(QVector& a, const Rational& s, const QVector& b);
Rational dot(const QVector& a, const QVector& b);
std::string to_string(const QVector& v);

/// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
  static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
  static QMatrix diagonal(const QVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const;
  QVector column(std::size_t c) const;
  void set_column(std::size_t c, const QVector& v);

  QMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  QVector apply(const QVector& v) const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);

  bool operator==(const QMatrix& o) const = default;

  const std::vector<Rational>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rational& s, QMatrix m);
QVector operator*(const QMatrix& m, const QVector& v);
QMatrix commutator(const QMatrix& a, const QMatrix& b);

/// Vertical concatenation; all blocks must share a column count.
QMatrix stack_rows(const std::vector<QMatrix>& blocks);

std::string to_string(const QMatrix& m);

}  // namespace lsa
