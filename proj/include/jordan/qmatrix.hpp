#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "jordan/rational.hpp"

namespace jordan {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
  static QMatrix diagonal(std::span<const Rational> values);
  /// Block diagonal assembly of square blocks.
  static QMatrix block_diagonal(std::span<const QMatrix> blocks);
  /// Matrix whose columns are the given vectors.
  static QMatrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> entries() const { return entries_; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  bool is_zero() const;
  Rational trace() const;
  QMatrix transpose() const;
  QMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Row-major flattening; used when matrices are treated as vectors of length rows*cols.
  const std::vector<Rational>& vec() const { return entries_; }

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rational& s);

  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rational& s) { return a *= s; }
  friend QMatrix operator*(const Rational& s, QMatrix a) { return a *= s; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend Vector operator*(const QMatrix& a, const Vector& v);
  QMatrix operator-() const { return *this * Rational(-1); }

  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

  /// Human readable form: one row per line, entries separated by spaces.
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

QMatrix matrix_power(const QMatrix& m, unsigned exponent);
QMatrix commutator(const QMatrix& a, const QMatrix& b);
/// Upper nilpotent Jordan block of size n (ones on the first superdiagonal).
QMatrix jordan_block(std::size_t n);

}  // namespace jordan
