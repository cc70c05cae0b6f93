#include "jordan/qmatrix.hpp"

#include <sstream>

#include "jordan/error.hpp"

namespace jordan {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("entry count " + std::to_string(entries_.size()) + " != " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::diagonal(std::span<const Rational> values) {
  QMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

QMatrix QMatrix::block_diagonal(std::span<const QMatrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw NonSquare("block_diagonal expects square blocks");
    n += b.rows();
  }
  QMatrix m(n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(offset + i, offset + j) = b(i, j);
    offset += b.rows();
  }
  return m;
}

QMatrix QMatrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  QMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Rational QMatrix::trace() const {
  if (!is_square()) throw NonSquare("trace of non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("submatrix out of bounds");
  QMatrix s(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
  return s;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  // Scale each row of a and each column of b to integers, multiply over Z and
  // divide once per entry: one canonicalization per entry instead of one per
  // multiply-add.
  const std::size_t n = a.rows_, m = a.cols_, p = b.cols_;
  std::vector<Integer> row_den(n, 1), col_den(p, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k)
      mpz_lcm(row_den[i].get_mpz_t(), row_den[i].get_mpz_t(), a(i, k).raw().get_den_mpz_t());
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < p; ++j)
      mpz_lcm(col_den[j].get_mpz_t(), col_den[j].get_mpz_t(), b(k, j).raw().get_den_mpz_t());
  std::vector<Integer> ai(n * m), bi(m * p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      const mpq_class& q = a(i, k).raw();
      mpz_divexact(ai[i * m + k].get_mpz_t(), row_den[i].get_mpz_t(), q.get_den_mpz_t());
      ai[i * m + k] *= q.get_num();
    }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < p; ++j) {
      const mpq_class& q = b(k, j).raw();
      mpz_divexact(bi[k * p + j].get_mpz_t(), col_den[j].get_mpz_t(), q.get_den_mpz_t());
      bi[k * p + j] *= q.get_num();
    }
  QMatrix c(n, p);
  Integer acc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < m; ++k) {
        const Integer& x = ai[i * m + k];
        if (sgn(x) == 0) continue;
        mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), bi[k * p + j].get_mpz_t());
      }
      if (sgn(acc) != 0) c(i, j) = Rational(acc, row_den[i] * col_den[j]);
    }
  }
  return c;
}

Vector operator*(const QMatrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

std::string QMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j);
    }
    os << '\n';
  }
  return os.str();
}

QMatrix matrix_power(const QMatrix& m, unsigned exponent) {
  if (!m.is_square()) throw NonSquare("power of non-square matrix");
  QMatrix result = QMatrix::identity(m.rows());
  QMatrix base = m;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix jordan_block(std::size_t n) {
  QMatrix j(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
  return j;
}

}  // namespace jordan
