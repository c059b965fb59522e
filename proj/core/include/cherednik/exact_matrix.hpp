#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "cherednik/cyclotomic.hpp"

namespace cherednik {

/// Dense row-major matrix with exact cyclotomic entries.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<ExactScalar>> rows);

  static ExactMatrix identity(std::size_t n);
  /// Column vector.
  static ExactMatrix column(const std::vector<ExactScalar>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  ExactScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const ExactScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<ExactScalar> row(std::size_t i) const;
  std::vector<ExactScalar> col(std::size_t j) const;

  bool is_zero() const;
  bool is_identity() const;
  /// True when the matrix is c * identity; writes c.
  bool is_scalar(ExactScalar* value = nullptr) const;
  /// Largest conductor among the entries.
  int conductor() const;

  ExactMatrix transpose() const;
  ExactScalar trace() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const ExactScalar& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const ExactScalar& s) { return a *= s; }
  friend ExactMatrix operator*(const ExactScalar& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  /// Stack rows of b under a (column counts must agree).
  static ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);
  static ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);
  /// Kronecker product a (x) b.
  static ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactScalar> data_;
};

}  // namespace cherednik
