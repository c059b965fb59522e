#include "cherednik/exact_matrix.hpp"

#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<ExactScalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::column(const std::vector<ExactScalar>& v) {
  ExactMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

std::vector<ExactScalar> ExactMatrix::row(std::size_t i) const {
  return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
}

std::vector<ExactScalar> ExactMatrix::col(std::size_t j) const {
  std::vector<ExactScalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  ExactScalar c;
  return is_scalar(&c) && c.is_one();
}

bool ExactMatrix::is_scalar(ExactScalar* value) const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j) {
        if (!((*this)(i, i) == (*this)(0, 0))) return false;
      } else if (!(*this)(i, j).is_zero()) {
        return false;
      }
    }
  if (value) *value = rows_ == 0 ? ExactScalar(0) : (*this)(0, 0);
  return true;
}

int ExactMatrix::conductor() const {
  int n = 1;
  for (const auto& x : data_) n = std::max(n, x.conductor());
  return n;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactScalar ExactMatrix::trace() const {
  ExactScalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const ExactScalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix shape mismatch in *");
  ExactMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ExactScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const ExactScalar& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  return c;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ == 0) return b;
  if (b.rows_ == 0) return a;
  if (a.cols_ != b.cols_) throw InvalidArgument("vstack column mismatch");
  ExactMatrix out = a;
  out.rows_ += b.rows_;
  out.data_.insert(out.data_.end(), b.data_.begin(), b.data_.end());
  return out;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& a, const ExactMatrix& b) {
  return vstack(a.transpose(), b.transpose()).transpose();
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const ExactScalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          if (!b(k, l).is_zero()) out(i * b.rows_ + k, j * b.cols_ + l) = aij * b(k, l);
    }
  return out;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace cherednik
