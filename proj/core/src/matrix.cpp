#include "rooksa/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace rooksa {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = Rational(1);
  }
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const Rational& v) { return v.is_zero(); });
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) {
    throw std::invalid_argument("RationalMatrix: shape mismatch in product");
  }
  RationalMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int l = 0; l < cols_; ++l) {
      const Rational& v = at(i, l);
      if (v.is_zero()) {
        continue;
      }
      for (int j = 0; j < o.cols_; ++j) {
        out.at(i, j) += v * o.at(l, j);
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("RationalMatrix: shape mismatch in sum");
  }
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    out.a_[i] += o.a_[i];
  }
  return out;
}

} // namespace rooksa
