#pragma once

#include <vector>

#include "rooksa/rational.hpp"

namespace rooksa {

/// Dense matrix over exact rationals; just enough for representation
/// bookkeeping at desk scale.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) {
    return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(c)];
  }
  const Rational& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(c)];
  }

  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

} // namespace rooksa
