#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "equiareal/algebra/rational.hpp"

namespace equiareal::algebra {

/// Square matrix of arbitrary-precision integers, row-major.
class IMatrix {
 public:
  explicit IMatrix(size_t n = 0) : n_(n), a_(n * n) {}
  IMatrix(std::initializer_list<std::initializer_list<long>> rows);
  explicit IMatrix(const std::vector<std::vector<Integer>>& rows);

  static IMatrix identity(size_t n);

  size_t size() const { return n_; }
  Integer& operator()(size_t i, size_t j) { return a_[i * n_ + j]; }
  const Integer& operator()(size_t i, size_t j) const { return a_[i * n_ + j]; }
  std::vector<Integer> row(size_t i) const;

  friend bool operator==(const IMatrix&, const IMatrix&) = default;

 private:
  size_t n_;
  std::vector<Integer> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IMatrix& m);

}  // namespace equiareal::algebra
