#include "equiareal/algebra/imatrix.hpp"

#include <stdexcept>

namespace equiareal::algebra {

IMatrix::IMatrix(std::initializer_list<std::initializer_list<long>> rows) : IMatrix(rows.size()) {
  size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != n_) throw std::invalid_argument("IMatrix must be square");
    size_t j = 0;
    for (long v : r) (*this)(i, j++) = v;
    ++i;
  }
}

IMatrix::IMatrix(const std::vector<std::vector<Integer>>& rows) : IMatrix(rows.size()) {
  for (size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw std::invalid_argument("IMatrix must be square");
    for (size_t j = 0; j < n_; ++j) (*this)(i, j) = rows[i][j];
  }
}

IMatrix IMatrix::identity(size_t n) {
  IMatrix m(n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IMatrix::row(size_t i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i * n_),
          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_)};
}

Integer det(const IMatrix& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  IMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace equiareal::algebra
