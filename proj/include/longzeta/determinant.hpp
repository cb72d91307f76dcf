#pragma once

// Square matrices over a commutative ring and a division-free determinant.
//
// T has zero divisors and nilpotents, so fraction-based elimination is
// unsound; Berkowitz's algorithm needs only ring operations, O(n^4) of them.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "longzeta/laurent.hpp"

namespace longzeta {

template <class R>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<R> data_;
};

/// Multiplicative identity for the rings used here.
template <class R>
R ring_one() {
  if constexpr (std::is_arithmetic_v<R>) return R{1};
  else if constexpr (requires { R::one(); }) return R::one();
  else return R(ring_one<typename R::coefficient_type>());
}

/// Berkowitz: characteristic polynomial of the leading r x r block from the
/// (r-1) x (r-1) one, via the Toeplitz column (1, -a_rr, -R S, -R A S, ...).
/// det(A) = (-1)^n * c_n where det(xI - A) = sum c_i x^(n-i).
template <class R>
R determinant(const Matrix<R>& a) {
  const std::size_t n = a.size();
  if (n == 0) return ring_one<R>();
  auto is_zero = [](const R& x) { return x == R{}; };

  std::vector<R> charpoly{ring_one<R>()};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz first column, length r + 2.
    std::vector<R> col;
    col.reserve(r + 2);
    col.push_back(ring_one<R>());
    col.push_back(detail::ring_sub(R{}, a(r, r)));
    // v = S (column above the diagonal entry), repeatedly multiplied by the
    // leading r x r block.
    std::vector<R> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      R dot{};
      for (std::size_t j = 0; j < r; ++j)
        if (!is_zero(v[j]) && !is_zero(a(r, j))) dot = detail::ring_add(dot, detail::ring_mul(a(r, j), v[j]));
      col.push_back(detail::ring_sub(R{}, dot));
      if (k + 1 == r) break;
      std::vector<R> next(r);
      for (std::size_t i = 0; i < r; ++i) {
        R acc{};
        for (std::size_t j = 0; j < r; ++j)
          if (!is_zero(v[j]) && !is_zero(a(i, j))) acc = detail::ring_add(acc, detail::ring_mul(a(i, j), v[j]));
        next[i] = std::move(acc);
      }
      v = std::move(next);
    }
    // charpoly_{r+1} = Toeplitz(col) * charpoly_r; sizes (r+2) x (r+1).
    std::vector<R> out(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      R acc{};
      for (std::size_t j = 0; j <= i && j < r + 1; ++j)
        if (!is_zero(col[i - j]) && !is_zero(charpoly[j])) acc = detail::ring_add(acc, detail::ring_mul(col[i - j], charpoly[j]));
      out[i] = std::move(acc);
    }
    charpoly = std::move(out);
  }
  return (n % 2 == 0) ? charpoly[n] : detail::ring_sub(R{}, charpoly[n]);
}

}  // namespace longzeta
