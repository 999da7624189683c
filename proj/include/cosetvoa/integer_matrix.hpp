#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace cosetvoa {

/// Dense rectangular matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    require(rows >= 1 && cols >= 1, "IntegerMatrix: dimensions must be positive");
  }
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
      : IntegerMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      require(row.size() == cols_, "IntegerMatrix: ragged initializer");
      std::size_t j = 0;
      for (long long v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[target] -= factor * row[source]
  void row_axpy(std::size_t target, std::size_t source, const BigInt& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) -= factor * (*this)(source, j);
  }
  void col_axpy(std::size_t target, std::size_t source, const BigInt& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) -= factor * (*this)(i, source);
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

namespace detail {

// Floor division for BigInt so that remainders of a pivot reduction stay small.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

/// Elementary divisors d_1 | d_2 | ... | d_n of a square nonsingular matrix.
/// Row/column reduction pivoting on the smallest nonzero absolute value; no
/// unimodular transforms are kept.
inline std::vector<BigInt> smith_normal_form(IntegerMatrix m) {
  require(m.rows() == m.cols(), "smith_normal_form: matrix must be square");
  const std::size_t n = m.rows();
  std::vector<BigInt> divisors;
  divisors.reserve(n);

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero |entry| in the trailing block
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (m(i, j) != 0 && (pi == n || abs(m(i, j)) < abs(m(pi, pj)))) pi = i, pj = j;
      if (pi == n) throw std::invalid_argument("smith_normal_form: singular matrix");
      m.swap_rows(t, pi);
      m.swap_cols(t, pj);

      bool clean = true;
      const BigInt pivot = m(t, t);
      for (std::size_t i = t + 1; i < n; ++i) {
        if (m(i, t) == 0) continue;
        m.row_axpy(i, t, detail::floor_div(m(i, t), pivot));
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (m(t, j) == 0) continue;
        m.col_axpy(j, t, detail::floor_div(m(t, j), pivot));
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the whole trailing block; otherwise fold a row in
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (m(i, j) % pivot != 0) { bad = i; break; }
      if (bad == n) break;
      m.row_axpy(t, bad, BigInt(-1));
    }
    divisors.push_back(abs(m(t, t)));
  }
  return divisors;
}

}  // namespace cosetvoa
