#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ratwitt/ring.hpp"

namespace ratwitt {

// Dense row-major matrix over a ring.
class Matrix {
 public:
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols);
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
  static Matrix identity(RingPtr ring, std::size_t n);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const std::vector<Elem>& entries() const { return a_; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  Matrix pow(unsigned long n) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

// Determinant algorithms. `det` dispatches: Gaussian elimination over
// fields, fraction-free Bareiss over other domains, and division-free
// expansion over rings with zero divisors.
Elem det(const Matrix& m);
Elem det_gauss(const Matrix& m);
Elem det_bareiss(const Matrix& m);
// Laplace expansion along rows with memoization on column subsets.
Elem det_laplace(const Matrix& m);
// Berkowitz: division-free, O(n^4).
Elem det_berkowitz(const Matrix& m);
// det(xI - m) by Berkowitz, coefficients highest degree first (leading 1).
std::vector<Elem> char_poly_berkowitz(const Matrix& m);
// Leibniz sum over all permutations; test oracle for tiny matrices.
Elem det_leibniz(const Matrix& m);

// Rank over a field.
std::size_t rank_field(const Matrix& m);

// Any solution x of A x = b over a field (free variables set to zero), or
// nullopt if the system is inconsistent.
std::optional<std::vector<Elem>> solve_field(const Matrix& a, const std::vector<Elem>& b);

// Row-major bracketed literal "[[a,b],[c,d]]".
Matrix parse_matrix(const RingPtr& ring, std::string_view text);
std::string format_matrix(const Matrix& m);

}  // namespace ratwitt
