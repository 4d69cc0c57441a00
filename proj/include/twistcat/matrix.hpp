#ifndef TWISTCAT_MATRIX_HPP
#define TWISTCAT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "twistcat/rational.hpp"

namespace twistcat {

using Scalar = GaussianRational;
using Vec = std::vector<Scalar>;

/// Dense row-major matrix over Q(i). All decompositions are exact; pivoting
/// is first-nonzero so every result is deterministic.
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<Vec>& rows);
  static ExactMatrix from_cols(const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  bool is_zero() const;
  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const Scalar& c) const;
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  Vec apply(const Vec& x) const;

  std::size_t rank() const;

  /// Basis of {x : Mx = 0}, one vector per free column of the RREF.
  std::vector<Vec> kernel() const;

  /// Basis of the column space (the pivot columns of the original matrix).
  std::vector<Vec> image_basis() const;

  /// One exact solution of Mx = b, or nullopt when inconsistent.
  std::optional<Vec> solve(const Vec& b) const;

  std::optional<ExactMatrix> inverse() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> entries_;
};

// --- free vector helpers -------------------------------------------------

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
bool is_zero_vec(const Vec& v);
Scalar dot(const Vec& a, const Vec& b);  // sum a_k b_k, no conjugation

/// Rank of the span of a list of vectors.
std::size_t span_rank(const std::vector<Vec>& vectors, std::size_t dim);

/// Reduced basis (RREF rows) of the span; canonical for a given input span.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim);

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim);
bool in_span(const Vec& v, const std::vector<Vec>& basis);

}  // namespace twistcat

#endif
