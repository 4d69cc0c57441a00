#include "twistcat/matrix.hpp"

#include <stdexcept>

namespace twistcat {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = gq(1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return ExactMatrix(0, 0);
  ExactMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

ExactMatrix ExactMatrix::from_cols(const std::vector<Vec>& cols) {
  if (cols.empty()) return ExactMatrix(0, 0);
  ExactMatrix m(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows()) throw std::invalid_argument("ragged cols");
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Vec ExactMatrix::row(std::size_t r) const {
  Vec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec ExactMatrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o.at(k, c);
        if (!b.is_zero()) p.at(r, c) += a * b;
      }
    }
  return p;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  ExactMatrix s = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) s.entries_[k] += o.entries_[k];
  return s;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  ExactMatrix s = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) s.entries_[k] -= o.entries_[k];
  return s;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
  ExactMatrix s = *this;
  for (auto& e : s.entries_) e *= c;
  return s;
}

Vec ExactMatrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
  Vec y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !x[c].is_zero()) y[r] += at(r, c) * x[c];
  return y;
}

namespace {

// In-place RREF with first-nonzero pivoting; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Scalar inv = m[r][c].inv();
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || m[q][c].is_zero()) continue;
      Scalar f = m[q][c];
      for (std::size_t k = c; k < cols; ++k) m[q][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t ExactMatrix::rank() const {
  std::vector<Vec> m(rows_);
  for (std::size_t r = 0; r < rows_; ++r) m[r] = row(r);
  return rref(m).size();
}

std::vector<Vec> ExactMatrix::kernel() const {
  std::vector<Vec> m(rows_);
  for (std::size_t r = 0; r < rows_; ++r) m[r] = row(r);
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols_);
    v[c] = gq(1);
    for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -m[p][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> ExactMatrix::image_basis() const {
  std::vector<Vec> m(rows_);
  for (std::size_t r = 0; r < rows_; ++r) m[r] = row(r);
  auto pivots = rref(m);
  std::vector<Vec> basis;
  for (auto c : pivots) basis.push_back(col(c));
  return basis;
}

std::optional<Vec> ExactMatrix::solve(const Vec& b) const {
  if (b.size() != rows_) throw std::invalid_argument("solve shape mismatch");
  std::vector<Vec> m(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    m[r] = row(r);
    m[r].push_back(b[r]);
  }
  auto pivots = rref(m);
  // Inconsistent iff some pivot landed in the augmented column.
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  Vec x(cols_);
  for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = m[p][cols_];
  return x;
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  std::vector<Vec> m(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    m[r] = row(r);
    m[r].resize(2 * cols_);
    m[r][cols_ + r] = gq(1);
  }
  auto pivots = rref(m);
  if (pivots.size() != rows_ || pivots.back() != rows_ - 1) return std::nullopt;
  ExactMatrix inv(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = m[r][cols_ + c];
  return inv;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sum shape mismatch");
  Vec r = a;
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector diff shape mismatch");
  Vec r = a;
  for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  return r;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& e : r) e *= c;
  return r;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot shape mismatch");
  Scalar s;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

std::size_t span_rank(const std::vector<Vec>& vectors, std::size_t dim) {
  std::vector<Vec> m;
  for (const auto& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("span_rank shape mismatch");
    m.push_back(v);
  }
  return rref(m).size();
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim) {
  std::vector<Vec> m;
  for (const auto& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("span_basis shape mismatch");
    m.push_back(v);
  }
  auto pivots = rref(m);
  m.resize(pivots.size());
  return m;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim) {
  std::size_t ra = span_rank(a, dim), rb = span_rank(b, dim);
  if (ra != rb) return false;
  std::vector<Vec> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(both, dim) == ra;
}

bool in_span(const Vec& v, const std::vector<Vec>& basis) {
  if (is_zero_vec(v)) return true;
  std::vector<Vec> with = basis;
  with.push_back(v);
  return span_rank(with, v.size()) == span_rank(basis, v.size());
}

}  // namespace twistcat
