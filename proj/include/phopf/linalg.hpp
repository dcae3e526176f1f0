#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "phopf/scalar.hpp"

namespace phopf {

using Vec = std::vector<Scalar>;
// Sparse vectors keep only nonzero coordinates, keyed by ascending index.
using SparseVec = std::map<std::size_t, Scalar>;
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

Vec zeros(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);
// Tensor product with the first factor major: (a⊗b)[i*|b|+j] = a[i]b[j].
Vec kron(const Vec& a, const Vec& b);

void sp_add(SparseVec& v, std::size_t i, const Scalar& c);
void sp_axpy(SparseVec& y, const Scalar& a, const SparseVec& x);
SparseVec sp_scale(const Scalar& a, const SparseVec& x);
SparseVec sparse(const Vec& v);
Vec dense(const SparseVec& v, std::size_t n);
SparseVec sp_kron(const SparseVec& a, std::size_t dim_b, const SparseVec& b);
SparseRow to_row(const SparseVec& v);
SparseVec from_row(const SparseRow& r);

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  static Mat identity(std::size_t n);
  static Mat from_columns(std::size_t rows, const std::vector<Vec>& cols);
  static Mat from_rows(std::size_t cols, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  Vec apply(const Vec& x) const;
  SparseVec apply(const SparseVec& x) const;
  Mat transpose() const;
  std::size_t rank() const;
  bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Mat operator*(const Scalar& c, const Mat& m);

// Row space in canonical (fully reduced, pivot-normalized) echelon form.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0);
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace span(std::size_t ambient, const std::vector<SparseVec>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<SparseRow>& rows() const { return rows_; }
  Vec basis_vector(std::size_t i) const;
  Mat basis() const;  // dim × ambient
  Mat embedding() const;  // ambient × dim, columns are the basis vectors

  // Remainder after subtracting the component along pivots; zero iff v lies in the span.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const SparseVec& v) const;
  std::optional<Vec> coordinates(const Vec& v) const;
  std::optional<Vec> coordinates(const SparseVec& v) const;
  // Index of the row with this pivot column, or -1.
  std::int64_t row_of_pivot(std::size_t col) const { return pivot_row_[col]; }

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  friend class SubspaceBuilder;
  std::size_t ambient_ = 0;
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> pivot_row_;
};

class SubspaceBuilder {
 public:
  explicit SubspaceBuilder(std::size_t ambient);
  // Returns true when v enlarged the span.
  bool add(SparseVec v);
  bool add(const Vec& v) { return add(sparse(v)); }
  std::size_t dim() const { return rows_.size(); }
  Subspace finish() &&;

 private:
  std::size_t ambient_;
  std::vector<SparseRow> rows_;
  std::vector<std::int64_t> pivot_row_;
};

class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(std::size_t ambient, Subspace relations);

  std::size_t ambient_dim() const { return relations_.ambient_dim(); }
  std::size_t dim() const { return free_.size(); }
  const Subspace& relations() const { return relations_; }
  // Ambient index represented by each quotient basis vector (ascending).
  const std::vector<std::size_t>& free_columns() const { return free_; }

  SparseVec project(const SparseVec& v) const;
  Vec project(const Vec& v) const;
  SparseVec section(const SparseVec& q) const;
  Vec section(const Vec& q) const;
  // Quotient coordinate of an ambient basis vector that is itself a quotient basis vector, or -1.
  std::int64_t coord_of(std::size_t col) const { return coord_[col]; }
  Mat projection() const;
  Mat section_matrix() const;

 private:
  Subspace relations_;
  std::vector<std::size_t> free_;
  std::vector<std::int64_t> coord_;
};

std::pair<Mat, std::vector<std::size_t>> rref(const Mat& m);
Subspace kernel(const Mat& m);
Subspace image(const Mat& m);
QuotientSpace quotient_by(std::size_t ambient, const Subspace& rels);
// Solves m x = b; nullopt when inconsistent. The returned solution sets free variables to 0.
std::optional<Vec> solve(const Mat& m, const Vec& b);

}  // namespace phopf

namespace phopf {
std::optional<Mat> inverse(const Mat& m);
}  // namespace phopf

namespace phopf {
std::vector<SparseVec> sparse_columns(const Mat& m);
}  // namespace phopf
