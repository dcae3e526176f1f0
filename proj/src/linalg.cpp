#include "phopf/linalg.hpp"

#include <algorithm>

#include "phopf/errors.hpp"

namespace phopf {

Vec zeros(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

static void check_same(std::size_t a, std::size_t b, const char* op) {
  if (a != b)
    throw DimensionMismatch(std::string(op) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

Vec operator+(const Vec& a, const Vec& b) {
  check_same(a.size(), b.size(), "vector sum");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  check_same(a.size(), b.size(), "vector difference");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  check_same(y.size(), x.size(), "axpy");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

Vec kron(const Vec& a, const Vec& b) {
  Vec r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

void sp_add(SparseVec& v, std::size_t i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

void sp_axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (const auto& [i, c] : x) sp_add(y, i, a * c);
}

SparseVec sp_scale(const Scalar& a, const SparseVec& x) {
  SparseVec r;
  if (a.is_zero()) return r;
  for (const auto& [i, c] : x) r.emplace_hint(r.end(), i, a * c);
  return r;
}

SparseVec sparse(const Vec& v) {
  SparseVec r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.emplace_hint(r.end(), i, v[i]);
  return r;
}

Vec dense(const SparseVec& v, std::size_t n) {
  Vec r(n);
  for (const auto& [i, c] : v) r.at(i) = c;
  return r;
}

SparseVec sp_kron(const SparseVec& a, std::size_t dim_b, const SparseVec& b) {
  SparseVec r;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) r.emplace_hint(r.end(), i * dim_b + j, x * y);
  return r;
}

SparseRow to_row(const SparseVec& v) { return SparseRow(v.begin(), v.end()); }

SparseVec from_row(const SparseRow& r) { return SparseVec(r.begin(), r.end()); }

// ---------------------------------------------------------------- Mat

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    check_same(cols[j].size(), rows, "column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Mat Mat::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_same(rows[i].size(), cols, "row length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Mat::row(std::size_t i) const {
  return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vec Mat::apply(const Vec& x) const {
  check_same(x.size(), cols_, "matrix-vector product");
  Vec r(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) r[i] += a * x[j];
    }
  }
  return r;
}

SparseVec Mat::apply(const SparseVec& x) const {
  SparseVec r;
  for (const auto& [j, c] : x) {
    if (j >= cols_) throw DimensionMismatch("sparse vector index out of range");
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) sp_add(r, i, a * c);
    }
  }
  return r;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::size_t Mat::rank() const { return image(*this).dim(); }

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Mat operator*(const Mat& a, const Mat& b) {
  check_same(a.cols_, b.rows_, "matrix product");
  Mat r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  check_same(a.rows_, b.rows_, "matrix sum");
  check_same(a.cols_, b.cols_, "matrix sum");
  Mat r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  check_same(a.rows_, b.rows_, "matrix difference");
  check_same(a.cols_, b.cols_, "matrix difference");
  Mat r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

Mat operator*(const Scalar& c, const Mat& m) {
  Mat r = m;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) *= c;
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------- Subspace

namespace {

// Eliminates from v every coordinate sitting on a pivot of `rows`. Rows are
// echelon (entries at or after their pivot), so one ascending sweep suffices.
void eliminate(SparseVec& v, const std::vector<SparseRow>& rows,
               const std::vector<std::int64_t>& pivot_row, std::size_t from = 0) {
  auto it = v.lower_bound(from);
  while (it != v.end()) {
    std::size_t col = it->first;
    std::int64_t r = pivot_row[col];
    if (r < 0) {
      ++it;
      continue;
    }
    Scalar c = it->second;
    for (const auto& [j, x] : rows[r]) sp_add(v, j, -(c * x));
    it = v.upper_bound(col);
  }
}

}  // namespace

SubspaceBuilder::SubspaceBuilder(std::size_t ambient)
    : ambient_(ambient), pivot_row_(ambient, -1) {}

bool SubspaceBuilder::add(SparseVec v) {
  if (!v.empty() && v.rbegin()->first >= ambient_)
    throw DimensionMismatch("vector index beyond ambient dimension");
  eliminate(v, rows_, pivot_row_);
  if (v.empty()) return false;
  Scalar inv = v.begin()->second.inverse();
  SparseRow row;
  row.reserve(v.size());
  for (const auto& [j, x] : v) row.emplace_back(j, x * inv);
  pivot_row_[row.front().first] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

Subspace SubspaceBuilder::finish() && {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].front().first < rows_[b].front().first; });
  Subspace s(ambient_);
  std::size_t n = order.size();
  s.rows_.resize(n);
  s.pivots_.resize(n);
  for (std::size_t k = 0; k < n; ++k) s.pivots_[k] = rows_[order[k]].front().first;
  // Back substitution from the largest pivot upward.
  for (std::size_t k = n; k-- > 0;) {
    SparseVec v = from_row(rows_[order[k]]);
    eliminate(v, s.rows_, s.pivot_row_, s.pivots_[k] + 1);
    s.rows_[k] = to_row(v);
    s.pivot_row_[s.pivots_[k]] = static_cast<std::int64_t>(k);
  }
  return s;
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), pivot_row_(ambient, -1) {}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  SubspaceBuilder b(ambient);
  for (const auto& v : vectors) {
    check_same(v.size(), ambient, "span");
    b.add(v);
  }
  return std::move(b).finish();
}

Subspace Subspace::span(std::size_t ambient, const std::vector<SparseVec>& vectors) {
  SubspaceBuilder b(ambient);
  for (const auto& v : vectors) b.add(v);
  return std::move(b).finish();
}

Vec Subspace::basis_vector(std::size_t i) const { return dense(from_row(rows_.at(i)), ambient_); }

Mat Subspace::basis() const {
  Mat m(dim(), ambient_);
  for (std::size_t i = 0; i < dim(); ++i)
    for (const auto& [j, x] : rows_[i]) m(i, j) = x;
  return m;
}

Mat Subspace::embedding() const { return basis().transpose(); }

SparseVec Subspace::reduce(const SparseVec& v) const {
  SparseVec r;
  for (const auto& [i, c] : v) {
    if (i >= ambient_) throw DimensionMismatch("vector index beyond ambient dimension");
    std::int64_t k = pivot_row_[i];
    if (k < 0) {
      sp_add(r, i, c);
    } else {
      for (const auto& [j, x] : rows_[k])
        if (j != i) sp_add(r, j, -(c * x));
    }
  }
  return r;
}

bool Subspace::contains(const SparseVec& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Vec& v) const {
  check_same(v.size(), ambient_, "membership");
  return contains(sparse(v));
}

std::optional<Vec> Subspace::coordinates(const SparseVec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    auto it = v.find(pivots_[k]);
    if (it != v.end()) c[k] = it->second;
  }
  return c;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  check_same(v.size(), ambient_, "coordinates");
  return coordinates(sparse(v));
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
}

// ---------------------------------------------------------------- QuotientSpace

QuotientSpace::QuotientSpace(std::size_t ambient, Subspace relations)
    : relations_(std::move(relations)), coord_(ambient, -1) {
  check_same(relations_.ambient_dim(), ambient, "quotient");
  for (std::size_t j = 0; j < ambient; ++j)
    if (relations_.row_of_pivot(j) < 0) {
      coord_[j] = static_cast<std::int64_t>(free_.size());
      free_.push_back(j);
    }
}

SparseVec QuotientSpace::project(const SparseVec& v) const {
  SparseVec r;
  for (const auto& [i, c] : relations_.reduce(v)) r.emplace_hint(r.end(), coord_[i], c);
  return r;
}

Vec QuotientSpace::project(const Vec& v) const {
  check_same(v.size(), ambient_dim(), "projection");
  return dense(project(sparse(v)), dim());
}

SparseVec QuotientSpace::section(const SparseVec& q) const {
  SparseVec r;
  for (const auto& [k, c] : q) r.emplace_hint(r.end(), free_.at(k), c);
  return r;
}

Vec QuotientSpace::section(const Vec& q) const {
  check_same(q.size(), dim(), "section");
  return dense(section(sparse(q)), ambient_dim());
}

Mat QuotientSpace::projection() const {
  Mat m(dim(), ambient_dim());
  for (std::size_t j = 0; j < ambient_dim(); ++j)
    for (const auto& [k, c] : project(SparseVec{{j, Scalar(1)}})) m(k, j) = c;
  return m;
}

Mat QuotientSpace::section_matrix() const {
  Mat m(ambient_dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k) m(free_[k], k) = 1;
  return m;
}

// ---------------------------------------------------------------- free functions

std::pair<Mat, std::vector<std::size_t>> rref(const Mat& m) {
  std::vector<SparseVec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(sparse(m.row(i)));
  Subspace s = Subspace::span(m.cols(), rows);
  Mat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (const auto& [j, x] : s.rows()[i]) r(i, j) = x;
  return {r, s.pivots()};
}

Subspace image(const Mat& m) {
  std::vector<SparseVec> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(sparse(m.column(j)));
  return Subspace::span(m.rows(), cols);
}

Subspace kernel(const Mat& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<SparseVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVec v;
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) sp_add(v, pivots[k], -r(k, f));
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), basis);
}

QuotientSpace quotient_by(std::size_t ambient, const Subspace& rels) {
  return QuotientSpace(ambient, rels);
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  check_same(b.size(), m.rows(), "linear solve");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [r, pivots] = rref(aug);
  Vec x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == m.cols()) return std::nullopt;
    x[pivots[k]] = r(k, m.cols());
  }
  return x;
}

}  // namespace phopf

namespace phopf {

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [r, pivots] = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

}  // namespace phopf

namespace phopf {

std::vector<SparseVec> sparse_columns(const Mat& m) {
  std::vector<SparseVec> cols(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) cols[j].emplace(i, m(i, j));
  return cols;
}

}  // namespace phopf
