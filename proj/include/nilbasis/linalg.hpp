#ifndef NILBASIS_LINALG_HPP
#define NILBASIS_LINALG_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "nilbasis/scalar.hpp"

namespace nb {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(int n) { return Vec(static_cast<size_t>(n)); }
inline Vec unit_vec(int n, int i) {
  Vec v = zero_vec(n);
  v[static_cast<size_t>(i)] = Scalar(1);
  return v;
}
inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}
inline Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
inline Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
inline Vec scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}
inline Vec neg(const Vec& v) { return scale(Scalar(-1), v); }
inline Scalar dot(const Vec& a, const Vec& b) {
  Scalar s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Dense exact matrix. Row-major.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols)) {}
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }
  static Mat from_rows(const std::vector<Vec>& rows) {
    Mat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
  }
  static Mat from_cols(const std::vector<Vec>& cols) {
    Mat m(cols.empty() ? 0 : static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int i, int j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
  const Scalar& operator()(int i, int j) const { return data_[static_cast<size_t>(i * cols_ + j)]; }

  Vec row(int i) const {
    Vec v(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = (*this)(i, j);
    return v;
  }
  Vec col(int j) const {
    Vec v(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = (*this)(i, j);
    return v;
  }

  Mat operator*(const Mat& o) const {
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Scalar& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }
  Vec apply(const Vec& v) const {
    Vec r(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(i)] += (*this)(i, j) * v[static_cast<size_t>(j)];
    return r;
  }
  Mat transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

private:
  int rows_, cols_;
  std::vector<Scalar> data_;
};

/// Row echelon form in place with first-nonzero pivot choice (deterministic;
/// arithmetic is exact so stability is a non-issue). Returns pivot columns.
inline std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (int j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank(Mat m) { return static_cast<int>(rref(m).size()); }

inline Scalar det(Mat m) {
  if (m.rows() != m.cols()) throw InputError("det of non-square matrix");
  Scalar d(1);
  for (int c = 0; c < m.cols(); ++c) {
    int p = -1;
    for (int i = c; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) { p = i; break; }
    if (p < 0) return Scalar(0);
    if (p != c) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (int i = c + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

inline Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw SingularMatrix("inverse of non-square matrix");
  int n = m.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) != n || piv.back() >= n)
    throw SingularMatrix("matrix is singular");
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Basis of the kernel {v : m v = 0}.
inline std::vector<Vec> kernel(Mat m) {
  int n = m.cols();
  auto piv = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int c : piv) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Vec v = zero_vec(n);
    v[static_cast<size_t>(free)] = Scalar(1);
    for (size_t r = 0; r < piv.size(); ++r)
      v[static_cast<size_t>(piv[r])] = -m(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Subspace of coordinate vectors, held as generators plus their exact row
/// echelon form. Membership tests and dimension are exact.
class Subspace {
public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}
  Subspace(int ambient_dim, std::vector<Vec> gens)
      : ambient_(ambient_dim), generators_(std::move(gens)) {
    reduce();
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(reduced_.size()); }
  const std::vector<Vec>& generators() const { return generators_; }
  const std::vector<Vec>& reduced_basis() const { return reduced_; }

  bool contains(const Vec& v) const {
    Vec w = v;
    for (const auto& row : reduced_) {
      // reduced_ rows have leading 1 at pivot columns
      int p = pivot_of(row);
      if (!w[static_cast<size_t>(p)].is_zero()) {
        Scalar f = w[static_cast<size_t>(p)];
        for (size_t j = 0; j < w.size(); ++j) w[j] -= f * row[j];
      }
    }
    return is_zero(w);
  }
  bool contains(const Subspace& other) const {
    for (const auto& g : other.reduced_) {
      if (!contains(g)) return false;
    }
    return true;
  }

private:
  static int pivot_of(const Vec& row) {
    for (size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) return static_cast<int>(j);
    return -1;
  }
  void reduce() {
    if (generators_.empty()) return;
    Mat m = Mat::from_rows(generators_);
    rref(m);
    for (int i = 0; i < m.rows(); ++i) {
      Vec row = m.row(i);
      if (!is_zero(row)) reduced_.push_back(std::move(row));
    }
  }

  int ambient_;
  std::vector<Vec> generators_;
  std::vector<Vec> reduced_;
};

/// An exact invertible change of basis; columns are the new basis vectors in
/// old coordinates.
class BasisChange {
public:
  explicit BasisChange(Mat m) : matrix_(std::move(m)) {
    det_ = nb::det(matrix_);
    if (det_.is_zero()) throw SingularMatrix("basis change is singular");
    inverse_ = nb::inverse(matrix_);
  }
  static BasisChange identity(int n) { return BasisChange(Mat::identity(n)); }
  static BasisChange permutation(const std::vector<int>& new_to_old) {
    int n = static_cast<int>(new_to_old.size());
    Mat m(n, n);
    for (int a = 0; a < n; ++a) m(new_to_old[static_cast<size_t>(a)], a) = Scalar(1);
    return BasisChange(m);
  }

  const Mat& matrix() const { return matrix_; }
  const Mat& inverse_matrix() const { return inverse_; }
  const Scalar& det() const { return det_; }
  int dim() const { return matrix_.rows(); }

  /// Composition: apply `this` after `o` (new basis of `o` expressed via this).
  BasisChange then(const BasisChange& o) const { return BasisChange(matrix_ * o.matrix()); }

  /// Old coordinates of the a-th new basis vector.
  Vec new_basis_vector(int a) const { return matrix_.col(a); }
  /// Coordinates of an old-coordinate vector w.r.t. the new basis.
  Vec to_new(const Vec& old_coords) const { return inverse_.apply(old_coords); }
  Vec to_old(const Vec& new_coords) const { return matrix_.apply(new_coords); }

private:
  Mat matrix_, inverse_;
  Scalar det_;
};

}  // namespace nb

#endif
