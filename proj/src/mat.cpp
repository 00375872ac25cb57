#include "taukit/mat.hpp"

#include <sstream>

namespace taukit {

Mat Mat::identity(Field f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<mpq_class>>& rows, int cols) {
  Mat m(f, static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw std::invalid_argument("ragged row in matrix literal");
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = f.reduce(rows[i][j]);
  }
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Mat r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpq_class& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  for (auto& x : r.a_) x = field_.reduce(x);
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
  return r;
}

Mat Mat::scaled(const mpq_class& c) const {
  Mat r = *this;
  for (auto& x : r.a_) x = field_.mul(x, c);
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::power(long e) const {
  if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
  Mat acc = identity(field_, rows_);
  Mat base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Mat Mat::row(int i) const {
  Mat r(field_, 1, cols_);
  for (int j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
  return r;
}

std::vector<mpq_class> Mat::row_vec(int i) const {
  std::vector<mpq_class> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Mat Mat::vstack(const Mat& top, const Mat& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack column mismatch");
  Mat r(top.field(), top.rows() + bottom.rows(), top.cols());
  for (int i = 0; i < top.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) r.at(i, j) = top.at(i, j);
  for (int i = 0; i < bottom.rows(); ++i)
    for (int j = 0; j < bottom.cols(); ++j) r.at(top.rows() + i, j) = bottom.at(i, j);
  return r;
}

Mat Mat::hstack(const Mat& left, const Mat& right) {
  if (left.rows() != right.rows()) throw std::invalid_argument("hstack row mismatch");
  Mat r(left.field(), left.rows(), left.cols() + right.cols());
  for (int i = 0; i < left.rows(); ++i) {
    for (int j = 0; j < left.cols(); ++j) r.at(i, j) = left.at(i, j);
    for (int j = 0; j < right.cols(); ++j) r.at(i, left.cols() + j) = right.at(i, j);
  }
  return r;
}

mpq_class Mat::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  mpq_class t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return field_.reduce(t);
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) {
      os << at(i, j).get_str();
      if (j + 1 < cols_) os << ",";
    }
    os << "]";
    if (i + 1 < rows_) os << ",";
  }
  os << "]";
  return os.str();
}

RrefResult rref(const Mat& m) {
  const Field& f = m.field();
  Mat r = m;
  std::vector<int> pivots;
  int pr = 0;
  for (int c = 0; c < r.cols() && pr < r.rows(); ++c) {
    int sel = -1;
    for (int i = pr; i < r.rows(); ++i)
      if (r.at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != pr)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(pr, j));
    mpq_class piv = f.inv(r.at(pr, c));
    for (int j = c; j < r.cols(); ++j) r.at(pr, j) = f.mul(r.at(pr, j), piv);
    for (int i = 0; i < r.rows(); ++i) {
      if (i == pr || r.at(i, c) == 0) continue;
      mpq_class fac = r.at(i, c);
      for (int j = c; j < r.cols(); ++j) r.at(i, j) = f.sub(r.at(i, j), f.mul(fac, r.at(pr, j)));
    }
    pivots.push_back(c);
    ++pr;
  }
  return RrefResult{std::move(r), static_cast<int>(pivots.size()), std::move(pivots)};
}

int rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
  RrefResult rr = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Mat k(f, m.cols(), static_cast<int>(free_cols.size()));
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    int fc = free_cols[fi];
    k.at(fc, static_cast<int>(fi)) = 1;
    for (int pr = 0; pr < rr.rank; ++pr) k.at(rr.pivots[pr], static_cast<int>(fi)) = f.neg(rr.reduced.at(pr, fc));
  }
  return k;
}

Mat left_kernel_basis(const Mat& m) { return kernel_basis(m.transpose()).transpose(); }

std::optional<Mat> solve(const Mat& m, const Mat& b) {
  if (b.rows() != m.rows() || b.cols() != 1) throw std::invalid_argument("solve: rhs dimension mismatch");
  RrefResult rr = rref(Mat::hstack(m, b));
  for (int p : rr.pivots)
    if (p == m.cols()) return std::nullopt;  // inconsistent
  Mat x(m.field(), m.cols(), 1);
  for (int i = 0; i < rr.rank; ++i) x.at(rr.pivots[i], 0) = rr.reduced.at(i, m.cols());
  return x;
}

std::optional<Mat> solve_left(const Mat& m, const Mat& b) {
  auto x = solve(m.transpose(), b.transpose());
  if (!x) return std::nullopt;
  return x->transpose();
}

std::optional<Mat> solve_left_all(const Mat& m, const Mat& b) {
  if (b.cols() != m.cols()) throw std::invalid_argument("solve_left_all: dimension mismatch");
  Mat x(m.field(), b.rows(), m.rows());
  for (int i = 0; i < b.rows(); ++i) {
    auto xi = solve_left(m, b.row(i));
    if (!xi) return std::nullopt;
    for (int j = 0; j < m.rows(); ++j) x.at(i, j) = xi->at(0, j);
  }
  return x;
}

Mat row_space_basis(const Mat& m) {
  RrefResult rr = rref(m);
  Mat r(m.field(), rr.rank, m.cols());
  for (int i = 0; i < rr.rank; ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = rr.reduced.at(i, j);
  return r;
}

Mat reduce_row_mod(const RrefResult& basis, const Mat& v) {
  const Field& f = v.field();
  Mat r = v;
  for (int i = 0; i < basis.rank; ++i) {
    int p = basis.pivots[i];
    if (r.at(0, p) == 0) continue;
    mpq_class c = r.at(0, p);
    for (int j = 0; j < r.cols(); ++j) r.at(0, j) = f.sub(r.at(0, j), f.mul(c, basis.reduced.at(i, j)));
  }
  return r;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  RrefResult rr = rref(Mat::hstack(m, Mat::identity(m.field(), m.rows())));
  if (rr.rank != m.rows()) return std::nullopt;
  for (int i = 0; i < rr.rank; ++i)
    if (rr.pivots[i] != i) return std::nullopt;
  Mat inv(m.field(), m.rows(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.rows(); ++j) inv.at(i, j) = rr.reduced.at(i, m.cols() + j);
  return inv;
}

}  // namespace taukit
