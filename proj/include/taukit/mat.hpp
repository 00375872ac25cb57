#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taukit/field.hpp"

namespace taukit {

// Dense exact matrix over a Field. Deterministic pivoting: first nonzero
// entry in column order. Zero-row and zero-column matrices are valid.
class Mat {
 public:
  Mat() : field_(Field::rational()), rows_(0), cols_(0) {}
  Mat(Field f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, mpq_class(0)) {}

  static Mat identity(Field f, int n);
  static Mat from_rows(Field f, const std::vector<std::vector<mpq_class>>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  mpq_class& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const mpq_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  void set(int i, int j, const mpq_class& v) { at(i, j) = field_.reduce(v); }

  bool is_zero() const;
  bool operator==(const Mat& o) const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const mpq_class& c) const;
  Mat transpose() const;
  Mat power(long e) const;  // square matrices

  Mat row(int i) const;
  std::vector<mpq_class> row_vec(int i) const;

  // stacking
  static Mat vstack(const Mat& top, const Mat& bottom);
  static Mat hstack(const Mat& left, const Mat& right);

  mpq_class trace() const;

  std::string str() const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<mpq_class> a_;
};

struct RrefResult {
  Mat reduced;
  int rank = 0;
  std::vector<int> pivots;  // pivot column indices, increasing
};

RrefResult rref(const Mat& m);
int rank(const Mat& m);

// Columns form a basis of {x : m x = 0}. Result is cols(m) x (cols - rank).
Mat kernel_basis(const Mat& m);

// Rows form a basis of {x : x m = 0}. Result is (rows - rank) x rows(m).
Mat left_kernel_basis(const Mat& m);

// Solve m x = b for a column vector b (given as rows(m) x 1 Mat).
std::optional<Mat> solve(const Mat& m, const Mat& b);

// Solve x m = b where b is 1 x cols(m); returns 1 x rows(m).
std::optional<Mat> solve_left(const Mat& m, const Mat& b);

// Solve X m = b for a whole matrix b (cols(b) == cols(m)); X is rows(b) x rows(m).
std::optional<Mat> solve_left_all(const Mat& m, const Mat& b);

// Basis of the row space: the nonzero rows of the rref.
Mat row_space_basis(const Mat& m);

// Reduce v (1 x n) against an rref basis; returns the residue.
Mat reduce_row_mod(const RrefResult& basis, const Mat& v);

std::optional<Mat> inverse(const Mat& m);

}  // namespace taukit
