#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "weakhopf/scalar.hpp"

namespace weakhopf {

// Dense row-major matrix over a single field. The basis of V⊗W is ordered
// e_i⊗f_j -> i*dim(W)+j everywhere in the library.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols);
  static Mat identity(Field f, std::size_t n);
  static Mat column(Field f, const std::vector<Scalar>& v);
  static Mat row(Field f, const std::vector<Scalar>& v);
  static Mat unit_column(Field f, std::size_t n, std::size_t i);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const { return data_; }

  Mat operator*(const Mat& b) const;
  Mat operator+(const Mat& b) const;
  Mat operator-(const Mat& b) const;
  Mat scaled(const Scalar& s) const;
  Mat transpose() const;
  Mat col(std::size_t j) const;
  Mat select_cols(const std::vector<std::size_t>& cols) const;
  Mat hconcat(const Mat& b) const;
  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Mat kron(const Mat& a, const Mat& b);
// V⊗W -> W⊗V
Mat twist(Field f, std::size_t dim_v, std::size_t dim_w);

struct Echelon {
  Mat reduced;
  std::vector<std::size_t> pivots;
};
Echelon rref(Mat a);
std::size_t rank(const Mat& a);
// columns form a basis
Mat kernel_basis(const Mat& a);
// pivot columns of a
Mat image_basis(const Mat& a);
std::vector<std::size_t> pivot_columns(const Mat& a);
// one x with a*x = rhs, or nothing when inconsistent
std::optional<Mat> solve(const Mat& a, const Mat& rhs);

}  // namespace weakhopf
