#include "weakhopf/matrix.hpp"

#include "weakhopf/error.hpp"

namespace weakhopf {

namespace {

void same_field(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field())) throw Error(Errc::FieldMismatch, "matrices over different fields");
}

std::string shape(const Mat& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }

}  // namespace

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar(f)) {}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(f, 1);
  return m;
}

Mat Mat::column(Field f, const std::vector<Scalar>& v) {
  Mat m(f, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Mat Mat::row(Field f, const std::vector<Scalar>& v) {
  Mat m(f, 1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
  return m;
}

Mat Mat::unit_column(Field f, std::size_t n, std::size_t i) {
  Mat m(f, n, 1);
  m(i, 0) = Scalar(f, 1);
  return m;
}

Mat Mat::operator*(const Mat& b) const {
  same_field(*this, b);
  if (cols_ != b.rows_) throw Error(Errc::ShapeMismatch, shape(*this) + " * " + shape(b));
  Mat r(field_, rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& c = b(k, j);
        if (!c.is_zero()) r(i, j) += a * c;
      }
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& b) const {
  same_field(*this, b);
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(Errc::ShapeMismatch, shape(*this) + " + " + shape(b));
  Mat r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Mat Mat::operator-(const Mat& b) const {
  same_field(*this, b);
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(Errc::ShapeMismatch, shape(*this) + " - " + shape(b));
  Mat r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat r(*this);
  for (auto& x : r.data_) x *= s;
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::col(std::size_t j) const { return select_cols({j}); }

Mat Mat::select_cols(const std::vector<std::size_t>& cols) const {
  Mat r(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols.size(); ++k) r(i, k) = (*this)(i, cols[k]);
  return r;
}

Mat Mat::hconcat(const Mat& b) const {
  same_field(*this, b);
  if (rows_ != b.rows_) throw Error(Errc::ShapeMismatch, shape(*this) + " | " + shape(b));
  Mat r(field_, rows_, cols_ + b.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) r(i, cols_ + j) = b(i, j);
  }
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Mat kron(const Mat& a, const Mat& b) {
  same_field(a, b);
  Mat r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return r;
}

Mat twist(Field f, std::size_t dim_v, std::size_t dim_w) {
  Mat r(f, dim_v * dim_w, dim_v * dim_w);
  for (std::size_t i = 0; i < dim_v; ++i)
    for (std::size_t j = 0; j < dim_w; ++j) r(j * dim_v + i, i * dim_w + j) = Scalar(f, 1);
  return r;
}

Echelon rref(Mat a) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    Scalar inv = a(r, c).inv();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(a);
  return e;
}

std::size_t rank(const Mat& a) { return rref(a).pivots.size(); }

std::vector<std::size_t> pivot_columns(const Mat& a) { return rref(a).pivots; }

Mat kernel_basis(const Mat& a) {
  Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Mat k(a.field(), a.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = Scalar(a.field(), 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free[f]);
  }
  return k;
}

Mat image_basis(const Mat& a) { return a.select_cols(rref(a).pivots); }

std::optional<Mat> solve(const Mat& a, const Mat& rhs) {
  same_field(a, rhs);
  if (a.rows() != rhs.rows()) throw Error(Errc::ShapeMismatch, shape(a) + " \\ " + shape(rhs));
  Echelon e = rref(a.hconcat(rhs));
  Mat x(a.field(), a.cols(), rhs.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
  }
  return x;
}

}  // namespace weakhopf
