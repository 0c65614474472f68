#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weakhopf/matrix.hpp"

namespace weakhopf {

// Column-sparse view of a Mat for repeated application.
class LinMap {
 public:
  LinMap() = default;
  explicit LinMap(const Mat& m);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  Field field() const { return field_; }
  const std::vector<std::pair<std::uint32_t, Scalar>>& column(std::size_t j) const { return cols_[j]; }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> cols_;
};

struct Leg {
  std::string name;
  std::size_t dim;
};

// Sparse element of a tensor product whose factors are addressed by name.
// Sweedler expressions are evaluated by pushing legs through linear maps.
class Tensor {
 public:
  explicit Tensor(Field f) : field_(f) {}
  static Tensor scalar(const Scalar& s);
  static Tensor basis(Field f, const std::string& leg, std::size_t dim, std::size_t i);
  // v is dim x 1
  static Tensor vector(const std::string& leg, const Mat& v);
  // v is (prod dims) x 1, row-major over legs
  static Tensor reshape(const Mat& v, std::vector<Leg> legs);

  Field field() const { return field_; }
  const std::vector<Leg>& legs() const { return legs_; }
  std::size_t dim(const std::string& leg) const;
  bool has(const std::string& leg) const;
  bool is_zero() const { return entries_.empty(); }
  const std::vector<std::pair<std::uint64_t, Scalar>>& entries() const { return entries_; }

  // outer product; legs must be disjoint
  Tensor operator*(const Tensor& b) const;
  Tensor operator+(const Tensor& b) const;
  Tensor operator-(const Tensor& b) const;
  Tensor scaled(const Scalar& s) const;

  // Feeds the legs `in` (row-major in that order) into m and appends `out`.
  Tensor apply(const LinMap& m, const std::vector<std::string>& in, const std::vector<Leg>& out) const;
  Tensor apply(const Mat& m, const std::vector<std::string>& in, const std::vector<Leg>& out) const {
    return apply(LinMap(m), in, out);
  }
  Tensor rename(const std::string& from, const std::string& to) const;
  Tensor arranged(const std::vector<std::string>& order) const;
  std::vector<Scalar> dense(const std::vector<std::string>& order) const;
  // (prod dims) x 1 column in the given leg order
  Mat column(const std::vector<std::string>& order) const;

 private:
  std::size_t position(const std::string& leg) const;
  std::uint64_t total() const;

  Field field_;
  std::vector<Leg> legs_;
  std::vector<std::pair<std::uint64_t, Scalar>> entries_;  // sorted by index, nonzero
};

}  // namespace weakhopf
