#include "weakhopf/report.hpp"

#include <algorithm>

#include "weakhopf/error.hpp"

namespace weakhopf {

void CheckReport::add_all(const CheckReport& other, const std::string& prefix) {
  for (auto item : other.items_) {
    item.id = prefix + item.id;
    items_.push_back(std::move(item));
  }
}

void CheckReport::add_flag(const std::string& id, bool pass, std::vector<Scalar> residual_if_fail) {
  CheckItem item{id, pass, std::nullopt, std::nullopt};
  if (!pass) {
    if (residual_if_fail.empty()) residual_if_fail.push_back(Scalar(Field::rationals(), 1));
    item.residual = std::move(residual_if_fail);
  }
  items_.push_back(std::move(item));
}

bool CheckReport::all_passed() const {
  return std::all_of(items_.begin(), items_.end(), [](const CheckItem& i) { return i.pass; });
}

const CheckItem* CheckReport::find(const std::string& id) const {
  for (const auto& i : items_)
    if (i.id == id) return &i;
  return nullptr;
}

bool CheckReport::passed(const std::string& id) const {
  const CheckItem* i = find(id);
  if (!i) throw Error(Errc::BadParams, "report has no item '" + id + "'");
  return i->pass;
}

std::vector<std::string> CheckReport::failures() const {
  std::vector<std::string> out;
  for (const auto& i : items_)
    if (!i.pass) out.push_back(i.id);
  return out;
}

CheckItem check_identity(const std::string& id, const std::vector<std::size_t>& dims,
                         const std::vector<std::string>& out_legs, const TupleEval& lhs, const TupleEval& rhs) {
  std::vector<std::size_t> t(dims.size(), 0);
  for (auto d : dims)
    if (d == 0) return {id, true, std::nullopt, std::nullopt};
  for (;;) {
    Tensor diff = lhs(t) - rhs(t);
    if (!diff.is_zero()) {
      CheckItem item{id, false, std::nullopt, diff.dense(out_legs)};
      if (!dims.empty()) item.witness = t;
      return item;
    }
    std::size_t k = dims.size();
    while (k > 0) {
      --k;
      if (++t[k] < dims[k]) break;
      t[k] = 0;
      if (k == 0) return {id, true, std::nullopt, std::nullopt};
    }
    if (dims.empty()) return {id, true, std::nullopt, std::nullopt};
  }
}

CheckItem check_equal(const std::string& id, const Mat& lhs, const Mat& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw Error(Errc::ShapeMismatch, "check '" + id + "' compares differently shaped maps");
  Mat d = lhs - rhs;
  if (d.is_zero()) return {id, true, std::nullopt, std::nullopt};
  // first column that differs becomes the witness
  for (std::size_t j = 0; j < d.cols(); ++j) {
    Mat c = d.col(j);
    if (!c.is_zero()) {
      CheckItem item{id, false, std::vector<std::size_t>{j}, c.data()};
      if (d.cols() == 1) item.witness.reset();
      return item;
    }
  }
  return {id, true, std::nullopt, std::nullopt};
}

}  // namespace weakhopf
