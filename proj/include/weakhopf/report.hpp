#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weakhopf/tensor.hpp"

namespace weakhopf {

struct CheckItem {
  std::string id;
  bool pass = true;
  std::optional<std::vector<std::size_t>> witness;
  // exact nonzero lhs - rhs at the witness; present iff the item failed
  std::optional<std::vector<Scalar>> residual;
};

class CheckReport {
 public:
  void add(CheckItem item) { items_.push_back(std::move(item)); }
  void add_all(const CheckReport& other, const std::string& prefix = "");
  // logical item (no free inputs); residual records the discrepancy when false
  void add_flag(const std::string& id, bool pass, std::vector<Scalar> residual_if_fail = {});

  const std::vector<CheckItem>& items() const { return items_; }
  bool all_passed() const;
  const CheckItem* find(const std::string& id) const;
  bool passed(const std::string& id) const;
  std::vector<std::string> failures() const;

 private:
  std::vector<CheckItem> items_;
};

using TupleEval = std::function<Tensor(std::span<const std::size_t>)>;

// Compares lhs and rhs on every basis tuple of the given dimensions, in
// lexicographic order. The first mismatch becomes the witness.
CheckItem check_identity(const std::string& id, const std::vector<std::size_t>& dims,
                         const std::vector<std::string>& out_legs, const TupleEval& lhs, const TupleEval& rhs);

// Whole-map equality; residual is the flattened difference.
CheckItem check_equal(const std::string& id, const Mat& lhs, const Mat& rhs);

}  // namespace weakhopf
