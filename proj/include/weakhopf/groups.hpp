#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace weakhopf {

class FiniteGroupTable {
 public:
  // Validates the group axioms; throws InvalidGroup.
  explicit FiniteGroupTable(std::vector<std::vector<std::size_t>> mult, std::vector<std::string> labels = {});

  static FiniteGroupTable cyclic(std::size_t n);
  static FiniteGroupTable symmetric(std::size_t n);
  // "C2xC3", "C1", "S3"
  static FiniteGroupTable parse(std::string_view spec);

  std::size_t order() const { return mult_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return mult_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t identity() const { return identity_; }
  bool abelian() const { return abelian_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& table() const { return mult_; }

 private:
  std::vector<std::vector<std::size_t>> mult_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  bool abelian_ = true;
  std::vector<std::string> labels_;
};

// element (a, b) has index a*|B| + b
FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);

// Cosets are ordered by their smallest element. Throws NotSubgroup.
FiniteGroupTable group_quotient(const FiniteGroupTable& g, const std::vector<std::size_t>& subgroup);

}  // namespace weakhopf
