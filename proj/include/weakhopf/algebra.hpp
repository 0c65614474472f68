#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "weakhopf/error.hpp"
#include "weakhopf/report.hpp"

namespace weakhopf {

// mult is dim x dim^2 (column i*dim+j holds e_i e_j), unit is dim x 1.
struct FDAlgebraData {
  std::size_t dim = 0;
  Mat mult;
  Mat unit;
};

// comult is dim^2 x dim (column i holds Δ(e_i)), counit is 1 x dim.
struct FDCoalgebraData {
  std::size_t dim = 0;
  Mat comult;
  Mat counit;
};

struct WeakBialgebra {
  FDAlgebraData alg;
  FDCoalgebraData coalg;
  std::vector<std::string> labels;

  std::size_t dim() const { return alg.dim; }
  Field field() const { return alg.mult.field(); }
};

struct WeakHopfAlgebra {
  WeakBialgebra wb;
  Mat antipode;  // column i holds S(e_i)

  std::size_t dim() const { return wb.dim(); }
  Field field() const { return wb.field(); }
};

// Throws DimensionMismatch when the matrices do not fit together.
void check_shapes(const WeakBialgebra& wb);

// Evaluates structure maps on named tensor legs. Each method consumes the
// named input legs and adds the output legs.
class Sweedler {
 public:
  explicit Sweedler(const WeakBialgebra& wb, const std::optional<Mat>& antipode = std::nullopt);

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }

  Tensor e(const std::string& leg, std::size_t i) const { return Tensor::basis(field_, leg, dim_, i); }
  Tensor vec(const std::string& leg, const Mat& v) const { return Tensor::vector(leg, v); }
  Tensor one(const std::string& leg) const { return Tensor::vector(leg, unit_); }
  // Δ(1)
  Tensor one_one(const std::string& l1, const std::string& l2) const;

  Tensor mul(const Tensor& t, const std::string& a, const std::string& b, const std::string& out) const;
  Tensor comul(const Tensor& t, const std::string& in, const std::string& o1, const std::string& o2) const;
  Tensor counit(const Tensor& t, const std::string& in) const;
  Tensor eps_t(const Tensor& t, const std::string& in, const std::string& out) const;
  Tensor eps_s(const Tensor& t, const std::string& in, const std::string& out) const;
  Tensor eps_s_prime(const Tensor& t, const std::string& in, const std::string& out) const;
  Tensor antipode(const Tensor& t, const std::string& in, const std::string& out) const;
  Tensor map(const LinMap& m, const Tensor& t, const std::string& in, const std::string& out) const;

  const Mat& eps_t_matrix() const { return eps_t_mat_; }
  const Mat& eps_s_matrix() const { return eps_s_mat_; }
  const Mat& eps_s_prime_matrix() const { return eps_sp_mat_; }
  bool has_antipode() const { return has_antipode_; }

 private:
  Field field_;
  std::size_t dim_;
  Mat unit_;
  LinMap mult_, comult_, counit_, eps_t_, eps_s_, eps_sp_, s_;
  Mat eps_t_mat_, eps_s_mat_, eps_sp_mat_;
  bool has_antipode_ = false;
};

CheckReport check_algebra(const FDAlgebraData& alg);
CheckReport check_coalgebra(const FDCoalgebraData& coalg);
CheckReport check_weak_bialgebra(const WeakBialgebra& wb);

// ε_t(h) = ε(1_1 h)1_2, ε_s(h) = 1_1 ε(h 1_2), ε_s'(h) = ε(h 1_1)1_2
Mat eps_t(const WeakBialgebra& wb);
Mat eps_s(const WeakBialgebra& wb);
Mat eps_s_prime(const WeakBialgebra& wb);

CheckReport identity_suite(const WeakBialgebra& wb, const std::optional<Mat>& antipode = std::nullopt);
CheckReport verify_antipode(const WeakBialgebra& wb, const Mat& antipode);

class UnderdeterminedAntipode : public Error {
 public:
  explicit UnderdeterminedAntipode(std::size_t dimension)
      : Error(Errc::Underdetermined, "antipode solution space has dimension " + std::to_string(dimension)),
        dimension_(dimension) {}
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
};

// Solves the antipode axioms as one linear system in the entries of S.
// Throws NoAntipode or UnderdeterminedAntipode.
Mat solve_antipode(const WeakBialgebra& wb);

struct HopfCriterion {
  // Δ(1)=1⊗1; ε multiplicative; h_1S(h_2)=ε(h)1; S(h_1)h_2=ε(h)1; H_t=H_s=k1
  std::array<bool, 5> conditions{};
  bool agree = false;
  CheckReport report;
  bool is_hopf() const { return agree && conditions[0]; }
};
HopfCriterion hopf_criterion(const WeakHopfAlgebra& h);

bool is_commutative(const WeakBialgebra& wb);
bool is_cocommutative(const WeakBialgebra& wb);
WeakBialgebra opposite(const WeakBialgebra& wb);
WeakBialgebra coopposite(const WeakBialgebra& wb);

// Full validation of a weak Hopf algebra (bialgebra axioms, antipode, identities).
CheckReport validate(const WeakHopfAlgebra& h);

}  // namespace weakhopf
