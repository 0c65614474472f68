#pragma once

#include <optional>

#include "weakhopf/smash.hpp"

namespace weakhopf {

// Left: hα = ε_t(h)α for all h. Right: αh = αε_s(h) for all h.
struct IntegralSpace {
  Side side = Side::Left;
  Mat basis;  // columns
  std::size_t dim() const { return basis.cols(); }
};

IntegralSpace integral_space(const WeakBialgebra& h, Side side = Side::Left);
bool is_left_integral(const WeakBialgebra& h, const Mat& alpha);

struct MaschkeResult {
  bool semisimple = false;
  std::optional<Mat> witness;  // left integral with ε_t(α) = 1
};
MaschkeResult maschke_semisimple(const WeakBialgebra& h);

// h·α stays a left integral of A for every basis h. Throws NotAnIntegral.
CheckReport check_action_stability(const MatchedPairData& mp, const Mat& alpha);

// (h·α)ε_s(t_1¹(t_2·1))⊗t_1⁰ = (h⁰·1)ε_s(h¹)αε_s(t_1¹(t_2·1))⊗t_1⁰ for all basis h.
// Throws NotAnIntegral when α or t is not a left integral.
CheckReport check_cond_int(const SmashData& sd, const Mat& alpha, const Mat& t);

// Coordinates of α##t on the smash basis. Throws ConditionFails (witness h in
// the message) or NotAnIntegral.
Mat smash_integral(const SmashData& sd, const Mat& alpha, const Mat& t);

struct SmashSemisimplicity {
  bool criterion = false;  // some α, t with ε_t(α)S(t¹)(t⁰·1)##1 = 1##1
  bool direct = false;     // maschke_semisimple of the smash
  std::optional<Mat> alpha, t;
  bool agree() const { return criterion == direct; }
};
SmashSemisimplicity smash_semisimple_criterion(const SmashData& sd);

}  // namespace weakhopf
