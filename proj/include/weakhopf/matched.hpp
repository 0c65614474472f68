#pragma once

#include <optional>

#include "weakhopf/interact.hpp"

namespace weakhopf {

// A left H-module algebra A together with a right A-comodule coalgebra H,
// or the mirrored shape (right module algebra, left comodule coalgebra)
// produced by build_dual_matched_pair.
struct MatchedPairData {
  ActionData act;
  CoactionData co;
  std::optional<Mat> s_h;  // antipodes, when known
  std::optional<Mat> s_a;
  std::optional<bool> abelian;
  std::optional<bool> compatible;

  const WeakBialgebra& h() const { return *act.h; }
  const WeakBialgebra& a() const { return *act.a; }
  bool mirrored() const { return act.side == Side::Right; }
};

// Checks that act and co refer to structures of matching dimensions.
MatchedPairData make_matched_pair(ActionData act, CoactionData co, std::optional<Mat> s_h = std::nullopt,
                                  std::optional<Mat> s_a = std::nullopt);

// Module algebra, comodule coalgebra, coaction-action exchange, source of the
// action and coaction of the unit. Throws InvalidComponent
// when the action or coaction alone is invalid.
CheckReport check_weak_matched_pair(const MatchedPairData& mp);

struct AbelianFlags {
  bool h_cocommutative = false;
  bool a_commutative = false;
  bool abelian() const { return h_cocommutative && a_commutative; }
};
AbelianFlags check_abelian(const MatchedPairData& mp);

// The two unit-action compatibility identities and the four derived ones.
// Throws NotAbelian or NotMatched.
CheckReport check_compatible(const MatchedPairData& mp);

// ε_t(h·x) = ε_t(h·1)ε_t(x); throws PreconditionUnmet unless the source-of-action condition holds
// and A is commutative.
CheckReport check_target_of_action(const MatchedPairData& mp);

// (A*, H*) with H* a right A*-module algebra and A* a left H*-comodule
// coalgebra. Throws NotMatched.
MatchedPairData build_dual_matched_pair(const MatchedPairData& mp);

// Classical matched pair of bialgebras: all six conditions.
CheckReport check_classical_matched_pair(const MatchedPairData& mp);

// Sets the abelian and compatible flags.
void classify(MatchedPairData& mp);

}  // namespace weakhopf
