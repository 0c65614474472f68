#pragma once

#include <memory>

#include "weakhopf/algebra.hpp"

namespace weakhopf {

enum class Side { Left, Right };

using StructurePtr = std::shared_ptr<const WeakBialgebra>;

// Left: h·a, act is dim_A x (dim_H*dim_A) with column h*dim_A + a.
// Right: a↼h, act is dim_A x (dim_A*dim_H) with column a*dim_H + h.
// h is the acting structure, a the acted-on algebra.
struct ActionData {
  StructurePtr h;
  StructurePtr a;
  Mat act;
  Side side = Side::Left;
};

// Right: ρ(c) = c⁰⊗c¹ in C⊗A, coact is (dim_C*dim_A) x dim_C.
// Left: ρ(c) = c⁻¹⊗c⁰ in A⊗C, coact is (dim_A*dim_C) x dim_C.
// h is the coacted coalgebra C, a the coacting algebra.
struct CoactionData {
  StructurePtr h;
  StructurePtr a;
  Mat coact;
  Side side = Side::Right;
};

StructurePtr share(WeakBialgebra wb);

// Unitality, multiplicativity, associativity, the unit condition, and the two
// absorption rules for elements of H_t and H_s.
CheckReport check_module_algebra(const ActionData& act);
// Counitality, comultiplicativity, coassociativity and the source condition.
CheckReport check_comodule_coalgebra(const CoactionData& co);

// h·a = λ(h)a; throws InvalidLambda naming the violated condition.
ActionData make_lambda_action(StructurePtr h, StructurePtr a, const Mat& lambda);
// No validation: used to push rejected candidates through the checker.
ActionData lambda_action_unchecked(StructurePtr h, StructurePtr a, const Mat& lambda);
// Returns the first violated λ condition, or an empty string.
std::string lambda_violation(const WeakBialgebra& h, const Mat& lambda);

// ρ(h) = h⊗z; throws InvalidZ naming the violated condition.
CoactionData make_z_coaction(StructurePtr h, StructurePtr a, const Mat& z);
CoactionData z_coaction_unchecked(StructurePtr h, StructurePtr a, const Mat& z);
std::string z_violation(const WeakBialgebra& a, const Mat& z);

// H acting on itself by multiplication, coacting on itself by Δ.
ActionData multiplication_action(StructurePtr h);
CoactionData comultiplication_coaction(StructurePtr h);

// From a right coaction of A on H: the right action (φ↼f)(h) = f(h¹)φ(h⁰) of A* on H*.
ActionData dual_action_from_coaction(const CoactionData& co, StructurePtr h_dual, StructurePtr a_dual);
// From a left action of H on A: the left coaction ρ(f) = Σ h_i*⊗(f↼h_i) of H* on A*.
CoactionData dual_coaction_from_action(const ActionData& act, StructurePtr h_dual, StructurePtr a_dual);

// Rewrites mirrored data as left action / right coaction over the
// opposite-coopposite structures (h_std, a_std supplied by the caller).
ActionData to_standard(const ActionData& act, StructurePtr h_std, StructurePtr a_std);
CoactionData to_standard(const CoactionData& co, StructurePtr h_std, StructurePtr a_std);
WeakBialgebra opposite_coopposite(const WeakBialgebra& wb);

// Extensions to the structures with an adjoined unit: the new unit acts
// as the identity, h·1' = ε(h)1', ρ(1') = (1'-e)⊗(1'-e) + e⊗e.
ActionData kaplansky_action(const ActionData& base, StructurePtr h_ext, StructurePtr a_ext);
CoactionData kaplansky_coaction(const CoactionData& base, StructurePtr h_ext, StructurePtr a_ext);

}  // namespace weakhopf
