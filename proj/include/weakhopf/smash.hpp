#pragma once

#include <optional>

#include "weakhopf/matched.hpp"

namespace weakhopf {

// Ambient space A⊗H with basis index x*dim_H + h.
struct SmashData {
  MatchedPairData mp;
  std::size_t dim_a = 0;
  std::size_t dim_h = 0;
  // (x#h)(y#g) = x(h_1·y)#h_2g, Δ(x#h) = x_1#h_1⁰ ⊗ x_2h_1¹#h_2, unit 1#1, ε(x)ε(h)
  WeakBialgebra ambient;
  Mat p_under;  // x#h -> x(h_1·1)#h_2
  Mat p_over;   // x#h -> x_1ε(x_2h¹)#h⁰
  Mat p;        // p_over * p_under

  // filled by extract_subspace
  std::vector<std::size_t> pivots;
  Mat basis;  // ambient coordinates of the embedded basis, one column each
  std::optional<WeakBialgebra> sub;
  // filled by build_antipode
  std::optional<Mat> antipode;

  std::size_t ambient_dim() const { return dim_a * dim_h; }
  std::size_t dim() const { return basis.cols(); }
  // ambient vector P(x⊗h)
  Mat embed(const Mat& x, const Mat& h) const;
  // coordinates on the embedded basis of a vector in the image of P
  Mat coords(const Mat& ambient_vec) const;
  WeakHopfAlgebra hopf() const;
};

// Throws NotCompatible unless the pair is a compatible weak matched pair.
SmashData build_ambient(const MatchedPairData& mp);

// Basis from the leftmost pivot columns of P and the induced structure.
// Throws WellDefinednessFailure when a structure map does not factor through P.
SmashData extract_subspace(SmashData sd);

// Ambient bialgebra axioms; the unit and counit items are expected to fail
// outside the Hopf case.
CheckReport check_ambient(const SmashData& sd);

// Projection identities, generator formulas, the weak bialgebra axioms of the
// subspace, and the exchange identities behind them.
CheckReport check_smash_bialgebra(const SmashData& sd);

// The two antipode compatibility conditions and the counit exchange identity.
// Throws PreconditionUnmet when an antipode of H or A is missing.
CheckReport check_antipode_conditions(const SmashData& sd);

// S(x##h) = (1##S_H(h⁰))(S_A(xh¹)##1). Throws WellDefinednessFailure or
// AntipodeAxiomFailure.
SmashData build_antipode(SmashData sd);

// build_ambient, extract_subspace and, when both antipodes are known, build_antipode.
SmashData build_smash(const MatchedPairData& mp, bool with_antipode = true);

}  // namespace weakhopf
