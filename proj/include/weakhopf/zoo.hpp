#pragma once

#include <vector>

#include "weakhopf/algebra.hpp"
#include "weakhopf/groups.hpp"

namespace weakhopf {

// Disjoint union of groups; basis ordered by component, then table order.
using GroupoidSpec = std::vector<FiniteGroupTable>;

WeakHopfAlgebra build_groupoid_algebra(const GroupoidSpec& g, Field f);
WeakHopfAlgebra build_group_algebra(const FiniteGroupTable& g, Field f);
// group algebra with Δ(g) = (1/|G|) Σ_h gh⊗h^{-1}, ε(g) = |G|δ_{g,1}, S = id
WeakHopfAlgebra build_HG(const FiniteGroupTable& g, Field f);
WeakHopfAlgebra build_disjoint_union(const std::vector<WeakHopfAlgebra>& parts);
// old basis, then the adjoined unit
WeakHopfAlgebra build_kaplansky(const WeakHopfAlgebra& h);
WeakBialgebra build_dual(const WeakBialgebra& wb);
WeakHopfAlgebra build_dual(const WeakHopfAlgebra& h);

// Positions of each block's basis inside build_disjoint_union output.
std::vector<std::size_t> block_offsets(const std::vector<WeakHopfAlgebra>& parts);

}  // namespace weakhopf
