#pragma once

#include "weakhopf/matched.hpp"

namespace weakhopf::detail {

// Sweedler evaluation for a standard-shape pair.
struct PairOps {
  const WeakBialgebra& h;
  const WeakBialgebra& a;
  Sweedler sh, sa;
  LinMap act_m, co_m;
  std::size_t dh, da;

  explicit PairOps(const MatchedPairData& mp)
      : h(mp.h()),
        a(mp.a()),
        sh(h, mp.s_h),
        sa(a, mp.s_a),
        act_m(mp.act.act),
        co_m(mp.co.coact),
        dh(h.dim()),
        da(a.dim()) {}

  Tensor act(const Tensor& t, const std::string& hl, const std::string& al, const std::string& out) const {
    return t.apply(act_m, {hl, al}, {{out, da}});
  }
  Tensor rho(const Tensor& t, const std::string& in, const std::string& o0, const std::string& o1) const {
    return t.apply(co_m, {in}, {{o0, dh}, {o1, da}});
  }
  // h·1_A on leg `out`
  Tensor act_one(const Tensor& t, const std::string& hl, const std::string& out) const {
    std::string u = "_u" + out;
    return act(t * sa.one(u), hl, u, out);
  }
};

std::vector<std::size_t> dims(std::initializer_list<std::size_t> d);

}  // namespace weakhopf::detail
