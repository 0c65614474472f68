#include "weakhopf/integrals.hpp"

#include "pair_ops.hpp"

namespace weakhopf {

using detail::dims;
using detail::PairOps;

namespace {

using Tuple = std::span<const std::size_t>;

// Matrix of left (or right) multiplication by v.
Mat mult_by(const WeakBialgebra& h, const Mat& v, Side side) {
  std::size_t n = h.dim();
  Mat m(h.field(), n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (v(k, 0) == Scalar(h.field())) continue;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t c = side == Side::Left ? k * n + j : j * n + k;
      for (std::size_t r = 0; r < n; ++r) m(r, j) += v(k, 0) * h.alg.mult(r, c);
    }
  }
  return m;
}

Mat integral_system(const WeakBialgebra& h, Side side) {
  std::size_t n = h.dim();
  Mat proj = side == Side::Left ? eps_t(h) : eps_s(h);
  Mat sys(h.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Mat e = Mat::unit_column(h.field(), n, i);
    Mat d = mult_by(h, e, side) - mult_by(h, proj * e, side);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) sys(i * n + r, c) = d(r, c);
  }
  return sys;
}

void need_integral(const WeakBialgebra& h, const Mat& v, const std::string& what) {
  if (v.rows() != h.dim() || v.cols() != 1) throw Error(Errc::DimensionMismatch, what + " has the wrong dimension");
  if (!is_left_integral(h, v)) throw Error(Errc::NotAnIntegral, what + " is not a left integral");
}

// Coefficient vectors tried for t in the semisimplicity search.
std::vector<std::vector<Scalar>> coefficient_grid(Field f, std::size_t q) {
  std::vector<Scalar> values;
  std::uint64_t p = f.characteristic();
  std::uint64_t total = 1;
  if (p != 0) {
    for (std::size_t i = 0; i < q && total <= 4096; ++i) total *= p;
  }
  if (p != 0 && total <= 4096) {
    for (std::uint64_t v = 0; v < p; ++v) values.emplace_back(f, static_cast<std::int64_t>(v));
  } else {
    for (std::int64_t v : {0, 1, -1, 2, -2}) values.emplace_back(f, v);
  }
  std::vector<std::vector<Scalar>> grid{{}};
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<std::vector<Scalar>> next;
    for (const auto& g : grid)
      for (const auto& v : values) {
        next.push_back(g);
        next.back().push_back(v);
      }
    grid = std::move(next);
    if (grid.size() > 20000) break;
  }
  return grid;
}

}  // namespace

IntegralSpace integral_space(const WeakBialgebra& h, Side side) {
  return {side, kernel_basis(integral_system(h, side))};
}

bool is_left_integral(const WeakBialgebra& h, const Mat& alpha) {
  return (integral_system(h, Side::Left) * alpha).is_zero();
}

MaschkeResult maschke_semisimple(const WeakBialgebra& h) {
  IntegralSpace s = integral_space(h, Side::Left);
  MaschkeResult r;
  if (s.dim() == 0) return r;
  auto c = solve(eps_t(h) * s.basis, h.alg.unit);
  if (!c) return r;
  r.semisimple = true;
  r.witness = s.basis * *c;
  return r;
}

CheckReport check_action_stability(const MatchedPairData& mp, const Mat& alpha) {
  if (mp.mirrored()) throw Error(Errc::BadParams, "defined for left-action pairs");
  need_integral(mp.a(), alpha, "alpha");
  PairOps p(mp);
  CheckReport rep;
  rep.add(check_identity(
      "action_preserves_integrals", dims({p.dh, p.da}), {"r"},
      [&](Tuple t) {
        Tensor x = p.act(p.sh.e("h", t[0]) * p.sa.vec("a", alpha), "h", "a", "ha");
        return p.sa.mul(p.sa.e("y", t[1]) * x, "y", "ha", "r");
      },
      [&](Tuple t) {
        Tensor x = p.act(p.sh.e("h", t[0]) * p.sa.vec("a", alpha), "h", "a", "ha");
        x = p.sa.eps_t(p.sa.e("y", t[1]) * x, "y", "ty");
        return p.sa.mul(x, "ty", "ha", "r");
      }));
  return rep;
}

CheckReport check_cond_int(const SmashData& sd, const Mat& alpha, const Mat& t) {
  need_integral(sd.mp.a(), alpha, "alpha");
  need_integral(sd.mp.h(), t, "t");
  PairOps p(sd.mp);
  const Sweedler& sh = p.sh;
  const Sweedler& sa = p.sa;
  auto tail = [&]() {
    Tensor x = sh.comul(sh.vec("t", t), "t", "t1", "t2");
    x = p.rho(x, "t1", "Q", "c1");
    x = sa.mul(p.act_one(x, "t2", "w"), "c1", "w", "m");
    return sa.eps_s(x, "m", "es");
  };
  CheckReport rep;
  rep.add(check_identity(
      "integral_condition", dims({p.dh}), {"P", "Q"},
      [&](Tuple u) {
        Tensor x = p.act(sh.e("h", u[0]) * sa.vec("a", alpha), "h", "a", "ha");
        return sa.mul(x * tail(), "ha", "es", "P");
      },
      [&](Tuple u) {
        Tensor x = p.rho(sh.e("h", u[0]), "h", "h0", "h1");
        x = sa.eps_s(p.act_one(x, "h0", "u"), "h1", "s");
        x = sa.mul(sa.mul(x, "u", "s", "m1") * sa.vec("a", alpha), "m1", "a", "m2");
        return sa.mul(x * tail(), "m2", "es", "P");
      }));
  return rep;
}

Mat smash_integral(const SmashData& sd, const Mat& alpha, const Mat& t) {
  if (!sd.sub) throw Error(Errc::PreconditionUnmet, "subspace has not been extracted");
  CheckReport rep = check_cond_int(sd, alpha, t);
  const CheckItem& it = rep.items().front();
  if (!it.pass) throw Error(Errc::ConditionFails, "integral condition fails at h = " + std::to_string(it.witness->at(0)));
  Mat c = sd.coords(sd.embed(alpha, t));
  if (!is_left_integral(*sd.sub, c)) throw Error(Errc::NotAnIntegral, "alpha##t is not a left integral of the smash");
  return c;
}

SmashSemisimplicity smash_semisimple_criterion(const SmashData& sd) {
  if (!sd.sub) throw Error(Errc::PreconditionUnmet, "subspace has not been extracted");
  if (!sd.mp.s_a) throw Error(Errc::PreconditionUnmet, "antipode of A is required");
  SmashSemisimplicity out;
  out.direct = maschke_semisimple(*sd.sub).semisimple;

  const WeakBialgebra& A = sd.mp.a();
  const WeakBialgebra& H = sd.mp.h();
  Field f = A.field();
  IntegralSpace ia = integral_space(A), ih = integral_space(H);
  std::size_t p = ia.dim(), q = ih.dim(), n = sd.ambient_dim();
  if (p == 0 || q == 0) return out;
  PairOps ops(sd.mp);
  Mat eta = eps_t(A);
  // F[j] has column i equal to P((ε_t(α_i)S(t_j¹)(t_j⁰·1)) ⊗ 1_H)
  std::vector<Mat> F;
  for (std::size_t j = 0; j < q; ++j) {
    Tensor x = ops.rho(ops.sh.vec("t", ih.basis.col(j)), "t", "t0", "t1");
    x = ops.sa.antipode(x, "t1", "s");
    x = ops.sa.mul(ops.act_one(x, "t0", "u"), "s", "u", "v");
    Mat v = x.column({"v"});
    Mat fj(f, n, p);
    for (std::size_t i = 0; i < p; ++i) {
      Mat a = A.alg.mult * kron(eta * ia.basis.col(i), v);
      Mat amb = sd.embed(a, H.alg.unit);
      for (std::size_t r = 0; r < n; ++r) fj(r, i) = amb(r, 0);
    }
    F.push_back(std::move(fj));
  }
  Mat target = sd.embed(A.alg.unit, H.alg.unit);
  Mat relaxed = F[0];
  for (std::size_t j = 1; j < q; ++j) relaxed = relaxed.hconcat(F[j]);
  if (!solve(relaxed, target)) return out;
  for (const auto& d : coefficient_grid(f, q)) {
    Mat m(f, n, p);
    bool nonzero = false;
    for (std::size_t j = 0; j < q; ++j) {
      if (d[j] == Scalar(f)) continue;
      nonzero = true;
      m = m + F[j].scaled(d[j]);
    }
    if (!nonzero) continue;
    if (auto c = solve(m, target)) {
      out.criterion = true;
      out.alpha = ia.basis * *c;
      out.t = ih.basis * Mat::column(f, d);
      return out;
    }
  }
  return out;
}

}  // namespace weakhopf
