#include "weakhopf/interact.hpp"

namespace weakhopf {

namespace {

using Tuple = std::span<const std::size_t>;

std::vector<std::size_t> dims(std::initializer_list<std::size_t> d) { return d; }

void need(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::DimensionMismatch, what);
}

}  // namespace

StructurePtr share(WeakBialgebra wb) { return std::make_shared<const WeakBialgebra>(std::move(wb)); }

WeakBialgebra opposite_coopposite(const WeakBialgebra& wb) { return opposite(coopposite(wb)); }

ActionData to_standard(const ActionData& act, StructurePtr h_std, StructurePtr a_std) {
  if (act.side == Side::Left) return act;
  std::size_t dh = act.h->dim(), da = act.a->dim();
  return {std::move(h_std), std::move(a_std), act.act * twist(act.act.field(), dh, da), Side::Left};
}

CoactionData to_standard(const CoactionData& co, StructurePtr h_std, StructurePtr a_std) {
  if (co.side == Side::Right) return co;
  std::size_t dc = co.h->dim(), da = co.a->dim();
  return {std::move(h_std), std::move(a_std), twist(co.coact.field(), da, dc) * co.coact, Side::Right};
}

CheckReport check_module_algebra(const ActionData& in) {
  if (in.side == Side::Right)
    return check_module_algebra(
        to_standard(in, share(opposite_coopposite(*in.h)), share(opposite_coopposite(*in.a))));
  const WeakBialgebra& h = *in.h;
  const WeakBialgebra& a = *in.a;
  std::size_t dh = h.dim(), da = a.dim();
  need(in.act.rows() == da && in.act.cols() == dh * da, "action must be dim_A x dim_H*dim_A");
  Sweedler sh(h), sa(a);
  LinMap m(in.act);
  auto act = [&](const Tensor& t, const std::string& hl, const std::string& al, const std::string& out) {
    return t.apply(m, {hl, al}, {{out, da}});
  };
  CheckReport rep;
  rep.add(check_identity(
      "unit_acts_trivially", dims({da}), {"r"},
      [&](Tuple t) { return act(sh.one("u") * sa.e("a", t[0]), "u", "a", "r"); },
      [&](Tuple t) { return sa.e("r", t[0]); }));
  rep.add(check_identity(
      "action_multiplicative", dims({dh, da, da}), {"r"},
      [&](Tuple t) { return act(sh.e("h", t[0]) * sa.mul(sa.e("a", t[1]) * sa.e("b", t[2]), "a", "b", "ab"), "h", "ab", "r"); },
      [&](Tuple t) {
        Tensor x = sh.comul(sh.e("h", t[0]), "h", "h1", "h2") * sa.e("a", t[1]) * sa.e("b", t[2]);
        x = act(act(x, "h1", "a", "p"), "h2", "b", "q");
        return sa.mul(x, "p", "q", "r");
      }));
  rep.add(check_identity(
      "action_associative", dims({dh, dh, da}), {"r"},
      [&](Tuple t) { return act(sh.e("h", t[0]) * act(sh.e("k", t[1]) * sa.e("a", t[2]), "k", "a", "ka"), "h", "ka", "r"); },
      [&](Tuple t) { return act(sh.mul(sh.e("h", t[0]) * sh.e("k", t[1]), "h", "k", "hk") * sa.e("a", t[2]), "hk", "a", "r"); }));
  rep.add(check_identity(
      "action_on_unit", dims({dh}), {"r"},
      [&](Tuple t) { return act(sh.e("h", t[0]) * sa.one("u"), "h", "u", "r"); },
      [&](Tuple t) { return act(sh.eps_t(sh.e("h", t[0]), "h", "th") * sa.one("u"), "th", "u", "r"); }));
  rep.add(check_identity(
      "target_absorption", dims({dh, da, da}), {"r"},
      [&](Tuple t) {
        Tensor x = act(sh.eps_t(sh.e("h", t[0]), "h", "th") * sa.e("a", t[1]), "th", "a", "ta");
        return sa.mul(x * sa.e("b", t[2]), "ta", "b", "r");
      },
      [&](Tuple t) {
        Tensor x = sh.eps_t(sh.e("h", t[0]), "h", "th") * sa.mul(sa.e("a", t[1]) * sa.e("b", t[2]), "a", "b", "ab");
        return act(x, "th", "ab", "r");
      }));
  rep.add(check_identity(
      "source_absorption", dims({dh, da, da}), {"r"},
      [&](Tuple t) {
        Tensor x = act(sh.eps_s(sh.e("h", t[0]), "h", "sh") * sa.e("b", t[2]), "sh", "b", "sb");
        return sa.mul(sa.e("a", t[1]) * x, "a", "sb", "r");
      },
      [&](Tuple t) {
        Tensor x = sh.eps_s(sh.e("h", t[0]), "h", "sh") * sa.mul(sa.e("a", t[1]) * sa.e("b", t[2]), "a", "b", "ab");
        return act(x, "sh", "ab", "r");
      }));
  return rep;
}

CheckReport check_comodule_coalgebra(const CoactionData& in) {
  if (in.side == Side::Left)
    return check_comodule_coalgebra(
        to_standard(in, share(opposite_coopposite(*in.h)), share(opposite_coopposite(*in.a))));
  const WeakBialgebra& c = *in.h;
  const WeakBialgebra& a = *in.a;
  std::size_t dc = c.dim(), da = a.dim();
  need(in.coact.rows() == dc * da && in.coact.cols() == dc, "coaction must be dim_H*dim_A x dim_H");
  Sweedler sc(c), sa(a);
  LinMap m(in.coact);
  auto rho = [&](const Tensor& t, const std::string& in_leg, const std::string& o0, const std::string& o1) {
    return t.apply(m, {in_leg}, {{o0, dc}, {o1, da}});
  };
  CheckReport rep;
  rep.add(check_identity(
      "coaction_counital", dims({dc}), {"r"},
      [&](Tuple t) { return sa.counit(rho(sc.e("c", t[0]), "c", "r", "c1"), "c1"); },
      [&](Tuple t) { return sc.e("r", t[0]); }));
  rep.add(check_identity(
      "coaction_comultiplicative", dims({dc}), {"p", "q", "r"},
      [&](Tuple t) { return sc.comul(rho(sc.e("c", t[0]), "c", "c0", "r"), "c0", "p", "q"); },
      [&](Tuple t) {
        Tensor x = sc.comul(sc.e("c", t[0]), "c", "u", "v");
        x = rho(rho(x, "u", "p", "a1"), "v", "q", "a2");
        return sa.mul(x, "a1", "a2", "r");
      }));
  rep.add(check_identity(
      "coaction_coassociative", dims({dc}), {"p", "q", "r"},
      [&](Tuple t) { return rho(rho(sc.e("c", t[0]), "c", "c0", "r"), "c0", "p", "q"); },
      [&](Tuple t) { return sa.comul(rho(sc.e("c", t[0]), "c", "p", "c1"), "c1", "q", "r"); }));
  rep.add(check_identity(
      "coaction_source", dims({dc}), {"r"},
      [&](Tuple t) { return sc.counit(rho(sc.e("c", t[0]), "c", "c0", "r"), "c0"); },
      [&](Tuple t) { return sc.counit(sa.eps_s(rho(sc.e("c", t[0]), "c", "c0", "c1"), "c1", "r"), "c0"); }));
  return rep;
}

std::string lambda_violation(const WeakBialgebra& h, const Mat& lambda) {
  std::size_t n = h.dim();
  if (lambda.rows() != 1 || lambda.cols() != n) throw Error(Errc::DimensionMismatch, "lambda must be 1 x dim_H");
  Field f = h.field();
  if (!((lambda * h.alg.unit)(0, 0) == Scalar(f, 1))) return "lambda(1) = 1";
  Mat ll = kron(lambda, lambda);
  Mat split = ll * h.coalg.comult;
  if (!(split == lambda)) return "lambda(h) = lambda(h_1)lambda(h_2)";
  if (!(lambda * h.alg.mult == ll)) return "lambda(h)lambda(k) = lambda(hk)";
  return "";
}

ActionData lambda_action_unchecked(StructurePtr h, StructurePtr a, const Mat& lambda) {
  std::size_t dh = h->dim(), da = a->dim();
  if (lambda.rows() != 1 || lambda.cols() != dh) throw Error(Errc::DimensionMismatch, "lambda must be 1 x dim_H");
  Mat act = kron(lambda, Mat::identity(a->field(), da));
  return {std::move(h), std::move(a), std::move(act), Side::Left};
}

ActionData make_lambda_action(StructurePtr h, StructurePtr a, const Mat& lambda) {
  std::string bad = lambda_violation(*h, lambda);
  if (!bad.empty()) throw Error(Errc::InvalidLambda, "violates " + bad);
  ActionData act = lambda_action_unchecked(std::move(h), std::move(a), lambda);
  CheckReport rep = check_module_algebra(act);
  if (!rep.all_passed()) throw Error(Errc::InvalidLambda, "module algebra check fails at " + rep.failures().front());
  return act;
}

std::string z_violation(const WeakBialgebra& a, const Mat& z) {
  std::size_t n = a.dim();
  if (z.rows() != n || z.cols() != 1) throw Error(Errc::DimensionMismatch, "z must be dim_A x 1");
  Field f = a.field();
  if (!((a.coalg.counit * z)(0, 0) == Scalar(f, 1))) return "epsilon(z) = 1";
  if (!(a.alg.mult * kron(z, z) == z)) return "z^2 = z";
  if (!(a.coalg.comult * z == kron(z, z))) return "Delta(z) = z (x) z";
  return "";
}

CoactionData z_coaction_unchecked(StructurePtr h, StructurePtr a, const Mat& z) {
  std::size_t dh = h->dim(), da = a->dim();
  if (z.rows() != da || z.cols() != 1) throw Error(Errc::DimensionMismatch, "z must be dim_A x 1");
  Mat co = kron(Mat::identity(h->field(), dh), z);
  return {std::move(h), std::move(a), std::move(co), Side::Right};
}

CoactionData make_z_coaction(StructurePtr h, StructurePtr a, const Mat& z) {
  std::string bad = z_violation(*a, z);
  if (!bad.empty()) throw Error(Errc::InvalidZ, "violates " + bad);
  CoactionData co = z_coaction_unchecked(std::move(h), std::move(a), z);
  CheckReport rep = check_comodule_coalgebra(co);
  if (!rep.all_passed()) throw Error(Errc::InvalidZ, "comodule coalgebra check fails at " + rep.failures().front());
  return co;
}

ActionData multiplication_action(StructurePtr h) {
  Mat m = h->alg.mult;
  return {h, h, std::move(m), Side::Left};
}

CoactionData comultiplication_coaction(StructurePtr h) {
  Mat d = h->coalg.comult;
  return {h, h, std::move(d), Side::Right};
}

ActionData dual_action_from_coaction(const CoactionData& co, StructurePtr h_dual, StructurePtr a_dual) {
  need(h_dual->dim() == co.h->dim() && a_dual->dim() == co.a->dim(), "dual dimensions differ");
  return {std::move(a_dual), std::move(h_dual), co.coact.transpose(), co.side};
}

CoactionData dual_coaction_from_action(const ActionData& act, StructurePtr h_dual, StructurePtr a_dual) {
  need(h_dual->dim() == act.h->dim() && a_dual->dim() == act.a->dim(), "dual dimensions differ");
  return {std::move(a_dual), std::move(h_dual), act.act.transpose(), act.side};
}

ActionData kaplansky_action(const ActionData& base, StructurePtr h_ext, StructurePtr a_ext) {
  if (base.side != Side::Left) throw Error(Errc::BadParams, "extension expects a left action");
  std::size_t n = base.h->dim(), m = base.a->dim();
  need(h_ext->dim() == n + 1 && a_ext->dim() == m + 1, "extended structures must add one dimension");
  Field f = base.act.field();
  std::size_t ma = m + 1;
  Mat act(f, ma, (n + 1) * ma);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) act(y, h * ma + x) = base.act(y, h * m + x);
    act(m, h * ma + m) = base.h->coalg.counit(0, h);
  }
  for (std::size_t x = 0; x < ma; ++x) act(x, n * ma + x) = Scalar(f, 1);
  return {std::move(h_ext), std::move(a_ext), std::move(act), Side::Left};
}

CoactionData kaplansky_coaction(const CoactionData& base, StructurePtr h_ext, StructurePtr a_ext) {
  if (base.side != Side::Right) throw Error(Errc::BadParams, "extension expects a right coaction");
  std::size_t n = base.h->dim(), m = base.a->dim();
  need(h_ext->dim() == n + 1 && a_ext->dim() == m + 1, "extended structures must add one dimension");
  Field f = base.coact.field();
  std::size_t ma = m + 1;
  Mat co(f, (n + 1) * ma, n + 1);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < m; ++x) co(k * ma + x, h) = base.coact(k * m + x, h);
  std::vector<Scalar> dh(n + 1, Scalar(f)), eh(n + 1, Scalar(f)), da(ma, Scalar(f)), ea(ma, Scalar(f));
  for (std::size_t k = 0; k < n; ++k) {
    eh[k] = base.h->alg.unit(k, 0);
    dh[k] = -eh[k];
  }
  dh[n] = Scalar(f, 1);
  for (std::size_t x = 0; x < m; ++x) {
    ea[x] = base.a->alg.unit(x, 0);
    da[x] = -ea[x];
  }
  da[m] = Scalar(f, 1);
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t x = 0; x < ma; ++x) co(k * ma + x, n) = dh[k] * da[x] + eh[k] * ea[x];
  return {std::move(h_ext), std::move(a_ext), std::move(co), Side::Right};
}

}  // namespace weakhopf
