#include "weakhopf/smash.hpp"

#include "pair_ops.hpp"

namespace weakhopf {

using detail::dims;
using detail::PairOps;

namespace {

using Tuple = std::span<const std::size_t>;

// Column j of the result is f(j) read in the given leg order.
Mat tabulate(Field f, std::size_t rows, std::size_t cols, const std::function<Tensor(std::size_t)>& g,
             const std::vector<std::string>& order) {
  Mat m(f, rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    Tensor t = g(j);
    if (t.is_zero()) continue;
    Mat c = t.column(order);
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = c(i, 0);
  }
  return m;
}

void need_factoring(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::WellDefinednessFailure, what + " does not factor through the projection");
}

// ε(x(h_1⁰·1)h_1¹(h_2·1)) for every ambient basis element
Mat counit_formula(const SmashData& sd, const PairOps& p) {
  std::size_t dh = sd.dim_h, n = sd.ambient_dim();
  Mat row(sd.ambient.field(), 1, n);
  for (std::size_t v = 0; v < n; ++v) {
    Tensor t = p.sh.comul(p.sh.e("h", v % dh), "h", "h1", "h2") * p.sa.e("x", v / dh);
    t = p.rho(t, "h1", "a0", "a1");
    t = p.act_one(t, "a0", "u");
    t = p.act_one(t, "h2", "w");
    t = p.sa.mul(t, "x", "u", "m1");
    t = p.sa.mul(t, "m1", "a1", "m2");
    t = p.sa.mul(t, "m2", "w", "m3");
    row(0, v) = p.sa.counit(t, "m3").dense({})[0];
  }
  return row;
}

}  // namespace

Mat SmashData::embed(const Mat& x, const Mat& h) const { return p * kron(x, h); }

Mat SmashData::coords(const Mat& v) const {
  auto c = solve(basis, v);
  if (!c) throw Error(Errc::WellDefinednessFailure, "vector is not in the embedded subspace");
  return *c;
}

WeakHopfAlgebra SmashData::hopf() const {
  if (!sub || !antipode) throw Error(Errc::PreconditionUnmet, "smash antipode has not been built");
  return {*sub, *antipode};
}

SmashData build_ambient(const MatchedPairData& in) {
  if (in.mirrored()) throw Error(Errc::NotCompatible, "smash product needs a left-action pair");
  MatchedPairData mp = in;
  classify(mp);
  if (!*mp.compatible) throw Error(Errc::NotCompatible, "pair is not a compatible weak matched pair");
  PairOps p(mp);
  Field f = mp.h().field();
  std::size_t da = p.da, dh = p.dh, n = da * dh;
  SmashData sd;
  sd.dim_a = da;
  sd.dim_h = dh;

  WeakBialgebra& amb = sd.ambient;
  amb.alg.dim = amb.coalg.dim = n;
  amb.alg.mult = tabulate(
      f, n, n * n,
      [&](std::size_t c) {
        std::size_t v = c / n, w = c % n;
        Tensor t = p.sh.comul(p.sh.e("h", v % dh), "h", "h1", "h2") * p.sa.e("x", v / dh) * p.sa.e("y", w / dh) *
                   p.sh.e("g", w % dh);
        t = p.act(t, "h1", "y", "hy");
        t = p.sa.mul(t, "x", "hy", "X");
        return p.sh.mul(t, "h2", "g", "H");
      },
      {"X", "H"});
  amb.alg.unit = kron(mp.a().alg.unit, mp.h().alg.unit);
  amb.coalg.comult = tabulate(
      f, n * n, n,
      [&](std::size_t v) {
        Tensor t = p.sa.comul(p.sa.e("x", v / dh), "x", "x1", "x2");
        t = p.sh.comul(t * p.sh.e("h", v % dh), "h", "h1", "h2");
        t = p.rho(t, "h1", "h10", "h11");
        return p.sa.mul(t, "x2", "h11", "X2");
      },
      {"x1", "h10", "X2", "h2"});
  amb.coalg.counit = kron(mp.a().coalg.counit, mp.h().coalg.counit);
  for (std::size_t v = 0; v < n; ++v) amb.labels.push_back(mp.a().labels.at(v / dh) + "#" + mp.h().labels.at(v % dh));

  sd.p_under = tabulate(
      f, n, n,
      [&](std::size_t v) {
        Tensor t = p.sh.comul(p.sh.e("h", v % dh), "h", "h1", "h2") * p.sa.e("x", v / dh);
        t = p.act_one(t, "h1", "u");
        return p.sa.mul(t, "x", "u", "X");
      },
      {"X", "h2"});
  sd.p_over = tabulate(
      f, n, n,
      [&](std::size_t v) {
        Tensor t = p.sa.comul(p.sa.e("x", v / dh), "x", "x1", "x2") * p.sh.e("h", v % dh);
        t = p.rho(t, "h", "h0", "h1");
        return p.sa.counit(p.sa.mul(t, "x2", "h1", "m"), "m");
      },
      {"x1", "h0"});
  sd.p = sd.p_over * sd.p_under;
  sd.mp = std::move(mp);
  return sd;
}

SmashData extract_subspace(SmashData sd) {
  const Mat& P = sd.p;
  const WeakBialgebra& amb = sd.ambient;
  need_factoring(P * P == P, "the projection");
  sd.pivots = pivot_columns(P);
  sd.basis = P.select_cols(sd.pivots);
  const Mat& B = sd.basis;
  std::size_t r = B.cols();
  Mat PP = kron(P, P);
  need_factoring(amb.alg.mult * PP == P * amb.alg.mult, "the product");
  need_factoring(amb.coalg.comult * P == PP * amb.coalg.comult, "the coproduct");
  PairOps ops(sd.mp);
  need_factoring(counit_formula(sd, ops) == amb.coalg.counit * P, "the counit");

  WeakBialgebra sub;
  sub.alg.dim = sub.coalg.dim = r;
  auto mult = solve(B, amb.alg.mult * kron(B, B));
  need_factoring(mult.has_value(), "the product");
  sub.alg.mult = *mult;
  auto unit = solve(B, P * amb.alg.unit);
  need_factoring(unit.has_value(), "the unit");
  sub.alg.unit = *unit;
  auto comult = solve(kron(B, B), amb.coalg.comult * B);
  need_factoring(comult.has_value(), "the coproduct");
  sub.coalg.comult = *comult;
  sub.coalg.counit = amb.coalg.counit * B;
  for (std::size_t i : sd.pivots) {
    std::string l = amb.labels[i];
    sub.labels.push_back(l.insert(l.find('#'), "#"));
  }
  sd.sub = std::move(sub);
  return sd;
}

CheckReport check_ambient(const SmashData& sd) { return check_weak_bialgebra(sd.ambient); }

CheckReport check_smash_bialgebra(const SmashData& sd) {
  if (!sd.sub) throw Error(Errc::PreconditionUnmet, "subspace has not been extracted");
  CheckReport rep;
  const Mat& P = sd.p;
  const WeakBialgebra& amb = sd.ambient;
  rep.add(check_equal("under_projection_idempotent", sd.p_under * sd.p_under, sd.p_under));
  rep.add(check_equal("over_projection_idempotent", sd.p_over * sd.p_over, sd.p_over));
  rep.add(check_equal("projections_commute", sd.p_over * sd.p_under, sd.p_under * sd.p_over));
  rep.add(check_equal("projection_idempotent", P * P, P));
  rep.add_flag("basis_spans_image", rank(sd.basis) == sd.dim() && rank(P) == sd.dim(),
               {Scalar(P.field(), static_cast<std::int64_t>(rank(P))),
                Scalar(P.field(), static_cast<std::int64_t>(sd.dim()))});

  CheckReport ambient = check_weak_bialgebra(amb);
  for (const char* id : {"associativity", "coassociativity", "comult_multiplicative"})
    rep.add(*ambient.find(id));

  Mat PP = kron(P, P);
  rep.add(check_equal("product_formula", amb.alg.mult * PP, P * amb.alg.mult));
  rep.add(check_equal("coproduct_formula", amb.coalg.comult * P, PP * amb.coalg.comult));
  PairOps p(sd.mp);
  rep.add(check_equal("counit_formula", counit_formula(sd, p), amb.coalg.counit * P));
  rep.add(check_equal("unit_formula", sd.basis * sd.sub->alg.unit, P * amb.alg.unit));

  rep.add_all(check_weak_bialgebra(*sd.sub), "subspace.");
  CheckReport ids = identity_suite(*sd.sub);
  for (const char* id : {"unit_coproduct_left_form", "unit_coproduct_right_form", "target_leg_identity",
                         "source_leg_identity", "target_factorization", "source_factorization"})
    if (const CheckItem* it = ids.find(id)) {
      CheckItem c = *it;
      c.id = "subspace." + c.id;
      rep.add(std::move(c));
    }

  const Sweedler& sh = p.sh;
  const Sweedler& sa = p.sa;
  std::size_t dh = p.dh, da = p.da;
  rep.add(check_identity(
      "under_coproduct_exchange", dims({da, dh}), {"P", "Q", "R"},
      [&](Tuple t) {
        Tensor x = sa.comul(sa.e("x", t[0]), "x", "x1", "x2");
        x = sh.comul(x * sh.e("h", t[1]), "h", "h1", "k");
        x = sh.comul(x, "k", "h2", "h3");
        x = p.rho(p.rho(x, "h1", "a0", "a1"), "h2", "Q", "b1");
        x = sa.mul(p.act_one(x, "a0", "u"), "x1", "u", "P");
        x = p.act_one(x, "h3", "w");
        x = sa.mul(sa.mul(x, "x2", "a1", "m1"), "m1", "b1", "m2");
        return sa.mul(x, "m2", "w", "R");
      },
      [&](Tuple t) {
        Tensor x = sa.comul(sa.e("x", t[0]), "x", "x1", "x2");
        x = sh.comul(x * sh.e("h", t[1]), "h", "h1", "h2");
        x = sa.comul(p.act_one(x, "h1", "u"), "u", "u1", "u2");
        x = sa.mul(x, "x1", "u1", "P");
        x = p.rho(x, "h2", "Q", "b1");
        return sa.mul(sa.mul(x, "x2", "u2", "m"), "m", "b1", "R");
      }));
  if (is_cocommutative(sd.mp.h())) {
    rep.add(check_identity(
        "target_unit_exchange", dims({dh}), {"r"},
        [&](Tuple t) {
          Tensor x = sh.comul(sh.e("h", t[0]), "h", "h1", "h2");
          x = sh.counit(p.rho(x, "h1", "a0", "a1"), "a0");
          return sa.mul(p.act_one(x, "h2", "w"), "w", "a1", "r");
        },
        [&](Tuple t) {
          Tensor x = sh.comul(sh.e("h", t[0]), "h", "h1", "h2");
          x = p.rho(x, "h1", "a0", "a1");
          x = sa.eps_t(p.act_one(x, "a0", "u"), "u", "tu");
          x = sa.mul(x, "tu", "a1", "m");
          return sa.mul(p.act_one(x, "h2", "w"), "m", "w", "r");
        }));
    Mat I = Mat::identity(P.field(), sd.ambient_dim());
    rep.add(check_equal("unit_commutes", amb.alg.mult * kron(I, amb.alg.unit), amb.alg.mult * kron(amb.alg.unit, I)));
  }
  return rep;
}

CheckReport check_antipode_conditions(const SmashData& sd) {
  if (!sd.mp.s_h || !sd.mp.s_a) throw Error(Errc::PreconditionUnmet, "antipodes of H and A are required");
  PairOps p(sd.mp);
  const Sweedler& sh = p.sh;
  const Sweedler& sa = p.sa;
  std::size_t dh = p.dh, da = p.da;
  CheckReport rep;
  rep.add(check_identity(
      "antipode_unit_coaction", dims({dh}), {"P", "Q", "R"},
      [&](Tuple t) {
        Tensor x = sh.one_one("o1", "o2") * sh.e("h", t[0]);
        x = p.rho(x, "h", "h0", "h1");
        x = p.act_one(sh.mul(x, "o1", "h0", "k"), "k", "P");
        x = sa.antipode(x, "h1", "s");
        x = p.rho(x, "o2", "R", "o21");
        x = sa.eps_s(x, "o21", "e");
        return sa.mul(x, "s", "e", "Q");
      },
      [&](Tuple t) {
        Tensor x = sh.one_one("o1", "o2") * sh.e("h", t[0]);
        x = p.rho(p.rho(x, "o1", "o10", "o11"), "h", "h0", "h1");
        x = p.act_one(sh.mul(x, "o10", "h0", "k"), "k", "y");
        x = sa.eps_t(x, "y", "P");
        x = sa.eps_t(x, "h1", "th");
        x = p.rho(x, "o2", "R", "o21");
        x = sa.eps_s(x, "o21", "se");
        x = sa.mul(x, "th", "se", "m");
        return sa.mul(x, "m", "o11", "Q");
      }));
  rep.add(check_identity(
      "antipode_source_coaction", dims({dh}), {"P", "Q"},
      [&](Tuple t) {
        Tensor x = sh.comul(sh.e("h", t[0]), "h", "h1", "k");
        x = sh.comul(x, "k", "h2", "h3");
        x = p.rho(p.rho(x, "h1", "a0", "a1"), "h2", "b0", "b1");
        x = sa.eps_s(sa.mul(x, "a1", "b1", "c"), "c", "d");
        x = p.act_one(sh.antipode(x, "a0", "sa0"), "sa0", "f");
        x = sa.mul(x, "d", "f", "P");
        x = sh.antipode(x, "b0", "sb0");
        return sh.mul(x, "sb0", "h3", "Q");
      },
      [&](Tuple t) {
        Tensor x = sh.one_one("o1", "o2") * sh.e("h", t[0]);
        x = p.rho(p.rho(x, "h", "h0", "h1"), "o2", "Q", "o21");
        x = sa.eps_s(sa.mul(x, "h1", "o21", "c"), "c", "d");
        x = p.act_one(sh.mul(x, "h0", "o1", "k"), "k", "y");
        x = sa.eps_s(x, "y", "f");
        return sa.mul(x, "d", "f", "P");
      }));
  rep.add(check_identity(
      "counit_exchange", dims({da, da, dh}), {"r"},
      [&](Tuple t) {
        Tensor x = sa.e("a", t[0]) * sa.comul(sa.e("x", t[1]), "x", "x1", "x2");
        x = sh.comul(x * sh.e("h", t[2]), "h", "h1", "h2");
        x = p.rho(x, "h1", "b0", "b1");
        x = sa.mul(p.act_one(x, "b0", "u"), "x1", "u", "r");
        x = sa.mul(sa.mul(x, "a", "x2", "m1"), "m1", "b1", "m2");
        x = sa.mul(p.act_one(x, "h2", "w"), "m2", "w", "m3");
        return sa.counit(x, "m3");
      },
      [&](Tuple t) {
        Tensor x = sa.e("a", t[0]) * sa.comul(sa.e("x", t[1]), "x", "x1", "x2") * sh.e("h", t[2]);
        x = p.rho(x, "h", "b0", "b1");
        x = sa.mul(p.act_one(x, "b0", "u"), "x1", "u", "r");
        x = sa.mul(sa.mul(x, "a", "x2", "m1"), "m1", "b1", "m2");
        return sa.counit(x, "m2");
      }));
  return rep;
}

SmashData build_antipode(SmashData sd) {
  if (!sd.sub) throw Error(Errc::PreconditionUnmet, "subspace has not been extracted");
  if (!sd.mp.s_h || !sd.mp.s_a) throw Error(Errc::PreconditionUnmet, "antipodes of H and A are required");
  PairOps p(sd.mp);
  const Sweedler& sh = p.sh;
  const Sweedler& sa = p.sa;
  std::size_t dh = p.dh, n = sd.ambient_dim();
  Field f = sd.ambient.field();
  LinMap proj(sd.p), amb_mult(sd.ambient.alg.mult);
  Mat T = tabulate(
      f, n, n,
      [&](std::size_t v) {
        Tensor x = sa.e("x", v / dh) * sh.e("h", v % dh);
        x = p.rho(x, "h", "h0", "h1");
        x = sh.antipode(x, "h0", "H1");
        x = sa.antipode(sa.mul(x, "x", "h1", "xh"), "xh", "X2");
        x = x * sa.one("X1") * sh.one("H2");
        x = x.apply(proj, {"X1", "H1"}, {{"L", n}});
        x = x.apply(proj, {"X2", "H2"}, {{"R", n}});
        return x.apply(amb_mult, {"L", "R"}, {{"out", n}});
      },
      {"out"});
  need_factoring(T * sd.p == T, "the antipode");
  auto s = solve(sd.basis, T * sd.basis);
  need_factoring(s.has_value(), "the antipode");
  CheckReport v = verify_antipode(*sd.sub, *s);
  if (!v.all_passed()) throw Error(Errc::AntipodeAxiomFailure, "antipode fails " + v.failures().front());
  sd.antipode = std::move(*s);
  return sd;
}

SmashData build_smash(const MatchedPairData& mp, bool with_antipode) {
  SmashData sd = extract_subspace(build_ambient(mp));
  if (with_antipode && mp.s_h && mp.s_a) sd = build_antipode(std::move(sd));
  return sd;
}

}  // namespace weakhopf
