#include "weakhopf/matched.hpp"

#include "weakhopf/zoo.hpp"
#include "pair_ops.hpp"

namespace weakhopf {

using detail::dims;
using detail::PairOps;

namespace {

using Tuple = std::span<const std::size_t>;

MatchedPairData standardize(const MatchedPairData& mp) {
  if (!mp.mirrored()) return mp;
  StructurePtr hs = share(opposite_coopposite(mp.h()));
  StructurePtr as = share(opposite_coopposite(mp.a()));
  MatchedPairData out = mp;
  out.act = to_standard(mp.act, hs, as);
  out.co = to_standard(mp.co, hs, as);
  return out;
}

}  // namespace

namespace detail {
std::vector<std::size_t> dims(std::initializer_list<std::size_t> d) { return d; }
}  // namespace detail

MatchedPairData make_matched_pair(ActionData act, CoactionData co, std::optional<Mat> s_h, std::optional<Mat> s_a) {
  if (act.side == Side::Left && co.side != Side::Right)
    throw Error(Errc::BadParams, "a left action pairs with a right coaction");
  if (act.side == Side::Right && co.side != Side::Left)
    throw Error(Errc::BadParams, "a right action pairs with a left coaction");
  if (act.h->dim() != co.h->dim() || act.a->dim() != co.a->dim())
    throw Error(Errc::DimensionMismatch, "action and coaction refer to different structures");
  MatchedPairData mp{std::move(act), std::move(co), std::move(s_h), std::move(s_a), std::nullopt, std::nullopt};
  return mp;
}

CheckReport check_weak_matched_pair(const MatchedPairData& in) {
  MatchedPairData mp = standardize(in);
  CheckReport rep;
  CheckReport ma = check_module_algebra(mp.act);
  if (!ma.all_passed()) throw Error(Errc::InvalidComponent, "action fails " + ma.failures().front());
  CheckReport cc = check_comodule_coalgebra(mp.co);
  if (!cc.all_passed()) throw Error(Errc::InvalidComponent, "coaction fails " + cc.failures().front());
  rep.add_flag("module_algebra", true);
  rep.add_flag("comodule_coalgebra", true);

  PairOps p(mp);
  const Sweedler& sh = p.sh;
  const Sweedler& sa = p.sa;
  rep.add(check_identity(
      "coaction_action_exchange", dims({p.dh, p.dh, p.da}), {"P", "Q", "R"},
      [&](Tuple t) {
        Tensor x = sh.comul(sh.e("h", t[0]), "h", "h1", "h2") * sh.e("g", t[1]) * sa.e("x", t[2]);
        x = p.act(x, "h1", "x", "hx");
        x = sa.comul(x, "hx", "Q", "y2");
        x = sh.mul(x, "h2", "g", "hg");
        x = p.rho(x, "hg", "P", "z");
        return sa.mul(x, "y2", "z", "R");
      },
      [&](Tuple t) {
        Tensor x = sh.comul(sh.e("h", t[0]), "h", "h1", "k");
        x = sh.comul(x, "k", "h2", "k2");
        x = sh.comul(x, "k2", "h3", "h4");
        x = x * sh.e("g", t[1]) * sa.e("x", t[2]);
        x = sa.comul(x, "x", "x1", "x2");
        x = p.rho(x, "h1", "h10", "h11");
        x = p.act(x, "h10", "x1", "Q");
        x = p.act(x, "h2", "x2", "b");
        x = p.rho(x, "h3", "h30", "h31");
        x = p.rho(x, "g", "g0", "g1");
        x = p.act(x, "h4", "g1", "d");
        x = sh.mul(x, "h30", "g0", "P");
        x = sa.mul(x, "h11", "b", "ab");
        x = sa.mul(x, "ab", "h31", "abc");
        return sa.mul(x, "abc", "d", "R");
      }));
  rep.add(check_identity(
      "source_of_action", dims({p.dh, p.da}), {"r"},
      [&](Tuple t) { return sa.eps_s(p.act(sh.e("h", t[0]) * sa.e("x", t[1]), "h", "x", "y"), "y", "r"); },
      [&](Tuple t) {
        Tensor x = sa.eps_s(p.act_one(sh.e("h", t[0]), "h", "y"), "y", "s1");
        x = x * sa.eps_s(sa.e("x", t[1]), "x", "s2");
        return sa.mul(x, "s1", "s2", "r");
      }));
  rep.add(check_identity(
      "coaction_of_unit", {}, {"P", "Q", "R"},
      [&](Tuple) { return p.rho(sh.one_one("a", "R"), "a", "P", "Q"); },
      [&](Tuple) {
        Tensor x = sh.one_one("P", "b") * sh.one_one("c", "d");
        x = p.rho(x, "c", "c0", "Q");
        x = sh.counit(x, "c0");
        return sh.mul(x, "b", "d", "R");
      }));
  return rep;
}

AbelianFlags check_abelian(const MatchedPairData& mp) {
  return {is_cocommutative(mp.h()), is_commutative(mp.a())};
}

namespace {

// check_weak_matched_pair with an invalid action or coaction reported as `code`
CheckReport matched_report(const MatchedPairData& mp, Errc code) {
  try {
    return check_weak_matched_pair(mp);
  } catch (const Error& e) {
    if (e.code() != Errc::InvalidComponent) throw;
    throw Error(code, e.what());
  }
}

}  // namespace

CheckReport check_compatible(const MatchedPairData& mp) {
  if (mp.mirrored()) throw Error(Errc::BadParams, "compatibility is defined for left-action pairs");
  if (!check_abelian(mp).abelian()) throw Error(Errc::NotAbelian, "H must be cocommutative and A commutative");
  CheckReport m = matched_report(mp, Errc::NotMatched);
  if (!m.all_passed()) throw Error(Errc::NotMatched, "matched pair check fails at " + m.failures().front());
  PairOps p(mp);
  const Sweedler& sh = p.sh;
  const Sweedler& sa = p.sa;
  CheckReport rep;
  rep.add(check_identity(
      "unit_action_counit", dims({p.dh}), {"r"},
      [&](Tuple t) { return p.act_one(sh.e("h", t[0]), "h", "r"); },
      [&](Tuple t) {
        Tensor x = sh.comul(sh.e("h", t[0]), "h", "h1", "h2") * sa.one_one("u1", "u2");
        x = p.act(x, "h1", "u1", "r");
        return sa.counit(p.act(x, "h2", "u2", "c"), "c");
      }));
  rep.add(check_identity(
      "unit_action_split", dims({p.dh, p.dh}), {"r", "s"},
      [&](Tuple t) {
        Tensor x = sh.e("h", t[0]) * sh.e("g", t[1]) * sa.one_one("u1", "u2");
        return p.act(p.act(x, "h", "u1", "r"), "g", "u2", "s");
      },
      [&](Tuple t) {
        Tensor x = p.act_one(sh.e("h", t[0]), "h", "a") * p.act_one(sh.e("g", t[1]), "g", "b");
        x = x * sa.one_one("u1", "u2");
        return sa.mul(sa.mul(x, "a", "u1", "r"), "b", "u2", "s");
      }));
  rep.add(check_identity(
      "unit_action_source", dims({p.dh}), {"r"},
      [&](Tuple t) { return p.act_one(sh.e("h", t[0]), "h", "r"); },
      [&](Tuple t) {
        Tensor x = sh.comul(sh.e("h", t[0]), "h", "h1", "h2");
        x = p.act_one(x, "h1", "a");
        x = sa.eps_s(p.act_one(x, "h2", "b"), "b", "sb");
        return sa.mul(x, "a", "sb", "r");
      }));
  rep.add(check_identity(
      "unit_action_source_multiplicative", dims({p.dh}), {"r"},
      [&](Tuple t) { return sa.eps_s(p.act_one(sh.e("h", t[0]), "h", "a"), "a", "r"); },
      [&](Tuple t) {
        Tensor x = sh.comul(sh.e("h", t[0]), "h", "h1", "h2");
        x = sa.eps_s(p.act_one(x, "h1", "a"), "a", "sa");
        x = sa.eps_s(p.act_one(x, "h2", "b"), "b", "sb");
        return sa.mul(x, "sa", "sb", "r");
      }));
  rep.add(check_identity(
      "unit_action_left_leg", dims({p.dh}), {"r", "s"},
      [&](Tuple t) { return p.act(sh.e("h", t[0]) * sa.one_one("u1", "s"), "h", "u1", "r"); },
      [&](Tuple t) {
        Tensor x = p.act_one(sh.e("h", t[0]), "h", "a") * sa.one_one("u1", "s");
        return sa.mul(x, "a", "u1", "r");
      }));
  rep.add(check_identity(
      "unit_action_right_leg", dims({p.dh}), {"r"},
      [&](Tuple t) { return p.act_one(sh.e("h", t[0]), "h", "r"); },
      [&](Tuple t) {
        Tensor x = p.act(sh.e("h", t[0]) * sa.one_one("u1", "u2"), "h", "u1", "a");
        return sa.mul(sa.eps_s(x, "u2", "b"), "a", "b", "r");
      }));
  return rep;
}

CheckReport check_target_of_action(const MatchedPairData& mp) {
  if (mp.mirrored()) throw Error(Errc::PreconditionUnmet, "defined for left-action pairs");
  if (!is_commutative(mp.a())) throw Error(Errc::PreconditionUnmet, "A is not commutative");
  CheckReport m = matched_report(mp, Errc::PreconditionUnmet);
  if (!m.passed("source_of_action")) throw Error(Errc::PreconditionUnmet, "source_of_action does not hold");
  PairOps p(mp);
  const Sweedler& sh = p.sh;
  const Sweedler& sa = p.sa;
  CheckReport rep;
  rep.add(check_identity(
      "target_of_action", dims({p.dh, p.da}), {"r"},
      [&](Tuple t) { return sa.eps_t(p.act(sh.e("h", t[0]) * sa.e("x", t[1]), "h", "x", "y"), "y", "r"); },
      [&](Tuple t) {
        Tensor x = sa.eps_t(p.act_one(sh.e("h", t[0]), "h", "y"), "y", "s1");
        x = x * sa.eps_t(sa.e("x", t[1]), "x", "s2");
        return sa.mul(x, "s1", "s2", "r");
      }));
  return rep;
}

MatchedPairData build_dual_matched_pair(const MatchedPairData& mp) {
  if (mp.mirrored()) throw Error(Errc::BadParams, "dual of a mirrored pair is not supported");
  CheckReport m = matched_report(mp, Errc::NotMatched);
  if (!m.all_passed()) throw Error(Errc::NotMatched, "matched pair check fails at " + m.failures().front());
  StructurePtr hd = share(build_dual(mp.h()));
  StructurePtr ad = share(build_dual(mp.a()));
  ActionData act = dual_action_from_coaction(mp.co, hd, ad);
  CoactionData co = dual_coaction_from_action(mp.act, hd, ad);
  std::optional<Mat> s_h, s_a;
  if (mp.s_a) s_h = mp.s_a->transpose();
  if (mp.s_h) s_a = mp.s_h->transpose();
  return make_matched_pair(std::move(act), std::move(co), std::move(s_h), std::move(s_a));
}

CheckReport check_classical_matched_pair(const MatchedPairData& in) {
  MatchedPairData mp = standardize(in);
  CheckReport rep;
  rep.add_flag("module_algebra", check_module_algebra(mp.act).all_passed());
  rep.add_flag("comodule_coalgebra", check_comodule_coalgebra(mp.co).all_passed());
  PairOps p(mp);
  const Sweedler& sh = p.sh;
  const Sweedler& sa = p.sa;
  rep.add(check_identity(
      "coaction_of_product", dims({p.dh, p.dh}), {"P", "Q"},
      [&](Tuple t) { return p.rho(sh.mul(sh.e("h", t[0]) * sh.e("g", t[1]), "h", "g", "hg"), "hg", "P", "Q"); },
      [&](Tuple t) {
        Tensor x = sh.comul(sh.e("h", t[0]), "h", "h1", "h2") * sh.e("g", t[1]);
        x = p.rho(p.rho(x, "h1", "a0", "a1"), "g", "g0", "g1");
        x = p.act(x, "h2", "g1", "b");
        return sa.mul(sh.mul(x, "a0", "g0", "P"), "a1", "b", "Q");
      }));
  rep.add(check_identity(
      "coproduct_of_action", dims({p.dh, p.da}), {"P", "Q"},
      [&](Tuple t) { return sa.comul(p.act(sh.e("h", t[0]) * sa.e("x", t[1]), "h", "x", "y"), "y", "P", "Q"); },
      [&](Tuple t) {
        Tensor x = sh.comul(sh.e("h", t[0]), "h", "h1", "h2") * sa.comul(sa.e("x", t[1]), "x", "x1", "x2");
        x = p.rho(x, "h1", "h10", "h11");
        x = p.act(p.act(x, "h10", "x1", "P"), "h2", "x2", "b");
        return sa.mul(x, "h11", "b", "Q");
      }));
  rep.add(check_identity(
      "counit_of_action", dims({p.dh, p.da}), {},
      [&](Tuple t) { return sa.counit(p.act(sh.e("h", t[0]) * sa.e("x", t[1]), "h", "x", "y"), "y"); },
      [&](Tuple t) { return sh.counit(sh.e("h", t[0]), "h") * sa.counit(sa.e("x", t[1]), "x"); }));
  rep.add(check_identity(
      "coaction_of_unit", {}, {"P", "Q"}, [&](Tuple) { return p.rho(sh.one("u"), "u", "P", "Q"); },
      [&](Tuple) { return sh.one("P") * sa.one("Q"); }));
  return rep;
}

void classify(MatchedPairData& mp) {
  mp.abelian = check_abelian(mp).abelian();
  mp.compatible = false;
  if (!*mp.abelian || mp.mirrored()) return;
  try {
    mp.compatible = check_compatible(mp).all_passed();
  } catch (const Error&) {
    mp.compatible = false;
  }
}

}  // namespace weakhopf
