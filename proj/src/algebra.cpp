#include "weakhopf/algebra.hpp"

#include <algorithm>

namespace weakhopf {

namespace {

using Tuple = std::span<const std::size_t>;

std::vector<std::size_t> cube(std::size_t n, std::size_t k) { return std::vector<std::size_t>(k, n); }

Tensor mul_via(const LinMap& m, std::size_t dim, const Tensor& t, const std::string& a, const std::string& b,
               const std::string& out) {
  return t.apply(m, {a, b}, {{out, dim}});
}

Tensor comul_via(const LinMap& m, std::size_t dim, const Tensor& t, const std::string& in, const std::string& o1,
                 const std::string& o2) {
  return t.apply(m, {in}, {{o1, dim}, {o2, dim}});
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::DimensionMismatch, what);
}

}  // namespace

void check_shapes(const WeakBialgebra& wb) {
  std::size_t n = wb.alg.dim;
  require(n > 0, "dimension must be positive");
  require(wb.coalg.dim == n, "algebra and coalgebra dimensions differ");
  require(wb.alg.mult.rows() == n && wb.alg.mult.cols() == n * n, "mult must be dim x dim^2");
  require(wb.alg.unit.rows() == n && wb.alg.unit.cols() == 1, "unit must be dim x 1");
  require(wb.coalg.comult.rows() == n * n && wb.coalg.comult.cols() == n, "comult must be dim^2 x dim");
  require(wb.coalg.counit.rows() == 1 && wb.coalg.counit.cols() == n, "counit must be 1 x dim");
  Field f = wb.alg.mult.field();
  require(wb.alg.unit.field() == f && wb.coalg.comult.field() == f && wb.coalg.counit.field() == f,
          "structure maps over different fields");
  require(wb.labels.empty() || wb.labels.size() == n, "label count differs from dimension");
}

Sweedler::Sweedler(const WeakBialgebra& wb, const std::optional<Mat>& antipode)
    : field_(wb.field()),
      dim_(wb.dim()),
      unit_(wb.alg.unit),
      mult_(wb.alg.mult),
      comult_(wb.coalg.comult),
      counit_(wb.coalg.counit) {
  if (antipode) {
    if (antipode->rows() != dim_ || antipode->cols() != dim_)
      throw Error(Errc::DimensionMismatch, "antipode must be dim x dim");
    s_ = LinMap(*antipode);
    has_antipode_ = true;
  }
  eps_t_mat_ = Mat(field_, dim_, dim_);
  eps_s_mat_ = Mat(field_, dim_, dim_);
  eps_sp_mat_ = Mat(field_, dim_, dim_);
  Tensor d1 = one_one("a", "b");
  for (std::size_t h = 0; h < dim_; ++h) {
    Tensor t = d1 * e("h", h);
    auto fill = [&](Mat& m, const Tensor& v) {
      auto col = v.dense({v.legs()[0].name});
      for (std::size_t r = 0; r < dim_; ++r) m(r, h) = col[r];
    };
    fill(eps_t_mat_, counit(mul(t, "a", "h", "x"), "x"));
    fill(eps_s_mat_, counit(mul(t, "h", "b", "x"), "x"));
    fill(eps_sp_mat_, counit(mul(t, "h", "a", "x"), "x"));
  }
  eps_t_ = LinMap(eps_t_mat_);
  eps_s_ = LinMap(eps_s_mat_);
  eps_sp_ = LinMap(eps_sp_mat_);
}

Tensor Sweedler::one_one(const std::string& l1, const std::string& l2) const {
  return comul(one("__u"), "__u", l1, l2);
}

Tensor Sweedler::mul(const Tensor& t, const std::string& a, const std::string& b, const std::string& out) const {
  return mul_via(mult_, dim_, t, a, b, out);
}

Tensor Sweedler::comul(const Tensor& t, const std::string& in, const std::string& o1, const std::string& o2) const {
  return comul_via(comult_, dim_, t, in, o1, o2);
}

Tensor Sweedler::counit(const Tensor& t, const std::string& in) const { return t.apply(counit_, {in}, {}); }

Tensor Sweedler::map(const LinMap& m, const Tensor& t, const std::string& in, const std::string& out) const {
  return t.apply(m, {in}, {{out, dim_}});
}

Tensor Sweedler::eps_t(const Tensor& t, const std::string& in, const std::string& out) const {
  return map(eps_t_, t, in, out);
}

Tensor Sweedler::eps_s(const Tensor& t, const std::string& in, const std::string& out) const {
  return map(eps_s_, t, in, out);
}

Tensor Sweedler::eps_s_prime(const Tensor& t, const std::string& in, const std::string& out) const {
  return map(eps_sp_, t, in, out);
}

Tensor Sweedler::antipode(const Tensor& t, const std::string& in, const std::string& out) const {
  if (!has_antipode_) throw Error(Errc::InvalidStructure, "no antipode supplied");
  return map(s_, t, in, out);
}

CheckReport check_algebra(const FDAlgebraData& alg) {
  CheckReport rep;
  std::size_t n = alg.dim;
  Field f = alg.mult.field();
  LinMap m(alg.mult);
  auto e = [&](const std::string& leg, std::size_t i) { return Tensor::basis(f, leg, n, i); };
  Tensor one = Tensor::vector("u", alg.unit);
  rep.add(check_identity(
      "associativity", cube(n, 3), {"r"},
      [&](Tuple t) { return mul_via(m, n, mul_via(m, n, e("a", t[0]) * e("b", t[1]), "a", "b", "ab") * e("c", t[2]), "ab", "c", "r"); },
      [&](Tuple t) { return mul_via(m, n, e("a", t[0]) * mul_via(m, n, e("b", t[1]) * e("c", t[2]), "b", "c", "bc"), "a", "bc", "r"); }));
  rep.add(check_identity(
      "left_unit", {n}, {"r"}, [&](Tuple t) { return mul_via(m, n, one * e("a", t[0]), "u", "a", "r"); },
      [&](Tuple t) { return e("r", t[0]); }));
  rep.add(check_identity(
      "right_unit", {n}, {"r"}, [&](Tuple t) { return mul_via(m, n, e("a", t[0]) * one, "a", "u", "r"); },
      [&](Tuple t) { return e("r", t[0]); }));
  return rep;
}

CheckReport check_coalgebra(const FDCoalgebraData& coalg) {
  CheckReport rep;
  std::size_t n = coalg.dim;
  Field f = coalg.comult.field();
  LinMap d(coalg.comult);
  LinMap eps(coalg.counit);
  auto e = [&](const std::string& leg, std::size_t i) { return Tensor::basis(f, leg, n, i); };
  rep.add(check_identity(
      "coassociativity", {n}, {"p", "q", "r"},
      [&](Tuple t) { return comul_via(d, n, comul_via(d, n, e("a", t[0]), "a", "u", "r"), "u", "p", "q"); },
      [&](Tuple t) { return comul_via(d, n, comul_via(d, n, e("a", t[0]), "a", "p", "v"), "v", "q", "r"); }));
  rep.add(check_identity(
      "left_counit", {n}, {"r"},
      [&](Tuple t) { return comul_via(d, n, e("a", t[0]), "a", "u", "r").apply(eps, {"u"}, {}); },
      [&](Tuple t) { return e("r", t[0]); }));
  rep.add(check_identity(
      "right_counit", {n}, {"r"},
      [&](Tuple t) { return comul_via(d, n, e("a", t[0]), "a", "r", "u").apply(eps, {"u"}, {}); },
      [&](Tuple t) { return e("r", t[0]); }));
  return rep;
}

CheckReport check_weak_bialgebra(const WeakBialgebra& wb) {
  check_shapes(wb);
  CheckReport rep;
  rep.add_all(check_algebra(wb.alg));
  rep.add_all(check_coalgebra(wb.coalg));
  Sweedler s(wb);
  std::size_t n = wb.dim();
  rep.add(check_identity(
      "comult_multiplicative", cube(n, 2), {"p", "q"},
      [&](Tuple t) { return s.comul(s.mul(s.e("h", t[0]) * s.e("k", t[1]), "h", "k", "hk"), "hk", "p", "q"); },
      [&](Tuple t) {
        Tensor x = s.comul(s.e("h", t[0]), "h", "h1", "h2") * s.comul(s.e("k", t[1]), "k", "k1", "k2");
        return s.mul(s.mul(x, "h1", "k1", "p"), "h2", "k2", "q");
      }));
  auto triple = [&](Tuple t) {
    Tensor x = s.mul(s.e("h", t[0]) * s.e("k", t[1]), "h", "k", "hk");
    return s.counit(s.mul(x * s.e("l", t[2]), "hk", "l", "r"), "r");
  };
  auto split = [&](Tuple t, const char* left, const char* right) {
    Tensor x = s.e("h", t[0]) * s.comul(s.e("k", t[1]), "k", "k1", "k2") * s.e("l", t[2]);
    x = s.counit(s.mul(x, "h", left, "hk"), "hk");
    return s.counit(s.mul(x, right, "l", "kl"), "kl");
  };
  rep.add(check_identity("weak_counit_first", cube(n, 3), {}, triple,
                         [&](Tuple t) { return split(t, "k1", "k2"); }));
  rep.add(check_identity("weak_counit_second", cube(n, 3), {}, triple,
                         [&](Tuple t) { return split(t, "k2", "k1"); }));
  auto delta2 = [&](Tuple) { return s.comul(s.one_one("u", "r"), "u", "p", "q"); };
  rep.add(check_identity(
      "weak_unit_first", {}, {"p", "q", "r"},
      [&](Tuple) { return s.mul(s.one_one("p", "b") * s.one_one("c", "r"), "c", "b", "q"); }, delta2));
  rep.add(check_identity(
      "weak_unit_second", {}, {"p", "q", "r"},
      [&](Tuple) { return s.mul(s.one_one("p", "b") * s.one_one("c", "r"), "b", "c", "q"); }, delta2));
  return rep;
}

namespace {

Mat checked_idempotent(const Mat& m, const char* name) {
  if (!(m * m == m)) throw Error(Errc::InvalidStructure, std::string(name) + " is not idempotent");
  return m;
}

}  // namespace

Mat eps_t(const WeakBialgebra& wb) {
  check_shapes(wb);
  return checked_idempotent(Sweedler(wb).eps_t_matrix(), "target map");
}

Mat eps_s(const WeakBialgebra& wb) {
  check_shapes(wb);
  return checked_idempotent(Sweedler(wb).eps_s_matrix(), "source map");
}

Mat eps_s_prime(const WeakBialgebra& wb) {
  check_shapes(wb);
  return checked_idempotent(Sweedler(wb).eps_s_prime_matrix(), "primed source map");
}

CheckReport identity_suite(const WeakBialgebra& wb, const std::optional<Mat>& antipode) {
  try {
    check_shapes(wb);
  } catch (const Error& e) {
    throw Error(Errc::InvalidStructure, e.what());
  }
  Sweedler s(wb, antipode);
  std::size_t n = wb.dim();
  const Mat& et = s.eps_t_matrix();
  const Mat& es = s.eps_s_matrix();
  const Mat& esp = s.eps_s_prime_matrix();
  CheckReport rep;

  rep.add(check_equal("target_idempotent", et * et, et));
  rep.add(check_equal("source_idempotent", es * es, es));
  rep.add(check_equal("source_prime_idempotent", esp * esp, esp));
  rep.add(check_identity(
      "target_factorization", {n}, {"r"},
      [&](Tuple t) { return s.mul(s.eps_t(s.comul(s.e("h", t[0]), "h", "a", "b"), "a", "ta"), "ta", "b", "r"); },
      [&](Tuple t) { return s.e("r", t[0]); }));
  rep.add(check_identity(
      "source_factorization", {n}, {"r"},
      [&](Tuple t) { return s.mul(s.eps_s(s.comul(s.e("h", t[0]), "h", "a", "b"), "b", "sb"), "a", "sb", "r"); },
      [&](Tuple t) { return s.e("r", t[0]); }));

  auto hk_counit = [&](Tuple t) { return s.counit(s.mul(s.e("h", t[0]) * s.e("k", t[1]), "h", "k", "x"), "x"); };
  rep.add(check_identity(
      "counit_absorbs_target", cube(n, 2), {},
      [&](Tuple t) { return s.counit(s.mul(s.e("h", t[0]) * s.eps_t(s.e("k", t[1]), "k", "tk"), "h", "tk", "x"), "x"); },
      hk_counit));
  rep.add(check_identity(
      "counit_absorbs_source", cube(n, 2), {},
      [&](Tuple t) { return s.counit(s.mul(s.eps_s(s.e("h", t[0]), "h", "sh") * s.e("k", t[1]), "sh", "k", "x"), "x"); },
      hk_counit));
  rep.add(check_identity(
      "unit_coproduct_in_source_target", {}, {"p", "q"},
      [&](Tuple) { return s.eps_t(s.eps_s(s.one_one("a", "b"), "a", "p"), "b", "q"); },
      [&](Tuple) { return s.one_one("p", "q"); }));

  CheckItem target_leg = check_identity(
      "target_leg_identity", {n}, {"p", "q"},
      [&](Tuple t) { return s.eps_t(s.comul(s.e("h", t[0]), "h", "p", "b"), "b", "q"); },
      [&](Tuple t) { return s.mul(s.one_one("a", "q") * s.e("h", t[0]), "a", "h", "p"); });
  rep.add(check_identity(
      "source_leg_identity", {n}, {"p", "q"},
      [&](Tuple t) { return s.eps_s(s.comul(s.e("h", t[0]), "h", "a", "q"), "a", "p"); },
      [&](Tuple t) { return s.mul(s.e("h", t[0]) * s.one_one("p", "b"), "h", "b", "q"); }));
  rep.add(check_identity(
      "target_product", cube(n, 2), {"r"},
      [&](Tuple t) { return s.mul(s.e("h", t[0]) * s.eps_t(s.e("k", t[1]), "k", "tk"), "h", "tk", "r"); },
      [&](Tuple t) {
        Tensor x = s.comul(s.e("h", t[0]), "h", "h1", "r") * s.e("k", t[1]);
        return s.counit(s.mul(x, "h1", "k", "x"), "x");
      }));
  rep.add(check_identity(
      "source_product", cube(n, 2), {"r"},
      [&](Tuple t) { return s.mul(s.eps_s(s.e("h", t[0]), "h", "sh") * s.e("k", t[1]), "sh", "k", "r"); },
      [&](Tuple t) {
        Tensor x = s.e("h", t[0]) * s.comul(s.e("k", t[1]), "k", "r", "k2");
        return s.counit(s.mul(x, "h", "k2", "x"), "x");
      }));
  rep.add(check_identity(
      "target_absorbs", cube(n, 2), {"r"},
      [&](Tuple t) { return s.eps_t(s.mul(s.eps_t(s.e("h", t[0]), "h", "th") * s.e("k", t[1]), "th", "k", "x"), "x", "r"); },
      [&](Tuple t) { return s.mul(s.eps_t(s.e("h", t[0]), "h", "th") * s.eps_t(s.e("k", t[1]), "k", "tk"), "th", "tk", "r"); }));
  rep.add(check_identity(
      "source_absorbs", cube(n, 2), {"r"},
      [&](Tuple t) { return s.eps_s(s.mul(s.e("h", t[0]) * s.eps_s(s.e("k", t[1]), "k", "sk"), "h", "sk", "x"), "x", "r"); },
      [&](Tuple t) { return s.mul(s.eps_s(s.e("h", t[0]), "h", "sh") * s.eps_s(s.e("k", t[1]), "k", "sk"), "sh", "sk", "r"); }));
  if (is_commutative(wb)) {
    rep.add(check_identity(
        "target_multiplicative", cube(n, 2), {"r"},
        [&](Tuple t) { return s.eps_t(s.mul(s.e("h", t[0]) * s.e("k", t[1]), "h", "k", "x"), "x", "r"); },
        [&](Tuple t) { return s.mul(s.eps_t(s.e("h", t[0]), "h", "a") * s.eps_t(s.e("k", t[1]), "k", "b"), "a", "b", "r"); }));
    rep.add(check_identity(
        "source_multiplicative", cube(n, 2), {"r"},
        [&](Tuple t) { return s.eps_s(s.mul(s.e("h", t[0]) * s.e("k", t[1]), "h", "k", "x"), "x", "r"); },
        [&](Tuple t) { return s.mul(s.eps_s(s.e("h", t[0]), "h", "a") * s.eps_s(s.e("k", t[1]), "k", "b"), "a", "b", "r"); }));
  }

  // each side of both equivalences is evaluated independently
  auto delta2 = [&](Tuple) { return s.comul(s.one_one("u", "r"), "u", "p", "q"); };
  CheckItem unit_left = check_identity(
      "unit_coproduct_left_form", {}, {"p", "q", "r"},
      [&](Tuple) { return s.mul(s.one_one("p", "b") * s.one_one("c", "r"), "c", "b", "q"); }, delta2);
  CheckItem unit_right = check_identity(
      "unit_coproduct_right_form", {}, {"p", "q", "r"},
      [&](Tuple) { return s.mul(s.one_one("p", "b") * s.one_one("c", "r"), "b", "c", "q"); }, delta2);
  CheckItem source_prime_leg = check_identity(
      "source_prime_leg_identity", {n}, {"p", "q"},
      [&](Tuple t) { return s.eps_s_prime(s.comul(s.e("h", t[0]), "h", "p", "b"), "b", "q"); },
      [&](Tuple t) { return s.mul(s.e("h", t[0]) * s.one_one("a", "q"), "h", "a", "p"); });
  bool eq_left = unit_left.pass == target_leg.pass;
  bool eq_right = unit_right.pass == source_prime_leg.pass;
  rep.add(unit_left);
  rep.add(target_leg);
  rep.add_flag("target_equivalence", eq_left);
  rep.add(unit_right);
  rep.add(source_prime_leg);
  rep.add_flag("source_prime_equivalence", eq_right);

  if (antipode) {
    const Mat& sm = *antipode;
    rep.add(check_equal("target_of_antipode", et * sm, et * es));
    rep.add(check_equal("antipode_of_source", sm * es, et * es));
    rep.add(check_equal("source_of_antipode", es * sm, es * et));
    rep.add(check_equal("antipode_of_target", sm * et, es * et));
    rep.add(check_identity(
        "antipode_right_legs", {n}, {"p", "q"},
        [&](Tuple t) {
          Tensor x = s.comul(s.comul(s.e("h", t[0]), "h", "p", "u"), "u", "v", "w");
          return s.mul(s.antipode(x, "v", "sv"), "sv", "w", "q");
        },
        [&](Tuple t) { return s.antipode(s.mul(s.e("h", t[0]) * s.one_one("a", "b"), "h", "a", "p"), "b", "q"); }));
    rep.add(check_identity(
        "antipode_left_legs", {n}, {"p", "q"},
        [&](Tuple t) {
          Tensor x = s.comul(s.comul(s.e("h", t[0]), "h", "u", "q"), "u", "v", "w");
          return s.mul(s.antipode(x, "w", "sw"), "v", "sw", "p");
        },
        [&](Tuple t) { return s.antipode(s.mul(s.one_one("a", "b") * s.e("h", t[0]), "b", "h", "q"), "a", "p"); }));
    rep.add(check_identity(
        "antipode_anti_multiplicative", cube(n, 2), {"r"},
        [&](Tuple t) { return s.antipode(s.mul(s.e("h", t[0]) * s.e("k", t[1]), "h", "k", "x"), "x", "r"); },
        [&](Tuple t) { return s.mul(s.antipode(s.e("k", t[1]), "k", "a") * s.antipode(s.e("h", t[0]), "h", "b"), "a", "b", "r"); }));
    rep.add(check_identity(
        "antipode_anti_comultiplicative", {n}, {"p", "q"},
        [&](Tuple t) { return s.comul(s.antipode(s.e("h", t[0]), "h", "x"), "x", "p", "q"); },
        [&](Tuple t) {
          Tensor x = s.comul(s.e("h", t[0]), "h", "a", "b");
          return s.antipode(s.antipode(x, "b", "p"), "a", "q");
        }));
  }
  return rep;
}

CheckReport verify_antipode(const WeakBialgebra& wb, const Mat& antipode) {
  check_shapes(wb);
  if (antipode.rows() != wb.dim() || antipode.cols() != wb.dim())
    throw Error(Errc::DimensionMismatch, "antipode must be dim x dim");
  Sweedler s(wb, antipode);
  std::size_t n = wb.dim();
  CheckReport rep;
  rep.add(check_identity(
      "antipode_target", {n}, {"r"},
      [&](Tuple t) { return s.mul(s.antipode(s.comul(s.e("h", t[0]), "h", "a", "b"), "b", "sb"), "a", "sb", "r"); },
      [&](Tuple t) { return s.eps_t(s.e("h", t[0]), "h", "r"); }));
  rep.add(check_identity(
      "antipode_source", {n}, {"r"},
      [&](Tuple t) { return s.mul(s.antipode(s.comul(s.e("h", t[0]), "h", "a", "b"), "a", "sa"), "sa", "b", "r"); },
      [&](Tuple t) { return s.eps_s(s.e("h", t[0]), "h", "r"); }));
  rep.add(check_identity(
      "antipode_sandwich", {n}, {"r"},
      [&](Tuple t) {
        Tensor x = s.comul(s.comul(s.e("h", t[0]), "h", "u", "c"), "u", "a", "b");
        x = s.antipode(s.antipode(x, "a", "sa"), "c", "sc");
        return s.mul(s.mul(x, "sa", "b", "ab"), "ab", "sc", "r");
      },
      [&](Tuple t) { return s.antipode(s.e("h", t[0]), "h", "r"); }));
  return rep;
}

Mat solve_antipode(const WeakBialgebra& wb) {
  check_shapes(wb);
  std::size_t n = wb.dim();
  Field f = wb.field();
  Sweedler s(wb);
  const Mat& m = wb.alg.mult;
  const Mat& d = wb.coalg.comult;
  const Mat& es = s.eps_s_matrix();
  // left multiplication by ε_s(e_j)
  std::vector<Mat> left_src;
  for (std::size_t j = 0; j < n; ++j) {
    Mat l(f, n, n);
    for (std::size_t q = 0; q < n; ++q) {
      if (es(q, j).is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t out = 0; out < n; ++out)
          if (!m(out, q * n + r).is_zero()) l(out, r) += es(q, j) * m(out, q * n + r);
    }
    left_src.push_back(std::move(l));
  }
  // Unknown (r, c) is the coefficient of e_r in S(e_c), column r*n + c.
  // Row blocks: h_1S(h_2) = ε_t(h); S(h_1)h_2 = ε_s(h); and the sandwich
  // axiom in the form S(h) = ε_s(h_1)S(h_2), equivalent given the second.
  std::size_t nn = n * n;
  Mat sys(f, 3 * nn, nn);
  Mat rhs(f, 3 * nn, 1);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = d(j * n + k, h);
        if (c.is_zero()) continue;
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t out = 0; out < n; ++out) {
            const Scalar& a = m(out, j * n + r);
            if (!a.is_zero()) sys(h * n + out, r * n + k) += c * a;
            const Scalar& b = m(out, r * n + k);
            if (!b.is_zero()) sys(nn + h * n + out, r * n + j) += c * b;
            const Scalar& l = left_src[j](out, r);
            if (!l.is_zero()) sys(2 * nn + h * n + out, r * n + k) -= c * l;
          }
      }
    for (std::size_t out = 0; out < n; ++out) {
      rhs(h * n + out, 0) = s.eps_t_matrix()(out, h);
      rhs(nn + h * n + out, 0) = es(out, h);
      sys(2 * nn + h * n + out, out * n + h) += Scalar(f, 1);
    }
  }
  auto sol = solve(sys, rhs);
  if (!sol) throw Error(Errc::NoAntipode, "antipode equations are inconsistent");
  std::size_t nullity = nn - rank(sys);
  if (nullity > 0) throw UnderdeterminedAntipode(nullity);
  Mat sm(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) sm(r, c) = (*sol)(r * n + c, 0);
  CheckReport rep = verify_antipode(wb, sm);
  if (!rep.all_passed()) throw Error(Errc::NoAntipode, "solution violates " + rep.failures().front());
  return sm;
}

HopfCriterion hopf_criterion(const WeakHopfAlgebra& h) {
  CheckReport pre = check_weak_bialgebra(h.wb);
  pre.add_all(verify_antipode(h.wb, h.antipode));
  if (!pre.all_passed())
    throw Error(Errc::InvalidStructure, "not a weak Hopf algebra (first failure: " + pre.failures().front() + ")");
  const WeakBialgebra& wb = h.wb;
  Sweedler s(wb, h.antipode);
  std::size_t n = wb.dim();
  Field f = wb.field();
  HopfCriterion out;
  CheckReport& rep = out.report;
  rep.add(check_identity(
      "unit_grouplike", {}, {"p", "q"}, [&](Tuple) { return s.one_one("p", "q"); },
      [&](Tuple) { return s.one("p") * s.one("q"); }));
  rep.add(check_identity(
      "counit_multiplicative", cube(n, 2), {},
      [&](Tuple t) { return s.counit(s.mul(s.e("h", t[0]) * s.e("k", t[1]), "h", "k", "x"), "x"); },
      [&](Tuple t) { return s.counit(s.e("h", t[0]), "h") * s.counit(s.e("k", t[1]), "k"); }));
  rep.add(check_identity(
      "antipode_right_classical", {n}, {"r"},
      [&](Tuple t) { return s.mul(s.antipode(s.comul(s.e("h", t[0]), "h", "a", "b"), "b", "sb"), "a", "sb", "r"); },
      [&](Tuple t) { return s.counit(s.e("h", t[0]), "h") * s.one("r"); }));
  rep.add(check_identity(
      "antipode_left_classical", {n}, {"r"},
      [&](Tuple t) { return s.mul(s.antipode(s.comul(s.e("h", t[0]), "h", "a", "b"), "a", "sa"), "sa", "b", "r"); },
      [&](Tuple t) { return s.counit(s.e("h", t[0]), "h") * s.one("r"); }));
  const Mat& et = s.eps_t_matrix();
  const Mat& es = s.eps_s_matrix();
  std::size_t rt = rank(et);
  std::size_t rs = rank(es);
  bool trivial_base = rt == 1 && rs == 1 && et * wb.alg.unit == wb.alg.unit && es * wb.alg.unit == wb.alg.unit;
  rep.add_flag("trivial_target_source", trivial_base,
               {Scalar(f, static_cast<std::int64_t>(rt)), Scalar(f, static_cast<std::int64_t>(rs))});
  for (std::size_t i = 0; i < 5; ++i) out.conditions[i] = rep.items()[i].pass;
  out.agree = std::all_of(out.conditions.begin(), out.conditions.end(), [&](bool b) { return b == out.conditions[0]; });
  rep.add_flag("conditions_agree", out.agree);
  return out;
}

bool is_commutative(const WeakBialgebra& wb) {
  return wb.alg.mult * twist(wb.field(), wb.dim(), wb.dim()) == wb.alg.mult;
}

bool is_cocommutative(const WeakBialgebra& wb) {
  return twist(wb.field(), wb.dim(), wb.dim()) * wb.coalg.comult == wb.coalg.comult;
}

WeakBialgebra opposite(const WeakBialgebra& wb) {
  WeakBialgebra r = wb;
  r.alg.mult = wb.alg.mult * twist(wb.field(), wb.dim(), wb.dim());
  return r;
}

WeakBialgebra coopposite(const WeakBialgebra& wb) {
  WeakBialgebra r = wb;
  r.coalg.comult = twist(wb.field(), wb.dim(), wb.dim()) * wb.coalg.comult;
  return r;
}

CheckReport validate(const WeakHopfAlgebra& h) {
  CheckReport rep = check_weak_bialgebra(h.wb);
  rep.add_all(verify_antipode(h.wb, h.antipode));
  rep.add_all(identity_suite(h.wb, h.antipode));
  return rep;
}

}  // namespace weakhopf
