#include <doctest.h>

#include "oracle.hpp"
#include "weakhopf/groups.hpp"
#include "weakhopf/zoo.hpp"

using namespace weakhopf;

namespace {

Field Q = Field::rationals();
FiniteGroupTable C(std::size_t n) { return FiniteGroupTable::cyclic(n); }

std::vector<std::pair<std::string, WeakHopfAlgebra>> zoo() {
  return {
      {"kC1", build_group_algebra(C(1), Q)},
      {"kC2", build_group_algebra(C(2), Q)},
      {"kC3", build_group_algebra(C(3), Q)},
      {"kS3", build_group_algebra(FiniteGroupTable::symmetric(3), Q)},
      {"H^C2", build_HG(C(2), Q)},
      {"H^C3", build_HG(C(3), Q)},
      {"H^C2xC2 F5", build_HG(FiniteGroupTable::parse("C2xC2"), Field::prime(5))},
      {"k(C2+C3)", build_groupoid_algebra({C(2), C(3)}, Q)},
      {"k(C1+C1)", build_groupoid_algebra({C(1), C(1)}, Q)},
      {"Kaplansky(kC2)", build_kaplansky(build_group_algebra(C(2), Q))},
      {"dual(H^C3)", build_dual(build_HG(C(3), Q))},
      {"kC2 + H^C2", build_disjoint_union({build_group_algebra(C(2), Q), build_HG(C(2), Q)})},
  };
}

const CheckItem& item(const CheckReport& r, const std::string& id) {
  const CheckItem* it = r.find(id);
  REQUIRE(it != nullptr);
  return *it;
}

// monoid algebra of {1, x} with x² = x and x group-like: a bialgebra without antipode
WeakBialgebra idempotent_monoid() {
  oracle::Structure s(2, 0);
  s.mult[0][0][0] = s.mult[0][1][1] = s.mult[1][0][1] = s.mult[1][1][1] = s.one();
  s.unit[0] = s.one();
  s.comult[0][0][0] = s.comult[1][1][1] = s.one();
  s.counit[0] = s.counit[1] = s.one();
  return oracle::to_library(s).wb;
}

}  // namespace

TEST_CASE("weak bialgebra validator") {
  CHECK(check_weak_bialgebra(build_HG(C(2), Q).wb).all_passed());
  CHECK(check_weak_bialgebra(build_groupoid_algebra({C(1), C(1)}, Q).wb).all_passed());

  WeakHopfAlgebra h = build_HG(C(2), Q);
  h.wb.alg.mult(0, 1 * 2 + 1) = Scalar(Q, 3);  // g·g = 3·1
  CHECK(!oracle::first_violation(oracle::from_library(h.wb), false).empty());
  CheckReport r = check_weak_bialgebra(h.wb);
  CHECK(!r.all_passed());
  bool triple = false;
  for (const auto& it : r.items())
    if (!it.pass && it.witness && it.witness->size() == 3) triple = true;
  CHECK(triple);
  CHECK(!item(r, "weak_counit_first").pass);
}

TEST_CASE("target and source maps") {
  WeakHopfAlgebra h = build_HG(C(3), Q);
  CHECK(eps_t(h.wb) == Mat::identity(Q, 3));
  CHECK(eps_s(h.wb) == Mat::identity(Q, 3));

  WeakHopfAlgebra k = build_group_algebra(C(2), Q);
  CHECK(eps_t(k.wb) == k.wb.alg.unit * k.wb.coalg.counit);
  CHECK(eps_s(k.wb) == k.wb.alg.unit * k.wb.coalg.counit);

  // ε_t(δ_g) = ε(1_1 δ_g)1_2 by brute force on the reference constants
  oracle::Structure g = oracle::groupoid({oracle::cyclic(2), oracle::cyclic(3)});
  Mat expected(Q, 5, 5);
  for (std::size_t x = 0; x < 5; ++x)
    for (std::size_t u = 0; u < 5; ++u) {
      if (g.unit[u].zero()) continue;
      for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 5; ++b) {
          oracle::Num c = g.unit[u] * g.comult[u][a][b];
          if (c.zero()) continue;
          oracle::Num eps(0);
          for (std::size_t m = 0; m < 5; ++m) eps += g.mult[a][x][m] * g.counit[m];
          expected(b, x) = expected(b, x) + oracle::to_scalar(c * eps);
        }
    }
  Mat et = eps_t(build_groupoid_algebra({C(2), C(3)}, Q).wb);
  CHECK(et == expected);
  // δ_g ↦ δ_{e_i} for g in component i
  for (std::size_t x = 0; x < 5; ++x) CHECK(et.col(x) == Mat::unit_column(Q, 5, x < 2 ? 0 : 2));
}

TEST_CASE("identity suite") {
  for (const auto& [name, h] : zoo()) {
    CAPTURE(name);
    CheckReport r = identity_suite(h.wb, h.antipode);
    CHECK(r.failures().empty());
    CHECK(identity_suite(h.wb).all_passed());
  }
  WeakHopfAlgebra k = build_group_algebra(C(2), Q);
  CHECK(item(identity_suite(k.wb), "target_leg_identity").pass);

  WeakHopfAlgebra bad = build_HG(C(2), Q);
  bad.wb.coalg.counit(0, 1) = Scalar(Q, 1);
  CheckReport r = identity_suite(bad.wb);
  const CheckItem& it = item(r, "counit_absorbs_target");
  CHECK(!it.pass);
  CHECK(it.witness.has_value());
  CHECK(it.residual.has_value());
}

TEST_CASE("antipode verification") {
  WeakHopfAlgebra h = build_HG(C(2), Q);
  CHECK(h.antipode == Mat::identity(Q, 2));
  CHECK(verify_antipode(h.wb, Mat::identity(Q, 2)).all_passed());
  CHECK(!verify_antipode(h.wb, Mat::identity(Q, 2).scaled(Scalar(Q, 2))).passed("antipode_target"));

  WeakHopfAlgebra g = build_groupoid_algebra({C(2), C(3)}, Q);
  oracle::Structure o = oracle::groupoid({oracle::cyclic(2), oracle::cyclic(3)});
  CHECK(verify_antipode(g.wb, oracle::to_library(o).antipode).all_passed());
}

TEST_CASE("antipode solving") {
  CHECK(solve_antipode(build_HG(C(2), Q).wb) == Mat::identity(Q, 2));
  Mat perm(Q, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) perm((3 - i) % 3, i) = Scalar(Q, 1);
  CHECK(solve_antipode(build_group_algebra(C(3), Q).wb) == perm);
  CHECK(solve_antipode(build_group_algebra(C(2), Q).wb) == Mat::identity(Q, 2));

  WeakBialgebra m = idempotent_monoid();
  CHECK(check_weak_bialgebra(m).all_passed());
  CHECK(oracle::first_violation(oracle::from_library(m), false).empty());
  // x·S(x) = 1 has no solution since x(a + bx) = (a + b)x
  try {
    solve_antipode(m);
    FAIL("expected NoAntipode");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoAntipode);
  }

  for (const auto& [name, h] : zoo()) {
    CAPTURE(name);
    Mat s = solve_antipode(h.wb);
    CHECK(s == h.antipode);
    CHECK(verify_antipode(h.wb, s).all_passed());
  }
}

TEST_CASE("Hopf criterion") {
  auto all = [](const HopfCriterion& c, bool v) {
    for (bool b : c.conditions)
      if (b != v) return false;
    return c.agree;
  };
  CHECK(all(hopf_criterion(build_group_algebra(C(3), Q)), true));
  CHECK(all(hopf_criterion(build_HG(C(2), Q)), false));
  CHECK(all(hopf_criterion(build_disjoint_union({build_group_algebra(C(2), Q), build_group_algebra(C(3), Q)})),
            false));
  for (const auto& [name, h] : zoo()) {
    CAPTURE(name);
    HopfCriterion c = hopf_criterion(h);
    CHECK(c.agree);
    CHECK(all(c, c.conditions[0]));
  }
}

TEST_CASE("structural invariants on the zoo") {
  for (const auto& [name, h] : zoo()) {
    CAPTURE(name);
    Mat t = eps_t(h.wb), s = eps_s(h.wb), sp = eps_s_prime(h.wb);
    CHECK(t * t == t);
    CHECK(s * s == s);
    CHECK(sp * sp == sp);
    CheckReport r = identity_suite(h.wb);
    CHECK(item(r, "target_factorization").pass);
    CHECK(item(r, "source_factorization").pass);
    CHECK(item(r, "target_equivalence").pass);
    CHECK(item(r, "source_prime_equivalence").pass);
    CHECK(oracle::first_violation(oracle::from_library(h.wb, &h.antipode), true).empty());
  }
}

TEST_CASE("opposite and coopposite") {
  WeakHopfAlgebra s3 = build_group_algebra(FiniteGroupTable::symmetric(3), Q);
  CHECK(!is_commutative(s3.wb));
  CHECK(is_cocommutative(s3.wb));
  WeakBialgebra op = opposite(s3.wb);
  CHECK(check_weak_bialgebra(op).all_passed());
  CHECK(opposite(op).alg.mult == s3.wb.alg.mult);
  WeakBialgebra d = build_dual(s3.wb);
  CHECK(is_commutative(d));
  CHECK(!is_cocommutative(d));
  CHECK(check_weak_bialgebra(coopposite(d)).all_passed());
}
