#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "weakhopf/error.hpp"
#include "weakhopf/scalar.hpp"

using namespace weakhopf;

namespace {

Scalar q(std::int64_t a, std::int64_t b = 1) { return Scalar::rational(a, b); }

std::int64_t small(std::mt19937_64& rng, std::int64_t range) {
  return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK((q(1, 2) + q(1, 3)).to_string() == "5/6");
  CHECK(q(2, 4) == q(1, 2));
  CHECK(q(3, -6).to_string() == "-1/2");
  CHECK((q(7, 3) / q(7, 3)).is_one());
  CHECK((q(2, 5) - q(2, 5)).is_zero());
  CHECK(q(3, 4).inv() == q(4, 3));
  CHECK_THROWS_AS(q(0).inv(), Error);
}

TEST_CASE("prime field arithmetic") {
  Field f5 = Field::prime(5);
  CHECK(Scalar(f5, 2).inv() == Scalar(f5, 3));
  CHECK(Scalar(f5, 7) == Scalar(f5, 2));
  CHECK(Scalar(f5, -1).residue() == 4);
  CHECK_THROWS_AS(Field::prime(4), Error);
  CHECK_THROWS_AS(Scalar(f5, 1) + Scalar(Field::prime(7), 1), Error);
  CHECK_THROWS_AS(Scalar(f5, 1) + q(1), Error);
}

TEST_CASE("roots of unity") {
  Field f7 = Field::prime(7);
  // exhaustive search for the smallest element of multiplicative order 3
  std::int64_t expected = 0;
  for (std::int64_t a = 2; a < 7 && !expected; ++a)
    if (a * a * a % 7 == 1) expected = a;
  Scalar r = root_of_unity(f7, 3);
  CHECK(r.pow(3).is_one());
  CHECK(!r.is_one());
  CHECK(r == Scalar(f7, expected));
  CHECK(expected == 2);
  CHECK(root_of_unity(Field::prime(5), 4).pow(2) == Scalar(Field::prime(5), -1));
  CHECK(root_of_unity(Field::rationals(), 2) == q(-1));
  CHECK_THROWS_AS(root_of_unity(Field::rationals(), 3), Error);
  CHECK_THROWS_AS(root_of_unity(f7, 5), Error);
}

TEST_CASE("parsing and printing") {
  Field Q = Field::rationals();
  CHECK(Scalar::parse(Q, "-3/9") == q(-1, 3));
  CHECK(Scalar::parse(Q, "12") == q(12));
  CHECK(Scalar::parse(Field::prime(7), "10") == Scalar(Field::prime(7), 3));
  CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse(Q, "abc"), Error);
  CHECK(Field::parse("Fp:11").characteristic() == 11);
  CHECK(Field::parse("Q").is_rational());
  CHECK_THROWS_AS(Field::parse("R"), Error);
  CHECK_THROWS_AS(Field::parse("Fp:9"), Error);
}

TEST_CASE("large rationals leave the fast path exactly") {
  Scalar big = q(1LL << 62);
  Scalar sq = big * big;
  CHECK(!sq.is_small());
  CHECK(sq / big == big);
  CHECK(sq.to_string() == "21267647932558653966460912964485513216");
  Scalar back = sq - sq + q(1, 3);
  CHECK(back.is_small());
  CHECK(back == q(1, 3));
}

TEST_CASE("field axioms on random triples agree with the reference arithmetic") {
  std::mt19937_64 rng(2024);
  for (std::uint64_t p : {0ULL, 2ULL, 5ULL, 101ULL}) {
    Field f = p ? Field::prime(p) : Field::rationals();
    for (int trial = 0; trial < 300; ++trial) {
      auto draw = [&]() {
        std::int64_t a = small(rng, 50), b = small(rng, 9);
        if (b == 0) b = 1;
        if (p && b % static_cast<std::int64_t>(p) == 0) b = 1;
        return std::pair{Scalar(f, a) / Scalar(f, b), oracle::Num(a, b, p)};
      };
      auto [a, oa] = draw();
      auto [b, ob] = draw();
      auto [c, oc] = draw();
      CHECK(oracle::from_scalar(a + b) == oa + ob);
      CHECK(oracle::from_scalar(a * b) == oa * ob);
      CHECK(oracle::from_scalar(a - c) == oa - oc);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      if (!b.is_zero()) {
        CHECK((a / b) * b == a);
        CHECK((b * b.inv()).is_one());
        CHECK(oracle::from_scalar(a / b) == oa / ob);
      }
      CHECK((a + (-a)).is_zero());
      // canonical form: equality agrees with equality of printed forms
      CHECK((a == b) == (a.to_string() == b.to_string()));
    }
  }
}
