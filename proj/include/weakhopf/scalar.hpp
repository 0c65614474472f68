#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace weakhopf {

// Q when characteristic() == 0, otherwise F_p.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);
  // "Q", "Fp:5"
  static Field parse(std::string_view s);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// Exact field element. Rationals are kept in lowest terms with positive
// denominator; small values avoid GMP allocation entirely.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Field f) : p_(f.characteristic()) {}
  Scalar(Field f, std::int64_t v);
  static Scalar rational(std::int64_t num, std::int64_t den);
  static Scalar from_mpq(mpq_class q);
  static Scalar parse(Field f, std::string_view s);

  Field field() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

  Scalar operator+(const Scalar& b) const;
  Scalar operator-(const Scalar& b) const;
  Scalar operator*(const Scalar& b) const;
  Scalar operator/(const Scalar& b) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar inv() const;
  Scalar pow(std::int64_t e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  mpq_class to_mpq() const;
  std::uint64_t residue() const;
  // "a/b" or "a"
  std::string to_string() const;
  // numerator/denominator fit in int64
  bool is_small() const { return !big_; }
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }

 private:
  void same_field(const Scalar& b) const;
  static Scalar from_i128(__int128 num, __int128 den);

  std::uint64_t p_ = 0;
  std::int64_t num_ = 0;  // residue in F_p
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

// Primitive n-th root of unity with the smallest residue.
Scalar root_of_unity(Field f, std::uint64_t n);

}  // namespace weakhopf
