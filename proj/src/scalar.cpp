#include "weakhopf/scalar.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <vector>

#include "weakhopf/error.hpp"

namespace weakhopf {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 mag = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  std::uint64_t words[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
  mpz_class z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (neg) z = -z;
  return z;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
  i128 r = static_cast<i128>(v) % static_cast<i128>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) return n == d;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic Miller-Rabin bases for 64-bit inputs
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::InvalidField, std::to_string(p) + " is not prime");
  if (p >= (1ULL << 62)) throw Error(Errc::InvalidField, "prime too large");
  return Field(p);
}

Field Field::parse(std::string_view s) {
  if (s == "Q") return rationals();
  std::string_view rest;
  if (s.substr(0, 3) == "Fp:") rest = s.substr(3);
  else if (s.substr(0, 2) == "F_") rest = s.substr(2);
  else throw Error(Errc::ParseError, "unknown field '" + std::string(s) + "'");
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
  if (ec != std::errc() || ptr != rest.data() + rest.size())
    throw Error(Errc::ParseError, "bad prime in field '" + std::string(s) + "'");
  return prime(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

Scalar::Scalar(Field f, std::int64_t v) : p_(f.characteristic()) {
  if (p_ == 0) {
    if (v == std::numeric_limits<std::int64_t>::min()) {
      big_ = std::make_shared<const mpq_class>(mpz_from_i128(v));
    } else {
      num_ = v;
    }
  } else {
    num_ = static_cast<std::int64_t>(reduce(v, p_));
  }
}

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  return from_i128(num, den);
}

Scalar Scalar::from_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(num < 0 ? static_cast<u128>(-num) : static_cast<u128>(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Scalar r;
  if (num >= -kSmallMax && num <= kSmallMax && den <= kSmallMax) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Scalar Scalar::from_mpq(mpq_class q) {
  q.canonicalize();
  Scalar r;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 63 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 63) {
    r.num_ = n.get_si();
    r.den_ = d.get_si();
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Scalar Scalar::parse(Field f, std::string_view s) {
  auto bad = [&] { return Error(Errc::ParseError, "bad scalar '" + std::string(s) + "'"); };
  if (s.empty()) throw bad();
  mpq_class q;
  try {
    std::string str(s);
    auto slash = str.find('/');
    mpz_class num(str.substr(0, slash), 10);
    mpz_class den(1);
    if (slash != std::string::npos) den = mpz_class(str.substr(slash + 1), 10);
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + str + "'");
    q = mpq_class(num, den);
  } catch (const std::invalid_argument&) {
    throw bad();
  }
  q.canonicalize();
  if (f.is_rational()) return from_mpq(q);
  mpz_class p(static_cast<unsigned long>(f.characteristic()));
  mpz_class n = q.get_num() % p;
  mpz_class d = q.get_den() % p;
  if (d == 0) throw Error(Errc::DivisionByZero, "denominator divisible by p in '" + std::string(s) + "'");
  if (n < 0) n += p;
  Scalar sn(f, static_cast<std::int64_t>(n.get_ui()));
  Scalar sd(f, static_cast<std::int64_t>(d.get_ui()));
  return sn / sd;
}

Field Scalar::field() const { return Field(p_); }

void Scalar::same_field(const Scalar& b) const {
  if (p_ != b.p_) throw Error(Errc::FieldMismatch, "operands from different fields");
}

mpq_class Scalar::to_mpq() const {
  if (p_ != 0) return mpq_class(static_cast<unsigned long>(num_));
  if (big_) return *big_;
  return mpq_class(mpz_from_i128(num_), mpz_from_i128(den_));
}

std::uint64_t Scalar::residue() const { return static_cast<std::uint64_t>(num_); }

Scalar Scalar::operator+(const Scalar& b) const {
  same_field(b);
  if (p_ != 0) {
    Scalar r(*this);
    std::uint64_t s = static_cast<std::uint64_t>(num_) + static_cast<std::uint64_t>(b.num_);
    if (s >= p_) s -= p_;
    r.num_ = static_cast<std::int64_t>(s);
    return r;
  }
  if (is_zero()) return b;
  if (b.is_zero()) return *this;
  if (!big_ && !b.big_) {
    if (den_ == b.den_) return from_i128(static_cast<i128>(num_) + b.num_, den_);
    return from_i128(static_cast<i128>(num_) * b.den_ + static_cast<i128>(b.num_) * den_,
                     static_cast<i128>(den_) * b.den_);
  }
  return from_mpq(to_mpq() + b.to_mpq());
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (p_ != 0) {
    if (num_ != 0) r.num_ = static_cast<std::int64_t>(p_) - num_;
    return r;
  }
  if (big_) return from_mpq(-*big_);
  r.num_ = -num_;
  return r;
}

Scalar Scalar::operator-(const Scalar& b) const { return *this + (-b); }

Scalar Scalar::operator*(const Scalar& b) const {
  same_field(b);
  if (p_ != 0) {
    Scalar r(*this);
    r.num_ = static_cast<std::int64_t>(mulmod(num_, b.num_, p_));
    return r;
  }
  if (is_zero() || b.is_zero()) return Scalar();
  if (!big_ && !b.big_) {
    return from_i128(static_cast<i128>(num_) * b.num_, static_cast<i128>(den_) * b.den_);
  }
  return from_mpq(to_mpq() * b.to_mpq());
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (p_ != 0) {
    Scalar r(*this);
    r.num_ = static_cast<std::int64_t>(powmod(num_, p_ - 2, p_));
    return r;
  }
  if (!big_) return from_i128(den_, num_);
  return from_mpq(1 / *big_);
}

Scalar Scalar::operator/(const Scalar& b) const {
  same_field(b);
  return *this * b.inv();
}

Scalar Scalar::pow(std::int64_t e) const {
  Scalar base = e < 0 ? inv() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Scalar r(field(), 1);
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical form: big values never fit in the small representation
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(num_);
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar root_of_unity(Field f, std::uint64_t n) {
  if (n == 0) throw Error(Errc::NoSuchRoot, "order 0");
  if (f.is_rational()) {
    if (n == 1) return Scalar(f, 1);
    if (n == 2) return Scalar(f, -1);
    throw Error(Errc::NoSuchRoot, "Q has no primitive " + std::to_string(n) + "-th root of unity");
  }
  std::uint64_t p = f.characteristic();
  if ((p - 1) % n != 0)
    throw Error(Errc::NoSuchRoot, std::to_string(n) + " does not divide " + std::to_string(p - 1));
  std::vector<std::uint64_t> primes;
  for (std::uint64_t m = n, d = 2; m > 1; ++d) {
    if (d * d > m) {
      primes.push_back(m);
      break;
    }
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  auto has_order_n = [&](std::uint64_t q) {
    if (powmod(q, n, p) != 1) return false;
    for (std::uint64_t r : primes)
      if (powmod(q, n / r, p) == 1) return false;
    return true;
  };
  std::uint64_t q = 0;
  for (std::uint64_t x = 1; x < p; ++x) {
    std::uint64_t c = powmod(x, (p - 1) / n, p);
    if (has_order_n(c)) {
      q = c;
      break;
    }
  }
  // every primitive root is q^k with gcd(k,n)=1; report the smallest
  std::uint64_t best = q;
  std::uint64_t cur = q;
  for (std::uint64_t k = 2; k < n; ++k) {
    cur = mulmod(cur, q, p);
    if (std::gcd(k, n) == 1 && cur < best) best = cur;
  }
  return Scalar(f, static_cast<std::int64_t>(best));
}

}  // namespace weakhopf
