#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace phopf {

// The ground field: p == 0 is ℚ, otherwise 𝔽p for a prime p < 2^31.
struct Field {
  std::uint32_t p = 0;

  bool is_rational() const { return p == 0; }
  std::string name() const;
  static Field parse(std::string_view text);
  static Field rationals() { return {}; }
  static Field prime(std::uint32_t p);

  friend bool operator==(Field, Field) = default;
};

// Exact field element. Rationals keep an int64 fast path and fall back to
// GMP when numerator or denominator overflow. A rational constant mixed with
// an 𝔽p element is coerced into 𝔽p; two different primes never mix.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long v);  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(static_cast<long long>(v)) {}  // NOLINT
  Scalar(long long num, long long den);
  explicit Scalar(const mpq_class& q);

  static Scalar parse(std::string_view text, Field f = {});
  static Scalar in_field(long long v, Field f);

  Field field() const { return {p_}; }
  Scalar to_field(Field f) const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  Scalar inverse() const;
  mpq_class to_mpq() const;
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void set_big(mpq_class q);
  void normalize_big();
  void unify(const Scalar& o);
  Scalar& mod_add(const Scalar& o, bool negate);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace phopf
