#include "phopf/scalar.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "phopf/errors.hpp"

namespace phopf {

namespace {

using i128 = __int128;

bool fits(i128 v) {
  return v >= INT64_MIN / 2 && v <= INT64_MAX / 2;
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod_pow(std::int64_t b, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::int64_t residue(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_si();
}

mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::string Field::name() const {
  return p == 0 ? "Q" : "Fp:" + std::to_string(p);
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw FieldMismatch("modulus " + std::to_string(p) + " is not a prime below 2^31");
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return {};
  if (text.substr(0, 3) == "Fp:") {
    std::uint64_t p = 0;
    auto body = text.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size() && p < (1ull << 31))
      return prime(static_cast<std::uint32_t>(p));
  }
  throw SchemaError("field must be \"Q\" or \"Fp:<prime>\", got \"" + std::string(text) + "\"");
}

Scalar::Scalar(long long v) {
  if (fits(v)) {
    num_ = v;
  } else {
    set_big(mpq_class(to_mpz(v)));
  }
}

Scalar::Scalar(long long num, long long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  set_big(mpq_class(to_mpz(num), to_mpz(den)));
}

Scalar::Scalar(const mpq_class& q) { set_big(q); }

void Scalar::set_big(mpq_class q) {
  q.canonicalize();
  big_ = std::make_shared<const mpq_class>(std::move(q));
  normalize_big();
}

void Scalar::normalize_big() {
  const mpq_class& q = *big_;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    long n = q.get_num().get_si();
    long d = q.get_den().get_si();
    if (fits(n) && fits(d)) {
      num_ = n;
      den_ = d;
      big_.reset();
    }
  }
}

Scalar Scalar::in_field(long long v, Field f) { return Scalar(v).to_field(f); }

Scalar Scalar::parse(std::string_view text, Field f) {
  std::string s(text);
  auto bad = [&]() { return SchemaError("malformed scalar \"" + s + "\""); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  std::string ns = s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits_ok = [](const std::string& t, bool allow_sign) {
    std::size_t i = (allow_sign && !t.empty() && t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!digits_ok(ns, true) || !digits_ok(ds, false)) throw bad();
  mpz_class n(ns), d(ds);
  if (d == 0) throw SchemaError("zero denominator in scalar \"" + s + "\"");
  Scalar r(mpq_class(n, d));
  return r.to_field(f);
}

Scalar Scalar::to_field(Field f) const {
  if (f.p == p_) return *this;
  if (p_ != 0)
    throw FieldMismatch("cannot move an element of " + field().name() + " into " + f.name());
  Scalar r;
  r.p_ = f.p;
  std::int64_t n, d;
  if (big_) {
    n = residue(big_->get_num(), f.p);
    d = residue(big_->get_den(), f.p);
  } else {
    n = ((num_ % std::int64_t(f.p)) + f.p) % f.p;
    d = den_ % std::int64_t(f.p);
  }
  if (d == 0) throw DivisionByZero("denominator vanishes in " + f.name());
  r.num_ = n * mod_pow(d, f.p - 2, f.p) % f.p;
  r.den_ = 1;
  return r;
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

std::string Scalar::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

void Scalar::unify(const Scalar& o) {
  if (p_ == o.p_) return;
  if (p_ == 0) {
    *this = to_field(o.field());
  } else if (o.p_ != 0) {
    throw FieldMismatch("mixing " + field().name() + " and " + o.field().name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_) {
    r.num_ = num_ == 0 ? 0 : p_ - num_;
  } else if (big_) {
    r.set_big(-*big_);
  } else {
    r.num_ = -num_;
  }
  return r;
}

Scalar& Scalar::mod_add(const Scalar& o, bool negate) {
  std::int64_t b = o.p_ == p_ ? o.num_ : o.to_field(field()).num_;
  if (negate) b = b == 0 ? 0 : p_ - b;
  num_ = (num_ + b) % p_;
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  unify(o);
  if (p_) return mod_add(o, false);
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      i128 s = i128(num_) + o.num_;
      if (fits(s)) {
        num_ = std::int64_t(s);
        return *this;
      }
    } else {
      i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
      i128 d = i128(den_) * o.den_;
      i128 g = gcd128(n, d);
      if (g > 1) {
        n /= g;
        d /= g;
      }
      if (fits(n) && fits(d)) {
        num_ = std::int64_t(n);
        den_ = std::int64_t(d);
        return *this;
      }
    }
  }
  set_big(to_mpq() + o.to_mpq());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  unify(o);
  if (p_) return mod_add(o, true);
  return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  unify(o);
  if (p_) {
    std::int64_t b = o.p_ == p_ ? o.num_ : o.to_field(field()).num_;
    num_ = num_ * b % p_;
    return *this;
  }
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      i128 s = i128(num_) * o.num_;
      if (fits(s)) {
        num_ = std::int64_t(s);
        return *this;
      }
    } else {
      i128 g1 = gcd128(num_, o.den_);
      i128 g2 = gcd128(o.num_, den_);
      if (g1 == 0) g1 = 1;
      if (g2 == 0) g2 = 1;
      i128 n = (i128(num_) / g1) * (i128(o.num_) / g2);
      i128 d = (i128(den_) / g2) * (i128(o.den_) / g1);
      if (n == 0) d = 1;
      if (fits(n) && fits(d)) {
        num_ = std::int64_t(n);
        den_ = std::int64_t(d);
        return *this;
      }
    }
  }
  set_big(to_mpq() * o.to_mpq());
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar r = *this;
  if (p_) {
    r.num_ = mod_pow(num_, p_ - 2, p_);
    return r;
  }
  if (big_) {
    r.set_big(1 / *big_);
    return r;
  }
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  unify(o);
  Scalar inv = o.p_ == p_ ? o.inverse() : o.to_field(field()).inverse();
  return *this *= inv;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) {
    if (a.p_ != 0 && b.p_ != 0) return false;
    const Scalar& r = a.p_ == 0 ? a : b;
    const Scalar& m = a.p_ == 0 ? b : a;
    try {
      return r.to_field(m.field()).num_ == m.num_;
    } catch (const DivisionByZero&) {
      return false;
    }
  }
  if (a.p_) return a.num_ == b.num_;
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in representation only when values differ
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace phopf
