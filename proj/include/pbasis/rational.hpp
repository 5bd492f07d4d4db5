#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <utility>

#include "pbasis/errors.hpp"

namespace pbasis {

using BigInt = mpz_class;

// Exact rational number. Always stored reduced with positive denominator
// (mpq canonical form); every constructor canonicalizes.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(int n) : q_(n) {}    // NOLINT: implicit by design
  Rat(long n) : q_(n) {}   // NOLINT
  Rat(const BigInt& n) : q_(n) {}  // NOLINT
  Rat(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("rational with zero denominator");
    q_ = mpq_class(num) / mpq_class(den);
  }

  // Accepts "n" or "n/d" with optional sign, arbitrary precision.
  static Rat parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(BigInt(s));
      return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw Error("cannot parse rational: '" + s + "'");
    }
  }

  const BigInt& num() const { return q_.get_num(); }
  const BigInt& den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  std::string str() const { return q_.get_str(); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
  friend Rat operator-(const Rat& a) { Rat r; r.q_ = -a.q_; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Rat abs(const Rat& a) { Rat r; r.q_ = abs(a.q_); return r; }

  // Integer power, n >= 0.
  friend Rat pow(const Rat& a, unsigned long n) {
    Rat r;
    mpz_pow_ui(r.q_.get_num_mpz_t(), a.q_.get_num_mpz_t(), n);
    mpz_pow_ui(r.q_.get_den_mpz_t(), a.q_.get_den_mpz_t(), n);
    return r;  // powers of a canonical fraction stay canonical
  }

 private:
  mpq_class q_;
};

// redeclare the hidden friends for qualified lookup
Rat abs(const Rat& a);
Rat pow(const Rat& a, unsigned long n);

inline BigInt gcd_big(const BigInt& a, const BigInt& b) { return gcd(a, b); }
inline BigInt lcm_big(const BigInt& a, const BigInt& b) { return lcm(a, b); }

}  // namespace pbasis
