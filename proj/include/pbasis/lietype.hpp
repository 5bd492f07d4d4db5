#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "pbasis/errors.hpp"
#include "pbasis/rational.hpp"

namespace pbasis {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
  Family family;
  int rank;

  friend bool operator==(const LieType&, const LieType&) = default;
};

inline bool is_valid(const LieType& t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 3;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

inline std::string to_string(const LieType& t) {
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

// Family letter followed by rank digits, case-insensitive ("D4", "g2").
inline LieType parse_type(const std::string& s) {
  if (s.size() < 2) throw InvalidTypeError("cannot parse Lie type: '" + s + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (f < 'A' || f > 'G') throw InvalidTypeError("unknown family in type: '" + s + "'");
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])) || rank > 100)
      throw InvalidTypeError("cannot parse Lie type: '" + s + "'");
    rank = rank * 10 + (s[i] - '0');
  }
  const LieType t{static_cast<Family>(f), rank};
  if (!is_valid(t)) throw InvalidTypeError("rank " + std::to_string(rank) +
                                           " is out of range for family " + std::string(1, f));
  return t;
}

// B_n and C_n swap; everything else is self-dual as an abstract type.
inline LieType langlands_dual(const LieType& t) {
  if (t.family == Family::B) return {Family::C, t.rank};
  if (t.family == Family::C) return {Family::B, t.rank};
  return t;
}

inline int ambient_dim(const LieType& t) {
  return t.family == Family::A ? t.rank + 1 : t.rank;
}

inline long dim_g(const LieType& t) {
  const long l = t.rank;
  switch (t.family) {
    case Family::A: return (l + 1) * (l + 1) - 1;
    case Family::B: return l * (2 * l + 1);
    case Family::C: return l * (2 * l + 1);
    case Family::D: return l * (2 * l - 1);
    case Family::E: return l == 6 ? 78 : (l == 7 ? 133 : 248);
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

// Classical exponent table, weakly increasing.
inline std::vector<int> exponent_table(const LieType& t) {
  std::vector<int> e;
  const int l = t.rank;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= l; ++i) e.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= l; ++i) e.push_back(2 * i - 1);
      break;
    case Family::D:
      for (int i = 1; i <= l - 1; ++i) e.push_back(2 * i - 1);
      e.push_back(l - 1);
      std::sort(e.begin(), e.end());
      break;
    case Family::E:
      if (l == 6) e = {1, 4, 5, 7, 8, 11};
      else if (l == 7) e = {1, 5, 7, 9, 11, 13, 17};
      else e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case Family::F: e = {1, 5, 7, 11}; break;
    case Family::G: e = {1, 5}; break;
  }
  return e;
}

inline BigInt factorial_big(int n) {
  BigInt r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt weyl_order(Family family, int rank) {
  BigInt r = factorial_big(rank);
  switch (family) {
    case Family::A: return factorial_big(rank + 1);
    case Family::B:
    case Family::C: {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(rank));
      return r * p;
    }
    case Family::D: {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(rank - 1));
      return r * p;
    }
    case Family::E: return rank == 6 ? BigInt(51840) : (rank == 7 ? BigInt(2903040) : BigInt(696729600));
    case Family::F: return BigInt(1152);
    case Family::G: return BigInt(12);
  }
  return BigInt(1);
}

inline BigInt weyl_order(const LieType& t) { return weyl_order(t.family, t.rank); }

}  // namespace pbasis
