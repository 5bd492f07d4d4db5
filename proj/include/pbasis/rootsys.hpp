#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pbasis/errors.hpp"
#include "pbasis/lietype.hpp"
#include "pbasis/linalg.hpp"

namespace pbasis {

enum class Space { H, HStar };

// Ambient-coordinate vector tagged with the space it lives in. Coordinates in
// h* are taken in the basis dual to the h basis, so the natural pairing of an
// h* vector with an h vector is the plain coordinate dot product.
struct Vec {
  Space space;
  QVec coords;

  friend bool operator==(const Vec&, const Vec&) = default;
};

inline Vec in_h(QVec c) { return Vec{Space::H, std::move(c)}; }
inline Vec in_hstar(QVec c) { return Vec{Space::HStar, std::move(c)}; }

inline Rat pairing(const Vec& lam, const Vec& x) {
  if (lam.space != Space::HStar || x.space != Space::H)
    throw Error("pairing expects an h* vector and an h vector");
  return dot(lam.coords, x.coords);
}

struct PositiveRoot {
  QVec coords;  // in h*
  int height;
};

struct RootSystem {
  LieType type;
  int ambient = 0;
  std::vector<QVec> simple_roots;    // h*
  std::vector<QVec> simple_coroots;  // h
  std::vector<PositiveRoot> positive_roots;  // grouped by height, ascending
  std::vector<std::vector<int>> cartan;      // cartan[i][j] = <alpha_j, alpha_i^vee>
  QMat gram_h;      // Gram matrix of the canonical form on h
  QMat gram_hstar;  // its inverse = Gram matrix of the induced form on h*
  QVec rho;         // h*, half sum of positive roots
  QVec rho_check;   // h, half sum of positive coroots
  std::vector<int> exponents;  // weakly increasing
  std::map<QVec, int> positive_index;

  int rank() const { return type.rank; }
  bool is_positive_root(const QVec& v) const { return positive_index.count(v) != 0; }
  bool is_root(const QVec& v) const {
    if (is_positive_root(v)) return true;
    QVec neg = v;
    for (auto& x : neg) x = -x;
    return is_positive_root(neg);
  }
};

// --- canonical form -------------------------------------------------------

inline Rat form_h(const RootSystem& rs, const QVec& x, const QVec& y) {
  return bilinear(rs.gram_h, x, y);
}

inline Rat form_hstar(const RootSystem& rs, const QVec& a, const QVec& b) {
  return bilinear(rs.gram_hstar, a, b);
}

inline Rat form(const RootSystem& rs, const Vec& a, const Vec& b) {
  if (a.space != b.space) throw Error("form arguments must live in the same space");
  return a.space == Space::H ? form_h(rs, a.coords, b.coords) : form_hstar(rs, a.coords, b.coords);
}

inline Vec b_flat(const RootSystem& rs, const Vec& lam) {
  if (lam.space != Space::HStar) throw Error("b_flat expects an h* vector");
  return in_h(mat_vec(rs.gram_hstar, lam.coords));
}

inline Vec b_natural(const RootSystem& rs, const Vec& x) {
  if (x.space != Space::H) throw Error("b_natural expects an h vector");
  return in_hstar(mat_vec(rs.gram_h, x.coords));
}

// alpha^vee = (2 / B(alpha, alpha)) * B_flat(alpha); requires alpha to be a root.
inline Vec coroot(const RootSystem& rs, const Vec& alpha) {
  if (alpha.space != Space::HStar) throw Error("coroot expects a root in h*");
  if (!rs.is_root(alpha.coords)) throw Error("coroot: not a root of " + to_string(rs.type));
  const Rat n = form_hstar(rs, alpha.coords, alpha.coords);
  return in_h(scale(Rat(2) / n, mat_vec(rs.gram_hstar, alpha.coords)));
}

// --- reflections and orbits -----------------------------------------------

// Reflection in the hyperplane of root alpha (given in h*), acting on either space.
inline Vec reflect_root(const RootSystem& rs, const QVec& alpha, const Vec& v) {
  const Rat n = form_hstar(rs, alpha, alpha);
  const QVec alpha_check = scale(Rat(2) / n, mat_vec(rs.gram_hstar, alpha));
  if (v.space == Space::HStar) {
    // lambda - <lambda, alpha^vee> alpha
    return in_hstar(sub(v.coords, scale(dot(v.coords, alpha_check), alpha)));
  }
  // x - <alpha, x> alpha^vee
  return in_h(sub(v.coords, scale(dot(alpha, v.coords), alpha_check)));
}

inline Vec simple_reflection(const RootSystem& rs, int i, const Vec& v) {
  return reflect_root(rs, rs.simple_roots[static_cast<std::size_t>(i)], v);
}

inline constexpr std::size_t kDefaultOrbitCap = 10'000'000;

// Closure of {v} under the simple reflections, in a deterministic canonical
// (lexicographically sorted) order. Throws OrbitCapError past the cap.
inline std::vector<Vec> weyl_orbit(const RootSystem& rs, const Vec& v,
                                   std::size_t cap = kDefaultOrbitCap) {
  std::set<QVec> seen{v.coords};
  std::vector<QVec> frontier{v.coords};
  while (!frontier.empty()) {
    std::vector<QVec> next;
    for (const auto& w : frontier) {
      for (int i = 0; i < rs.rank(); ++i) {
        QVec r = simple_reflection(rs, i, Vec{v.space, w}).coords;
        if (seen.insert(r).second) {
          if (seen.size() > cap)
            throw OrbitCapError(cap, "Weyl orbit exceeds cap of " + std::to_string(cap) +
                                         " vectors (type " + to_string(rs.type) + ")");
          next.push_back(std::move(r));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Vec> out;
  out.reserve(seen.size());
  for (const auto& w : seen) out.push_back(Vec{v.space, w});
  return out;
}

// --- exponents --------------------------------------------------------------

// Conjugate partition of the height multiplicities n_k = #{positive roots of
// height k}; returns the exponents in weakly increasing order.
inline std::vector<int> exponents_from_heights(const RootSystem& rs) {
  std::vector<int> mult;
  for (const auto& pr : rs.positive_roots) {
    if (pr.height > static_cast<int>(mult.size())) mult.resize(static_cast<std::size_t>(pr.height), 0);
    ++mult[static_cast<std::size_t>(pr.height - 1)];
  }
  for (std::size_t k = 1; k < mult.size(); ++k)
    if (mult[k] > mult[k - 1])
      throw Error("corrupt root system: height multiplicities are not weakly decreasing");
  std::vector<int> exps;
  for (int j = 1; j <= mult[0]; ++j) {
    int count = 0;
    for (int m : mult)
      if (m >= j) ++count;
    exps.push_back(count);
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

// --- construction -----------------------------------------------------------

namespace detail {

inline QVec unit(int n, int i, const Rat& v = Rat(1)) {
  QVec e = zeros(static_cast<std::size_t>(n));
  e[static_cast<std::size_t>(i)] = v;
  return e;
}

struct Realization {
  int ambient;
  std::vector<QVec> simple_roots;
  QMat gram_hstar;
};

// Exceptional types: h* coordinates in the simple-root basis, so the Gram
// matrix on h* is B(alpha_i, alpha_j) = d_i * cartan[i][j] with d_i half the
// squared root length (1 for long roots).
inline Realization exceptional_realization(const LieType& t) {
  std::vector<std::vector<int>> a;
  std::vector<Rat> d;
  if (t.family == Family::G) {
    a = {{2, -1}, {-3, 2}};
    d = {Rat(1), Rat(1, 3)};
  } else if (t.family == Family::F) {
    a = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    d = {Rat(1), Rat(1), Rat(1, 2), Rat(1, 2)};
  } else {
    // E_n, Bourbaki numbering: node 2 hangs off node 4.
    const int n = t.rank;
    std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
    if (n >= 7) edges.push_back({6, 7});
    if (n >= 8) edges.push_back({7, 8});
    a.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    for (auto [u, v] : edges) {
      a[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)] = -1;
      a[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(u - 1)] = -1;
    }
    d.assign(static_cast<std::size_t>(n), Rat(1));
  }
  Realization r;
  r.ambient = t.rank;
  for (int i = 0; i < t.rank; ++i) r.simple_roots.push_back(unit(t.rank, i));
  r.gram_hstar.assign(static_cast<std::size_t>(t.rank), zeros(static_cast<std::size_t>(t.rank)));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      r.gram_hstar[i][j] = d[i] * Rat(a[i][j]);
  return r;
}

inline Realization classical_realization(const LieType& t) {
  Realization r;
  const int l = t.rank;
  switch (t.family) {
    case Family::A: {
      r.ambient = l + 1;
      for (int i = 0; i < l; ++i) {
        QVec v = zeros(static_cast<std::size_t>(l + 1));
        v[static_cast<std::size_t>(i)] = Rat(1);
        v[static_cast<std::size_t>(i + 1)] = Rat(-1);
        r.simple_roots.push_back(std::move(v));
      }
      r.gram_hstar = identity(static_cast<std::size_t>(l + 1));
      break;
    }
    case Family::B: {
      r.ambient = l;
      for (int i = 0; i + 1 < l; ++i) {
        QVec v = zeros(static_cast<std::size_t>(l));
        v[static_cast<std::size_t>(i)] = Rat(1);
        v[static_cast<std::size_t>(i + 1)] = Rat(-1);
        r.simple_roots.push_back(std::move(v));
      }
      r.simple_roots.push_back(unit(l, l - 1));
      r.gram_hstar = identity(static_cast<std::size_t>(l));
      break;
    }
    case Family::C: {
      r.ambient = l;
      for (int i = 0; i + 1 < l; ++i) {
        QVec v = zeros(static_cast<std::size_t>(l));
        v[static_cast<std::size_t>(i)] = Rat(1);
        v[static_cast<std::size_t>(i + 1)] = Rat(-1);
        r.simple_roots.push_back(std::move(v));
      }
      r.simple_roots.push_back(unit(l, l - 1, Rat(2)));
      // long roots +-2e_i must have squared length 2
      QMat g = identity(static_cast<std::size_t>(l));
      for (auto& row : g)
        for (auto& x : row) x *= Rat(1, 2);
      r.gram_hstar = g;
      break;
    }
    case Family::D: {
      r.ambient = l;
      for (int i = 0; i + 1 < l; ++i) {
        QVec v = zeros(static_cast<std::size_t>(l));
        v[static_cast<std::size_t>(i)] = Rat(1);
        v[static_cast<std::size_t>(i + 1)] = Rat(-1);
        r.simple_roots.push_back(std::move(v));
      }
      QVec v = zeros(static_cast<std::size_t>(l));
      v[static_cast<std::size_t>(l - 2)] = Rat(1);
      v[static_cast<std::size_t>(l - 1)] = Rat(1);
      r.simple_roots.push_back(std::move(v));
      r.gram_hstar = identity(static_cast<std::size_t>(l));
      break;
    }
    default:
      return exceptional_realization(t);
  }
  return r;
}

}  // namespace detail

inline RootSystem build_root_system(const LieType& t) {
  if (!is_valid(t))
    throw InvalidTypeError("invalid type " + std::string(1, static_cast<char>(t.family)) +
                           std::to_string(t.rank));
  RootSystem rs;
  rs.type = t;
  auto real = (t.family == Family::A || t.family == Family::B || t.family == Family::C ||
               t.family == Family::D)
                  ? detail::classical_realization(t)
                  : detail::exceptional_realization(t);
  rs.ambient = real.ambient;
  rs.simple_roots = std::move(real.simple_roots);
  rs.gram_hstar = std::move(real.gram_hstar);
  rs.gram_h = inverse(rs.gram_hstar);

  const int r = t.rank;
  for (int i = 0; i < r; ++i) {
    const QVec& a = rs.simple_roots[static_cast<std::size_t>(i)];
    const Rat n = form_hstar(rs, a, a);
    rs.simple_coroots.push_back(scale(Rat(2) / n, mat_vec(rs.gram_hstar, a)));
  }

  rs.cartan.assign(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Rat c = dot(rs.simple_roots[static_cast<std::size_t>(j)],
                        rs.simple_coroots[static_cast<std::size_t>(i)]);
      if (!c.is_integer()) throw Error("non-integral Cartan pairing");
      const long v = c.num().get_si();
      if (i == j ? v != 2 : (v > 0 || v < -3)) throw Error("Cartan entry out of range");
      rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(v);
    }

  // Positive roots: breadth-first closure by root strings. beta + alpha_i is a
  // root iff q = p - <beta, alpha_i^vee> >= 1, where p counts how far the
  // string through beta extends downward.
  std::vector<QVec> level = rs.simple_roots;
  std::sort(level.begin(), level.end());
  int height = 1;
  while (!level.empty()) {
    for (const auto& v : level) {
      rs.positive_index.emplace(v, static_cast<int>(rs.positive_roots.size()));
      rs.positive_roots.push_back({v, height});
    }
    std::set<QVec> next;
    for (const auto& beta : level) {
      for (int i = 0; i < r; ++i) {
        const QVec& alpha = rs.simple_roots[static_cast<std::size_t>(i)];
        if (beta == alpha) continue;  // 2*alpha is never a root
        int p = 0;
        QVec down = sub(beta, alpha);
        while (rs.is_positive_root(down)) {
          ++p;
          down = sub(down, alpha);
        }
        const Rat c = dot(beta, rs.simple_coroots[static_cast<std::size_t>(i)]);
        const long pairing_val = c.num().get_si();  // integral by the crystallographic condition
        if (!c.is_integer()) throw Error("non-integral root pairing");
        if (p - pairing_val >= 1) next.insert(add(beta, alpha));
      }
    }
    level.assign(next.begin(), next.end());
    ++height;
  }

  const long expected = (dim_g(t) - r) / 2;
  if (static_cast<long>(rs.positive_roots.size()) != expected)
    throw Error("positive root count mismatch for " + to_string(t));

  rs.rho = zeros(static_cast<std::size_t>(rs.ambient));
  rs.rho_check = zeros(static_cast<std::size_t>(rs.ambient));
  for (const auto& pr : rs.positive_roots) {
    rs.rho = add(rs.rho, pr.coords);
    const Rat n = form_hstar(rs, pr.coords, pr.coords);
    rs.rho_check = add(rs.rho_check, scale(Rat(2) / n, mat_vec(rs.gram_hstar, pr.coords)));
  }
  rs.rho = scale(Rat(1, 2), rs.rho);
  rs.rho_check = scale(Rat(1, 2), rs.rho_check);
  for (int i = 0; i < r; ++i) {
    if (dot(rs.simple_roots[static_cast<std::size_t>(i)], rs.rho_check) != Rat(1) ||
        dot(rs.rho, rs.simple_coroots[static_cast<std::size_t>(i)]) != Rat(1))
      throw Error("rho / rho_check pairing check failed for " + to_string(t));
  }

  rs.exponents = exponents_from_heights(rs);
  if (rs.exponents != exponent_table(t)) throw Error("exponent mismatch for " + to_string(t));
  return rs;
}

// Independent route to rho_check: the unique h with <alpha_i, h> = 1 for all i
// (constrained to the trace-zero hyperplane for family A).
inline QVec rho_check_from_pairings(const RootSystem& rs) {
  QMat a = rs.simple_roots;
  QVec b(static_cast<std::size_t>(rs.rank()), Rat(1));
  if (rs.type.family == Family::A) {
    a.push_back(QVec(static_cast<std::size_t>(rs.ambient), Rat(1)));
    b.push_back(Rat(0));
  }
  return solve_unique(a, b);
}

// --- lattice coordinates ----------------------------------------------------

namespace detail {

inline QVec expand_in(const std::vector<QVec>& basis, const QVec& v, const LieType& t,
                      const char* what) {
  QMat a(v.size(), zeros(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < v.size(); ++i) a[i][j] = basis[j][i];
  try {
    return solve_unique(a, v);
  } catch (const SingularMatrixError&) {
    throw Error(std::string("vector does not lie in the ") + what + " lattice span for " +
                to_string(t));
  }
}

}  // namespace detail

inline QVec to_coroot_coords(const RootSystem& rs, const Vec& x) {
  if (x.space != Space::H) throw Error("to_coroot_coords expects an h vector");
  return detail::expand_in(rs.simple_coroots, x.coords, rs.type, "coroot");
}

inline QVec to_root_coords(const RootSystem& rs, const Vec& lam) {
  if (lam.space != Space::HStar) throw Error("to_root_coords expects an h* vector");
  return detail::expand_in(rs.simple_roots, lam.coords, rs.type, "root");
}

inline QVec from_coroot_coords(const RootSystem& rs, const QVec& c) {
  QVec v = zeros(static_cast<std::size_t>(rs.ambient));
  for (std::size_t i = 0; i < c.size(); ++i) v = add(v, scale(c[i], rs.simple_coroots[i]));
  return v;
}

inline QVec from_root_coords(const RootSystem& rs, const QVec& c) {
  QVec v = zeros(static_cast<std::size_t>(rs.ambient));
  for (std::size_t i = 0; i < c.size(); ++i) v = add(v, scale(c[i], rs.simple_roots[i]));
  return v;
}

// Fundamental weight w_k (0-based k): <w_k, alpha_i^vee> = delta_ik, trace-zero
// representative for family A.
inline Vec fundamental_weight(const RootSystem& rs, int k) {
  QMat a = rs.simple_coroots;
  QVec b = zeros(static_cast<std::size_t>(rs.rank()));
  b[static_cast<std::size_t>(k)] = Rat(1);
  if (rs.type.family == Family::A) {
    a.push_back(QVec(static_cast<std::size_t>(rs.ambient), Rat(1)));
    b.push_back(Rat(0));
  }
  return in_hstar(solve_unique(a, b));
}

// --- parabolic orbit sizes ---------------------------------------------------

namespace detail {

// Order of the Weyl group of one connected subdiagram, classified from its
// bond multiplicities and branch structure.
inline BigInt component_weyl_order(const std::vector<int>& nodes, const RootSystem& rs) {
  const int n = static_cast<int>(nodes.size());
  auto bond = [&](int u, int v) {
    return rs.cartan[static_cast<std::size_t>(nodes[static_cast<std::size_t>(u)])]
                    [static_cast<std::size_t>(nodes[static_cast<std::size_t>(v)])] *
           rs.cartan[static_cast<std::size_t>(nodes[static_cast<std::size_t>(v)])]
                    [static_cast<std::size_t>(nodes[static_cast<std::size_t>(u)])];
  };
  auto degree = [&](int u) {
    int d = 0;
    for (int v = 0; v < n; ++v)
      if (v != u && bond(u, v) != 0) ++d;
    return d;
  };
  int max_bond = 0;
  int du = 0, dv = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (bond(u, v) > max_bond) {
        max_bond = bond(u, v);
        du = degree(u);
        dv = degree(v);
      }
  if (max_bond == 3) return weyl_order(Family::G, 2);
  if (max_bond == 2) {
    if (n == 4 && du >= 2 && dv >= 2) return weyl_order(Family::F, 4);
    return weyl_order(Family::B, n);
  }
  for (int u = 0; u < n; ++u) {
    if (degree(u) != 3) continue;
    // arm lengths from the branch node
    std::vector<int> arms;
    for (int v = 0; v < n; ++v) {
      if (v == u || bond(u, v) == 0) continue;
      int len = 1, prev = u, cur = v;
      for (;;) {
        int next = -1;
        for (int w = 0; w < n; ++w)
          if (w != prev && w != cur && bond(cur, w) != 0) next = w;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return weyl_order(Family::D, n);
    return weyl_order(Family::E, n);
  }
  return factorial_big(n + 1);  // A_n
}

}  // namespace detail

// |W . w_k| = |W| / |W_J| with J = all nodes but k; exact, no enumeration.
inline BigInt fundamental_orbit_size(const RootSystem& rs, int k) {
  std::vector<int> rest;
  for (int i = 0; i < rs.rank(); ++i)
    if (i != k) rest.push_back(i);
  BigInt stab(1);
  std::vector<bool> used(rest.size(), false);
  for (std::size_t s = 0; s < rest.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> comp;
    std::vector<std::size_t> stack{s};
    used[s] = true;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      comp.push_back(rest[cur]);
      for (std::size_t t2 = 0; t2 < rest.size(); ++t2) {
        if (used[t2]) continue;
        if (rs.cartan[static_cast<std::size_t>(rest[cur])][static_cast<std::size_t>(rest[t2])] != 0) {
          used[t2] = true;
          stack.push_back(t2);
        }
      }
    }
    stab *= detail::component_weyl_order(comp, rs);
  }
  return weyl_order(rs.type) / stab;
}

}  // namespace pbasis
