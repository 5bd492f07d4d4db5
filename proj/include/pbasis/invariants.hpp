#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pbasis/errors.hpp"
#include "pbasis/rootsys.hpp"

namespace pbasis {

// Sparse multivariate polynomial over Q, exponent-vector keyed.
struct SparsePolynomial {
  int nvars = 0;
  std::map<std::vector<int>, Rat> terms;

  static SparsePolynomial zero(int nvars) { return SparsePolynomial{nvars, {}}; }

  static SparsePolynomial constant(int nvars, const Rat& c) {
    SparsePolynomial p = zero(nvars);
    p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }

  // sum_i coeffs[i] * x_i
  static SparsePolynomial linear(const QVec& coeffs) {
    SparsePolynomial p = zero(static_cast<int>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      std::vector<int> e(coeffs.size(), 0);
      e[i] = 1;
      p.add_term(e, coeffs[i]);
    }
    return p;
  }

  static SparsePolynomial monomial(int nvars, std::vector<int> exps, const Rat& c) {
    SparsePolynomial p = zero(nvars);
    p.add_term(std::move(exps), c);
    return p;
  }

  void add_term(std::vector<int> exps, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(std::move(exps), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  friend SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
  }

  friend SparsePolynomial operator*(const Rat& c, const SparsePolynomial& p) {
    SparsePolynomial r = zero(p.nvars);
    for (const auto& [e, k] : p.terms) r.add_term(e, c * k);
    return r;
  }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial r = zero(a.nvars);
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) {
        std::vector<int> e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    return r;
  }

  static SparsePolynomial pow(const SparsePolynomial& p, int n) {
    SparsePolynomial r = constant(p.nvars, Rat(1));
    for (int i = 0; i < n; ++i) r = r * p;
    return r;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  bool is_homogeneous(int d) const {
    for (const auto& [e, c] : terms) {
      int s = 0;
      for (int k : e) s += k;
      if (s != d) return false;
    }
    return true;
  }

  Rat evaluate(const QVec& x) const {
    if (static_cast<int>(x.size()) != nvars) throw Error("polynomial evaluation: dimension mismatch");
    Rat s;
    for (const auto& [e, c] : terms) {
      Rat m = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) m *= pbasis::pow(x[i], static_cast<unsigned long>(e[i]));
      s += m;
    }
    return s;
  }

  // Vector of partial derivatives evaluated at x.
  QVec gradient_at(const QVec& x) const {
    if (static_cast<int>(x.size()) != nvars) throw Error("polynomial gradient: dimension mismatch");
    QVec g = zeros(x.size());
    for (const auto& [e, c] : terms) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        Rat m = c * Rat(e[i]);
        for (std::size_t j = 0; j < e.size(); ++j) {
          int k = e[j] - (j == i ? 1 : 0);
          if (k != 0) m *= pbasis::pow(x[j], static_cast<unsigned long>(k));
        }
        g[i] += m;
      }
    }
    return g;
  }
};

// f_d(x) = sum over the orbit of <v, x>^d; evaluated straight from the orbit,
// never expanded symbolically.
struct OrbitPowerSum {
  QVec seed;  // h*
  std::shared_ptr<const std::vector<QVec>> orbit;
};

// One homogeneous W-invariant of degree = exponent + 1.
struct InvariantSpec {
  int degree = 0;
  std::string label;
  std::variant<SparsePolynomial, OrbitPowerSum> body;

  bool is_explicit() const { return std::holds_alternative<SparsePolynomial>(body); }
};

struct GeneratorSet {
  LieType type;
  std::vector<InvariantSpec> specs;  // degrees weakly increasing
  std::string provenance;
  bool independence_checked = false;
};

namespace detail {

inline void check_degrees(const GeneratorSet& g) {
  std::vector<int> expected = exponent_table(g.type);
  if (g.specs.size() != expected.size()) throw Error("generator count != rank");
  for (std::size_t i = 0; i < g.specs.size(); ++i) {
    if (g.specs[i].degree != expected[i] + 1)
      throw Error("generator degrees do not match exponents + 1");
    if (i > 0 && g.specs[i].degree < g.specs[i - 1].degree)
      throw Error("generator degrees not weakly increasing");
  }
}

}  // namespace detail

// Center projection for family A (identity for every other family): removes
// the component along (1, ..., 1). Idempotent.
inline Vec project_to_h(const RootSystem& rs, const Vec& v) {
  if (rs.type.family != Family::A) return v;
  Rat tr;
  for (const auto& x : v.coords) tr += x;
  const Rat mean = tr / Rat(rs.ambient);
  QVec out = v.coords;
  for (auto& x : out) x -= mean;
  return Vec{v.space, std::move(out)};
}

// Classical generator sets in the ambient coordinates: power sums for family A,
// even power sums for B/C, and even power sums plus the Pfaffian x_1...x_l for
// D (inserted before the power sum of equal degree).
inline GeneratorSet classical_generators(const RootSystem& rs) {
  const LieType t = rs.type;
  const int l = t.rank;
  GeneratorSet g{t, {}, "classical", false};
  auto power_sum = [&](int d) {
    SparsePolynomial p = SparsePolynomial::zero(rs.ambient);
    for (int j = 0; j < rs.ambient; ++j) {
      std::vector<int> e(static_cast<std::size_t>(rs.ambient), 0);
      e[static_cast<std::size_t>(j)] = d;
      p.add_term(std::move(e), Rat(1));
    }
    return p;
  };
  switch (t.family) {
    case Family::A:
      for (int d = 2; d <= l + 1; ++d)
        g.specs.push_back({d, "s" + std::to_string(d), power_sum(d)});
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= l; ++i)
        g.specs.push_back({2 * i, "s" + std::to_string(2 * i), power_sum(2 * i)});
      break;
    case Family::D: {
      for (int i = 1; i <= l - 1; ++i)
        g.specs.push_back({2 * i, "s" + std::to_string(2 * i), power_sum(2 * i)});
      SparsePolynomial pe =
          SparsePolynomial::monomial(rs.ambient, std::vector<int>(static_cast<std::size_t>(l), 1), Rat(1));
      InvariantSpec pe_spec{l, "pf", std::move(pe)};
      // insert at the first slot of its degree so the Pfaffian precedes the
      // even power sum of equal degree when l is even
      auto it = g.specs.begin();
      while (it != g.specs.end() && it->degree < l) ++it;
      g.specs.insert(it, std::move(pe_spec));
      break;
    }
    default:
      throw Error("classical generators are only defined for families A, B, C, D");
  }
  detail::check_degrees(g);
  return g;
}

// The exceptional G2 pair, rewritten exactly in rational coordinates (h in the
// fundamental-coweight basis). The quadratic one is the canonical form itself;
// the sextic is the known degree-6 invariant, rescaled by 8 to clear
// denominators.
inline GeneratorSet g2_generators(const RootSystem& rs) {
  if (!(rs.type.family == Family::G && rs.type.rank == 2)) throw Error("g2_generators: type must be G2");
  GeneratorSet g{rs.type, {}, "g2-explicit", false};
  SparsePolynomial p1 = SparsePolynomial::zero(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      std::vector<int> e(2, 0);
      e[static_cast<std::size_t>(i)] += 1;
      e[static_cast<std::size_t>(j)] += 1;
      p1.add_term(std::move(e), rs.gram_h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  // a = x1^2, b = (x1 + 2 x2)^2; p2 = 33 a^3 + 729 b^3 + 135 a^2 b + 1215 a b^2
  const SparsePolynomial x1 = SparsePolynomial::linear({Rat(1), Rat(0)});
  const SparsePolynomial u = SparsePolynomial::linear({Rat(1), Rat(2)});
  const SparsePolynomial a = x1 * x1;
  const SparsePolynomial b = u * u;
  SparsePolynomial p2 = Rat(33) * SparsePolynomial::pow(a, 3) +
                        Rat(729) * SparsePolynomial::pow(b, 3) +
                        Rat(135) * (a * a * b) + Rat(1215) * (a * b * b);
  g.specs.push_back({2, "g2-p1", std::move(p1)});
  g.specs.push_back({6, "g2-p2", std::move(p2)});
  detail::check_degrees(g);
  return g;
}

// One orbit power sum per exponent, all seeded from the same h* vector.
inline GeneratorSet orbit_generators(const RootSystem& rs, const Vec& seed,
                                     const std::string& seed_label,
                                     std::size_t cap = kDefaultOrbitCap,
                                     std::shared_ptr<const std::vector<QVec>> cached_orbit = nullptr) {
  if (seed.space != Space::HStar) throw Error("orbit seed must live in h*");
  if (is_zero_vec(seed.coords)) throw Error("orbit seed must be nonzero");
  std::shared_ptr<const std::vector<QVec>> orbit = std::move(cached_orbit);
  if (!orbit) {
    auto vecs = weyl_orbit(rs, project_to_h(rs, seed), cap);
    auto own = std::make_shared<std::vector<QVec>>();
    own->reserve(vecs.size());
    for (auto& v : vecs) own->push_back(std::move(v.coords));
    orbit = std::move(own);
  }
  GeneratorSet g{rs.type, {}, "orbit[" + seed_label + "]", false};
  for (int k : rs.exponents)
    g.specs.push_back({k + 1, "orbit[" + seed_label + "]^" + std::to_string(k + 1),
                       OrbitPowerSum{project_to_h(rs, seed).coords, orbit}});
  detail::check_degrees(g);
  return g;
}

// Seed candidates for the orbit route: fundamental weights ordered by exact
// orbit size, then rho. Candidates whose orbit would blow the cap are dropped.
inline std::vector<std::pair<Vec, std::string>> orbit_seed_candidates(const RootSystem& rs,
                                                                      std::size_t cap = kDefaultOrbitCap) {
  std::vector<std::pair<BigInt, int>> sized;
  for (int k = 0; k < rs.rank(); ++k) sized.push_back({fundamental_orbit_size(rs, k), k});
  std::sort(sized.begin(), sized.end());
  std::vector<std::pair<Vec, std::string>> out;
  for (const auto& [size, k] : sized)
    if (size <= BigInt(static_cast<unsigned long>(cap)))
      out.push_back({fundamental_weight(rs, k), "w" + std::to_string(k + 1)});
  if (weyl_order(rs.type) <= BigInt(static_cast<unsigned long>(cap)))
    out.push_back({in_hstar(rs.rho), "rho"});
  return out;
}

// --- evaluation and differentials -------------------------------------------

inline Rat evaluate(const RootSystem& rs, const InvariantSpec& spec, const Vec& x) {
  if (x.space != Space::H) throw Error("invariants evaluate on h");
  if (spec.is_explicit()) return std::get<SparsePolynomial>(spec.body).evaluate(x.coords);
  const auto& ops = std::get<OrbitPowerSum>(spec.body);
  Rat s;
  for (const auto& v : *ops.orbit) s += pow(dot(v, x.coords), static_cast<unsigned long>(spec.degree));
  return s;
}

// dp(x) as an element of h*; for family A the center component is removed.
inline Vec differential_at(const RootSystem& rs, const InvariantSpec& spec, const Vec& x) {
  if (x.space != Space::H) throw Error("differential_at expects a point of h");
  if (static_cast<int>(x.coords.size()) != rs.ambient)
    throw Error("differential_at: dimension mismatch");
  QVec grad;
  if (spec.is_explicit()) {
    grad = std::get<SparsePolynomial>(spec.body).gradient_at(x.coords);
  } else {
    const auto& ops = std::get<OrbitPowerSum>(spec.body);
    grad = zeros(x.coords.size());
    for (const auto& v : *ops.orbit) {
      const Rat c = Rat(spec.degree) * pow(dot(v, x.coords), static_cast<unsigned long>(spec.degree - 1));
      if (!c.is_zero()) grad = add(grad, scale(c, v));
    }
  }
  return project_to_h(rs, in_hstar(std::move(grad)));
}

// Dp = B_flat . dp : h -> h
inline Vec D_at(const RootSystem& rs, const InvariantSpec& spec, const Vec& x) {
  return b_flat(rs, differential_at(rs, spec, x));
}

// Dhat p = dp . B_flat : h* -> h*; lands in the Cartan of the Langlands dual.
inline Vec Dhat_at(const RootSystem& rs, const InvariantSpec& spec, const Vec& lambda) {
  if (lambda.space != Space::HStar) throw Error("Dhat_at expects a point of h*");
  return differential_at(rs, spec, b_flat(rs, lambda));
}

}  // namespace pbasis
