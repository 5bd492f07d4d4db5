#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbasis/errors.hpp"
#include "pbasis/invariants.hpp"
#include "pbasis/rootsys.hpp"

namespace pbasis {

struct OrthoReport {
  QMat lambda;                  // lambda[i][j] for j < i, projection coefficients
  std::vector<Rat> pivot_norms;  // B(u_j, u_j)
};

// Gram-Schmidt over Q without normalization: u_i = v_i - sum_{j<i} lambda_ij u_j,
// lambda_ij = B(v_i, u_j) / B(u_j, u_j). Throws DependentInputError (with the
// offending index) on a zero pivot.
inline std::pair<std::vector<QVec>, OrthoReport> gram_schmidt(const std::vector<QVec>& vs,
                                                              const QMat& gram) {
  std::vector<QVec> us;
  OrthoReport report;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    QVec u = vs[i];
    QVec coeffs = zeros(vs.size());
    for (std::size_t j = 0; j < us.size(); ++j) {
      const Rat c = bilinear(gram, vs[i], us[j]) / report.pivot_norms[j];
      if (!c.is_zero()) u = sub(u, scale(c, us[j]));
      coeffs[j] = c;
    }
    const Rat norm = bilinear(gram, u, u);
    if (norm.is_zero())
      throw DependentInputError(i, "Gram-Schmidt pivot vanished at index " + std::to_string(i) +
                                       ": input depends on its predecessors");
    report.lambda.push_back(std::move(coeffs));
    report.pivot_norms.push_back(norm);
    us.push_back(std::move(u));
  }
  return {us, report};
}

// Clear denominators, divide by the content, make the first nonzero entry
// positive. Idempotent on its own output.
inline QVec primitive_normalize(const QVec& v) {
  if (is_zero_vec(v)) throw Error("primitive_normalize: zero vector");
  BigInt l(1);
  for (const auto& x : v) l = lcm_big(l, x.den());
  std::vector<BigInt> ints;
  ints.reserve(v.size());
  BigInt g(0);
  for (const auto& x : v) {
    const Rat s = x * Rat(l);
    ints.push_back(s.num());
    g = gcd_big(g, s.num());
  }
  int lead = 0;
  for (const auto& z : ints) {
    if (z != 0) {
      lead = sgn(z);
      break;
    }
  }
  if (lead < 0) g = -g;
  QVec out;
  out.reserve(v.size());
  for (auto& z : ints) out.push_back(Rat(BigInt(z / g)));
  return out;
}

// sigma acts on the ambient coordinates of D_l by flipping the last one.
inline QVec sigma_flip_last(const QVec& v) {
  QVec r = v;
  r.back() = -r.back();
  return r;
}

// Split a sigma-invariant plane into its sigma = -1 and sigma = +1 lines
// (returned in that order). Inputs must span a sigma-invariant plane.
inline std::pair<QVec, QVec> sigma_refine(const RootSystem& rs, const QVec& a, const QVec& b,
                                          const QMat& gram) {
  if (rs.type.family != Family::D || rs.type.rank % 2 != 0)
    throw Error("sigma_refine applies to family D with even rank");
  const QVec sa = sigma_flip_last(a), sb = sigma_flip_last(b);
  if (rank_fraction_free({a, b}) != 2 || rank_fraction_free({a, b, sa, sb}) != 2)
    throw Error("sigma_refine: inputs do not span a sigma-invariant plane");
  auto eig = [](const QVec& v, const QVec& sv, int sign) {
    return scale(Rat(1, 2), sign > 0 ? add(v, sv) : sub(v, sv));
  };
  QVec minus = eig(a, sa, -1);
  if (is_zero_vec(minus)) minus = eig(b, sb, -1);
  QVec plus = eig(a, sa, +1);
  if (is_zero_vec(plus)) plus = eig(b, sb, +1);
  if (is_zero_vec(minus) || is_zero_vec(plus))
    throw Error("sigma_refine: plane is not split by sigma");
  if (!bilinear(gram, minus, plus).is_zero())
    throw Error("sigma_refine: eigencomponents are not orthogonal");
  return {minus, plus};
}

inline std::pair<Vec, Vec> sigma_refine(const RootSystem& rs, const Vec& a, const Vec& b) {
  if (a.space != b.space) throw Error("sigma_refine: mixed spaces");
  const QMat& gram = a.space == Space::H ? rs.gram_h : rs.gram_hstar;
  auto [m, p] = sigma_refine(rs, a.coords, b.coords, gram);
  return {Vec{a.space, std::move(m)}, Vec{a.space, std::move(p)}};
}

// Ordered, B-orthogonal, primitive-integer basis of the Cartan subalgebra,
// labeled by exponents. `vectors` holds coroot coordinates (root coordinates
// for the dual case); `vectors_ambient` holds the same vectors, same scale.
struct PrincipalBasis {
  LieType type;
  bool dual = false;
  std::vector<QVec> vectors;
  std::vector<QVec> vectors_ambient;
  std::vector<int> exponent_labels;
  std::string generator_provenance;
  bool sigma_refined = false;
};

namespace detail {

inline void check_independent(const RootSystem& rs, const GeneratorSet& gens, const QMat& rows) {
  const auto dep = first_dependent_index(rows);
  if (!dep) return;
  const int degree = gens.specs[*dep].degree;
  std::string suggestion = "try a different orbit seed (another fundamental weight via "
                           "--seed-weight, or rho)";
  throw IndependenceError(*dep, degree, suggestion,
                          "differentials of generator set '" + gens.provenance + "' for " +
                              to_string(rs.type) + " are linearly dependent at position " +
                              std::to_string(*dep) + " (degree " + std::to_string(degree) + "); " +
                              suggestion);
}

inline PrincipalBasis assemble(const RootSystem& rs, const GeneratorSet& gens, bool dual) {
  const Vec point = dual ? in_hstar(rs.rho) : in_h(rs.rho_check);
  QMat diffs;
  for (const auto& spec : gens.specs) {
    const Vec v = dual ? Dhat_at(rs, spec, point) : D_at(rs, spec, point);
    diffs.push_back(v.coords);
  }
  check_independent(rs, gens, diffs);
  const QMat& gram = dual ? rs.gram_hstar : rs.gram_h;
  auto [ortho, report] = gram_schmidt(diffs, gram);

  PrincipalBasis pb;
  pb.type = rs.type;
  pb.dual = dual;
  pb.exponent_labels = rs.exponents;
  pb.generator_provenance = gens.provenance;

  if (rs.type.family == Family::D && rs.type.rank % 2 == 0) {
    // the repeated exponent l-1 sits at positions l/2 and l/2+1; sigma picks
    // out the two eigenlines, -1 first
    const std::size_t a = static_cast<std::size_t>(rs.rank() / 2 - 1);
    auto [minus, plus] = sigma_refine(rs, ortho[a], ortho[a + 1], gram);
    ortho[a] = std::move(minus);
    ortho[a + 1] = std::move(plus);
    pb.sigma_refined = true;
  }

  for (const auto& u : ortho) {
    const QVec lattice =
        primitive_normalize(dual ? to_root_coords(rs, in_hstar(u)) : to_coroot_coords(rs, in_h(u)));
    pb.vectors_ambient.push_back(dual ? from_root_coords(rs, lattice)
                                      : from_coroot_coords(rs, lattice));
    pb.vectors.push_back(lattice);
  }
  return pb;
}

}  // namespace detail

inline PrincipalBasis principal_basis(const RootSystem& rs, const GeneratorSet& gens) {
  return detail::assemble(rs, gens, /*dual=*/false);
}

inline PrincipalBasis dual_principal_basis(const RootSystem& rs, const GeneratorSet& gens) {
  return detail::assemble(rs, gens, /*dual=*/true);
}

// --- route selection ---------------------------------------------------------

enum class Route { Auto, Classical, Orbit };

struct UnsupportedRouteError : Error {
  using Error::Error;
};

// Supplies a Weyl orbit for a seed, e.g. through the on-disk cache
// (orbit_cache.hpp); null result or null provider means "compute directly".
using OrbitProvider = std::function<std::shared_ptr<const std::vector<QVec>>(
    const RootSystem&, const Vec& seed, std::size_t cap)>;

struct BasisOptions {
  Route route = Route::Auto;
  std::optional<int> seed_weight;  // 1-based fundamental weight index (orbit route)
  bool allow_e8 = false;
  std::size_t orbit_cap = kDefaultOrbitCap;
  OrbitProvider orbit_provider;
};

namespace detail {

// Candidates are lazy: a fallback orbit (which may be as large as |W| for the
// rho seed) is only enumerated after the preceding seed failed independence.
inline std::vector<std::function<GeneratorSet()>> candidate_generators(const RootSystem& rs,
                                                                       const BasisOptions& opt) {
  const Family fam = rs.type.family;
  const bool classical_family =
      fam == Family::A || fam == Family::B || fam == Family::C || fam == Family::D;
  const std::size_t cap = opt.orbit_cap;
  const OrbitProvider provider = opt.orbit_provider;
  auto orbit_set = [&rs, cap, provider](Vec seed, std::string label) {
    return [&rs, cap, provider, seed = std::move(seed), label = std::move(label)]() {
      std::shared_ptr<const std::vector<QVec>> cached;
      if (provider) cached = provider(rs, project_to_h(rs, seed), cap);
      return orbit_generators(rs, seed, label, cap, std::move(cached));
    };
  };
  switch (opt.route) {
    case Route::Classical:
      if (classical_family) return {[&rs] { return classical_generators(rs); }};
      if (fam == Family::G) return {[&rs] { return g2_generators(rs); }};
      throw UnsupportedRouteError("no classical generator formulas for " + to_string(rs.type) +
                                  "; use the orbit route");
    case Route::Orbit: {
      if (opt.seed_weight) {
        const int k = *opt.seed_weight;
        if (k < 1 || k > rs.rank())
          throw InvalidTypeError("--seed-weight out of range for " + to_string(rs.type));
        // an explicit seed is honored as-is: no fallback
        return {orbit_set(fundamental_weight(rs, k - 1), "w" + std::to_string(k))};
      }
      std::vector<std::function<GeneratorSet()>> out;
      for (auto& [seed, label] : orbit_seed_candidates(rs, opt.orbit_cap))
        out.push_back(orbit_set(seed, label));
      if (out.empty()) throw OrbitCapError(opt.orbit_cap, "no orbit seed fits under the cap");
      return out;
    }
    case Route::Auto:
      if (classical_family) return {[&rs] { return classical_generators(rs); }};
      if (fam == Family::G) return {[&rs] { return g2_generators(rs); }};
      return candidate_generators(rs, BasisOptions{Route::Orbit, std::nullopt, opt.allow_e8,
                                                   opt.orbit_cap, opt.orbit_provider});
  }
  throw Error("unreachable");
}

inline PrincipalBasis with_route(const RootSystem& rs, const BasisOptions& opt, bool dual) {
  if (rs.type == LieType{Family::E, 8} && !opt.allow_e8)
    throw OrbitCapError(opt.orbit_cap,
                        "E8 is gated behind --allow-e8: its orbit-scale work is opt-in "
                        "(orbit cap " + std::to_string(opt.orbit_cap) + ")");
  const auto candidates = candidate_generators(rs, opt);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    try {
      return detail::assemble(rs, candidates[i](), dual);
    } catch (const IndependenceError&) {
      if (i + 1 == candidates.size()) throw;
    }
  }
  throw Error("unreachable");
}

}  // namespace detail

inline PrincipalBasis principal_basis(const RootSystem& rs, const BasisOptions& opt = {}) {
  return detail::with_route(rs, opt, /*dual=*/false);
}

inline PrincipalBasis dual_principal_basis(const RootSystem& rs, const BasisOptions& opt = {}) {
  return detail::with_route(rs, opt, /*dual=*/true);
}

}  // namespace pbasis
