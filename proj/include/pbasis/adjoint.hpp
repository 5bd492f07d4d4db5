#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pbasis/errors.hpp"
#include "pbasis/principal.hpp"
#include "pbasis/rootsys.hpp"

namespace pbasis {

// Bracket table of the positive nilpotent part in a Chevalley basis:
// [e_a, e_b] = N(a, b) e_{a+b} for positive roots indexed as in
// RootSystem::positive_roots. Signs follow the extraspecial-pair convention
// (first special pair in the height-then-lex root order gets +(p+1)); every
// other special pair is forced from those through the Jacobi identity.
struct StructureConstants {
  std::map<std::pair<int, int>, long> table;

  long N(int i, int j) const {
    const auto it = table.find({i, j});
    return it == table.end() ? 0 : it->second;
  }
};

inline StructureConstants positive_structure_constants(const RootSystem& rs) {
  StructureConstants sc;
  const auto& roots = rs.positive_roots;
  const int n = static_cast<int>(roots.size());

  auto len2 = [&](const QVec& v) { return form_hstar(rs, v, v); };
  auto neg = [](QVec v) {
    for (auto& x : v) x = -x;
    return v;
  };
  // p = max{k : b - k a is a root}; root strings are unbroken
  auto string_down = [&](const QVec& a, const QVec& b) {
    int p = 0;
    QVec v = sub(b, a);
    while (rs.is_root(v)) {
      ++p;
      v = sub(v, a);
    }
    return p;
  };

  // N over arbitrary signed roots, reduced to the (already filled) positive
  // table by antisymmetry, N(-a,-b) = -N(a,b), and the triangle relation.
  std::function<Rat(const QVec&, const QVec&)> nval = [&](const QVec& a, const QVec& b) -> Rat {
    const QVec c = add(a, b);
    if (is_zero_vec(c) || !rs.is_root(c)) return Rat(0);
    const bool pa = rs.is_positive_root(a), pb = rs.is_positive_root(b);
    if (pa && pb) {
      const auto it = sc.table.find({rs.positive_index.at(a), rs.positive_index.at(b)});
      if (it == sc.table.end()) throw Error("structure constants: recursion hit a missing entry");
      return Rat(it->second);
    }
    if (!pa && !pb) return -nval(neg(a), neg(b));
    if (!pa) return -nval(b, a);
    // a positive, b negative
    if (rs.is_positive_root(c)) return -nval(neg(b), c) * len2(c) / len2(a);
    return nval(neg(c), a) * len2(c) / len2(b);
  };

  auto put = [&](int i, int j, long v) {
    sc.table[{i, j}] = v;
    sc.table[{j, i}] = -v;
  };

  for (int xi_idx = 0; xi_idx < n; ++xi_idx) {
    if (roots[static_cast<std::size_t>(xi_idx)].height < 2) continue;
    const QVec& xi = roots[static_cast<std::size_t>(xi_idx)].coords;
    std::vector<std::pair<int, int>> special;  // ascending in the first index
    for (int a = 0; a < xi_idx; ++a) {
      const auto it = rs.positive_index.find(sub(xi, roots[static_cast<std::size_t>(a)].coords));
      if (it != rs.positive_index.end() && it->second > a) special.push_back({a, it->second});
    }
    if (special.empty()) throw Error("positive root without a decomposition");

    const auto [g_idx, d_idx] = special.front();
    const QVec& gam = roots[static_cast<std::size_t>(g_idx)].coords;
    const QVec& del = roots[static_cast<std::size_t>(d_idx)].coords;
    put(g_idx, d_idx, string_down(gam, del) + 1);

    for (std::size_t s = 1; s < special.size(); ++s) {
      const auto [a_idx, b_idx] = special[s];
      const QVec& alpha = roots[static_cast<std::size_t>(a_idx)].coords;
      const QVec& beta = roots[static_cast<std::size_t>(b_idx)].coords;
      // Jacobi on (e_gam, e_del, e_{-alpha}) plus the triangle relation
      // N(xi, -alpha) = -N(alpha, beta) |beta|^2 / |xi|^2:
      Rat t2, t3;
      const QVec dma = sub(del, alpha);
      if (rs.is_root(dma)) t2 = nval(del, neg(alpha)) * nval(dma, gam);
      const QVec gma = sub(gam, alpha);
      if (rs.is_root(gma)) t3 = nval(neg(alpha), gam) * nval(gma, del);
      const Rat nab = (t2 + t3) * len2(xi) / (len2(beta) * Rat(sc.N(g_idx, d_idx)));
      if (!nab.is_integer()) throw Error("structure constants: non-integral value derived");
      const long v = nab.num().get_si();
      if (std::abs(v) != string_down(alpha, beta) + 1)
        throw Error("structure constants: |N| does not match the root string length");
      put(a_idx, b_idx, v);
    }
  }
  return sc;
}

// N for the bracket of a simple-root vector with a positive-root vector.
inline long simple_bracket_constant(const RootSystem& rs, const StructureConstants& sc, int simple_i,
                                    int positive_j) {
  const int i = rs.positive_index.at(rs.simple_roots[static_cast<std::size_t>(simple_i)]);
  return sc.N(i, positive_j);
}

// --- the ad(e0) chain --------------------------------------------------------

// Layer 0 is h (ambient coordinates); layer k >= 1 is spanned by the e_beta
// with height(beta) = k. ad(e0) raises the layer by exactly one:
// [e0, h] = -sum_i alpha_i(h) e_i, then [e0, e_beta] = sum_i N(alpha_i, beta) e_{alpha_i + beta}.
struct AdChain {
  std::vector<std::vector<int>> layers;  // layers[k-1] = positive-root indices of height k
  std::vector<QMat> maps;                // maps[k]: layer k -> layer k+1; maps.back() -> {}
};

inline AdChain build_ad_chain(const RootSystem& rs, const StructureConstants& sc) {
  AdChain ch;
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
    const int h = rs.positive_roots[i].height;
    if (h > static_cast<int>(ch.layers.size())) ch.layers.resize(static_cast<std::size_t>(h));
    ch.layers[static_cast<std::size_t>(h - 1)].push_back(static_cast<int>(i));
  }
  std::vector<int> pos_in_layer(rs.positive_roots.size());
  for (const auto& layer : ch.layers)
    for (std::size_t p = 0; p < layer.size(); ++p)
      pos_in_layer[static_cast<std::size_t>(layer[p])] = static_cast<int>(p);

  QMat m0(ch.layers[0].size(), zeros(static_cast<std::size_t>(rs.ambient)));
  for (std::size_t p = 0; p < ch.layers[0].size(); ++p) {
    const QVec& alpha = rs.positive_roots[static_cast<std::size_t>(ch.layers[0][p])].coords;
    for (int j = 0; j < rs.ambient; ++j) m0[p][static_cast<std::size_t>(j)] = -alpha[static_cast<std::size_t>(j)];
  }
  ch.maps.push_back(std::move(m0));

  for (std::size_t k = 1; k <= ch.layers.size(); ++k) {
    const std::size_t out_dim = k < ch.layers.size() ? ch.layers[k].size() : 0;
    QMat m(out_dim, zeros(ch.layers[k - 1].size()));
    if (out_dim > 0) {
      for (std::size_t col = 0; col < ch.layers[k - 1].size(); ++col) {
        const int beta_idx = ch.layers[k - 1][col];
        for (int i = 0; i < rs.rank(); ++i) {
          const QVec target = add(rs.simple_roots[static_cast<std::size_t>(i)],
                                  rs.positive_roots[static_cast<std::size_t>(beta_idx)].coords);
          const auto it = rs.positive_index.find(target);
          if (it == rs.positive_index.end()) continue;
          m[static_cast<std::size_t>(pos_in_layer[static_cast<std::size_t>(it->second)])][col] +=
              Rat(simple_bracket_constant(rs, sc, i, beta_idx));
        }
      }
    }
    ch.maps.push_back(std::move(m));
  }
  return ch;
}

// ad(e0)^m applied to an h vector; the empty vector encodes zero past the top layer.
inline QVec ad_e0_power(const AdChain& ch, const QVec& h_vec, int m) {
  QVec cur = h_vec;
  for (int step = 0; step < m; ++step) {
    if (static_cast<std::size_t>(step) >= ch.maps.size()) return {};
    cur = mat_vec(ch.maps[static_cast<std::size_t>(step)], cur);
  }
  return cur;
}

// dim { h in h : ad(e0)^m h = 0 }, exact. Saturates at rank(g) once m exceeds
// the largest exponent + 1.
inline int ad_e0_kernel_dims(const RootSystem& rs, const StructureConstants& sc, int m) {
  if (m < 1) throw Error("ad_e0_kernel_dims requires m >= 1");
  const AdChain ch = build_ad_chain(rs, sc);
  QMat composite = ch.maps[0];
  for (int k = 1; k < m; ++k) {
    if (static_cast<std::size_t>(k) >= ch.maps.size() || ch.maps[static_cast<std::size_t>(k)].empty()) {
      composite.clear();  // zero map: everything is in the kernel
      break;
    }
    composite = mat_mul(ch.maps[static_cast<std::size_t>(k)], composite);
  }
  const int ambient_kernel =
      composite.empty() ? rs.ambient : static_cast<int>(kernel_dim(composite));
  // the center direction of family A always lies in the ambient kernel but not in h
  return ambient_kernel - (rs.type.family == Family::A ? 1 : 0);
}

// --- principal sl2 triple ----------------------------------------------------

struct PrincipalTriple {
  QVec h0;              // 2 rho_check, ambient h coordinates
  QVec f_coefficients;  // c_i with sum_i c_i B_flat(alpha_i) = h0
};

inline PrincipalTriple principal_triple(const RootSystem& rs) {
  QMat a(static_cast<std::size_t>(rs.ambient), zeros(static_cast<std::size_t>(rs.rank())));
  for (int i = 0; i < rs.rank(); ++i) {
    const QVec bi = mat_vec(rs.gram_hstar, rs.simple_roots[static_cast<std::size_t>(i)]);
    for (int j = 0; j < rs.ambient; ++j) a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = bi[static_cast<std::size_t>(j)];
  }
  PrincipalTriple t;
  t.h0 = scale(Rat(2), rs.rho_check);
  t.f_coefficients = solve_unique(a, t.h0);  // simple types: always uniquely solvable
  for (int j = 0; j < rs.rank(); ++j)
    if (dot(rs.simple_roots[static_cast<std::size_t>(j)], t.h0) != Rat(2))
      throw Error("principal triple: alpha_j(h0) != 2");
  return t;
}

// ad(e0) ad(f0) restricted to h: h -> sum_i c_i alpha_i(h) B_flat(alpha_i).
// Second oracle: principal vectors are eigenvectors with eigenvalue k(k+1)/2.
inline QVec ad_e0_ad_f0_on_h(const RootSystem& rs, const PrincipalTriple& t, const QVec& h_vec) {
  QVec out = zeros(static_cast<std::size_t>(rs.ambient));
  for (int i = 0; i < rs.rank(); ++i) {
    const Rat c = t.f_coefficients[static_cast<std::size_t>(i)] *
                  dot(rs.simple_roots[static_cast<std::size_t>(i)], h_vec);
    if (!c.is_zero())
      out = add(out, scale(c, mat_vec(rs.gram_hstar, rs.simple_roots[static_cast<std::size_t>(i)])));
  }
  return out;
}

// --- sigma automorphism on the positive part (family D, even rank) -----------

struct SigmaAction {
  std::vector<int> perm;   // positive-root index permutation
  std::vector<int> sign;   // sigma(e_beta) = sign * e_{sigma(beta)}
};

inline SigmaAction sigma_action(const RootSystem& rs, const StructureConstants& sc) {
  if (rs.type.family != Family::D || rs.type.rank % 2 != 0)
    throw Error("sigma_action applies to family D with even rank");
  const std::size_t n = rs.positive_roots.size();
  SigmaAction act;
  act.perm.resize(n);
  act.sign.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    QVec flipped = rs.positive_roots[i].coords;
    flipped.back() = -flipped.back();
    act.perm[i] = rs.positive_index.at(flipped);
  }
  std::vector<int> simple_pos(static_cast<std::size_t>(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i)
    simple_pos[static_cast<std::size_t>(i)] = rs.positive_index.at(rs.simple_roots[static_cast<std::size_t>(i)]);
  for (int i = 0; i < rs.rank(); ++i) act.sign[static_cast<std::size_t>(simple_pos[static_cast<std::size_t>(i)])] = 1;

  for (std::size_t xi = 0; xi < n; ++xi) {
    if (rs.positive_roots[xi].height < 2) continue;
    int found = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      const auto it = rs.positive_index.find(
          sub(rs.positive_roots[xi].coords, rs.simple_roots[static_cast<std::size_t>(i)]));
      if (it == rs.positive_index.end()) continue;
      const int beta = it->second;
      const long nb = sc.N(simple_pos[static_cast<std::size_t>(i)], beta);
      if (nb == 0) continue;
      const long ns = sc.N(act.perm[static_cast<std::size_t>(simple_pos[static_cast<std::size_t>(i)])],
                           act.perm[static_cast<std::size_t>(beta)]);
      if (ns % nb != 0) throw Error("sigma_action: non-integral sign ratio");
      const int s = act.sign[static_cast<std::size_t>(beta)] * static_cast<int>(ns / nb);
      if (s != 1 && s != -1) throw Error("sigma_action: sign is not +-1");
      if (found != 0 && s != act.sign[xi])
        throw Error("sigma_action: inconsistent sign across decompositions");
      act.sign[xi] = s;
      found = 1;
    }
    if (found == 0) throw Error("sigma_action: missing decomposition");
  }
  return act;
}

// Signed permutation sigma restricted to one height layer of the ad chain.
inline QMat sigma_layer_matrix(const RootSystem& rs, const AdChain& ch, const SigmaAction& act,
                               int layer) {
  if (layer == 0) {
    QMat m = identity(static_cast<std::size_t>(rs.ambient));
    m[static_cast<std::size_t>(rs.ambient - 1)][static_cast<std::size_t>(rs.ambient - 1)] = Rat(-1);
    return m;
  }
  const auto& idxs = ch.layers[static_cast<std::size_t>(layer - 1)];
  std::map<int, int> pos;
  for (std::size_t p = 0; p < idxs.size(); ++p) pos[idxs[p]] = static_cast<int>(p);
  QMat m(idxs.size(), zeros(idxs.size()));
  for (std::size_t p = 0; p < idxs.size(); ++p) {
    const int image = act.perm[static_cast<std::size_t>(idxs[p])];
    m[static_cast<std::size_t>(pos.at(image))][p] = Rat(act.sign[static_cast<std::size_t>(idxs[p])]);
  }
  return m;
}

// --- certification ------------------------------------------------------------

inline std::vector<long> module_dimensions(const RootSystem& rs) {
  std::vector<long> dims;
  for (int k : rs.exponents) dims.push_back(2L * k + 1);
  return dims;
}

struct CertVectorVerdict {
  int exponent;
  bool in_kernel_k_plus_1;
  bool in_kernel_k;

  bool ok() const { return in_kernel_k_plus_1 && !in_kernel_k; }
};

struct CertReport {
  std::vector<CertVectorVerdict> kernel;
  bool orthogonal = true;
  std::vector<std::pair<std::size_t, std::size_t>> orthogonality_failures;
  std::vector<long> module_dims;
  bool sigma_applicable = false;
  std::vector<std::size_t> sigma_failures;
  bool certified = false;
  std::string first_failure;
};

// Exact kernel-filtration certification of a (non-dual) principal basis
// against the independently built bracket table.
inline CertReport certify(const PrincipalBasis& pb, const RootSystem& rs,
                          const StructureConstants& sc) {
  if (pb.dual) throw Error("certify runs on the primal basis; certify duals on the dual root system");
  if (!(pb.type == rs.type)) throw Error("certify: basis/root system type mismatch");
  const AdChain ch = build_ad_chain(rs, sc);
  CertReport rep;
  rep.module_dims = module_dimensions(rs);
  for (std::size_t i = 0; i < pb.vectors_ambient.size(); ++i) {
    const int k = pb.exponent_labels[i];
    const QVec at_k = ad_e0_power(ch, pb.vectors_ambient[i], k);
    const QVec at_k1 = ad_e0_power(ch, pb.vectors_ambient[i], k + 1);
    rep.kernel.push_back({k, is_zero_vec(at_k1), is_zero_vec(at_k)});
    if (!rep.kernel.back().ok() && rep.first_failure.empty())
      rep.first_failure = "kernel condition failed for vector " + std::to_string(i) +
                          " (exponent " + std::to_string(k) + ")";
  }
  for (std::size_t i = 0; i < pb.vectors_ambient.size(); ++i)
    for (std::size_t j = i + 1; j < pb.vectors_ambient.size(); ++j)
      if (!form_h(rs, pb.vectors_ambient[i], pb.vectors_ambient[j]).is_zero()) {
        rep.orthogonal = false;
        rep.orthogonality_failures.push_back({i, j});
        if (rep.first_failure.empty())
          rep.first_failure = "vectors " + std::to_string(i) + " and " + std::to_string(j) +
                              " are not B-orthogonal";
      }
  if (rs.type.family == Family::D && rs.type.rank % 2 == 0) {
    rep.sigma_applicable = true;
    const std::size_t special = static_cast<std::size_t>(rs.rank() / 2 - 1);
    for (std::size_t i = 0; i < pb.vectors_ambient.size(); ++i) {
      const QVec& v = pb.vectors_ambient[i];
      bool ok;
      if (i == special) {  // sigma = -1 line: supported on e_l alone
        ok = !v.back().is_zero();
        for (std::size_t j = 0; ok && j + 1 < v.size(); ++j) ok = v[j].is_zero();
      } else {  // everything else lies in the +1 eigenspace
        ok = v.back().is_zero();
      }
      if (!ok) {
        rep.sigma_failures.push_back(i);
        if (rep.first_failure.empty())
          rep.first_failure = "sigma eigenvector condition failed for vector " + std::to_string(i);
      }
    }
  }
  bool kernels_ok = true;
  for (const auto& kv : rep.kernel) kernels_ok = kernels_ok && kv.ok();
  rep.certified = kernels_ok && rep.orthogonal && rep.sigma_failures.empty();
  return rep;
}

}  // namespace pbasis
