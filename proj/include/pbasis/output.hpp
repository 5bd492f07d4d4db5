#pragma once

#include <string>

#include <json.hpp>

#include "pbasis/adjoint.hpp"
#include "pbasis/principal.hpp"
#include "pbasis/rootsys.hpp"
#include "pbasis/version.hpp"

namespace pbasis {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json vec_strings(const QVec& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

}  // namespace detail

inline ordered_json cert_json(const CertReport& rep) {
  ordered_json j;
  j["certified"] = rep.certified;
  ordered_json kernel = ordered_json::array();
  for (const auto& kv : rep.kernel) {
    ordered_json e;
    e["exponent"] = kv.exponent;
    e["in_kernel_k_plus_1"] = kv.in_kernel_k_plus_1;
    e["in_kernel_k"] = kv.in_kernel_k;
    kernel.push_back(e);
  }
  j["kernel"] = kernel;
  j["orthogonal"] = rep.orthogonal;
  j["module_dimensions"] = rep.module_dims;
  j["sigma_checked"] = rep.sigma_applicable;
  if (!rep.first_failure.empty()) j["first_failure"] = rep.first_failure;
  return j;
}

// The JSON document emitted by the CLI; field order is fixed so output is
// byte-for-byte deterministic for a given tool version. All vector entries are
// exact decimal/rational strings.
inline ordered_json basis_document(const RootSystem& rs, const PrincipalBasis& pb,
                                   const CertReport* cert = nullptr) {
  ordered_json doc;
  doc["tool"] = "pbasis";
  doc["version"] = kVersion;
  doc["type"] = to_string(pb.type);
  doc["dual"] = pb.dual;
  doc["form"] = "canonical";
  doc["exponents"] = rs.exponents;
  doc["lattice_basis"] = pb.dual ? "roots" : "coroots";
  doc["generators"] = pb.generator_provenance;
  doc["sigma_refined"] = pb.sigma_refined;
  ordered_json basis = ordered_json::array();
  for (std::size_t i = 0; i < pb.vectors.size(); ++i) {
    ordered_json v;
    v["exponent"] = pb.exponent_labels[i];
    v["lattice"] = detail::vec_strings(pb.vectors[i]);
    v["ambient"] = detail::vec_strings(pb.vectors_ambient[i]);
    basis.push_back(v);
  }
  doc["basis"] = basis;
  doc["certification"] = cert ? cert_json(*cert) : ordered_json(nullptr);
  return doc;
}

inline std::string basis_text(const RootSystem& rs, const PrincipalBasis& pb,
                              const CertReport* cert = nullptr) {
  std::string out;
  out += "type " + to_string(pb.type) + (pb.dual ? " (Langlands dual basis)" : "") + "\n";
  out += "exponents";
  for (int k : rs.exponents) out += " " + std::to_string(k);
  out += "\n";
  out += "generators " + pb.generator_provenance + "\n";
  out += std::string("lattice ") + (pb.dual ? "roots" : "coroots") + "\n";
  for (std::size_t i = 0; i < pb.vectors.size(); ++i) {
    out += "h" + std::to_string(i + 1) + " [k=" + std::to_string(pb.exponent_labels[i]) + "] (";
    for (std::size_t j = 0; j < pb.vectors[i].size(); ++j)
      out += (j ? ", " : "") + pb.vectors[i][j].str();
    out += ")  ambient (";
    for (std::size_t j = 0; j < pb.vectors_ambient[i].size(); ++j)
      out += (j ? ", " : "") + pb.vectors_ambient[i][j].str();
    out += ")\n";
  }
  if (cert)
    out += std::string("certification ") + (cert->certified ? "PASS" : "FAIL") +
           (cert->first_failure.empty() ? "" : ": " + cert->first_failure) + "\n";
  return out;
}

}  // namespace pbasis
