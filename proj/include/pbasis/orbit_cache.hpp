#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pbasis/principal.hpp"
#include "pbasis/rootsys.hpp"

namespace pbasis {

// On-disk cache of Weyl orbits, keyed by (type, seed). Versioned text format;
// a stale, corrupt or mismatched file is ignored and recomputed. The cache is
// an accelerator only: results are identical with or without it.

inline constexpr const char* kOrbitCacheMagic = "pbasis-orbit v1";

namespace detail {

inline std::string vec_to_line(const QVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i].str();
  }
  return s;
}

inline std::optional<QVec> vec_from_line(const std::string& line, std::size_t dim) {
  std::istringstream in(line);
  QVec v;
  std::string tok;
  while (in >> tok) {
    try {
      v.push_back(Rat::parse(tok));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  if (v.size() != dim) return std::nullopt;
  return v;
}

inline std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace detail

inline std::filesystem::path orbit_cache_file(const std::string& dir, const LieType& type,
                                              const QVec& seed) {
  const std::string key = to_string(type) + "|" + detail::vec_to_line(seed);
  return std::filesystem::path(dir) / (to_string(type) + "-" + detail::fnv1a_hex(key) + ".orbit");
}

inline std::optional<std::vector<QVec>> load_cached_orbit(const std::string& dir,
                                                          const LieType& type, const QVec& seed) {
  std::ifstream in(orbit_cache_file(dir, type, seed));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kOrbitCacheMagic) return std::nullopt;
  if (!std::getline(in, line) || line != "type " + to_string(type)) return std::nullopt;
  if (!std::getline(in, line) || line != "seed " + detail::vec_to_line(seed)) return std::nullopt;
  if (!std::getline(in, line) || line.rfind("count ", 0) != 0) return std::nullopt;
  std::size_t count = 0;
  try {
    count = std::stoul(line.substr(6));
  } catch (...) {
    return std::nullopt;
  }
  std::vector<QVec> orbit;
  orbit.reserve(count);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto v = detail::vec_from_line(line, seed.size());
    if (!v) return std::nullopt;
    orbit.push_back(std::move(*v));
  }
  if (orbit.size() != count) return std::nullopt;
  return orbit;
}

inline void store_cached_orbit(const std::string& dir, const LieType& type, const QVec& seed,
                               const std::vector<QVec>& orbit) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;  // cache is best-effort
  const auto path = orbit_cache_file(dir, type, seed);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << kOrbitCacheMagic << '\n';
    out << "type " << to_string(type) << '\n';
    out << "seed " << detail::vec_to_line(seed) << '\n';
    out << "count " << orbit.size() << '\n';
    for (const auto& v : orbit) out << detail::vec_to_line(v) << '\n';
  }
  std::filesystem::rename(tmp, path, ec);
}

// Orbit of `seed`, served from the cache when possible, computed and stored
// otherwise. Returned vectors are in the canonical (sorted) order either way.
inline std::shared_ptr<const std::vector<QVec>> cached_weyl_orbit(const RootSystem& rs,
                                                                  const Vec& seed, std::size_t cap,
                                                                  const std::string& dir) {
  if (auto hit = load_cached_orbit(dir, rs.type, seed.coords))
    return std::make_shared<std::vector<QVec>>(std::move(*hit));
  auto vecs = weyl_orbit(rs, seed, cap);
  auto orbit = std::make_shared<std::vector<QVec>>();
  orbit->reserve(vecs.size());
  for (auto& v : vecs) orbit->push_back(std::move(v.coords));
  store_cached_orbit(dir, rs.type, seed.coords, *orbit);
  return orbit;
}

inline OrbitProvider make_caching_orbit_provider(std::string dir) {
  return [dir = std::move(dir)](const RootSystem& rs, const Vec& seed, std::size_t cap) {
    return cached_weyl_orbit(rs, seed, cap, dir);
  };
}

// PBASIS_CACHE_DIR wins; otherwise the user cache directory; empty disables caching.
inline std::string default_cache_dir() {
  if (const char* env = std::getenv("PBASIS_CACHE_DIR")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
    return (std::filesystem::path(xdg) / "pbasis").string();
  if (const char* home = std::getenv("HOME"))
    return (std::filesystem::path(home) / ".cache" / "pbasis").string();
  return {};
}

}  // namespace pbasis
