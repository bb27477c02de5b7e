#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hecke/cartan.hpp"
#include "hecke/torus.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

// Identifies one cached computation.  Labels are dominant coweights of rank
// n; kinds taking a symmetric pair store the labels sorted so equal requests
// collide.  make_key validates and canonicalizes.
struct CacheKey {
  int n = 0;
  long p = 0;
  std::string kind;                // satake | convolution | basis-change
  std::vector<Coweight> labels;

  std::string filename() const;    // injective, filesystem-safe
};

CacheKey make_key(int n, long p, const std::string& kind,
                  const std::vector<Coweight>& labels);

std::uint64_t fnv64(const std::string& bytes);

// One directory of JSON entries, each carrying a checksum of its payload.
// Writes go through a temp file and an atomic rename; a reader sees either
// the old entry or the new one, never a partial write.  Entries that fail to
// parse or checksum are treated as absent (with a warning on stderr).
class DiskCache {
 public:
  explicit DiskCache(std::string dir);

  const std::string& dir() const { return dir_; }

  std::optional<nlohmann::json> get(const CacheKey& key) const;
  void put(const CacheKey& key, const nlohmann::json& payload) const;

  // typed wrappers; put rejects values whose rank/prime contradict the key
  std::optional<TorusFunction> get_function(const CacheKey& key) const;
  void put_function(const CacheKey& key, const TorusFunction& value) const;
  std::optional<Convolution> get_convolution(const CacheKey& key) const;
  void put_convolution(const CacheKey& key, const Convolution& value) const;

 private:
  std::string dir_;
};

}  // namespace hecke
