#include "hecke/cache.hpp"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hecke/errors.hpp"
#include "hecke/serialize.hpp"

namespace hecke {

namespace fs = std::filesystem;
using nlohmann::json;

std::string CacheKey::filename() const {
  std::ostringstream out;
  out << kind << "-n" << n << "-p" << p;
  for (const Coweight& t : labels) {
    out << (&t == &labels.front() ? "-" : "_");
    const auto& c = t.n_coords();
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "." : "") << c[i];
  }
  out << ".json";
  return out.str();
}

CacheKey make_key(int n, long p, const std::string& kind,
                  const std::vector<Coweight>& labels) {
  if (n < 2) throw InvalidArgument("cache key needs n >= 2");
  if (p < 2) throw InvalidArgument("cache key needs a prime p");
  std::size_t want;
  if (kind == "satake" || kind == "basis-change")
    want = 1;
  else if (kind == "convolution")
    want = 2;
  else
    throw InvalidArgument("unknown cache kind: " + kind);
  if (labels.size() != want) throw InvalidArgument("wrong label count for kind " + kind);
  for (const Coweight& t : labels) {
    if (t.rank() != n) throw InvalidArgument("cache label rank disagrees with n");
    if (!t.is_dominant()) throw InvalidArgument("cache labels must be dominant");
  }
  CacheKey key{n, p, kind, labels};
  if (kind == "convolution")  // symmetric kind: order is irrelevant, canonicalize
    std::sort(key.labels.begin(), key.labels.end());
  return key;
}

std::uint64_t fnv64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string checksum_hex(const std::string& bytes) {
  std::ostringstream out;
  out << std::hex << fnv64(bytes);
  return out.str();
}

}  // namespace

DiskCache::DiskCache(std::string dir) : dir_(std::move(dir)) {
  if (dir_.empty()) throw InvalidArgument("cache directory must be nonempty");
}

std::optional<json> DiskCache::get(const CacheKey& key) const {
  fs::path path = fs::path(dir_) / key.filename();
  std::ifstream in(path);
  if (!in) return std::nullopt;  // plain miss
  try {
    json entry;
    in >> entry;
    std::string payload = entry.at("payload").dump();
    if (entry.at("checksum").get<std::string>() != checksum_hex(payload))
      throw CacheError("checksum mismatch");
    return entry.at("payload");
  } catch (const std::exception& e) {
    std::cerr << "warning: discarding corrupt cache entry " << path.string() << ": "
              << e.what() << "\n";
    return std::nullopt;
  }
}

void DiskCache::put(const CacheKey& key, const json& payload) const {
  fs::create_directories(dir_);
  json entry = {{"version", kVersion},
                {"key", key.filename()},
                {"checksum", checksum_hex(payload.dump())},
                {"payload", payload}};
  fs::path final_path = fs::path(dir_) / key.filename();
  fs::path tmp = final_path;
  tmp += ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << entry.dump(1) << "\n";
    if (!out.good()) throw CacheError("short write to " + tmp.string());
  }
  fs::rename(tmp, final_path);  // atomic replace on the same filesystem
}

std::optional<TorusFunction> DiskCache::get_function(const CacheKey& key) const {
  auto payload = get(key);
  if (!payload) return std::nullopt;
  try {
    TorusFunction f = function_from_json(*payload);
    if (f.rank() != key.n) throw CacheError("rank mismatch");
    return f;
  } catch (const std::exception& e) {
    std::cerr << "warning: discarding cache entry " << key.filename() << ": " << e.what()
              << "\n";
    return std::nullopt;
  }
}

void DiskCache::put_function(const CacheKey& key, const TorusFunction& value) const {
  if (value.rank() != key.n)
    throw InvalidArgument("cached value rank disagrees with the key");
  put(key, function_to_json(value));
}

std::optional<Convolution> DiskCache::get_convolution(const CacheKey& key) const {
  auto payload = get(key);
  if (!payload) return std::nullopt;
  try {
    Convolution c = convolution_from_json(*payload);
    if (c.lambda.rank() != key.n || c.p != key.p) throw CacheError("key mismatch");
    return c;
  } catch (const std::exception& e) {
    std::cerr << "warning: discarding cache entry " << key.filename() << ": " << e.what()
              << "\n";
    return std::nullopt;
  }
}

void DiskCache::put_convolution(const CacheKey& key, const Convolution& value) const {
  if (value.lambda.rank() != key.n || value.mu.rank() != key.n || value.p != key.p)
    throw InvalidArgument("cached value n/p disagrees with the key");
  put(key, convolution_to_json(value));
}

}  // namespace hecke
