#pragma once

// On-disk result cache. Entries are keyed by the FNV-1a hash of
// (version tag, job kind, canonical job text) and stored as
//
//   swd-cache v1
//   key <16 hex digits>
//   check <16 hex digits of the payload hash>
//   <payload>
//
// Writes go to a temporary file that is renamed into place. Entries that fail
// to parse or whose checksum mismatches are reported and treated as misses.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>

namespace swd {

inline constexpr const char* kCodeVersion = "swd-0.1";

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream o;
  o << std::hex << std::setw(16) << std::setfill('0') << v;
  return o.str();
}

class ResultCache {
 public:
  ResultCache(std::filesystem::path dir, bool enabled, std::function<void(const std::string&)> warn = {})
      : dir_(std::move(dir)), enabled_(enabled), warn_(std::move(warn)) {}

  static std::string key(const std::string& kind, const std::string& text) {
    return hex64(fnv1a(std::string(kCodeVersion) + "\n" + kind + "\n" + text));
  }

  std::optional<std::string> get(const std::string& k) {
    if (!enabled_) return std::nullopt;
    const auto path = dir_ / (k + ".cache");
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      ++misses_;
      return std::nullopt;
    }
    std::string head, keyline, checkline;
    std::getline(in, head);
    std::getline(in, keyline);
    std::getline(in, checkline);
    std::ostringstream body;
    body << in.rdbuf();
    const std::string payload = body.str();
    if (head != "swd-cache v1" || keyline != "key " + k || checkline != "check " + hex64(fnv1a(payload))) {
      if (warn_) warn_("cache entry " + path.string() + " is corrupt; recomputing");
      ++corrupt_;
      ++misses_;
      return std::nullopt;
    }
    ++hits_;
    return payload;
  }

  void put(const std::string& k, const std::string& payload) {
    if (!enabled_) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    const auto final_path = dir_ / (k + ".cache");
    const auto tmp = dir_ / (k + ".tmp." + std::to_string(::getpid()));
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) {
        if (warn_) warn_("cannot write cache entry " + tmp.string());
        return;
      }
      out << "swd-cache v1\nkey " << k << "\ncheck " << hex64(fnv1a(payload)) << "\n" << payload;
    }
    std::filesystem::rename(tmp, final_path, ec);
    if (ec && warn_) warn_("cannot install cache entry " + final_path.string() + ": " + ec.message());
  }

  /// Cached payload for k, or the result of compute() stored under k.
  std::string fetch(const std::string& k, const std::function<std::string()>& compute) {
    if (auto hit = get(k)) return *hit;
    std::string v = compute();
    put(k, v);
    return v;
  }

  bool enabled() const { return enabled_; }
  int hits() const { return hits_; }
  int misses() const { return misses_; }
  int corrupt() const { return corrupt_; }

 private:
  std::filesystem::path dir_;
  bool enabled_;
  std::function<void(const std::string&)> warn_;
  int hits_ = 0, misses_ = 0, corrupt_ = 0;
};

}  // namespace swd
