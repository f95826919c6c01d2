#pragma once

// Job configuration files.
//
//   # swd-config v1
//   N 2
//   index 1 0            k m [c]: module V(varpi_k) at anchor c*(-q)^m
//   index 1 2
//   max-k 3
//   degree-cap 8
//   n 2
//   module simple0.mod   paths relative to the config file
//   check conv-tensor
//   format tsv
//
// Blank lines and text after '#' are ignored (the header line excepted).

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "swd/quiver/quiver.hpp"

namespace swd {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, int line, const std::string& msg)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline constexpr const char* kConfigHeader = "# swd-config v1";

struct JobConfig {
  int N = 0;
  std::vector<SpectralIndex> index;
  int max_k = 0;
  int degree_cap = 0;
  int n = 0;
  std::vector<std::string> modules;
  std::vector<std::string> checks;
  std::string format;
  std::string source;
  std::string canonical;  // normalized text used as the cache key

  int max_k_or(int fallback) const { return max_k > 0 ? max_k : fallback; }
  int degree_cap_or(int fallback) const { return degree_cap > 0 ? degree_cap : fallback; }
};

namespace detail {
inline int parse_int(const std::string& tok, const std::string& src, int line, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(src, line, "expected an integer for " + what + ", got '" + tok + "'");
  }
}
}  // namespace detail

inline JobConfig parse_config(std::istream& in, const std::string& source = "<config>",
                              const std::filesystem::path& base = {}) {
  JobConfig cfg;
  cfg.source = source;
  std::string raw;
  int line = 0;
  bool header = false;
  std::ostringstream canon;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (!header) {
      if (raw.find_first_not_of(" \t") == std::string::npos) continue;
      if (raw != kConfigHeader) throw ConfigError(source, line, std::string("missing header '") + kConfigHeader + "'");
      header = true;
      continue;
    }
    const auto hash = raw.find('#');
    std::istringstream ls(raw.substr(0, hash));
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    auto want = [&](std::size_t lo, std::size_t hi) {
      if (tok.size() - 1 < lo || tok.size() - 1 > hi)
        throw ConfigError(source, line, "'" + key + "' takes " + std::to_string(lo) +
                                            (lo == hi ? "" : ".." + std::to_string(hi)) + " argument(s)");
    };
    auto positive = [&](const std::string& t) {
      int v = detail::parse_int(t, source, line, key);
      if (v <= 0) throw ConfigError(source, line, key + " must be positive");
      return v;
    };
    if (key == "N") {
      want(1, 1);
      cfg.N = positive(tok[1]);
      if (cfg.N < 2) throw ConfigError(source, line, "N must be at least 2");
    } else if (key == "index") {
      want(2, 3);
      SpectralIndex s;
      s.k = positive(tok[1]);
      s.X = QMonomial::neg_q_pow(detail::parse_int(tok[2], source, line, "m"));
      if (tok.size() == 4) {
        try {
          s.X.c = Rat(tok[3]);
          s.X.c.canonicalize();
        } catch (const std::exception&) {
          throw ConfigError(source, line, "bad rational constant '" + tok[3] + "'");
        }
        if (s.X.c == 0) throw ConfigError(source, line, "anchor constant must be nonzero");
      }
      for (const auto& t : cfg.index)
        if (t == s) throw ConfigError(source, line, "repeated index " + s.label());
      cfg.index.push_back(s);
    } else if (key == "max-k") {
      want(1, 1);
      cfg.max_k = positive(tok[1]);
    } else if (key == "degree-cap") {
      want(1, 1);
      cfg.degree_cap = positive(tok[1]);
    } else if (key == "n") {
      want(1, 1);
      cfg.n = positive(tok[1]);
    } else if (key == "module") {
      want(1, 1);
      std::filesystem::path p = tok[1];
      if (p.is_relative() && !base.empty()) p = base / p;
      if (!std::filesystem::exists(p)) throw ConfigError(source, line, "module file not found: " + p.string());
      cfg.modules.push_back(p.string());
    } else if (key == "check") {
      want(1, 1);
      if (tok[1] != "conv-tensor" && tok[1] != "exactness" && tok[1] != "bimodule")
        throw ConfigError(source, line, "unknown check '" + tok[1] + "'");
      cfg.checks.push_back(tok[1]);
    } else if (key == "format") {
      want(1, 1);
      if (tok[1] != "tsv" && tok[1] != "json") throw ConfigError(source, line, "format must be tsv or json");
      cfg.format = tok[1];
    } else {
      throw ConfigError(source, line, "unknown key '" + key + "'");
    }
    for (std::size_t i = 0; i < tok.size(); ++i) canon << (i ? " " : "") << tok[i];
    canon << "\n";
  }
  if (!header) throw ConfigError(source, line == 0 ? 1 : line, std::string("missing header '") + kConfigHeader + "'");
  for (const auto& s : cfg.index)
    if (cfg.N > 0 && s.k > cfg.N - 1)
      throw ConfigError(source, line, "index " + s.label() + " needs k <= N-1");
  cfg.canonical = canon.str();
  return cfg;
}

inline JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  return parse_config(in, path, std::filesystem::path(path).parent_path());
}

}  // namespace swd
