#pragma once

// Text format for finite-dimensional graded KLR modules.
//
//   klr-module v1
//   n 2
//   arrows 2             optional; otherwise taken from the quiver in use
//   0 1
//   0 0
//   basis 2
//   0,1 0 v0             idempotent, degree, optional label
//   1,0 1 v1
//   x 1 0 0 q^2-1        x_k / t_k  row col value (value may contain spaces)
//   t 1 1 0 1
//
// Omitted matrix entries are zero. Indices of x and t start at 1.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "swd/exact/parse.hpp"
#include "swd/io/config.hpp"
#include "swd/klr/module.hpp"

namespace swd {

inline FDModule parse_module(std::istream& in, const std::string& source = "<module>",
                             const std::optional<KLRParams>& fallback = std::nullopt) {
  std::string raw;
  int line = 0;
  auto next = [&](std::vector<std::string>& tok, std::string& rest) {
    while (std::getline(in, raw)) {
      ++line;
      const auto hash = raw.find('#');
      std::string body = raw.substr(0, hash);
      std::istringstream ls(body);
      tok.clear();
      for (std::string t; ls >> t;) tok.push_back(t);
      if (tok.empty()) continue;
      rest = body;
      return true;
    }
    return false;
  };
  auto integer = [&](const std::string& t, const std::string& what) { return detail::parse_int(t, source, line, what); };
  std::vector<std::string> tok;
  std::string rest;
  if (!next(tok, rest) || tok.size() != 2 || tok[0] != "klr-module" || tok[1] != "v1")
    throw ConfigError(source, line, "missing header 'klr-module v1'");
  int n = -1;
  std::optional<KLRParams> params;
  FDModule M;
  bool have_basis = false;
  while (next(tok, rest)) {
    const std::string& key = tok[0];
    if (key == "n") {
      if (tok.size() != 2) throw ConfigError(source, line, "'n' takes one argument");
      n = integer(tok[1], "n");
      if (n < 1) throw ConfigError(source, line, "n must be positive");
    } else if (key == "arrows") {
      if (tok.size() != 2) throw ConfigError(source, line, "'arrows' takes the vertex count");
      const int m = integer(tok[1], "arrows");
      std::vector<std::vector<int>> d;
      for (int r = 0; r < m; ++r) {
        if (!next(tok, rest) || static_cast<int>(tok.size()) != m)
          throw ConfigError(source, line, "arrow row " + std::to_string(r) + " needs " + std::to_string(m) + " entries");
        std::vector<int> row;
        for (const auto& t : tok) row.push_back(integer(t, "arrow count"));
        d.push_back(row);
      }
      params = klr_params_from_arrows(d);
    } else if (key == "basis") {
      if (n < 0) throw ConfigError(source, line, "'n' must precede 'basis'");
      if (!params && !fallback) throw ConfigError(source, line, "no arrows given and no quiver to fall back on");
      if (tok.size() != 2) throw ConfigError(source, line, "'basis' takes the dimension");
      const int dim = integer(tok[1], "dimension");
      M = empty_module(params ? *params : *fallback, n, dim);
      for (int b = 0; b < dim; ++b) {
        if (!next(tok, rest) || tok.size() < 2 || tok.size() > 3)
          throw ConfigError(source, line, "basis line needs: idempotent degree [label]");
        Seq nu;
        std::istringstream ss(tok[0]);
        for (std::string part; std::getline(ss, part, ',');) {
          const int v = integer(part, "vertex");
          if (v < 0 || v >= M.params.size()) throw ConfigError(source, line, "vertex " + part + " out of range");
          nu.push_back(v);
        }
        if (static_cast<int>(nu.size()) != n) throw ConfigError(source, line, "idempotent length differs from n");
        M.idem.push_back(nu);
        M.degree.push_back(integer(tok[1], "degree"));
        M.labels.push_back(tok.size() == 3 ? tok[2] : "b" + std::to_string(b));
      }
      have_basis = true;
    } else if (key == "x" || key == "t") {
      if (!have_basis) throw ConfigError(source, line, "'basis' must precede matrix entries");
      if (tok.size() < 5) throw ConfigError(source, line, "entry needs: " + key + " k row col value");
      const int k = integer(tok[1], "generator index");
      const int r = integer(tok[2], "row"), c = integer(tok[3], "column");
      auto& mats = key == "x" ? M.X : M.T;
      if (k < 1 || k > static_cast<int>(mats.size())) throw ConfigError(source, line, key + " index out of range");
      if (r < 0 || r >= M.dim() || c < 0 || c >= M.dim()) throw ConfigError(source, line, "entry position out of range");
      std::size_t pos = 0;
      for (int skip = 0; skip < 4; ++skip) {
        pos = rest.find_first_not_of(" \t", pos);
        pos = rest.find_first_of(" \t", pos);
      }
      try {
        mats[static_cast<std::size_t>(k - 1)].add(r, c, parse_qq(rest.substr(pos)));
      } catch (const std::exception& e) {
        throw ConfigError(source, line, std::string("bad value: ") + e.what());
      }
    } else {
      throw ConfigError(source, line, "unknown key '" + key + "'");
    }
  }
  if (!have_basis) throw ConfigError(source, line, "no basis section");
  return M;
}

inline FDModule load_module(const std::string& path, const std::optional<KLRParams>& fallback = std::nullopt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open module " + path);
  return parse_module(in, path, fallback);
}

inline std::string write_module(const FDModule& M) {
  std::ostringstream o;
  o << "klr-module v1\nn " << M.n << "\narrows " << M.params.size() << "\n";
  for (const auto& row : M.params.d) {
    for (std::size_t j = 0; j < row.size(); ++j) o << (j ? " " : "") << row[j];
    o << "\n";
  }
  o << "basis " << M.dim() << "\n";
  for (int b = 0; b < M.dim(); ++b) {
    for (std::size_t p = 0; p < M.idem[b].size(); ++p) o << (p ? "," : "") << M.idem[b][p];
    o << " " << M.degree[b];
    if (b < static_cast<int>(M.labels.size()) && M.labels[b].find_first_of(" \t#") == std::string::npos)
      o << " " << M.labels[b];
    o << "\n";
  }
  auto dump = [&](const char* key, const std::vector<Matrix<Qq>>& mats) {
    for (std::size_t k = 0; k < mats.size(); ++k)
      for (int r = 0; r < mats[k].rows(); ++r)
        for (const auto& [c, v] : mats[k].row(r)) o << key << " " << k + 1 << " " << r << " " << c << " " << v.to_string() << "\n";
  };
  dump("x", M.X);
  dump("t", M.T);
  return o.str();
}

}  // namespace swd
