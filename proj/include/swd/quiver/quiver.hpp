#pragma once

// Quivers from finite sets of (fundamental index, spectral anchor) pairs:
// arrow multiplicities from R-matrix denominators, the symmetric Cartan
// datum, the parameter polynomials Q_ij, and ADE classification.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "swd/exact/mpoly.hpp"
#include "swd/rmatrix/rmatrix.hpp"

namespace swd {

struct SpectralIndex {
  int k = 1;
  QMonomial X;

  std::string label() const { return "(" + std::to_string(k) + "," + X.to_string() + ")"; }
  friend bool operator==(const SpectralIndex& a, const SpectralIndex& b) { return a.k == b.k && a.X == b.X; }
  friend bool operator<(const SpectralIndex& a, const SpectralIndex& b) {
    return a.k != b.k ? a.k < b.k : a.X < b.X;
  }
};

using DenominatorSource = std::function<DenominatorPoly(int k, int l, int N)>;

/// Denominators computed by the exact solver, memoized per process.
inline DenominatorPoly solver_denominator(int k, int l, int N) {
  static std::map<std::tuple<int, int, int>, DenominatorPoly> memo;
  auto key = std::tuple{k, l, N};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  return memo.emplace(key, denominator(k, l, N)).first->second;
}

struct Quiver {
  int N = 0;
  std::vector<SpectralIndex> vertices;
  std::vector<std::vector<int>> d;  // d[i][j] = number of arrows i -> j
  std::vector<std::string> log;

  int size() const { return static_cast<int>(vertices.size()); }
  bool has_loop() const {
    for (int i = 0; i < size(); ++i)
      if (d[i][i] != 0) return true;
    return false;
  }
  bool has_two_cycle() const {
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (i != j && d[i][j] > 0 && d[j][i] > 0) return true;
    return false;
  }
};

/// Order of vanishing of the denominator at the monomial point r (0 when r is not a root).
inline int root_order(const DenominatorPoly& den, const QMonomial& r) {
  for (const auto& [root, mult] : den.roots)
    if (root == r) return mult;
  if (den.residual.degree() > 0) return root_multiplicity(den.residual, r.value());
  return 0;
}

/// d_ij = order of the zero of d_{S(i),S(j)}(z) at z = X(j)/X(i).
inline Quiver build_quiver(const std::vector<SpectralIndex>& I, int N,
                           const DenominatorSource& den = solver_denominator) {
  Quiver Q;
  Q.N = N;
  Q.vertices = I;
  const int n = static_cast<int>(I.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (I[i] == I[j]) throw std::invalid_argument("build_quiver: repeated index " + I[i].label());
  Q.d.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const QMonomial ratio = I[j].X / I[i].X;
      if (ratio.c != 1) {
        Q.log.push_back("no arrow " + I[i].label() + " -> " + I[j].label() + ": ratio " + ratio.to_string() +
                        " is not a power of -q");
        continue;
      }
      Q.d[i][j] = root_order(den(I[i].k, I[j].k, N), ratio);
    }
  }
  return Q;
}

/// KLR parameters: symmetric Cartan matrix, P_ij(u,v) = (v-u)^{d_ij},
/// Q_ij(u,v) = t_ij P_ij(u,v) P_ji(v,u) with t_ij = 1 unless overridden.
struct KLRParams {
  std::vector<std::vector<int>> d;
  std::map<std::pair<int, int>, Rat> scale;  // optional t_ij overrides (negative controls)

  int size() const { return static_cast<int>(d.size()); }
  int cartan(int i, int j) const { return i == j ? 2 : -d[i][j] - d[j][i]; }
  Rat t(int i, int j) const {
    auto it = scale.find({i, j});
    return it == scale.end() ? Rat(1) : it->second;
  }

  /// (x_b - x_a)^{d_ij} in n variables.
  MPoly<Rat> P(int i, int j, int n, int a, int b) const {
    auto diff = MPoly<Rat>::variable(n, b) - MPoly<Rat>::variable(n, a);
    return diff.pow(d[i][j]);
  }
  /// Q_ij(x_a, x_b) in n variables (zero for i = j).
  MPoly<Rat> Q(int i, int j, int n, int a, int b) const {
    if (i == j) return MPoly<Rat>(n);
    auto r = P(i, j, n, a, b) * P(j, i, n, b, a);
    return t(i, j) * r;
  }
};

inline KLRParams klr_params(const Quiver& Q) { return KLRParams{Q.d, {}}; }

inline KLRParams klr_params_from_arrows(std::vector<std::vector<int>> d) { return KLRParams{std::move(d), {}}; }

struct QuiverType {
  std::vector<std::string> components;  // one tag per connected component
  bool ade = true;
  std::string tag() const {
    std::string s;
    for (const auto& c : components) s += (s.empty() ? "" : "+") + c;
    return s.empty() ? "empty" : s;
  }
};

/// Classify each connected component of the underlying graph as A_n, D_n, E_6/7/8 or other.
inline QuiverType classify(const KLRParams& p) {
  const int n = p.size();
  QuiverType out;
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = s;
    for (std::size_t h = 0; h < members.size(); ++h)
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && p.d[members[h]][j] + p.d[j][members[h]] > 0) {
          comp[j] = s;
          members.push_back(j);
        }
    const int m = static_cast<int>(members.size());
    int edges = 0;
    bool multi = false;
    std::map<int, int> degree;
    for (int a : members)
      for (int b : members)
        if (a < b) {
          const int w = p.d[a][b] + p.d[b][a];
          if (w > 1) multi = true;
          if (w > 0) {
            ++edges;
            ++degree[a];
            ++degree[b];
          }
        }
    std::string tag = "other";
    if (!multi && edges == m - 1) {
      int branch = -1, branches = 0;
      for (int a : members)
        if (degree[a] >= 3) {
          branch = a;
          ++branches;
        }
      if (branches == 0) {
        tag = "A_" + std::to_string(m);
      } else if (branches == 1 && degree[branch] == 3) {
        // arm lengths from the branch vertex
        std::vector<int> arms;
        for (int b : members) {
          if (p.d[branch][b] + p.d[b][branch] == 0) continue;
          int len = 1, prev = branch, cur = b;
          for (;;) {
            int next = -1;
            for (int c : members)
              if (c != prev && c != cur && p.d[cur][c] + p.d[c][cur] > 0) next = c;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) {
          tag = "D_" + std::to_string(m);
        } else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) {
          tag = "E_" + std::to_string(m);
        }
      }
    }
    if (tag == "other") out.ade = false;
    out.components.push_back(tag);
  }
  return out;
}

}  // namespace swd
