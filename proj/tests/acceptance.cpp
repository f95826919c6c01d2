// Acceptance suite: one line per criterion.
//   acceptance [--strict] [--only k]
// Known failures (see README) are reported as FAIL but only fail the run with --strict.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "swd/functor/functor.hpp"
#include "swd/klr/relations.hpp"

using namespace swd;

namespace {

struct Outcome {
  bool pass = false;
  bool known = false;
  std::string detail;
  std::vector<std::string> info;
};

QMonomial nq(int m) { return QMonomial::neg_q_pow(m); }

std::map<int, int> as_counts(const LaurentQ& l) {
  std::map<int, int> m;
  for (const auto& [e, c] : l.terms()) m[e] = static_cast<int>(c.get_num().get_si());
  return m;
}

Outcome denominators() {
  Outcome o;
  int total = 0, literal = 0, corrected = 0;
  std::vector<std::string> misses;
  for (int N = 2; N <= 5; ++N)
    for (int k = 1; k <= std::min(3, N - 1); ++k)
      for (int l = 1; l <= std::min(3, N - 1); ++l) {
        const DenominatorPoly d = solver_denominator(k, l, N);
        ++total;
        if (pole_product(k, l, std::min(k, l)).monic() == d.poly)
          ++literal;
        else
          misses.push_back("(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(N) + ")=" + d.factored());
        if (pole_product(k, l, std::min({k, l, N - k, N - l})).monic() == d.poly) ++corrected;
      }
  o.pass = literal == total;
  o.known = !o.pass && corrected == total;
  o.detail = std::to_string(literal) + "/" + std::to_string(total) + " entries equal prod_{s<=min(k,l)} (z-(-q)^{|k-l|+2s})";
  if (!misses.empty()) {
    std::string s = "differing:";
    for (const auto& m : misses) s += " " + m;
    o.info.push_back(s);
  }
  o.info.push_back("with s <= min(k,l,N-k,N-l): " + std::to_string(corrected) + "/" + std::to_string(total) + " entries equal");
  return o;
}

const std::vector<std::tuple<int, int, int>> kCases{{1, 1, 2}, {1, 1, 3}, {1, 2, 3}, {2, 2, 4}};

Outcome cross_validation() {
  Outcome o;
  int agree = 0;
  for (auto [k, l, N] : kCases) agree += rmatrix_spectral(k, l, N).dense == rmatrix_solver(k, l, N).dense;
  o.pass = agree == static_cast<int>(kCases.size());
  o.detail = std::to_string(agree) + "/" + std::to_string(kCases.size()) + " cases agree entrywise";
  return o;
}

Outcome unitarity_ybe() {
  Outcome o;
  int u_ok = 0, u_n = 0, y_ok = 0, y_n = 0;
  for (auto [k, l, N] : kCases) {
    std::set<int> ks{k, l};
    for (int a : ks)
      for (int b : ks) {
        ++u_n;
        u_ok += verify_unitarity(a, b, N);
      }
    for (int a : ks)
      for (int b : ks)
        for (int c : ks) {
          ++y_n;
          y_ok += verify_ybe(a, b, c, N);
        }
  }
  o.pass = u_ok == u_n && y_ok == y_n;
  o.detail = "unitarity " + std::to_string(u_ok) + "/" + std::to_string(u_n) + ", Yang-Baxter " + std::to_string(y_ok) +
             "/" + std::to_string(y_n);
  return o;
}

std::vector<std::pair<std::string, SWDContext>> a_series() {
  return {{"A_1", make_context({{1, nq(0)}}, 2)},
          {"A_2", make_context({{1, nq(0)}, {1, nq(2)}}, 2)},
          {"A_3", make_context({{1, nq(0)}, {1, nq(2)}, {1, nq(4)}}, 2)}};
}

Outcome klr_relations() {
  Outcome o;
  o.pass = true;
  long checked = 0;
  std::string tags;
  for (const auto& [name, c] : a_series()) {
    const std::string tag = classify(c.params).tag();
    tags += (tags.empty() ? "" : ",") + tag;
    if (tag != name) o.pass = false;
    for (int n = 1; n <= 3; ++n) {
      const KLRReport r = verify_klr_relations(c.params, n, 8);
      checked += r.checked;
      if (!r.ok()) {
        o.pass = false;
        o.info.push_back(name + " n=" + std::to_string(n) + ": " + r.failures.front());
      }
    }
  }
  o.detail = "quivers " + tags + ", n<=3, D=8, " + std::to_string(checked) + " operator identities";
  return o;
}

Outcome graded_dims() {
  Outcome o;
  int pairs = 0, agree = 0;
  for (const auto& [name, c] : a_series())
    for (int n = 1; n <= 3; ++n) {
      const KLRAlgebraSpec spec{c.params, n};
      for (const auto& nu : spec.sequences())
        for (const auto& mu : spec.sequences()) {
          if (block_of(nu, spec.vertices()) != block_of(mu, spec.vertices())) continue;
          ++pairs;
          const auto got = as_counts(graded_dim(spec, nu, mu, 8));
          const bool ok = got == oracle::graded_dim(c.params.d, nu, mu, 8) && got == oracle::pbw_count(c.params.d, nu, mu, 8);
          agree += ok;
          if (!ok) o.info.push_back(name + " " + seq_string(nu) + "->" + seq_string(mu) + " disagrees");
        }
    }
  const auto single = graded_dim({klr_params_from_arrows({{0}}), 1}, {0}, {0}, 6);
  LaurentQ expect;
  for (int e = 0; e <= 6; e += 2) expect.add_term(e, Rat(1));
  const bool single_ok = single == expect;
  o.pass = agree == pairs && single_ok;
  o.detail = std::to_string(agree) + "/" + std::to_string(pairs) + " (nu,nu') pairs match both oracles at D=8; " +
             "graded_dim((i),(i),6) = " + single.to_string();
  return o;
}

Outcome convolution_law() {
  Outcome o;
  const KLRParams p = klr_params_from_arrows({{0, 1}, {0, 0}});
  std::vector<FDModule> mods{one_dim_module(p, {0}), one_dim_module(p, {1}), one_dim_module(p, {0, 1}),
                             one_dim_module(p, {1, 0})};
  mods.push_back(convolution(mods[0], mods[1]));
  mods.push_back(convolution(mods[0], mods[0]));
  mods.push_back(grade_shift(mods[4], 1));
  mods.push_back(convolution(mods[2], mods[0]));
  int pairs = 0, ok = 0;
  for (const auto& a : mods)
    for (const auto& b : mods) {
      if (a.n + b.n > 4) continue;
      ++pairs;
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(a.n + b.n), static_cast<unsigned long>(a.n));
      const FDModule c = convolution(a, b);
      ok += c.dim() == static_cast<int>(binom.get_si()) * a.dim() * b.dim();
    }
  o.pass = ok == pairs;
  o.detail = std::to_string(ok) + "/" + std::to_string(pairs) + " pairs with n1+n2<=4 satisfy dim = C(n1+n2,n1) dim M1 dim M2";
  return o;
}

Outcome bimodule() {
  Outcome o;
  const SWDContext c = make_context({{1, nq(0)}, {1, nq(2)}}, 2);
  const BimoduleReport r = verify_bimodule(c, 2, 4);
  o.pass = r.ok() && r.checked > 0;
  o.detail = "A_2, n=2, degree cap 4: " + std::to_string(r.checked) + " commutators, " + std::to_string(r.failures.size()) +
             " nonzero";
  for (std::size_t i = 0; i < std::min<std::size_t>(r.failures.size(), 3); ++i) o.info.push_back(r.failures[i]);
  return o;
}

Outcome conv_tensor() {
  Outcome o;
  o.pass = true;
  struct Case {
    std::string name;
    SWDContext c;
  };
  std::vector<Case> cases{{"A_2", make_context({{1, nq(0)}, {1, nq(2)}}, 2)},
                          {"non-adjacent", make_context({{1, nq(0)}, {1, nq(4)}}, 2)}};
  std::string s;
  for (const auto& [name, c] : cases) {
    const FDModule L0 = one_dim_module(c.params, {0}), L1 = one_dim_module(c.params, {1});
    const FunctorOutput F01 = functor_apply(c, convolution(L0, L1));
    const FinModule<Qq> T = tensor(functor_apply(c, L0).module, functor_apply(c, L1).module);
    const ModuleComparison cmp = compare_modules(F01.module, T);
    const bool witness_ok = cmp.isomorphic && rank(cmp.witness) == T.dim() && is_homomorphism(cmp.witness, F01.module, T);
    o.pass = o.pass && witness_ok;
    s += (s.empty() ? "" : "; ") + name + " (" + classify(c.params).tag() + "): " +
         (witness_ok ? "isomorphism of dim " + std::to_string(T.dim()) : "not isomorphic: " + cmp.invariant);
  }
  o.detail = s;
  return o;
}

Outcome exactness() {
  Outcome o;
  const SWDContext c = make_context({{1, nq(0)}, {1, nq(2)}}, 2);
  const SESWitness w = build_ses_adjacent(c.params, 0, 1);
  const SESReport in = verify_ses(w);
  const ExactnessReport r = verify_exactness(c, w);
  o.pass = in.ok() && r.ok() && r.in_hypothesis;
  o.detail = "type " + r.quiver_type + (r.in_hypothesis ? " (ADE)" : " (not ADE)") + ", dims " + std::to_string(r.dim_sub) +
             "+" + std::to_string(r.dim_quo) + "=" + std::to_string(r.dim_mid) + ", ranks " + std::to_string(r.rank_inj) +
             "," + std::to_string(r.rank_surj) + ", composite " + (r.composite_zero ? "zero" : "nonzero");
  return o;
}

Outcome random_quivers() {
  Outcome o;
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> size(1, 6), kd(1, 3), md(-6, 6);
  int bad = 0, arrows = 0;
  for (int t = 0; t < 200; ++t) {
    std::vector<SpectralIndex> I;
    const int want = size(rng);
    while (static_cast<int>(I.size()) < want) {
      SpectralIndex s{kd(rng), nq(md(rng))};
      if (std::find(I.begin(), I.end(), s) == I.end()) I.push_back(s);
    }
    const Quiver Q = build_quiver(I, 4);
    for (const auto& row : Q.d)
      for (int v : row) arrows += v;
    if (Q.has_loop() || Q.has_two_cycle()) ++bad;
  }
  o.pass = bad == 0;
  o.detail = "200 index sets (N=4, k<=3, |m|<=6): " + std::to_string(bad) + " with loops or 2-cycles, " +
             std::to_string(arrows) + " arrows in total";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  int only = 0;
  for (int a = 1; a < argc; ++a) {
    if (!std::strcmp(argv[a], "--strict"))
      strict = true;
    else if (!std::strcmp(argv[a], "--only") && a + 1 < argc)
      only = std::atoi(argv[++a]);
    else {
      std::cerr << "usage: acceptance [--strict] [--only k]\n";
      return 2;
    }
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> suite{
      {"denominator table", denominators},
      {"spectral vs solver", cross_validation},
      {"unitarity and Yang-Baxter", unitarity_ybe},
      {"KLR relations", klr_relations},
      {"graded dimensions", graded_dims},
      {"convolution dimension law", convolution_law},
      {"bimodule commutators", bimodule},
      {"convolution to tensor", conv_tensor},
      {"exactness", exactness},
      {"quiver sanity", random_quivers}};
  int hard = 0, known = 0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    if (only && static_cast<int>(i + 1) != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = suite[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.known = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream t;
    t.precision(1);
    t << std::fixed << secs;
    std::cout << "criterion " << (i + 1) << (i + 1 < 10 ? " " : "") << " " << (o.pass ? "PASS" : o.known ? "FAIL (known)" : "FAIL")
              << "  " << suite[i].first << ": " << o.detail << "  [" << t.str() << "s]" << std::endl;
    for (const auto& line : o.info) std::cout << "             info: " << line << "\n";
    if (!o.pass) (o.known ? known : hard)++;
  }
  std::cout << "summary: " << hard << " failing, " << known << " known failing" << (strict ? " (strict)" : "") << "\n";
  return hard > 0 || (strict && known > 0) ? 1 : 0;
}
