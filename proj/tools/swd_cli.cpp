// swd_cli: batch front end for denominators, quivers, KLR checks and the duality functor.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swd/functor/functor.hpp"
#include "swd/io/cache.hpp"
#include "swd/io/config.hpp"
#include "swd/io/modfile.hpp"
#include "swd/klr/graded_dim.hpp"
#include "swd/klr/relations.hpp"

using namespace swd;

namespace {

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<Table> tables;
  std::vector<std::string> failures;

  Table& table(const std::string& name, std::vector<std::string> cols) {
    tables.push_back({name, std::move(cols), {}});
    return tables.back();
  }

  void emit(std::ostream& o, const std::string& format) const {
    if (format == "json") {
      nlohmann::ordered_json j;
      j["metadata"] = nlohmann::ordered_json::object();
      for (const auto& [k, v] : meta) j["metadata"][k] = v;
      j["tables"] = nlohmann::ordered_json::object();
      for (const auto& t : tables) {
        auto& jt = j["tables"][t.name];
        jt["columns"] = t.columns;
        jt["rows"] = t.rows;
      }
      j["failures"] = failures;
      j["status"] = failures.empty() ? "ok" : "failed";
      o << j.dump(2) << "\n";
      return;
    }
    o << "# swd run-report\n";
    for (const auto& [k, v] : meta) o << "# " << k << "\t" << v << "\n";
    for (const auto& t : tables) {
      o << "\n## " << t.name << "\n";
      for (std::size_t c = 0; c < t.columns.size(); ++c) o << (c ? "\t" : "") << t.columns[c];
      o << "\n";
      for (const auto& r : t.rows) {
        for (std::size_t c = 0; c < r.size(); ++c) o << (c ? "\t" : "") << r[c];
        o << "\n";
      }
    }
    o << "\n# status\t" << (failures.empty() ? "ok" : "failed") << "\n";
    for (const auto& f : failures) o << "# failure\t" << f << "\n";
  }
};

struct Options {
  int N = 0;
  int max_k = 0;
  int n = 0;
  int degree_cap = 0;
  std::string config;
  std::vector<std::string> modules;
  std::vector<std::string> checks;
  std::string format;
  std::string cache_dir = ".swd-cache";
  bool no_cache = false;
};

std::string seq_csv(const Seq& s) {
  std::string r;
  for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
  return r;
}

std::string weight_table_string(const std::map<WeightVec, int>& ch) {
  std::string s;
  for (const auto& [w, m] : ch) s += (s.empty() ? "" : " ") + std::to_string(m) + "x" + weight_string(w);
  return s.empty() ? "0" : s;
}

class Runner {
 public:
  explicit Runner(Options o)
      : opt_(std::move(o)),
        cache_(opt_.cache_dir, !opt_.no_cache, [](const std::string& w) { std::cerr << "warning: " << w << "\n"; }) {
    if (!opt_.config.empty()) cfg_ = load_config(opt_.config);
    if (cfg_) {
      if (opt_.N == 0) opt_.N = cfg_->N;
      if (opt_.max_k == 0) opt_.max_k = cfg_->max_k;
      if (opt_.n == 0) opt_.n = cfg_->n;
      if (opt_.degree_cap == 0) opt_.degree_cap = cfg_->degree_cap;
      if (opt_.modules.empty()) opt_.modules = cfg_->modules;
      if (opt_.checks.empty()) opt_.checks = cfg_->checks;
      if (opt_.format.empty()) opt_.format = cfg_->format;
    }
    if (opt_.format.empty()) opt_.format = "tsv";
    if (opt_.format != "tsv" && opt_.format != "json") throw std::invalid_argument("--format must be tsv or json");
  }

  DenominatorPoly den(int k, int l, int N) {
    const std::string key = ResultCache::key("denominator", std::to_string(k) + " " + std::to_string(l) + " " + std::to_string(N));
    const std::string text = cache_.fetch(key, [&] { return solver_denominator(k, l, N).poly.to_string("z") + "\n"; });
    try {
      return factor_denominator(parse_qqz(text.substr(0, text.find('\n'))).num(), 2 * N + 2);
    } catch (const std::exception&) {
      std::cerr << "warning: cached denominator for (" << k << "," << l << "," << N << ") unreadable; recomputing\n";
      DenominatorPoly d = solver_denominator(k, l, N);
      cache_.put(key, d.poly.to_string("z") + "\n");
      return d;
    }
  }

  SWDContext context() {
    if (!cfg_) throw std::invalid_argument("this subcommand needs --config with index entries");
    if (cfg_->index.empty()) throw std::invalid_argument(cfg_->source + ": no index entries");
    if (opt_.N < 2) throw std::invalid_argument("N must be given (config or --N)");
    return make_context(cfg_->index, opt_.N, [this](int k, int l, int N) { return den(k, l, N); });
  }

  void metadata(Report& r, const std::string& command, std::vector<std::pair<std::string, std::string>> caps) {
    r.meta.emplace_back("command", command);
    r.meta.emplace_back("code-version", kCodeVersion);
    r.meta.emplace_back("coproduct", "Delta(e_i) = e_i (x) 1 + K_i (x) e_i; Delta(f_i) = f_i (x) K_i^{-1} + 1 (x) f_i");
    r.meta.emplace_back("z-orientation", std::string("R_{k,l}(z) on V_k(1) (x) V_l(z), z = z2/z1; ") + kZOrientation);
    if (cfg_) r.meta.emplace_back("config", cfg_->source);
    for (auto& c : caps) r.meta.push_back(std::move(c));
  }

  void finish(Report& r) {
    r.meta.emplace_back("cache", cache_.enabled() ? opt_.cache_dir : "disabled");
    r.meta.emplace_back("cache-hits", std::to_string(cache_.hits()));
    r.meta.emplace_back("cache-misses", std::to_string(cache_.misses()));
    if (cache_.corrupt() > 0) r.meta.emplace_back("cache-corrupt", std::to_string(cache_.corrupt()));
  }

  Report denominators() {
    Report r;
    if (opt_.N < 2) throw std::invalid_argument("denominators needs --N >= 2");
    const int kmax = std::min(opt_.max_k > 0 ? opt_.max_k : opt_.N - 1, opt_.N - 1);
    metadata(r, "denominators", {{"N", std::to_string(opt_.N)}, {"max-k", std::to_string(kmax)}});
    auto& t = r.table("denominators", {"k", "l", "N", "denominator", "degree", "min(k,l)-product", "matches"});
    for (int k = 1; k <= kmax; ++k)
      for (int l = 1; l <= kmax; ++l) {
        const DenominatorPoly d = den(k, l, opt_.N);
        const UPoly<Qq> guess = pole_product(k, l, std::min(k, l));
        t.rows.push_back({std::to_string(k), std::to_string(l), std::to_string(opt_.N), d.factored(),
                          std::to_string(d.poly.degree()), factor_denominator(guess, 2 * opt_.N + 2).factored(),
                          guess.monic() == d.poly ? "yes" : "no"});
      }
    finish(r);
    return r;
  }

  Report quiver() {
    Report r;
    SWDContext c = context();
    const QuiverType type = classify(c.params);
    metadata(r, "quiver", {{"N", std::to_string(opt_.N)}});
    auto& v = r.table("vertices", {"vertex", "k", "anchor"});
    for (int i = 0; i < c.quiver.size(); ++i)
      v.rows.push_back({std::to_string(i), std::to_string(c.S(i)), c.X(i).to_string()});
    auto& a = r.table("arrows", {"from", "to", "multiplicity"});
    for (int i = 0; i < c.quiver.size(); ++i)
      for (int j = 0; j < c.quiver.size(); ++j)
        if (c.quiver.d[i][j] > 0) a.rows.push_back({std::to_string(i), std::to_string(j), std::to_string(c.quiver.d[i][j])});
    auto& s = r.table("summary", {"type", "ade", "loops", "two-cycles"});
    s.rows.push_back({type.tag(), type.ade ? "yes" : "no", c.quiver.has_loop() ? "yes" : "no",
                      c.quiver.has_two_cycle() ? "yes" : "no"});
    if (c.quiver.has_loop()) r.failures.push_back("quiver has a loop");
    if (c.quiver.has_two_cycle()) r.failures.push_back("quiver has a 2-cycle");
    finish(r);
    return r;
  }

  Report klr_verify() {
    Report r;
    SWDContext c = context();
    const int n = opt_.n > 0 ? opt_.n : 3, D = opt_.degree_cap > 0 ? opt_.degree_cap : 8;
    metadata(r, "klr-verify", {{"n", std::to_string(n)}, {"degree-cap", std::to_string(D)}});
    auto& t = r.table("klr-relations", {"n", "degree-cap", "checked", "failures"});
    for (int m = 1; m <= n; ++m) {
      const KLRReport rep = verify_klr_relations(c.params, m, D);
      t.rows.push_back({std::to_string(m), std::to_string(D), std::to_string(rep.checked), std::to_string(rep.failures.size())});
      for (const auto& f : rep.failures) r.failures.push_back("n=" + std::to_string(m) + ": " + f);
    }
    finish(r);
    return r;
  }

  Report graded_dims() {
    Report r;
    SWDContext c = context();
    const int n = opt_.n > 0 ? opt_.n : 2, D = opt_.degree_cap > 0 ? opt_.degree_cap : 6;
    metadata(r, "graded-dims", {{"n", std::to_string(n)}, {"degree-cap", std::to_string(D)}});
    auto& t = r.table("graded-dims", {"beta", "source", "target", "graded-dim"});
    const KLRAlgebraSpec spec{c.params, n};
    std::map<std::vector<int>, std::vector<Seq>> blocks;
    for (const auto& nu : spec.sequences()) blocks[block_of(nu, spec.vertices())].push_back(nu);
    for (const auto& [beta, seqs] : blocks)
      for (const auto& nu : seqs)
        for (const auto& mu : seqs)
          t.rows.push_back({seq_csv(beta), seq_csv(nu), seq_csv(mu), graded_dim(spec, nu, mu, D).to_string()});
    finish(r);
    return r;
  }

  Report functor() {
    Report r;
    SWDContext c = context();
    const int n = opt_.n > 0 ? opt_.n : 2, cap = opt_.degree_cap > 0 ? opt_.degree_cap : 3;
    metadata(r, "functor", {{"bimodule-n", std::to_string(n)}, {"bimodule-degree-cap", std::to_string(cap)}});
    std::vector<FDModule> mods;
    for (const auto& path : opt_.modules) {
      FDModule M = load_module(path, c.params);
      if (M.params.d != c.params.d) throw std::invalid_argument(path + ": arrows differ from the configured quiver");
      const KLRReport rep = check_klr_module(M);
      if (!rep.ok()) throw InvariantError(path + ": not a KLR module: " + rep.failures.front());
      mods.push_back(std::move(M));
    }
    auto& im = r.table("images", {"module", "dim", "graded-character", "F-dim", "F-weights"});
    for (std::size_t m = 0; m < mods.size(); ++m) {
      const FunctorOutput F = functor_apply(c, mods[m]);
      im.rows.push_back({std::filesystem::path(opt_.modules[m]).filename().string(), std::to_string(mods[m].dim()),
                         character_string(graded_character(mods[m])), std::to_string(F.dim()),
                         weight_table_string(weight_character(F.module))});
    }
    for (const auto& check : opt_.checks) {
      if (check == "conv-tensor") {
        if (mods.size() < 2) throw std::invalid_argument("conv-tensor needs two modules");
        const FunctorOutput FC = functor_apply(c, convolution(mods[0], mods[1]));
        const FinModule<Qq> T = tensor(functor_apply(c, mods[0]).module, functor_apply(c, mods[1]).module);
        const ModuleComparison cmp = compare_modules(FC.module, T);
        auto& t = r.table("conv-tensor", {"lhs", "rhs", "dim", "hom-dim", "isomorphic", "invariant"});
        t.rows.push_back({"F(M1 o M2)", "F(M1) (x) F(M2)", std::to_string(FC.dim()), std::to_string(cmp.hom_dim),
                          cmp.isomorphic ? "yes" : "no", cmp.invariant.empty() ? "-" : cmp.invariant});
        if (cmp.isomorphic) {
          auto& w = r.table("witness", {"row", "col", "value"});
          for (int i = 0; i < cmp.witness.rows(); ++i)
            for (const auto& [j, v] : cmp.witness.row(i)) w.rows.push_back({std::to_string(i), std::to_string(j), v.to_string()});
        } else {
          r.failures.push_back("conv-tensor: " + cmp.invariant);
        }
      } else if (check == "exactness") {
        auto& t = r.table("exactness", {"family", "quiver-type", "ade", "dims", "ranks", "composite-zero", "exact"});
        std::vector<SESWitness> ses;
        for (int i = 0; i < c.params.size() && ses.empty(); ++i)
          for (int j = 0; j < c.params.size() && ses.empty(); ++j)
            if (i != j && c.params.d[i][j] > 0) ses.push_back(build_ses_adjacent(c.params, i, j));
        if (mods.size() >= 2) ses.push_back(build_ses_split(mods[0], mods[1]));
        if (ses.empty()) throw std::invalid_argument("exactness: no edge in the quiver and fewer than two modules");
        for (const auto& w : ses) {
          const SESReport sr = verify_ses(w);
          if (!sr.ok()) throw InvariantError("exactness: input sequence of KLR modules is not exact");
          const ExactnessReport e = verify_exactness(c, w);
          t.rows.push_back({w.family, e.quiver_type, e.in_hypothesis ? "yes" : "no",
                            std::to_string(e.dim_sub) + "," + std::to_string(e.dim_mid) + "," + std::to_string(e.dim_quo),
                            std::to_string(e.rank_inj) + "," + std::to_string(e.rank_surj), e.composite_zero ? "yes" : "no",
                            e.ok() ? "yes" : "no"});
          if (e.in_hypothesis && !e.ok()) r.failures.push_back("exactness fails for the " + w.family + " sequence");
        }
      } else if (check == "bimodule") {
        const BimoduleReport b = verify_bimodule(c, n, cap);
        auto& t = r.table("bimodule", {"n", "degree-cap", "checked", "failures"});
        t.rows.push_back({std::to_string(n), std::to_string(cap), std::to_string(b.checked), std::to_string(b.failures.size())});
        for (const auto& f : b.failures) r.failures.push_back("bimodule: " + f);
      } else {
        throw std::invalid_argument("unknown check '" + check + "'");
      }
    }
    finish(r);
    return r;
  }

  const std::string& format() const { return opt_.format; }

 private:
  Options opt_;
  ResultCache cache_;
  std::optional<JobConfig> cfg_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur-Weyl duality toolkit: R-matrix denominators, quivers, KLR algebras and the duality functor"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--N", opt.N, "rank parameter N of U'_q(A_{N-1}^(1))");
  app.add_option("--max-k", opt.max_k, "largest fundamental index k");
  app.add_option("--n", opt.n, "number of strands / KLR degree");
  app.add_option("--config", opt.config, "job config file (# swd-config v1)")->check(CLI::ExistingFile);
  app.add_option("--module", opt.modules, "KLR module file (klr-module v1); repeatable")->check(CLI::ExistingFile);
  app.add_option("--degree-cap", opt.degree_cap, "degree cap D")->check(CLI::PositiveNumber);
  app.add_option("--check", opt.checks, "functor checks: conv-tensor, exactness, bimodule");
  app.add_option("--format", opt.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--cache-dir", opt.cache_dir, "directory for cached denominators");
  app.add_flag("--no-cache", opt.no_cache, "disable the on-disk cache");
  auto* den = app.add_subcommand("denominators", "denominators d_{k,l}(z) for 1 <= k,l <= max-k");
  auto* quiv = app.add_subcommand("quiver", "quiver of an index set");
  auto* klr = app.add_subcommand("klr-verify", "defining relations in the polynomial representation");
  auto* gd = app.add_subcommand("graded-dims", "graded dimensions of e(nu') R(beta) e(nu)");
  auto* fun = app.add_subcommand("functor", "images of KLR modules under the duality functor");
  CLI11_PARSE(app, argc, argv);
  try {
    Runner run(opt);
    Report r = den->parsed()    ? run.denominators()
               : quiv->parsed() ? run.quiver()
               : klr->parsed()  ? run.klr_verify()
               : gd->parsed()   ? run.graded_dims()
               : fun->parsed()  ? run.functor()
                                : Report{};
    r.emit(std::cout, run.format());
    return r.failures.empty() ? 0 : 3;
  } catch (const ConfigError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
