#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "swd/functor/functor.hpp"
#include "swd/io/cache.hpp"
#include "swd/io/config.hpp"
#include "swd/io/modfile.hpp"

using namespace swd;
namespace fs = std::filesystem;

namespace {
QMonomial nq(int m) { return QMonomial::neg_q_pow(m); }

const SWDContext& a2() {
  static const SWDContext c = make_context({{1, nq(0)}, {1, nq(2)}}, 2);
  return c;
}
const SWDContext& apart() {
  static const SWDContext c = make_context({{1, nq(0)}, {1, nq(4)}}, 2);
  return c;
}

FDModule bare(const SWDContext& c, const Seq& nu) {
  FDModule M = empty_module(c.params, static_cast<int>(nu.size()), 1);
  M.idem = {nu};
  M.degree = {0};
  M.labels = {"m"};
  return M;
}

fs::path scratch(const std::string& tag) {
  fs::path p = fs::temp_directory_path() / ("swd_test_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& args, const fs::path& out) {
  const std::string cmd = std::string(SWD_CLI_PATH) + " " + args + " > " + out.string() + " 2> " + out.string() + ".err";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}
}  // namespace

TEST(TauSlice, EqualColorsAtZeroIsFiniteDerivative) {
  const Matrix<Qq> T = tau_on_slice(a2(), {0, 0}, 0, bare(a2(), {0, 0}));
  ASSERT_EQ(T.rows(), 4);
  EXPECT_EQ(rank(T), 1);
  const auto s = sl_decompose(1, 1, 2);
  for (const auto& x : s)
    if (x.dim() == 3) EXPECT_TRUE((T * x.projector).is_zero());
}

TEST(TauSlice, NoArrowIsInvertibleSwap) {
  const Matrix<Qq> T = tau_on_slice(apart(), {0, 1}, 0, bare(apart(), {0, 1}));
  EXPECT_EQ(rank(T), 4);
}

TEST(TauSlice, ArrowCancelledByPFactor) {
  EXPECT_NO_THROW(tau_on_slice(a2(), {0, 1}, 0, bare(a2(), {0, 1})));
  EXPECT_NO_THROW(tau_on_slice(a2(), {1, 0}, 0, bare(a2(), {1, 0})));
}

TEST(Functor, OneStrandGivesEvaluationModule) {
  const SWDContext c = make_context({{1, nq(0)}, {2, nq(3)}}, 3);
  for (int i = 0; i < 2; ++i) {
    const FunctorOutput F = functor_apply(c, one_dim_module(c.params, {i}));
    const FinModule<Qq> V = twist(fundamental_module(3, c.S(i)), c.X(i).value());
    EXPECT_EQ(F.dim(), V.dim());
    EXPECT_TRUE(compare_modules(F.module, V).isomorphic);
    EXPECT_TRUE(check_defining_relations(F.module).ok());
  }
}

TEST(Functor, ConvolutionToTensor) {
  for (const SWDContext* c : {&a2(), &apart()}) {
    const FDModule L0 = one_dim_module(c->params, {0}), L1 = one_dim_module(c->params, {1});
    const FunctorOutput F = functor_apply(*c, convolution(L0, L1));
    const FinModule<Qq> T = tensor(functor_apply(*c, L0).module, functor_apply(*c, L1).module);
    const ModuleComparison cmp = compare_modules(F.module, T);
    ASSERT_TRUE(cmp.isomorphic) << cmp.invariant;
    EXPECT_TRUE(is_homomorphism(cmp.witness, F.module, T));
    EXPECT_EQ(rank(cmp.witness), T.dim());
  }
}

TEST(Functor, ReversedTensorIsDistinguished) {
  const FDModule L0 = one_dim_module(a2().params, {0}), L1 = one_dim_module(a2().params, {1});
  const FunctorOutput F = functor_apply(a2(), convolution(L0, L1));
  const FinModule<Qq> T = tensor(functor_apply(a2(), L1).module, functor_apply(a2(), L0).module);
  const ModuleComparison cmp = compare_modules(F.module, T);
  EXPECT_FALSE(cmp.isomorphic);
  EXPECT_FALSE(cmp.invariant.empty());
}

TEST(Functor, GradeShiftInvisible) {
  const FDModule M = convolution(one_dim_module(a2().params, {0}), one_dim_module(a2().params, {1}));
  EXPECT_TRUE(compare_modules(functor_apply(a2(), M).module, functor_apply(a2(), grade_shift(M, 3)).module).isomorphic);
}

TEST(Functor, SimpleQuotientsOfAdjacentPair) {
  EXPECT_EQ(functor_apply(a2(), one_dim_module(a2().params, {0, 1})).dim(), 1);
  EXPECT_EQ(functor_apply(a2(), one_dim_module(a2().params, {1, 0})).dim(), 3);
}

TEST(Bimodule, CommutatorsVanishForA2) {
  const BimoduleReport r = verify_bimodule(a2(), 2, 3);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_GT(r.checked, 0);
}

TEST(Exactness, AdjacentAndSplit) {
  const ExactnessReport r = verify_exactness(a2(), build_ses_adjacent(a2().params, 0, 1));
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.in_hypothesis);
  EXPECT_EQ(r.dim_mid, r.dim_sub + r.dim_quo);
  const FDModule L0 = one_dim_module(a2().params, {0}), L1 = one_dim_module(a2().params, {1});
  EXPECT_TRUE(verify_exactness(a2(), build_ses_split(L0, L1)).ok());
}

TEST(Compare, SelfAndDistinctAnchors) {
  const FinModule<Qq> V = fundamental_module(2, 1);
  const ModuleComparison self = compare_modules(V, V);
  EXPECT_TRUE(self.isomorphic);
  EXPECT_EQ(self.witness, Matrix<Qq>::identity(2));
  const ModuleComparison other = compare_modules(V, twist(V, nq(2).value()));
  EXPECT_FALSE(other.isomorphic);
  EXPECT_EQ(other.invariant, "hom space is zero");
}

TEST(Config, ParsesSample) {
  const JobConfig cfg = load_config(std::string(SWD_SAMPLES) + "/a2.cfg");
  EXPECT_EQ(cfg.N, 2);
  ASSERT_EQ(cfg.index.size(), 2u);
  EXPECT_EQ(cfg.index[1].X, nq(2));
  EXPECT_EQ(cfg.modules.size(), 2u);
  EXPECT_TRUE(fs::exists(cfg.modules[0]));
  EXPECT_EQ(cfg.checks, (std::vector<std::string>{"conv-tensor", "exactness"}));
}

TEST(Config, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_config(in, "t.cfg");
    } catch (const ConfigError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("N 2\n"), 1);
  EXPECT_EQ(line_of("# swd-config v1\nN 2\n\nindex 1 x\n"), 4);
  EXPECT_EQ(line_of("# swd-config v1\nN 2\nindex 1 0\nindex 1 0\n"), 4);
  EXPECT_EQ(line_of("# swd-config v1\ndegree-cap 0\n"), 2);
  EXPECT_EQ(line_of("# swd-config v1\nmodule nowhere.mod\n"), 2);
  EXPECT_EQ(line_of("# swd-config v1\nN 3\nindex 1 0 2/3\n"), 0);
}

TEST(ModuleFile, RoundTrip) {
  const FDModule M = convolution(one_dim_module(a2().params, {0}), one_dim_module(a2().params, {1}));
  const std::string text = write_module(M);
  std::istringstream in(text);
  const FDModule back = parse_module(in);
  EXPECT_EQ(back.idem, M.idem);
  EXPECT_EQ(back.degree, M.degree);
  EXPECT_EQ(back.X, M.X);
  EXPECT_EQ(back.T, M.T);
  EXPECT_EQ(write_module(back), text);
}

TEST(ModuleFile, ErrorsCarryLineNumbers) {
  std::istringstream in("klr-module v1\nn 1\nbasis 1\n0 0\nx 1 0 0 q^\n");
  try {
    parse_module(in, "m.mod", a2().params);
    FAIL() << "expected a parse error";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 5);
  }
}

TEST(Cache, StoresDetectsCorruptionAndWritesAtomically) {
  const fs::path dir = scratch("cache");
  std::vector<std::string> warnings;
  ResultCache c(dir, true, [&](const std::string& w) { warnings.push_back(w); });
  const std::string k = ResultCache::key("denominator", "1 1 2");
  EXPECT_NE(k, ResultCache::key("denominator", "1 1 3"));
  int calls = 0;
  auto compute = [&] {
    ++calls;
    return std::string("z + 1\n");
  };
  EXPECT_EQ(c.fetch(k, compute), "z + 1\n");
  EXPECT_EQ(c.fetch(k, compute), "z + 1\n");
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(c.hits(), 1);
  for (const auto& e : fs::directory_iterator(dir)) EXPECT_EQ(e.path().extension(), ".cache");
  std::ofstream(dir / (k + ".cache"), std::ios::app) << "tampered";
  EXPECT_EQ(c.fetch(k, compute), "z + 1\n");
  EXPECT_EQ(calls, 2);
  EXPECT_EQ(warnings.size(), 1u);
  EXPECT_EQ(c.fetch(k, compute), "z + 1\n");
  EXPECT_EQ(calls, 2);
  fs::remove_all(dir);
}

TEST(Cli, DenominatorsDeterministicWithMetadata) {
  const fs::path dir = scratch("cli");
  ASSERT_EQ(run_cli("denominators --N 3 --max-k 2 --no-cache", dir / "a"), 0);
  ASSERT_EQ(run_cli("denominators --N 3 --max-k 2 --no-cache", dir / "b"), 0);
  const std::string a = slurp(dir / "a");
  EXPECT_EQ(a, slurp(dir / "b"));
  for (const char* key : {"# coproduct", "# z-orientation", "# max-k", "# cache-hits"})
    EXPECT_NE(a.find(key), std::string::npos) << key;
  EXPECT_NE(a.find("2\t2\t3\t(z - (-q)^2)"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, WarmCacheGivesSameTables) {
  const fs::path dir = scratch("warm");
  const std::string args = "denominators --N 3 --max-k 2 --cache-dir " + (dir / "cache").string();
  ASSERT_EQ(run_cli(args, dir / "cold"), 0);
  ASSERT_EQ(run_cli(args, dir / "warm"), 0);
  auto tables = [](const std::string& s) { return s.substr(s.find("## ")); };
  EXPECT_EQ(tables(slurp(dir / "cold")), tables(slurp(dir / "warm")));
  EXPECT_NE(slurp(dir / "warm").find("# cache-hits\t4"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, FunctorConvTensorReport) {
  const fs::path dir = scratch("fun");
  ASSERT_EQ(run_cli("functor --config " + std::string(SWD_SAMPLES) + "/a2.cfg --no-cache --format json", dir / "o"), 0);
  const std::string out = slurp(dir / "o");
  EXPECT_NE(out.find("\"witness\""), std::string::npos);
  EXPECT_NE(out.find("\"status\": \"ok\""), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, ParseErrorExitCode) {
  const fs::path dir = scratch("bad");
  EXPECT_EQ(run_cli("quiver --no-cache --config " + std::string(SWD_SAMPLES) + "/bad.cfg", dir / "o"), 2);
  EXPECT_NE(slurp(dir / "o.err").find("bad.cfg:4:"), std::string::npos);
  fs::remove_all(dir);
}
