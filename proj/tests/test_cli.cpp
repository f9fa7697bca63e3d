#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "semind/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "semind");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = semind::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("semind-test-" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double field(const std::string& text, const std::string& key) {
  const std::regex re(key + "=([-+0-9.eE]+)");
  std::smatch m;
  REQUIRE(std::regex_search(text, m, re));
  return std::stod(m[1]);
}

int exit_status(const std::string& args) {
  const std::string cmd = std::string(SEMIND_EXE) + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST_CASE("count") {
  const fs::path cache = scratch("count");
  Result r = run({"--cache", cache, "count", "--pattern", "ap4", "--host", "3 RRR"});
  CHECK(r.code == 0);
  CHECK(r.out.find("count=0") != std::string::npos);

  r = run({"--cache", cache, "count", "--pattern", "ap4", "--construct", "circulant:0.6667", "--n", "600"});
  CHECK(r.code == 0);
  CHECK(std::abs(field(r.out, "rho") / (4.0 / 27) - 1) < 0.02);

  r = run({"--cache", cache, "count", "--pattern", "peenn", "--construct", "clique_iso:0.8", "--n", "1000"});
  CHECK(r.code == 0);
  CHECK(std::abs(field(r.out, "rho") / 0.1024 - 1) < 0.01);

  CHECK(run({"--cache", cache, "count", "--pattern", "c7", "--host", "3 RRR"}).code == 2);
  CHECK(run({"--cache", cache, "count", "--pattern", "ap4", "--host", "3 RRX"}).code == 2);
  CHECK(run({"--cache", cache, "count", "--pattern", "ap4"}).code == 2);
  CHECK(run({"--cache", cache, "count", "--pattern", "ap4", "--construct", "circulant:2/3"}).code == 2);

  r = run({"--cache", cache, "count", "--host", "6 RRRRRBBBBBRRRRR", "--profile", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("class_code,count") != std::string::npos);
}

TEST_CASE("verify") {
  const fs::path cache = scratch("verify");
  Result r = run({"--cache", cache, "verify", "ap4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict=PASS") != std::string::npos);
  REQUIRE(fs::exists(cache / "reports"));
  CHECK(std::distance(fs::directory_iterator(cache / "reports"), fs::directory_iterator{}) == 1);

  r = run({"--cache", cache, "verify", "peenn", "--B", "sqrt2-1", "--C", "sqrt2-1", "--interval", "0.7071,0.8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("note: lower end") != std::string::npos);
  CHECK(run({"--cache", cache, "verify", "peenn", "--interval", "[7071/10000,4/5]"}).code == 1);
  CHECK(run({"--cache", cache, "verify", "peenn", "--regime", "2"}).code == 0);
  CHECK(run({"--cache", cache, "verify", "peenn", "--C", "-0.1"}).code == 1);
  CHECK(run({"--cache", cache, "verify", "ap4", "--alpha-interval", "0.6,0.6"}).code == 1);
  CHECK(run({"--cache", cache, "verify", "stability"}).code == 0);
  CHECK(run({"--cache", cache, "verify", "sdp"}).code == 2);
  CHECK(run({"--cache", cache, "verify", "peenn", "--regime", "3"}).code == 2);
  CHECK(run({"--cache", cache, "verify", "peenn", "--interval", "0.9,0.8"}).code != 0);
  CHECK(std::distance(fs::directory_iterator(cache / "reports"), fs::directory_iterator{}) >= 6);
}

TEST_CASE("figures are deterministic") {
  const fs::path a = scratch("fig-a"), b = scratch("fig-b");
  for (int id : {4, 5, 6, 7}) {
    REQUIRE(run({"figure", std::to_string(id), "--out", a}).code == 0);
    REQUIRE(run({"figure", std::to_string(id), "--out", b}).code == 0);
    const std::string base = "figure" + std::to_string(id);
    CHECK(slurp(a / (base + ".csv")) == slurp(b / (base + ".csv")));
    CHECK(slurp(a / (base + ".svg")) == slurp(b / (base + ".svg")));
    CHECK(slurp(a / (base + ".csv")).rfind("beta,value,curve,flag\n", 0) == 0);
    CHECK(slurp(a / (base + ".svg")).find("<svg") == 0);
  }
  const std::string fig4 = slurp(a / "figure4.csv");
  CHECK(fig4.find("0.4,0.0856660078") != std::string::npos);
  const std::string fig5 = slurp(a / "figure5.csv");
  CHECK(fig5.find("0.5625,0.10546875,max,marker") != std::string::npos);
  CHECK(run({"figure", "3", "--out", a}).code == 2);
}

TEST_CASE("profile and configuration") {
  const fs::path dir = scratch("profile");
  const Result p1 = run({"--cache", dir, "profile", "--curve", "ap4", "--curve", "ell:2,1"});
  const Result p2 = run({"--cache", dir, "profile", "--curve", "ap4", "--curve", "ell:2,1"});
  CHECK(p1.code == 0);
  CHECK(p1.out == p2.out);
  CHECK(p1.out.find("0.666000,") != std::string::npos);
  CHECK(run({"--step", "0.25", "profile", "--curve", "ap4"}).code == 2);
  CHECK(run({"profile", "--curve", "bogus"}).code == 2);

  {
    std::ofstream cfg(dir / "semind.conf");
    cfg << "# test config\nbeta_step = 0.05\nseed = 3\n";
  }
  auto rows = [](const std::string& csv) { return std::count(csv.begin(), csv.end(), '\n') - 1; };
  Result r = run({"--config", dir / "semind.conf", "profile", "--curve", "ap4"});
  CHECK(r.code == 0);
  CHECK(rows(r.out) == 21);
  r = run({"--config", dir / "semind.conf", "--step", "0.1", "profile", "--curve", "ap4"});
  CHECK(rows(r.out) == 11);

  {
    std::ofstream cfg(dir / "bad.conf");
    cfg << "colour = red\n";
  }
  CHECK(run({"--config", dir / "bad.conf", "profile", "--curve", "ap4"}).code == 2);
  CHECK(run({"--config", dir / "missing.conf", "profile", "--curve", "ap4"}).code == 2);

  semind::RunConfig cfg;
  semind::apply_config_text(cfg, "threads=4\ntolerance=1e-9\ncache_dir=/tmp/x\n");
  CHECK(cfg.threads == 4);
  CHECK(cfg.tolerance == doctest::Approx(1e-9));
  CHECK(cfg.cache_dir == "/tmp/x");
  cfg.beta_step = 0;
  CHECK_THROWS_AS(semind::validate(cfg), semind::ConfigError);
}

TEST_CASE("enumerate and the basis cache") {
  const fs::path cache = scratch("enum");
  Result r = run({"--cache", cache, "enumerate", "--k", "5"});
  CHECK(r.code == 0);
  const fs::path file = cache / "basis-k5.txt";
  REQUIRE(fs::exists(file));
  CHECK(slurp(file).rfind("# semind-basis k=5 count=34\n", 0) == 0);
  const Result again = run({"--cache", cache, "enumerate", "--k", "5"});
  CHECK(again.out == r.out);
  CHECK(run({"--cache", cache, "enumerate", "--k", "8"}).code == 2);

  const fs::path env_cache = scratch("env");
  ::setenv(semind::kCacheEnv, env_cache.c_str(), 1);
  CHECK(run({"enumerate", "--k", "3"}).code == 0);
  CHECK(fs::exists(env_cache / "basis-k3.txt"));
  CHECK(run({"--cache", cache, "enumerate", "--k", "4"}).code == 0);
  CHECK(fs::exists(cache / "basis-k4.txt"));
  CHECK_FALSE(fs::exists(env_cache / "basis-k4.txt"));
  ::unsetenv(semind::kCacheEnv);
}

TEST_CASE("search and oracle") {
  const fs::path cache = scratch("search");
  Result r = run({"--cache", cache, "search", "--pattern", "ap4", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("best=") != std::string::npos);
  r = run({"--cache", cache, "search", "--pattern", "ap4", "--n", "5", "--profile"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("m,best,rho\n", 0) == 0);
  CHECK(run({"--cache", cache, "search", "--pattern", "ap4", "--n", "9", "--method", "exact"}).code == 2);

  const Result h1 = run({"--cache", cache, "--seed", "5", "search", "--pattern", "ac4", "--n", "24", "--method", "hill",
                         "--beta", "0.4", "--restarts", "2"});
  const Result h2 = run({"--cache", cache, "--seed", "5", "search", "--pattern", "ac4", "--n", "24", "--method", "hill",
                         "--beta", "0.4", "--restarts", "2"});
  CHECK(h1.code == 0);
  CHECK(h1.out == h2.out);

  CHECK(run({"--cache", cache, "oracle", "--pattern", "ac4", "--n", "5"}).code == 0);
  CHECK(run({"--cache", cache, "oracle", "--pattern", "ac4", "--n", "7"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count", "--bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("exit codes of the installed executable") {
  const fs::path cache = scratch("exe");
  const std::string c = "--cache " + cache.string() + " ";
  CHECK(exit_status(c + "verify ap4") == 0);
  CHECK(exit_status(c + "verify peenn --regime 1") == 0);
  CHECK(exit_status(c + "verify peenn --C -0.1") == 1);
  CHECK(exit_status(c + "figure 3 --out " + cache.string()) == 2);
  CHECK(exit_status(c + "count --pattern nope --host '3 RRR'") == 2);
}
