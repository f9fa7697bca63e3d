#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "semind/cli.hpp"

namespace semind {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  std::istringstream is(value);
  T v{};
  is >> v;
  if (is.fail() || !is.eof()) throw ConfigError("config: bad value for " + key + ": '" + value + "'");
  return v;
}

}  // namespace

RunConfig default_config() {
  RunConfig cfg;
  if (const char* env = std::getenv(kCacheEnv); env && *env)
    cfg.cache_dir = env;
  else
    cfg.cache_dir = ".semind-cache";
  return cfg;
}

void apply_config_text(RunConfig& cfg, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "cache_dir")
      cfg.cache_dir = value;
    else if (key == "beta_step")
      cfg.beta_step = parse_number<double>(key, value);
    else if (key == "tolerance")
      cfg.tolerance = parse_number<double>(key, value);
    else if (key == "threads")
      cfg.threads = parse_number<int>(key, value);
    else if (key == "seed")
      cfg.seed = parse_number<std::uint64_t>(key, value);
    else
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  apply_config_text(cfg, ss.str());
}

void validate(const RunConfig& cfg) {
  if (!(cfg.beta_step > 0 && cfg.beta_step <= 0.1)) throw ConfigError("beta_step must lie in (0, 0.1]");
  if (!(cfg.tolerance > 0)) throw ConfigError("tolerance must be positive");
  if (cfg.threads < 1) throw ConfigError("threads must be at least 1");
  if (cfg.cache_dir.empty()) throw ConfigError("cache_dir is empty");
}

std::filesystem::path archive_report(const RunConfig& cfg, const std::string& cmd, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path dir = cfg.cache_dir / "reports";
  fs::create_directories(dir);
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y%m%dT%H%M%SZ", &tm);
  fs::path path = dir / (std::string(stamp) + "-" + cmd + ".txt");
  for (int i = 1; fs::exists(path); ++i) path = dir / (std::string(stamp) + "-" + cmd + "-" + std::to_string(i) + ".txt");
  std::ofstream out(path);
  out << text;
  if (!out) throw std::runtime_error("cannot write report " + path.string());
  return path;
}

}  // namespace semind
