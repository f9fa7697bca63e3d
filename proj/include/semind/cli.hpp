#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semind {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::filesystem::path cache_dir;
  double beta_step = 0.001;
  /// Residual tolerance for reported curve crossovers.
  double tolerance = 1e-10;
  int threads = 1;
  std::uint64_t seed = 1;
};

/// Environment variable naming the cache directory.
inline constexpr const char* kCacheEnv = "SEMIND_CACHE";

/// Defaults, with the cache directory taken from SEMIND_CACHE when set.
RunConfig default_config();
/// key=value lines; '#' starts a comment. Keys: cache_dir, beta_step,
/// tolerance, threads, seed.
void apply_config_text(RunConfig& cfg, std::string_view text);
void apply_config_file(RunConfig& cfg, const std::filesystem::path& path);
/// Throws ConfigError unless step is in (0, 0.1], tolerance > 0, threads >= 1.
void validate(const RunConfig& cfg);

/// Writes <cache>/reports/<timestamp>-<cmd>.txt and returns its path.
std::filesystem::path archive_report(const RunConfig& cfg, const std::string& cmd, const std::string& text);

struct Figure {
  std::string csv;
  std::string svg;
};

/// Figures 4-7 as CSV (beta,value,curve,flag) and standalone SVG. Throws
/// std::invalid_argument for other ids.
Figure render_figure(int id, double step);

/// Entry point of the semind executable. Exit codes: 0 success or PASS,
/// 1 verification failure, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semind
