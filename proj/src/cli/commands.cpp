#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semind/certificates.hpp"
#include "semind/cli.hpp"
#include "semind/construction.hpp"
#include "semind/counting.hpp"
#include "semind/profiles.hpp"
#include "semind/search.hpp"

namespace semind {

namespace {

namespace fs = std::filesystem;

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

// ------------------------------------------------------------ inputs

struct PatternInput {
  std::string name;
  std::string file;

  PatternGraph load(std::string& label) const {
    if (!name.empty() && !file.empty()) throw std::invalid_argument("give either --pattern or --pattern-file");
    if (!file.empty()) {
      label = file;
      return parse_pattern(trim(read_file(file)));
    }
    if (name.empty()) throw std::invalid_argument("a pattern is required (--pattern or --pattern-file)");
    label = name;
    return pattern_by_name(name);
  }
};

struct HostInput {
  std::string text;
  std::string file;
  std::string construct;
  int n = 0;

  HostGraph load(std::string& label) const {
    const int given = !text.empty() + !file.empty() + !construct.empty();
    if (given != 1) throw std::invalid_argument("give exactly one of --host, --host-file, --construct");
    if (!text.empty()) return parse_host(text);
    if (!file.empty()) return parse_host(trim(read_file(file)));
    if (n < 2) throw std::invalid_argument("--construct needs --n >= 2");
    const ConstructionSpec spec = parse_construction(construct);
    label = format_construction(spec) + "@" + std::to_string(n);
    return make_construction(spec, n);
  }
};

std::string host_label(const HostGraph& g, const std::string& fallback) {
  if (!fallback.empty()) return fallback;
  if (g.n() <= kMaxCanonicalOrder) return canonical_form(g).str();
  return "n" + std::to_string(g.n());
}

/// Closed-form curve matching a builtin pattern name, if any.
std::optional<std::string> curve_for(const std::string& pattern) {
  if (pattern == "ap4" || pattern == "ac4" || pattern == "peenn") return pattern;
  if (pattern.starts_with("ds:")) return pattern;
  if (pattern == "s:2,1") return "s21";
  if (pattern.starts_with("s:") && pattern.ends_with(",0")) return "rw:" + pattern.substr(2, pattern.size() - 4);
  return std::nullopt;
}

/// "lo,hi", "[lo,hi]", "(lo,hi]" ... with exact Q(sqrt2) endpoints. A plain
/// decimal lower end that rounds 1/sqrt2 is read as sqrt2/2.
std::pair<Endpoint, Endpoint> parse_interval(std::string text, std::vector<std::string>& notes) {
  text = trim(text);
  Endpoint lo, hi;
  if (!text.empty() && (text.front() == '[' || text.front() == '(')) {
    lo.closed = text.front() == '[';
    text.erase(0, 1);
  }
  if (!text.empty() && (text.back() == ']' || text.back() == ')')) {
    hi.closed = text.back() == ']';
    text.pop_back();
  }
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("interval must be lo,hi");
  const std::string a = trim(text.substr(0, comma)), b = trim(text.substr(comma + 1));
  lo.value = QSqrt2::parse(a);
  hi.value = QSqrt2::parse(b);
  const QSqrt2 inv_sqrt2(mpq_class(0), mpq_class(1, 2));
  if (const auto dot = a.find('.'); dot != std::string::npos && a.find_first_not_of("0123456789.") == std::string::npos) {
    const int digits = static_cast<int>(a.size() - dot - 1);
    const double half_ulp = 0.5 * std::pow(10.0, -digits);
    if (lo.value != inv_sqrt2 && std::abs((lo.value - inv_sqrt2).to_double()) < half_ulp) {
      notes.push_back("note: lower end " + a + " is 1/sqrt2 rounded to " + std::to_string(digits) +
                      " digits; using sqrt2/2 exactly");
      lo.value = inv_sqrt2;
    }
  }
  if (hi.value < lo.value) throw std::invalid_argument("interval is empty");
  return {lo, hi};
}

// ------------------------------------------------------------ commands

struct Context {
  RunConfig cfg;
  std::ostream& out;
  std::ostream& err;
};

int cmd_count(Context& ctx, const PatternInput& pin, const HostInput& hin, int profile_k) {
  std::string plabel, hlabel;
  const HostGraph g = hin.load(hlabel);
  if (profile_k > 0) {
    const InducedProfile prof = induced_profile(g, profile_k);
    ctx.out << "class_code,count\n";
    for (const auto& [code, c] : prof.counts) ctx.out << code.str() << "," << to_string(c) << "\n";
    return 0;
  }
  const PatternGraph h = pin.load(plabel);
  const Count c = count_injections(h, g, ctx.cfg.threads);
  const double rho = normalized_density(c, g.n(), h.h());
  ctx.out << "pattern=" << plabel << " host=" << host_label(g, hlabel) << " count=" << to_string(c)
          << " rho=" << fmt("%.10g", rho) << "\n";
  if (pin.file.empty()) {
    if (auto curve = curve_for(plabel)) {
      const double beta = g.red_density();
      const CurveValue v = eval_curve(CurveId::parse(*curve), beta, RangePolicy::Flag);
      ctx.out << "curve=" << *curve << " beta=" << fmt("%.10g", beta) << " value=" << fmt("%.10g", v.value)
              << " in_range=" << (v.in_range ? 1 : 0) << "\n";
    }
  }
  return 0;
}

int cmd_enumerate(Context& ctx, int k, bool use_cache) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const fs::path path = ctx.cfg.cache_dir / ("basis-k" + std::to_string(k) + ".txt");
  std::vector<HostGraph> hosts;
  if (use_cache && fs::exists(path)) {
    hosts = parse_basis_file(read_file(path.string()));
  } else {
    hosts = enumerate_colored_graphs(k);
    if (use_cache) write_file(path, format_basis_file(k, hosts));
  }
  ctx.out << format_basis_file(k, hosts);
  return 0;
}

struct SearchArgs {
  PatternInput pattern;
  int n = 0;
  int m = -1;
  std::string method = "auto";
  double beta = -1;
  int restarts = 4;
  std::vector<std::string> seeds;
  bool profile = false;
};

int cmd_search(Context& ctx, const SearchArgs& a) {
  std::string label;
  const PatternGraph h = a.pattern.load(label);
  if (a.n < 1) throw std::invalid_argument("--n is required");
  std::string method = a.method;
  if (method == "auto") method = a.n <= 8 && a.beta < 0 ? "exact" : "hill";
  if (method != "exact" && method != "hill") throw std::invalid_argument("--method must be exact, hill or auto");
  std::ostringstream report;
  auto line = [&](int m, Count best, const HostGraph& w) {
    report << "n=" << a.n << " m=" << m << " best=" << to_string(best)
           << " rho=" << fmt("%.10g", normalized_density(best, a.n, h.h())) << " witness=" << format_host(w) << "\n";
  };
  if (method == "exact") {
    if (a.profile) {
      const SearchResult r = full_profile(h, a.n, ctx.cfg.threads);
      report << "m,best,rho\n";
      for (const auto& [m, best] : r.per_edge_count)
        report << m << "," << to_string(best) << "," << fmt("%.10g", normalized_density(best, a.n, h.h())) << "\n";
    } else {
      std::optional<int> m;
      if (a.m >= 0) m = a.m;
      const SearchResult r = exact_max(h, a.n, m, ctx.cfg.threads);
      for (const auto& w : r.witness_hosts) line(static_cast<int>(w.red_pairs()), r.best_count, w);
    }
  } else {
    HillClimbOptions opts;
    if (a.beta >= 0) opts.beta = a.beta;
    opts.restarts = a.restarts;
    opts.seed = ctx.cfg.seed;
    opts.threads = ctx.cfg.threads;
    for (const auto& s : a.seeds) opts.seeds.push_back(make_construction(parse_construction(s), a.n));
    const SearchResult r = hill_climb(h, a.n, opts);
    if (!r.witness_hosts.empty())
      line(static_cast<int>(r.witness_hosts.front().red_pairs()), r.best_count, r.witness_hosts.front());
  }
  ctx.out << report.str();
  return 0;
}

int cmd_profile(Context& ctx, const std::vector<std::string>& curves, std::optional<double> from,
                std::optional<double> to, const std::string& out_path) {
  std::ostringstream csv;
  csv << "beta,value,curve,flag\n";
  const double step = ctx.cfg.beta_step;
  for (const auto& name : curves) {
    const CurveId id = CurveId::parse(name);
    const auto [vlo, vhi] = validity_interval(id);
    const double lo = from.value_or(vlo), hi = to.value_or(vhi);
    if (hi < lo) throw std::invalid_argument("empty beta range");
    const long first = std::lround(std::ceil(lo / step - 1e-9)), last = std::lround(std::floor(hi / step + 1e-9));
    for (long i = first; i <= last; ++i) {
      const double beta = std::clamp(i * step, lo, hi);
      try {
        const CurveValue v = eval_curve(id, beta, RangePolicy::Flag);
        csv << fmt("%.6f", beta) << "," << fmt("%.12g", v.value) << "," << id.name() << ","
            << (v.in_range ? "ok" : "out_of_range") << "\n";
      } catch (const InfeasibleError&) {
        csv << fmt("%.6f", beta) << ",nan," << id.name() << ",undefined\n";
      }
    }
  }
  if (out_path.empty())
    ctx.out << csv.str();
  else
    write_file(out_path, csv.str());
  return 0;
}

struct VerifyArgs {
  std::string which;
  std::string B = "sqrt2-1", C = "sqrt2-1";
  std::string interval;
  int regime = 0;
  std::string alpha_interval = "0,1/2";
  std::string table_file;
  std::string coefficients_file;
};

int cmd_verify(Context& ctx, const VerifyArgs& a) {
  CertificateReport rep;
  std::vector<std::string> notes;
  if (a.which == "ap4") {
    Ap4Options opts;
    const auto [lo, hi] = parse_interval(a.alpha_interval, notes);
    opts.alpha_lo = lo.value;
    opts.alpha_hi = hi.value;
    if (!a.table_file.empty()) opts.table = read_file(a.table_file);
    rep = verify_ap4_certificate(opts);
  } else if (a.which == "peenn") {
    PeennOptions opts;
    std::string B = a.B, C = a.C, interval = a.interval;
    if (a.regime == 1) {
      if (interval.empty()) interval = "[sqrt2/2,4/5]";
    } else if (a.regime == 2) {
      B = "361/1000";
      C = "0";
      if (interval.empty()) interval = "(4/5,1]";
    } else if (a.regime != 0) {
      throw std::invalid_argument("--regime must be 1 or 2");
    }
    if (interval.empty()) interval = "[sqrt2/2,4/5]";
    opts.B = QSqrt2::parse(B);
    opts.C = QSqrt2::parse(C);
    std::tie(opts.lo, opts.hi) = parse_interval(interval, notes);
    if (B.find('.') != std::string::npos || C.find('.') != std::string::npos)
      notes.push_back("note: decimal constants are read as exact rationals");
    if (!a.coefficients_file.empty()) opts.coefficients = read_file(a.coefficients_file);
    rep = verify_peenn_certificate(opts);
  } else if (a.which == "stability") {
    rep = stability_family_check();
  } else {
    throw std::invalid_argument("unknown certificate '" + a.which + "' (ap4, peenn, stability)");
  }
  std::string text;
  for (const auto& n : notes) text += n + "\n";
  text += rep.text();
  ctx.out << text;
  const fs::path archived = archive_report(ctx.cfg, "verify-" + a.which, text);
  ctx.err << "report archived to " << archived.string() << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_figure(Context& ctx, int id, const std::string& dir) {
  const Figure f = render_figure(id, ctx.cfg.beta_step);
  const fs::path base = fs::path(dir) / ("figure" + std::to_string(id));
  write_file(base.string() + ".csv", f.csv);
  write_file(base.string() + ".svg", f.svg);
  ctx.out << "wrote " << base.string() << ".csv\n" << "wrote " << base.string() << ".svg\n";
  return 0;
}

int cmd_oracle(Context& ctx, const PatternInput& pin, int n) {
  std::string label;
  const PatternGraph h = pin.load(label);
  if (n < 1 || n > 6) throw UnsupportedSize("oracle enumerates all colourings; n must be in [1, 6]");
  const int pairs = static_cast<int>(pair_count(n));
  std::vector<Count> brute(pairs + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    HostGraph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit) g.set_red(i, j, (mask >> bit) & 1u);
    const int m = __builtin_popcount(mask);
    brute[m] = std::max(brute[m], count_injections(h, g));
  }
  const SearchResult prof = full_profile(h, n, ctx.cfg.threads);
  std::ostringstream report;
  report << "m,brute,profile,match\n";
  bool all = true;
  for (int m = 0; m <= pairs; ++m) {
    auto it = prof.per_edge_count.find(m);
    const Count p = it == prof.per_edge_count.end() ? -1 : it->second;
    const bool ok = p == brute[m];
    all = all && ok;
    report << m << "," << to_string(brute[m]) << "," << to_string(p) << "," << (ok ? "yes" : "NO") << "\n";
  }
  report << "pattern=" << label << " n=" << n << " oracle=" << (all ? "agree" : "DISAGREE") << "\n";
  ctx.out << report.str();
  archive_report(ctx.cfg, "oracle", report.str());
  return all ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"semind: semi-induced pattern densities in red/blue colourings"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, cache_dir;
  int threads = 0;
  std::uint64_t seed = 0;
  double step = 0, tolerance = 0;
  auto* o_seed = app.add_option("--seed", seed, "random seed");
  auto* o_step = app.add_option("--step", step, "beta grid step");
  auto* o_tol = app.add_option("--tolerance", tolerance, "crossover residual tolerance");
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--cache", cache_dir, "cache directory (default $SEMIND_CACHE or .semind-cache)");
  app.add_option("--threads", threads, "worker threads");

  PatternInput count_pattern;
  HostInput count_host;
  int profile_k = 0;
  auto* count = app.add_subcommand("count", "count semi-induced injections of a pattern into a host");
  count->add_option("--pattern", count_pattern.name, "builtin: ap4 ac4 peenn ds:<s> s:<a>,<b> tree:<edges>");
  count->add_option("--pattern-file", count_pattern.file, "pattern file '<h> <RBF pairs>'");
  count->add_option("--host", count_host.text, "host '<n> <RB pairs>'");
  count->add_option("--host-file", count_host.file, "host file");
  count->add_option("--construct", count_host.construct, "construction spec, e.g. circulant:2/3");
  count->add_option("--n", count_host.n, "host size for --construct");
  count->add_option("--profile", profile_k, "print the induced k-profile instead (k <= 5)");

  int enum_k = 0;
  bool no_cache = false;
  auto* enumerate = app.add_subcommand("enumerate", "isomorphism classes of colourings of K_k");
  enumerate->add_option("--k", enum_k, "vertex count (<= 7)")->required();
  enumerate->add_flag("--no-cache", no_cache, "do not read or write the basis cache");

  SearchArgs sargs;
  auto* search = app.add_subcommand("search", "maximize a pattern count over hosts");
  search->add_option("--pattern", sargs.pattern.name, "builtin pattern");
  search->add_option("--pattern-file", sargs.pattern.file, "pattern file");
  search->add_option("--n", sargs.n, "host size")->required();
  search->add_option("--m", sargs.m, "number of red pairs (exact search)");
  search->add_option("--method", sargs.method, "exact, hill or auto");
  search->add_option("--beta", sargs.beta, "red density (hill climbing)");
  search->add_option("--restarts", sargs.restarts, "hill-climbing restarts");
  search->add_option("--seed-construct", sargs.seeds, "construction used as a hill-climbing seed");
  search->add_flag("--profile", sargs.profile, "exact maximum for every m as CSV");

  std::vector<std::string> curves;
  double from = 0, to = 0;
  std::string profile_out;
  auto* profile = app.add_subcommand("profile", "sample closed-form curves on the beta grid");
  profile->add_option("--curve", curves, "curve name (repeatable)")->required();
  auto* o_from = profile->add_option("--from", from, "first beta");
  auto* o_to = profile->add_option("--to", to, "last beta");
  profile->add_option("--out", profile_out, "write CSV here instead of stdout");

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "check a certificate: ap4, peenn or stability");
  verify->add_option("certificate", vargs.which, "ap4, peenn or stability")->required();
  verify->add_option("--B", vargs.B, "constant B (Q(sqrt2), e.g. sqrt2-1 or 361/1000)");
  verify->add_option("--C", vargs.C, "constant C");
  verify->add_option("--interval", vargs.interval, "range of a, e.g. [sqrt2/2,4/5] or (0.8,1]");
  verify->add_option("--regime", vargs.regime, "1: B=C=sqrt2-1 on [1/sqrt2,4/5]; 2: B=361/1000, C=0 on (4/5,1]");
  verify->add_option("--alpha-interval", vargs.alpha_interval, "ap4: range where multipliers must be >= 0");
  verify->add_option("--table", vargs.table_file, "ap4: alternative reference table");
  verify->add_option("--coefficients", vargs.coefficients_file, "peenn: alternative reference polynomials");

  int fig_id = 0;
  std::string fig_dir = ".";
  auto* figure = app.add_subcommand("figure", "curve figures 4-7 as CSV and SVG");
  figure->add_option("id", fig_id, "4, 5, 6 or 7")->required();
  figure->add_option("--out", fig_dir, "output directory");

  PatternInput oracle_pattern;
  int oracle_n = 0;
  auto* oracle = app.add_subcommand("oracle", "brute-force all colourings and compare with full_profile");
  oracle->add_option("--pattern", oracle_pattern.name, "builtin pattern");
  oracle->add_option("--pattern-file", oracle_pattern.file, "pattern file");
  oracle->add_option("--n", oracle_n, "host size (<= 6)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Context ctx{default_config(), out, err};
    const char* env = std::getenv(kCacheEnv);
    if (!config_path.empty()) {
      apply_config_file(ctx.cfg, config_path);
      if (env && *env) ctx.cfg.cache_dir = env;
    }
    if (!cache_dir.empty()) ctx.cfg.cache_dir = cache_dir;
    if (threads != 0) ctx.cfg.threads = threads;
    if (o_seed->count()) ctx.cfg.seed = seed;
    if (o_step->count()) ctx.cfg.beta_step = step;
    if (o_tol->count()) ctx.cfg.tolerance = tolerance;
    validate(ctx.cfg);

    if (*count) return cmd_count(ctx, count_pattern, count_host, profile_k);
    if (*enumerate) return cmd_enumerate(ctx, enum_k, !no_cache);
    if (*search) return cmd_search(ctx, sargs);
    if (*profile) {
      std::optional<double> f, t;
      if (o_from->count()) f = from;
      if (o_to->count()) t = to;
      return cmd_profile(ctx, curves, f, t, profile_out);
    }
    if (*verify) return cmd_verify(ctx, vargs);
    if (*figure) return cmd_figure(ctx, fig_id, fig_dir);
    if (*oracle) return cmd_oracle(ctx, oracle_pattern, oracle_n);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace semind
