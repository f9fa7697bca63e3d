#include "semind/certificates.hpp"

namespace semind {

namespace {

using Family = std::vector<std::pair<std::string, HostGraph>>;

Family family(std::initializer_list<std::pair<const char*, const char*>> members) {
  Family out;
  for (const auto& [label, digits] : members) out.emplace_back(label, host_from_digits(digits));
  return out;
}

}  // namespace

StabilityReport stability_family_check() {
  StabilityReport rep;
  // 5-vertex classes where the certificate coefficient vanishes identically.
  rep.family_a = family({{"A1", "1111111111"},
                         {"A2", "1111111112"},
                         {"A3", "1111111222"},
                         {"A4", "1111222222"},
                         {"A5", "2222222222"}});
  // Classes vanishing at a = 1/sqrt2; the last is the alternating 5-cycle.
  rep.family_half = family({{"H1", "2222222221"}, {"H2", "2222222111"}, {"H3", "2222111111"}, {"C5", "2112211212"}});
  rep.family_f = family({{"F(a)", "111122"},
                         {"F(b)", "112211"},
                         {"F(c)", "112212"},
                         {"F(d)", "112222"},
                         {"F(e)", "122221"}});

  auto list = [](const Family& f) {
    std::string s;
    for (const auto& [label, g] : f) s += " " + label + "=" + canonical_form(g).str();
    return s;
  };
  rep.lines.push_back("family A size=" + std::to_string(rep.family_a.size()) + list(rep.family_a));
  rep.lines.push_back("family A_half size=" + std::to_string(rep.family_half.size()) + list(rep.family_half));
  rep.lines.push_back("family F size=" + std::to_string(rep.family_f.size()) + list(rep.family_f));

  Family targets = rep.family_a;
  targets.insert(targets.end(), rep.family_half.begin(), rep.family_half.end());
  int forbidden_hits = 0;
  for (const auto& [fl, f] : rep.family_f)
    for (const auto& [tl, t] : targets) {
      StabilityCheck c{fl, tl, is_induced_subgraph(f, t), tl != "C5"};
      rep.lines.push_back("check " + fl + " in " + tl + ": " + (c.embeds ? "embeds" : "absent") +
                          (c.forbidden ? "" : " (informational)"));
      if (c.forbidden && c.embeds) {
        ++forbidden_hits;
        rep.failures.push_back(fl + " embeds induced in " + tl);
      }
      rep.checks.push_back(std::move(c));
    }
  rep.pass = rep.failures.empty();
  for (const auto& f : rep.failures) rep.lines.push_back("failure: " + f);
  rep.lines.push_back(std::string("verdict=") + (rep.pass ? "PASS" : "FAIL") +
                      " checks=" + std::to_string(rep.checks.size()) + " forbidden_embeddings=" +
                      std::to_string(forbidden_hits));
  return rep;
}

}  // namespace semind
