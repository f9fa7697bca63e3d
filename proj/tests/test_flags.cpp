#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "semind/certificates.hpp"
#include "semind/embedded_data.hpp"
#include "semind/flags.hpp"

using namespace semind;

namespace {

const std::vector<std::string> kABC{"a", "B", "C"};
const QSqrt2 kRoot2Minus1(-1, 1);
const QSqrt2 kInvSqrt2(0, mpq_class(1, 2));

FlagCombo flag(const char* digits, int roots, long c = 1) {
  return FlagCombo::single(RootedFlag{host_from_digits(digits), roots}, CoeffPoly(c));
}

CoeffPoly sum_of(const FlagCombo& f) {
  CoeffPoly s;
  for (const auto& [code, c] : f.terms) s += c;
  return s;
}

/// Every rooting of every class on k vertices with r roots.
std::vector<RootedFlag> all_rooted(int k, int r) {
  std::vector<RootedFlag> out;
  for (const auto& g : enumerate_colored_graphs(k)) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::string> seen;
    do {
      const RootedFlag f = RootedFlag::make(g, std::vector<int>(perm.begin(), perm.begin() + r));
      if (seen.insert(f.code()).second) out.push_back(f);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

PeennOptions regime1() {
  return {kRoot2Minus1, kRoot2Minus1, {kInvSqrt2, true}, {QSqrt2(mpq_class(4, 5)), true}, {}, {}};
}

PeennOptions regime2() {
  return {QSqrt2(mpq_class(361, 1000)), QSqrt2(0L), {QSqrt2(mpq_class(4, 5)), false}, {QSqrt2(1L), true}, {}, {}};
}

std::set<std::string> family_codes(const std::vector<std::pair<std::string, HostGraph>>& fam, bool skip_c5) {
  std::set<std::string> out;
  for (const auto& [label, g] : fam)
    if (!(skip_c5 && label == "C5")) out.insert(canonical_form(g).str());
  return out;
}

}  // namespace

TEST_CASE("digit strings") {
  const HostGraph g = host_from_digits("221");
  CHECK(g.red(0, 1));
  CHECK(g.red(0, 2));
  CHECK_FALSE(g.red(1, 2));
  CHECK(digits_of(g) == "221");
  CHECK_THROWS_AS(host_from_digits("2213"), ParseError);
}

TEST_CASE("rooted flag codes") {
  const RootedFlag f = RootedFlag::make(host_from_digits("221"), {1, 2});
  CHECK(f.roots == 2);
  CHECK(f.type() == "B");
  const RootedFlag back = flag_from_code(f.code());
  CHECK(back.code() == f.code());
  // The non-root vertices may be permuted freely.
  const RootedFlag g1 = RootedFlag::make(host_from_digits("122211"), {0, 1});
  const RootedFlag g2 = RootedFlag{permute(g1.graph, std::vector<int>{0, 1, 3, 2}), 2};
  CHECK(g1.code() == g2.code());
}

TEST_CASE("flag products") {
  const FlagCombo f = flag("221", 2);
  const FlagCombo ff = flag_product(f, f);
  CHECK(ff.k == 4);
  CHECK(ff.roots == 2);

  // Summed over every pair of 3-vertex flags of a type, the products give
  // each 4-vertex flag of that type coefficient 1.
  for (const char* type : {"R", "B"}) {
    std::vector<FlagCombo> singles;
    for (const auto& r : all_rooted(3, 2))
      if (r.type() == type) singles.push_back(FlagCombo::single(r));
    REQUIRE(singles.size() == 4);
    FlagCombo total;
    for (const auto& a : singles)
      for (const auto& b : singles) total += flag_product(a, b);
    std::size_t flags4 = 0;
    for (const auto& r : all_rooted(4, 2)) flags4 += r.type() == type;
    CHECK(total.terms.size() == flags4);
    for (const auto& [code, c] : total.terms) CHECK(c == CoeffPoly(1L));
  }

  // Unit law: multiplying by the bare type changes nothing.
  const FlagCombo unit = FlagCombo::single(RootedFlag{host_from_digits("2"), 2});
  const FlagCombo fu = flag_product(f, unit);
  CHECK(fu.terms == f.terms);

  // Commutative and bilinear.
  const FlagCombo g = flag("212", 2, 3);
  const FlagCombo h = flag("211", 2, -2);
  CHECK(flag_product(f, g).terms == flag_product(g, f).terms);
  FlagCombo gh = g;
  gh += h;
  FlagCombo expect = flag_product(f, g);
  expect += flag_product(f, h);
  CHECK(flag_product(f, gh).terms == expect.terms);
  CHECK(flag_product(f.scaled(CoeffPoly(5L)), g).terms == flag_product(f, g).scaled(CoeffPoly(5L)).terms);
  CHECK(sum_of(flag_product(f, flag("212", 2))) == CoeffPoly(1L));

  CHECK_THROWS_AS(flag_product(flag("221", 2), flag("121", 2)), TypeError);
  CHECK_THROWS_AS(flag_product(flag("222111", 1), flag("222111", 1)), UnsupportedSize);
}

TEST_CASE("unlabel") {
  CHECK(unlabel(flag("222", 3)).at(canonical_form(parse_host("3 RRR"))) == CoeffPoly(1L));
  // A cherry has two automorphisms among six orderings.
  const GraphCombo cherry = unlabel(flag("221", 3));
  CHECK(cherry.at(canonical_form(host_from_digits("221"))) == CoeffPoly(QSqrt2(mpq_class(1, 3))));

  // Table 1 spot value: C1 has coefficient 1/6 on the third listed class.
  const GraphCombo& c1 = ap4_terms().C1;
  CHECK(c1.at(canonical_form(host_from_digits("222211"))) == CoeffPoly(QSqrt2(mpq_class(1, 6))));
}

TEST_CASE("unlabel commutes with colour swap") {
  for (int r = 0; r <= 4; ++r)
    for (const auto& f : all_rooted(4, r)) {
      const FlagCombo s = FlagCombo::single(f);
      REQUIRE(unlabel(swap_colors(s)).terms == swap_colors(unlabel(s)).terms);
    }
}

TEST_CASE("pattern expansion") {
  const GraphCombo peenn = expand_pattern(peenn_pattern(), 5);
  const CoeffTable listed = parse_coeff_table(data::peenn_expansion(), {}, {});
  REQUIRE(listed.rows.size() == 23);
  CHECK(peenn.terms.size() == 23);
  for (const auto& [digits, v] : listed.rows) CHECK(peenn.at(canonical_form(host_from_digits(digits))) == v[0]);

  const GraphCombo o = expand_pattern(ap4_pattern(), 4);
  const CoeffTable table = parse_coeff_table(data::ap4_table(), {"O", "C1", "C2", "C3", "C4", "E"}, {"al"});
  REQUIRE(table.rows.size() == 11);
  for (const auto& [digits, v] : table.rows) CHECK(o.at(canonical_form(host_from_digits(digits))) == v[0]);

  const GraphCombo k5 = expand_pattern(red_clique_pattern(5), 5);
  CHECK(k5.terms.size() == 1);
  CHECK(k5.at(canonical_form(parse_host("5 RRRRRRRRRR"))) == CoeffPoly(120L));
  CHECK_THROWS_AS(expand_pattern(ap4_pattern(), 5), UnsupportedSize);
}

TEST_CASE("evaluation homomorphism for P_EENN") {
  const GraphCombo peenn = expand_pattern(peenn_pattern(), 5);
  auto via_profile = [&](const HostGraph& g) {
    Count total = 0;
    for (const auto& [code, c] : induced_profile(g, 5).counts) {
      const CoeffPoly coeff = peenn.at(code);
      if (coeff.is_zero()) continue;
      total += c * static_cast<Count>(coeff.constant().rational().get_num().get_si());
    }
    return total;
  };
  for (int n = 5; n <= 8; ++n)
    for (const auto& g : detail::classes_of_order(n)) REQUIRE(via_profile(g) == count_injections(peenn_pattern(), g));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    const HostGraph g = oracle::random_host(10 + (i * 7) % 21, 0.2 + 0.6 * (i % 5) / 4.0, rng);
    REQUIRE(via_profile(g) == count_injections(peenn_pattern(), g));
  }
}

TEST_CASE("squares evaluate almost nonnegatively") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> coef(-6, 6);
  const auto flags3 = all_rooted(3, 2);
  const auto flags4 = all_rooted(4, 3);
  for (int i = 0; i < 100; ++i) {
    FlagCombo f;
    if (i % 2 == 0) {
      for (const auto& r : flags3)
        if (r.type() == "R") f += FlagCombo::single(r, CoeffPoly(QSqrt2(mpq_class(coef(rng), 3))));
    } else {
      const std::string type = flags4[rng() % flags4.size()].type();
      for (const auto& r : flags4)
        if (r.type() == type) f += FlagCombo::single(r, CoeffPoly(QSqrt2(mpq_class(coef(rng), 4))));
    }
    if (f.terms.empty()) continue;
    const int n = 10 + i % 6;
    const HostGraph g = oracle::random_host(n, 0.5, rng);
    const double v = evaluate(unlabel(flag_product(f, f)), g);
    REQUIRE(v >= -10.0 / n);
  }
}

TEST_CASE("AP4 certificate") {
  const CertificateReport rep = verify_ap4_certificate();
  CHECK(rep.pass);
  CHECK(rep.failures.empty());
  CHECK(rep.lines.back().find("verdict=PASS classes=11 identities=11/11 table=11/11") == 0);
}

TEST_CASE("AP4 certificate detects every single-entry fault") {
  const auto lines = split_lines(std::string(data::ap4_table()));
  int faults = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty() || lines[i][0] == '#') continue;
    const std::string digits = lines[i].substr(0, lines[i].find(' '));
    const std::string code = canonical_form(host_from_digits(digits)).str();
    for (int col = 1; col <= 6; ++col) {
      // Append "+1" to the col-th field.
      std::size_t pos = 0;
      for (int k = 0; k <= col; ++k) pos = lines[i].find('|', pos + (k ? 1 : 0));
      std::string bad = lines[i];
      bad.insert(pos == std::string::npos ? bad.size() : pos, " + 1 ");
      std::string text;
      for (std::size_t j = 0; j < lines.size(); ++j) text += (j == i ? bad : lines[j]) + "\n";
      Ap4Options opts;
      opts.table = text;
      const CertificateReport rep = verify_ap4_certificate(opts);
      REQUIRE_FALSE(rep.pass);
      bool named = false;
      for (const auto& f : rep.failures) named = named || f.find("class=" + code) != std::string::npos;
      CHECK(named);
      ++faults;
    }
  }
  CHECK(faults == 66);
}

TEST_CASE("AP4 multipliers are checked on the alpha interval") {
  Ap4Options opts;
  opts.alpha_lo = QSqrt2(mpq_class(3, 5));
  opts.alpha_hi = QSqrt2(mpq_class(3, 5));
  const CertificateReport rep = verify_ap4_certificate(opts);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].find("multiplier C4") == 0);
}

TEST_CASE("P_EENN certificate, first regime") {
  const PeennReport rep = verify_peenn_certificate(regime1());
  CHECK(rep.pass);
  CHECK(rep.max_zero);
  REQUIRE(rep.classes.size() == 34);

  const StabilityReport st = stability_family_check();
  const auto fam_a = family_codes(st.family_a, false);
  // C5 also vanishes at the lower end; the certificate is not tight there.
  const auto fam_half = family_codes(st.family_half, false);
  CHECK(fam_half.size() == family_codes(st.family_half, true).size() + 1);
  std::set<std::string> identically_zero, zero_at_end;
  for (const auto& c : rep.classes) {
    CHECK(c.sign.verdict != SignVerdict::Violation);
    if (c.sign.verdict == SignVerdict::IdenticallyZero) identically_zero.insert(c.code.str());
    for (const auto& z : c.sign.zeros) {
      REQUIRE(z.exact);
      CHECK(z.lo == kInvSqrt2);
      zero_at_end.insert(c.code.str());
    }
  }
  CHECK(identically_zero == fam_a);
  CHECK(zero_at_end == fam_half);
}

TEST_CASE("P_EENN certificate, second regime") {
  const PeennReport rep = verify_peenn_certificate(regime2());
  CHECK(rep.pass);
  int zero = 0;
  for (const auto& c : rep.classes) {
    CHECK(c.sign.verdict != SignVerdict::Violation);
    zero += c.sign.verdict == SignVerdict::IdenticallyZero;
    for (const auto& z : c.sign.zeros) CHECK(z.lo == QSqrt2(1L));
  }
  CHECK(zero == 5);
}

TEST_CASE("P_EENN certificate failure modes") {
  PeennOptions bad_c = regime1();
  bad_c.C = QSqrt2(mpq_class(-1, 10));
  const PeennReport c_rep = verify_peenn_certificate(bad_c);
  CHECK_FALSE(c_rep.pass);
  bool gate = false;
  for (const auto& f : c_rep.failures) gate = gate || f.find("multiplier 30*C") == 0;
  CHECK(gate);

  // The multiplier as printed (-12a^6 leading term) does not reproduce the
  // reference polynomials.
  PeennOptions printed = regime1();
  printed.one_edge_multiplier = CoeffPoly::parse("-12*a^6+120*a^5+80*a^4-80*a^3+20*a^2-20*a", kABC);
  const PeennReport p_rep = verify_peenn_certificate(printed);
  CHECK_FALSE(p_rep.pass);
  int mismatches = 0;
  for (const auto& f : p_rep.failures) mismatches += f.find("expansion delta") != std::string::npos;
  CHECK(mismatches > 0);

  PeennOptions low = regime1();
  low.lo = {QSqrt2(mpq_class(7071, 10000)), true};
  CHECK_FALSE(verify_peenn_certificate(low).pass);

  // Perturbing one reference polynomial is reported against that class.
  std::string table(data::peenn_coefficients());
  const std::string row = "1112221211 | 6*a^4";
  const auto at = table.find(row);
  REQUIRE(at != std::string::npos);
  table.replace(at, row.size(), "1112221211 | 7*a^4");
  PeennOptions faulty = regime1();
  faulty.coefficients = table;
  const PeennReport f_rep = verify_peenn_certificate(faulty);
  CHECK_FALSE(f_rep.pass);
  const std::string code = canonical_form(host_from_digits("1112221211")).str();
  REQUIRE(f_rep.failures.size() == 1);
  CHECK(f_rep.failures[0].find("class=" + code) == 0);
}

TEST_CASE("P_EENN reports are reproducible") {
  CHECK(verify_peenn_certificate(regime1()).text() == verify_peenn_certificate(regime1()).text());
  CHECK(verify_ap4_certificate().text() == verify_ap4_certificate().text());
}

TEST_CASE("stability families") {
  const StabilityReport rep = stability_family_check();
  CHECK(rep.pass);
  CHECK(rep.family_a.size() == 5);
  CHECK(rep.family_half.size() == 4);
  CHECK(rep.family_f.size() == 5);
  CHECK(rep.checks.size() == 45);
  for (const auto& c : rep.checks)
    if (c.forbidden) CHECK_FALSE(c.embeds);
  const HostGraph fa = rep.family_f[0].second;
  CHECK_FALSE(is_induced_subgraph(fa, parse_host("5 RRRRRRRRRR")));
  CHECK(is_induced_subgraph(fa, fa));
}
