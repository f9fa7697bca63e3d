#include "semind/certificates.hpp"

#include <set>
#include <sstream>

#include "semind/counting.hpp"
#include "semind/embedded_data.hpp"

namespace semind {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

const std::vector<std::string> kAlpha{"al"};
const std::vector<std::string> kABC{"a", "B", "C"};

CoeffPoly cst(long v) { return CoeffPoly(v); }

FlagCombo flag(const std::string& digits, int roots, const CoeffPoly& c = CoeffPoly(1L)) {
  return FlagCombo::single(RootedFlag{host_from_digits(digits), roots}, c);
}

FlagCombo sum(std::initializer_list<FlagCombo> parts) {
  FlagCombo out;
  for (const auto& p : parts) out += p;
  return out;
}

GraphCombo square(const FlagCombo& f) { return unlabel(flag_product(f, f)); }

std::string interval_text(const Endpoint& lo, const Endpoint& hi) {
  return std::string(lo.closed ? "[" : "(") + lo.value.str() + "," + hi.value.str() + (hi.closed ? "]" : ")");
}

std::string zero_text(const RootLocation& r) {
  std::ostringstream os;
  os.precision(12);
  if (r.exact)
    os << "zero a=" << r.lo.str();
  else
    os << "zero a~" << r.approx() << " in (" << r.lo.to_double() << "," << r.hi.to_double() << ")";
  return os.str();
}

}  // namespace

std::string CertificateReport::text() const {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

CoeffTable parse_coeff_table(std::string_view text, const std::vector<std::string>& columns,
                             const std::vector<std::string>& var_names) {
  CoeffTable table;
  table.columns = columns;
  const std::size_t want = columns.empty() ? 1 : columns.size();
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string line = trim(text.substr(start, end - start));
    const std::size_t line_start = start;
    start = end + 1;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t p = 0;
    for (;;) {
      const auto bar = line.find('|', p);
      fields.push_back(trim(std::string_view(line).substr(p, bar == std::string::npos ? std::string::npos : bar - p)));
      if (bar == std::string::npos) break;
      p = bar + 1;
    }
    if (fields.size() != want + 1)
      throw ParseError("expected " + std::to_string(want + 1) + " fields", line_start);
    std::vector<CoeffPoly> values;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      try {
        values.push_back(CoeffPoly::parse(fields[i], var_names));
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad polynomial '") + fields[i] + "'", line_start + e.offset());
      }
    }
    table.rows.emplace_back(fields[0], std::move(values));
  }
  return table;
}

// ---------------------------------------------------------------- AP4

const Ap4Terms& ap4_terms() {
  static const Ap4Terms terms = [] {
    Ap4Terms t;
    const CoeffPoly al = CoeffPoly::var(0);
    t.O = expand_pattern(ap4_pattern(), 4);
    t.C1 = square(sum({flag("221", 2), flag("212", 2, cst(-1))}));
    t.C2 = square(sum({flag("121", 2), flag("112", 2, cst(-1))}));
    t.C3 = square(sum({flag("222", 2, -al), flag("221", 2, cst(1) - cst(2) * al), flag("211", 2, cst(1) - al)}))
               .scaled(cst(12));
    t.C4 = square(sum({flag("122", 2, -al), flag("121", 2, cst(1) - cst(2) * al), flag("111", 2, cst(1) - al)}))
               .scaled(cst(12));
    t.E.k = 4;
    for (const auto& g : detail::classes_of_order(4)) {
      const long blue = 6 - g.red_pairs();
      t.E.add(canonical_form(g), cst(blue) - cst(6) * al);
    }
    t.m1 = cst(48) * pow(al, 3) - cst(96) * pow(al, 2) + cst(48) * al;
    t.m2 = cst(48) * pow(al, 3) - cst(72) * pow(al, 2) + cst(24) * al + cst(12);
    t.m3 = cst(4) - cst(4) * al;
    t.m4 = cst(2) - cst(4) * al;
    t.mE = cst(-12) * pow(al, 2) + cst(16) * al - cst(4);
    t.target = cst(24) * al * pow(cst(1) - al, 2);
    return t;
  }();
  return terms;
}

CertificateReport verify_ap4_certificate(const Ap4Options& options) {
  CertificateReport rep;
  const Ap4Terms& t = ap4_terms();
  const std::vector<std::pair<std::string, const GraphCombo*>> cols{
      {"O", &t.O}, {"C1", &t.C1}, {"C2", &t.C2}, {"C3", &t.C3}, {"C4", &t.C4}, {"E", &t.E}};
  std::vector<std::string> names;
  for (const auto& c : cols) names.push_back(c.first);

  rep.lines.push_back("certificate=ap4 basis=4");
  CoeffTable table;
  try {
    table = parse_coeff_table(options.table ? std::string_view(*options.table) : data::ap4_table(), names, kAlpha);
  } catch (const std::exception& e) {
    rep.failures.push_back(std::string("table unreadable: ") + e.what());
  }
  std::map<CanonicalCode, std::pair<std::string, std::vector<CoeffPoly>>> rows;
  for (const auto& [digits, values] : table.rows) {
    CanonicalCode code;
    try {
      const HostGraph g = host_from_digits(digits);
      if (g.n() != 4) throw ParseError("not a 4-vertex class", 0);
      code = canonical_form(g);
    } catch (const std::exception&) {
      rep.failures.push_back("table row '" + digits + "' is not a 4-vertex class");
      continue;
    }
    if (!rows.emplace(code, std::make_pair(digits, values)).second)
      rep.failures.push_back("table lists class " + code.str() + " twice");
  }

  int identities = 0, matched = 0;
  const auto& basis = detail::classes_of_order(4);
  for (const auto& g : basis) {
    const CanonicalCode code = canonical_form(g);
    const std::string digits = digits_of(g);
    auto row = rows.find(code);
    bool table_ok = row != rows.end();
    if (!table_ok) rep.failures.push_back("class=" + code.str() + " missing from table");
    for (std::size_t c = 0; table_ok && c < cols.size(); ++c) {
      const CoeffPoly delta = cols[c].second->at(code) - row->second.second[c];
      if (!delta.is_zero()) {
        rep.failures.push_back("class=" + code.str() + " (" + row->second.first + ") column " + cols[c].first +
                               " delta=" + delta.str(kAlpha));
        table_ok = false;
      }
    }
    matched += table_ok;

    const CoeffPoly combo = t.O.at(code) + t.m1 * t.C1.at(code) + t.m2 * t.C2.at(code) + t.m3 * t.C3.at(code) +
                            t.m4 * t.C4.at(code) + t.mE * t.E.at(code);
    const bool ident = combo == t.target;
    if (!ident)
      rep.failures.push_back("class=" + code.str() + " combination delta=" + (combo - t.target).str(kAlpha));
    identities += ident;
    rep.lines.push_back("class=" + code.str() + " digits=" + digits + " coeff=" + combo.str(kAlpha) +
                        " table=" + (table_ok ? "match" : "MISMATCH") + " identity=" + (ident ? "ok" : "FAIL"));
  }

  const Endpoint lo{options.alpha_lo, true}, hi{options.alpha_hi, true};
  const std::vector<std::pair<std::string, const CoeffPoly*>> mults{
      {"C1", &t.m1}, {"C2", &t.m2}, {"C3", &t.m3}, {"C4", &t.m4}};
  for (const auto& [name, m] : mults) {
    const SignReport s = certify_nonpositive((-*m).univariate(0), lo, hi);
    const bool ok = s.verdict != SignVerdict::Violation;
    std::string line = "multiplier " + name + "=" + m->str(kAlpha) + " on " + interval_text(lo, hi) + ": " +
                       (ok ? "nonnegative" : "NEGATIVE");
    if (!ok) {
      line += " at al=" + s.witness->str();
      rep.failures.push_back("multiplier " + name + " negative on [" + s.violation->first.str() + "," +
                             s.violation->second.str() + "]");
    }
    rep.lines.push_back(line);
  }

  rep.pass = rep.failures.empty();
  for (const auto& f : rep.failures) rep.lines.push_back("failure: " + f);
  rep.lines.push_back(std::string("verdict=") + (rep.pass ? "PASS" : "FAIL") + " classes=" +
                      std::to_string(basis.size()) + " identities=" + std::to_string(identities) + "/" +
                      std::to_string(basis.size()) + " table=" + std::to_string(matched) + "/" +
                      std::to_string(basis.size()));
  return rep;
}

// ---------------------------------------------------------------- P_EENN

CoeffPoly peenn_one_edge_multiplier() {
  const CoeffPoly a = CoeffPoly::var(0);
  return cst(-120) * pow(a, 6) + cst(120) * pow(a, 5) + cst(80) * pow(a, 4) - cst(80) * pow(a, 3) +
         cst(20) * pow(a, 2) - cst(20) * a;
}

GraphCombo peenn_certificate_combo(const std::optional<CoeffPoly>& one_edge_multiplier) {
  const CoeffPoly a = CoeffPoly::var(0), B = CoeffPoly::var(1), C = CoeffPoly::var(2);
  const CoeffPoly a2 = pow(a, 2), target = pow(a, 3) - pow(a, 4);

  GraphCombo rhs = expand_pattern(peenn_pattern(), 5);
  rhs -= unit_combo(5).scaled(cst(120) * target);
  rhs = rhs.scaled(a2 * (cst(1) - a2));

  // Edge-density constraint terms: c_t * (t * e - a^2 t).
  const FlagCombo edge = flag("2", 0);
  const std::vector<std::pair<std::string, CoeffPoly>> three{
      {"222", cst(120) * a2 * target},
      {"111", cst(-120) * (cst(1) - a2) * target},
      {"112", one_edge_multiplier ? *one_edge_multiplier : peenn_one_edge_multiplier()},
      {"122", cst(15) * B}};
  for (const auto& [digits, c] : three) {
    const FlagCombo t = flag(digits, 0);
    rhs += unlabel(flag_product(t, edge)).scaled(c);
    GraphCombo single{3, {}};
    single.add(canonical_form(host_from_digits(digits)), cst(1));
    rhs -= lift(single, 5).scaled(a2 * c);
  }

  const FlagCombo s1 = sum({flag("111211", 3, a), flag("111222", 3, a - cst(1))});
  const FlagCombo s2 = sum({flag("122222", 3, a), flag("121212", 3, a - cst(1))});
  rhs += square(s1).scaled(cst(60) * (a - a2));
  rhs += square(s2).scaled(cst(30) * C);
  return rhs;
}

PeennReport verify_peenn_certificate(const PeennOptions& options) {
  PeennReport rep;
  const CoeffPoly a = CoeffPoly::var(0);
  rep.lines.push_back("certificate=peenn B=" + options.B.str() + " C=" + options.C.str() +
                      " interval=" + interval_text(options.lo, options.hi));
  if (options.hi.value < options.lo.value) {
    rep.failures.push_back("empty interval");
    rep.lines.push_back("failure: empty interval");
    rep.lines.push_back("verdict=FAIL classes=0 max_coeff=undefined");
    return rep;
  }

  // Scaling convention: labelled pattern counts must equal the shipped expansion.
  const GraphCombo pattern = expand_pattern(peenn_pattern(), 5);
  {
    const CoeffTable exp = parse_coeff_table(data::peenn_expansion(), {}, {"a"});
    GraphCombo listed{5, {}};
    for (const auto& [digits, v] : exp.rows) listed.add(canonical_form(host_from_digits(digits)), v[0]);
    int bad = 0;
    for (const auto& g : detail::classes_of_order(5)) {
      const CanonicalCode code = canonical_form(g);
      if (!(pattern.at(code) == listed.at(code))) {
        ++bad;
        rep.failures.push_back("expansion class=" + code.str() + " computed=" + pattern.at(code).str(kABC) +
                               " listed=" + listed.at(code).str(kABC));
      }
    }
    rep.lines.push_back("check pattern expansion terms=" + std::to_string(pattern.terms.size()) +
                        " mismatches=" + std::to_string(bad));
  }

  // Multiplier gate.
  {
    const CoeffPoly m = cst(60) * (a - pow(a, 2));
    const SignReport s = certify_nonpositive((-m).univariate(0), options.lo, options.hi);
    const bool ok = s.verdict != SignVerdict::Violation;
    rep.lines.push_back(std::string("multiplier 60*(a-a^2): ") + (ok ? "nonnegative" : "NEGATIVE"));
    if (!ok) rep.failures.push_back("multiplier 60*(a-a^2) negative near a=" + s.witness->str());
    const bool c_ok = options.C.sign() >= 0;
    rep.lines.push_back("multiplier 30*C=" + (QSqrt2(30L) * options.C).str() + ": " +
                        (c_ok ? "nonnegative" : "NEGATIVE"));
    if (!c_ok) rep.failures.push_back("multiplier 30*C negative (C=" + options.C.str() + ")");
  }

  const GraphCombo rhs = peenn_certificate_combo(options.one_edge_multiplier);

  // Reference polynomials.
  std::map<CanonicalCode, CoeffPoly> reference;
  try {
    const CoeffTable app =
        parse_coeff_table(options.coefficients ? std::string_view(*options.coefficients) : data::peenn_coefficients(), {}, kABC);
    for (const auto& [digits, v] : app.rows) {
      const CanonicalCode code = canonical_form(host_from_digits(digits));
      if (!reference.emplace(code, v[0]).second) rep.failures.push_back("reference lists " + code.str() + " twice");
    }
  } catch (const std::exception& e) {
    rep.failures.push_back(std::string("reference table unreadable: ") + e.what());
  }
  int mismatches = 0;
  bool violation = false;
  for (const auto& g : detail::classes_of_order(5)) {
    PeennClass cls;
    cls.code = canonical_form(g);
    cls.digits = digits_of(g);
    cls.symbolic = rhs.at(cls.code);
    auto ref = reference.find(cls.code);
    if (ref == reference.end()) {
      ++mismatches;
      rep.failures.push_back("class=" + cls.code.str() + " missing from reference");
    } else if (!(ref->second == cls.symbolic)) {
      ++mismatches;
      rep.failures.push_back("class=" + cls.code.str() + " (" + cls.digits +
                             ") expansion delta=" + (cls.symbolic - ref->second).str(kABC));
    }
    cls.substituted = cls.symbolic.substitute(1, options.B).substitute(2, options.C);
    cls.sign = certify_nonpositive(cls.substituted.univariate(0), options.lo, options.hi);
    const char* sign = cls.sign.verdict == SignVerdict::IdenticallyZero ? "zero"
                       : cls.sign.verdict == SignVerdict::Nonpositive   ? "nonpositive"
                                                                        : "VIOLATION";
    rep.lines.push_back("class=" + cls.code.str() + " coeff=" + cls.substituted.str(kABC) + " sign=" + sign);
    for (const auto& z : cls.sign.zeros) rep.lines.push_back("  " + zero_text(z));
    if (cls.sign.verdict == SignVerdict::Violation) {
      violation = true;
      rep.lines.push_back("  positive on [" + cls.sign.violation->first.str() + "," +
                          cls.sign.violation->second.str() + "] e.g. a=" + cls.sign.witness->str());
      rep.failures.push_back("class=" + cls.code.str() + " positive on [" + cls.sign.violation->first.str() + "," +
                             cls.sign.violation->second.str() + "]");
    }
    if (cls.sign.verdict == SignVerdict::IdenticallyZero || !cls.sign.zeros.empty()) rep.max_zero = true;
    rep.classes.push_back(std::move(cls));
  }
  rep.lines.push_back("check reference polynomials classes=" + std::to_string(rep.classes.size()) +
                      " mismatches=" + std::to_string(mismatches));

  rep.pass = rep.failures.empty();
  for (const auto& f : rep.failures) rep.lines.push_back("failure: " + f);
  const char* max = violation ? ">0" : rep.max_zero ? "=0" : "<0";
  rep.lines.push_back(std::string("verdict=") + (rep.pass ? "PASS" : "FAIL") +
                      " classes=" + std::to_string(rep.classes.size()) + " max_coeff" + max);
  return rep;
}

}  // namespace semind
