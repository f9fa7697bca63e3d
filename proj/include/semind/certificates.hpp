#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semind/coeff_poly.hpp"
#include "semind/colored_graph.hpp"
#include "semind/flags.hpp"
#include "semind/sturm.hpp"

namespace semind {

struct CertificateReport {
  bool pass = false;
  /// One entry per detected problem; each names the class or multiplier.
  std::vector<std::string> failures;
  std::vector<std::string> lines;

  std::string text() const;
};

/// Coefficient tables on a graph basis: class digits -> named columns.
struct CoeffTable {
  std::vector<std::string> columns;
  std::vector<std::pair<std::string, std::vector<CoeffPoly>>> rows;
};

/// "digits | p1 | p2 ..." lines, '#' comments. `columns` names the value
/// columns (empty: one unnamed column).
CoeffTable parse_coeff_table(std::string_view text, const std::vector<std::string>& columns,
                             const std::vector<std::string>& var_names);

// ---------------------------------------------------------------- AP4

struct Ap4Terms {
  GraphCombo O, C1, C2, C3, C4, E;
  /// Multipliers of C1..C4 and E, polynomials in alpha.
  CoeffPoly m1, m2, m3, m4, mE;
  CoeffPoly target;
};

/// Expansions on the 4-vertex basis; alpha is variable 0.
const Ap4Terms& ap4_terms();

struct Ap4Options {
  /// Reference table; defaults to the shipped one.
  std::optional<std::string> table;
  /// Interval of alpha on which the square multipliers must be nonnegative.
  QSqrt2 alpha_lo{0L};
  QSqrt2 alpha_hi{mpq_class(1, 2)};
};

CertificateReport verify_ap4_certificate(const Ap4Options& options = {});

// ---------------------------------------------------------------- P_EENN

struct PeennClass {
  CanonicalCode code;
  std::string digits;
  CoeffPoly symbolic;     // in a, B, C
  CoeffPoly substituted;  // in a
  SignReport sign;
};

struct PeennReport : CertificateReport {
  std::vector<PeennClass> classes;
  bool max_zero = false;
};

struct PeennOptions {
  QSqrt2 B;
  QSqrt2 C;
  Endpoint lo;
  Endpoint hi;
  std::optional<std::string> coefficients;
  /// Replaces the multiplier of the one-red-edge 3-vertex graph.
  std::optional<CoeffPoly> one_edge_multiplier;
};

/// Right-hand side of the certificate on the 5-vertex basis, symbolic in
/// a, B, C (variables 0, 1, 2).
GraphCombo peenn_certificate_combo(const std::optional<CoeffPoly>& one_edge_multiplier = std::nullopt);

/// Default one-edge multiplier -120a^6+120a^5+80a^4-80a^3+20a^2-20a.
CoeffPoly peenn_one_edge_multiplier();

PeennReport verify_peenn_certificate(const PeennOptions& options);

// ---------------------------------------------------------------- stability

struct StabilityCheck {
  std::string pattern;  // member of the 4-vertex family
  std::string target;   // member of the 5-vertex families
  bool embeds = false;
  bool forbidden = true;  // false for the checks against C5
};

struct StabilityReport : CertificateReport {
  std::vector<std::pair<std::string, HostGraph>> family_a, family_half, family_f;
  std::vector<StabilityCheck> checks;
};

StabilityReport stability_family_check();

}  // namespace semind
