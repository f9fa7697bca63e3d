#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semind {

/// Malformed serialized input. `offset()` is the byte position of the first
/// offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Requested size is beyond what an exact routine supports.
class UnsupportedSize : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Index of the unordered pair {i, j} (i < j) in lexicographic order
/// (0,1),(0,2),...,(n-2,n-1).
constexpr std::size_t pair_index(int n, int i, int j) noexcept {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
}

constexpr std::size_t pair_count(int n) noexcept {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
}

/// Red/blue colouring of K_n. Red pairs are edges, blue pairs non-edges.
/// Stored as a symmetric bit matrix, one row of 64-bit words per vertex.
class HostGraph {
 public:
  HostGraph() = default;
  explicit HostGraph(int n);

  int n() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  bool red(int i, int j) const noexcept {
    return (rows_[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set_red(int i, int j, bool is_red);
  void flip(int i, int j) { set_red(i, j, !red(i, j)); }

  /// Red neighbourhood of v as a bitset over [0, n).
  std::span<const std::uint64_t> row(int v) const noexcept {
    return {rows_.data() + v * words_, words_};
  }

  int degree(int v) const noexcept;
  std::vector<int> degrees() const;
  std::int64_t red_pairs() const;
  double red_density() const;

  bool operator==(const HostGraph&) const = default;

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

enum class PairColor : std::uint8_t { Free, Red, Blue };

/// Pattern H: each pair is constrained red, constrained blue, or free.
class PatternGraph {
 public:
  PatternGraph() = default;
  explicit PatternGraph(int h);
  PatternGraph(int h, const std::vector<std::pair<int, int>>& red_pairs,
               const std::vector<std::pair<int, int>>& blue_pairs);

  int h() const noexcept { return h_; }
  PairColor color(int i, int j) const { return pairs_[pair_index(h_, i, j)]; }
  void set(int i, int j, PairColor c);

  std::vector<std::pair<int, int>> red_pairs() const;
  std::vector<std::pair<int, int>> blue_pairs() const;

  /// Pattern with every pair constrained, matching the host's colours.
  static PatternGraph induced(const HostGraph& g);

  bool operator==(const PatternGraph&) const = default;

 private:
  int h_ = 0;
  std::vector<PairColor> pairs_;
};

/// Isomorphism-class identifier: "<n>:<pairstring>" of the canonical
/// representative (pairs in lexicographic order, R/B).
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string text) : text_(std::move(text)) {}

  const std::string& str() const noexcept { return text_; }
  int order() const;
  /// Canonical representative.
  HostGraph host() const;

  auto operator<=>(const CanonicalCode&) const = default;

 private:
  std::string text_;
};

// Serialization: "<n> <pairstring>", pairs in lexicographic order.
HostGraph parse_host(std::string_view text);
std::string format_host(const HostGraph& g);
PatternGraph parse_pattern(std::string_view text);
std::string format_pattern(const PatternGraph& h);

/// Graph with vertex i relabelled to perm[i].
HostGraph permute(const HostGraph& g, std::span<const int> perm);
HostGraph induced_subgraph(const HostGraph& g, std::span<const int> vertices);
HostGraph complement(const HostGraph& g);
PatternGraph swap_colors(const PatternGraph& h);

constexpr int kMaxCanonicalOrder = 16;

/// Exact canonical form for n <= 16.
CanonicalCode canonical_form(const HostGraph& g);
/// Canonical representative together with the relabelling that produces it
/// (vertex v of g becomes vertex perm[v]).
std::pair<HostGraph, std::vector<int>> canonical_labeling(const HostGraph& g);

/// One host per isomorphism class, sorted by canonical code. k <= 7.
std::vector<HostGraph> enumerate_colored_graphs(int k);

namespace detail {
// Same as enumerate_colored_graphs without the public size guard (k <= 8).
const std::vector<HostGraph>& classes_of_order(int k);
}  // namespace detail

/// True iff some injection maps every pair of `small` onto a pair of `big`
/// with the same colour.
bool is_induced_subgraph(const HostGraph& small, const HostGraph& big);

/// Header line and body of a basis cache file.
std::string format_basis_file(int k, const std::vector<HostGraph>& hosts);
std::vector<HostGraph> parse_basis_file(std::string_view text);

}  // namespace semind
