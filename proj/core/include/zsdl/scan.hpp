#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zsdl/families.hpp"
#include "zsdl/graph.hpp"

namespace zsdl {

/// Exact rational with positive denominator, always in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Lazily computed invariants of one graph; each is computed at most once.
class GraphFacts {
 public:
  explicit GraphFacts(Graph g);

  const Graph& graph() const { return g_; }
  int order() const { return g_.order(); }
  bool connected();
  int sigma();
  /// Requires a connected graph.
  GraphClass graph_class();
  int z();
  int sdim();
  /// Requires a connected graph.
  int dim();
  /// Requires a connected graph.
  int mmd_cover();
  /// Requires a tree.
  int path_cover();
  const std::string& graph6();

 private:
  Graph g_;
  std::optional<bool> connected_;
  std::optional<int> sigma_, z_, sdim_, dim_, mmd_cover_, path_cover_;
  std::optional<GraphClass> class_;
  std::optional<std::string> graph6_;
};

/// A named quantity reported with a claim outcome or tracked as an extremum.
struct NamedValue {
  std::string name;
  Rational value;
};

struct ClaimOutcome {
  enum class Status { NotApplicable, Holds, Fails };
  Status status = Status::NotApplicable;
  std::vector<NamedValue> values;        ///< recorded with counterexamples
  std::vector<NamedValue> observations;  ///< maxima tracked across the scan

  static ClaimOutcome skip() { return {}; }
};

struct Claim {
  std::string id;
  std::string reference;  ///< the result this claim checks, stated as a formula
  std::string default_family;
  std::function<ClaimOutcome(const FamilyItem&, GraphFacts&, GraphFacts* base)> check;
};

class UnknownClaimError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<Claim>& claim_registry();
const Claim& find_claim(std::string_view id);

struct Counterexample {
  std::string graph6;
  std::optional<std::string> base_graph6;
  std::vector<NamedValue> values;
};

/// Largest observed value of a quantity, with the smallest graph6 attaining it.
struct ExtremalRecord {
  std::string name;
  Rational value;
  std::string graph6;
};

struct ScanReport {
  std::string claim_id;
  std::string reference;
  std::string family;
  std::uint64_t graphs_checked = 0;
  std::uint64_t graphs_skipped = 0;
  std::uint64_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;  ///< sorted by graph6, capped at kMaxListedCounterexamples
  std::vector<ExtremalRecord> extremal;         ///< sorted by name
  double wall_seconds = 0.0;

  bool held() const { return counterexample_count == 0; }
};

inline constexpr std::size_t kMaxListedCounterexamples = 100;

struct ScanOptions {
  int jobs = 1;
  EnumerationLimits limits;
};

/// Evaluates several claims in one pass over the family, sharing per-graph
/// invariants. Aggregation does not depend on the number of workers.
std::vector<ScanReport> run_claims(std::span<const std::string> claim_ids, const FamilySpec& family,
                                   const ScanOptions& options = {});
ScanReport run_claim(std::string_view claim_id, const FamilySpec& family, const ScanOptions& options = {});

struct RatioRecord {
  std::string graph6;
  int z = 0;
  int sdim = 0;
  int rank = 0;
  Rational ratio;  ///< (z - sdim) / rank
};

struct RatioSummary {
  std::vector<RatioRecord> top;  ///< descending ratio, ties by graph6
  std::uint64_t checked = 0;
  std::uint64_t skipped_trees = 0;
  std::uint64_t skipped_disconnected = 0;
  std::uint64_t negative = 0;
  std::uint64_t zero = 0;
  std::uint64_t positive = 0;
};

RatioSummary ratio_explore(const FamilySpec& family, int top_k, const ScanOptions& options = {});

/// One tabular row: graph6, n, Z, sdim, dim, sigma, rank, class. dim and rank
/// are empty for disconnected graphs.
struct InvariantRow {
  std::string graph6;
  int n = 0;
  int z = 0;
  int sdim = 0;
  std::optional<int> dim;
  int sigma = 0;
  std::optional<int> rank;
  std::string graph_class;
};

InvariantRow invariant_row(const Graph& g);
std::string csv_header();
std::string to_csv(const InvariantRow& row);
std::string to_json(const InvariantRow& row);

inline constexpr int kReportSchemaVersion = 1;

/// Report as JSON; wall time is omitted when include_timing is false.
std::string to_json(const ScanReport& report, bool include_timing = true);
std::string to_json(const RatioSummary& summary, const std::string& family);

}  // namespace zsdl
