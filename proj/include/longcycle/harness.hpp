#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "longcycle/aux_graph.hpp"
#include "longcycle/corpus.hpp"
#include "longcycle/exchange.hpp"

namespace longcycle {

using json = nlohmann::json;

// --- serialization -----------------------------------------------------------

json to_json(const Cycle& c);
/// {"length", "count", "truncated", "cycles"}
json to_json(const CycleSet& cs);
json to_json(const PathFamily& family);
/// {"cut", "m", "bound", "paths", "bound_satisfied"} plus "common" and "degenerate".
json to_json(const XYSeparatorReport& rep);
/// {"m", "edges", "endpoints"}; endpoints maps "i,j" to [u, v].
json to_json(const AuxGraph& f);
/// {"00": n, "01": n, "10": n, "11": n}, keyed alpha then beta.
json to_json(const TypeCensus& census);
json to_json(const SupersaturationReport& rep);
json to_json(const WinningCertificate& cert);
json to_json(const Improvement& imp);

/// Parses "v0,v1,...,vk" (commas or whitespace) into a cycle of g.
Cycle parse_cycle(const Graph& g, const std::string& text);

// --- single-instance checks --------------------------------------------------

enum class Status { Pass, Fail, Inconclusive, Skipped, Observation };
std::string to_string(Status s);

struct BabaiOutcome {
  Status status = Status::Skipped;
  int c = 0;
  double bound = 0.0;  // sqrt(3n)
  std::string note;
};

/// c(G) >= sqrt(3n) for a connected vertex-transitive g on n >= 3 vertices.
/// Throws InvalidArgument when g is not such a graph; budget exhaustion gives
/// an inconclusive outcome.
BabaiOutcome verify_babai(const Graph& g, const SearchOptions& opts = {});

struct SmithOutcome {
  Status status = Status::Skipped;
  int k = 0;
  int m_min = -1;       // -1 when there is a single longest cycle
  int cycles = 0;       // longest cycles examined
  bool complete = true; // false when the enumeration was cut at max_cycles
  double ratio = 0.0;   // m_min / k^{2/3}, reported only
  std::optional<std::pair<Cycle, Cycle>> witness;  // pair realizing m_min
  std::string note;
};

/// Any two longest cycles share at least k = kappa(g) vertices. Asserted for
/// k <= 8; for larger k the outcome is an observation. A truncated enumeration
/// can still fail (the pair found is genuine) but cannot pass.
SmithOutcome verify_smith(const Graph& g, int max_cycles = 2000, const SearchOptions& opts = {});

struct SeparatorBoundOutcome {
  Status status = Status::Skipped;
  int m = 0;
  int cut = 0;
  double bound = 0.0;
  XYSeparatorReport report;
};

/// |xy_separator(x, y)| <= sqrt(10) m^{3/2} + 3m/2. x and y must be longest
/// cycles of g sharing at least one vertex.
SeparatorBoundOutcome verify_separator_bound(const Graph& g, const Cycle& x, const Cycle& y);

struct DevosOutcome {
  Status status = Status::Skipped;
  int c = 0;
  int t = 0;
  int a_size = 0;
  int n = 0;
  double bound = 0.0;  // t n / |A|
  std::string note;
};

/// c(G) >= t n / |A| for a t-transversal A of a connected vertex-transitive g.
/// Throws InvalidArgument when A is not a t-transversal.
DevosOutcome verify_devos(const Graph& g, const VertexSet& a, int t, const SearchOptions& opts = {});

// --- batch runs ----------------------------------------------------------------

struct Suites {
  bool babai = false;
  bool smith = false;
  bool separator = false;
  bool devos = false;
};

/// "babai" | "smith" | "separator" | "devos" | "all"; throws InvalidArgument.
Suites parse_suites(const std::string& text);

/// Pair checks over longest-cycle pairs: separator bound, transversal
/// property of the cut, no type-(0,0) 4-cycle, non-crossing L-set, e(F)
/// bound, and no exchange improvement.
struct PairChecks {
  Status status = Status::Skipped;
  long pairs_total = 0;  // pairs of the (possibly truncated) longest-cycle list
  int pairs_checked = 0;
  bool exhaustive = false;  // every pair of a complete list was checked
  int max_m = 0;
  int max_cut = 0;
  int max_aux_edges = 0;
  double worst_cut_slack = 0.0;  // min over pairs of bound - |cut|
  long four_cycles = 0;
  std::string failed_check;  // name of the first failing check
  std::optional<std::pair<Cycle, Cycle>> witness;
  std::string note;
};

struct VerificationReport {
  std::string id;
  std::string graph6;
  int n = 0;
  int edges = 0;
  std::optional<int> degree;  // when regular
  int connectivity = 0;
  std::optional<bool> vertex_transitive;  // unset when n is above the search cap
  int c = 0;                              // 0 for forests
  int longest_count = 0;
  bool longest_truncated = false;
  std::int64_t nodes = 0;  // search nodes spent on the enumeration
  std::optional<BabaiOutcome> babai;
  std::optional<SmithOutcome> smith;
  std::optional<PairChecks> separator;
  std::optional<DevosOutcome> devos;
  std::string inconclusive;  // reason when the instance ran out of budget

  Status overall() const;
};

struct RunOptions {
  Suites suites;
  std::uint64_t seed = 0;
  int max_cycles = 2000;   // longest cycles enumerated per instance
  int max_pairs = 60;      // pairs checked per instance; sampled by seed beyond that
  int vt_cap = 64;         // largest order tested for vertex transitivity
  std::int64_t node_budget = 20'000'000;
  int jobs = 1;
};

VerificationReport verify_instance(const CorpusGraph& g, const RunOptions& opts);

/// Runs every instance; output order is the corpus order whatever `jobs` is.
std::vector<VerificationReport> run_corpus(const std::vector<CorpusGraph>& corpus, const RunOptions& opts);

json to_json(const VerificationReport& r);
/// Whole-run document: spec, seed, suites, instances, summary and status.
json report_document(const std::string& corpus_spec, const RunOptions& opts,
                     const std::vector<VerificationReport>& reports);

/// 0 all pass, 1 a theorem-backed check failed, 2 something was inconclusive.
int exit_code(const std::vector<VerificationReport>& reports);

}  // namespace longcycle
