#pragma once

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cospec/cograph.hpp"
#include "cospec/graph.hpp"
#include "cospec/neighborhood_order.hpp"
#include "cospec/spectral.hpp"

namespace cospec {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr double kInterlacingTolerance = 1e-6;

enum class CheckStatus { Pass, Fail, NotApplicable, Counterexample };

std::string to_string(CheckStatus s);

struct CheckRecord {
  CheckStatus status = CheckStatus::NotApplicable;
  nlohmann::json expected;
  nlohmann::json actual;
  // Set on every non-passing record.
  nlohmann::json witness;
};

// Everything the checks read, computed once per graph.
struct GraphAnalysis {
  Graph graph;
  std::optional<Cotree> cotree;
  std::optional<P4Witness> p4;
  ClassPartition classes;
  QuotientOrder order;
  ChainCover chains;
  ExactPoly char_poly;
  MultiplicitySpectrum spectrum;
  std::size_t rank_zero_shift = 0;
  std::size_t rank_unit_shift = 0;

  bool is_cograph() const { return !p4.has_value(); }
  std::size_t order_n() const { return graph.order(); }
};

GraphAnalysis analyze(const Graph& g);

// Largest multiplicity among eigenvalues other than 0 and -1 (0 if none).
std::size_t max_multiplicity_excluding_0_minus1(const MultiplicitySpectrum& s);
// Largest multiplicity of any eigenvalue (0 for the empty graph).
std::size_t max_multiplicity(const MultiplicitySpectrum& s);

CheckRecord check_interval_theorem(const GraphAnalysis& a);
CheckRecord check_no_intersect(const GraphAnalysis& a);
CheckRecord check_dup_codup_pair(const GraphAnalysis& a);
CheckRecord check_cotree_round_trip(const GraphAnalysis& a);
CheckRecord check_multiplicity_formulas(const GraphAnalysis& a);
CheckRecord check_rank_law(const GraphAnalysis& a);
CheckRecord check_rank_cross_check(const GraphAnalysis& a);
CheckRecord check_spectrum_real(const GraphAnalysis& a);
CheckRecord check_mult_bounds(const GraphAnalysis& a);
CheckRecord check_threshold_simple(const GraphAnalysis& a);
CheckRecord check_threshold_characterization(const GraphAnalysis& a);
CheckRecord check_conjecture(const GraphAnalysis& a);
CheckRecord check_interlacing(const GraphAnalysis& a);

// Stable check names in report order.
const std::vector<std::string>& check_names();
CheckRecord run_check(const std::string& name, const GraphAnalysis& a);
CheckRecord run_check(const std::string& name, const Graph& g);

struct VerificationReport {
  std::string graph6;
  bool is_cograph = false;
  std::map<std::string, CheckRecord> checks;
  std::map<std::string, double> timing_us;

  bool has_failure() const;
  bool has_counterexample() const;
};

VerificationReport verify(const GraphAnalysis& a);
VerificationReport verify(const Graph& g);

nlohmann::json to_json(const CheckRecord& r);
// {graph6, is_cograph, checks, meta:{version, seed, timing_us}}.
nlohmann::json to_json(const VerificationReport& r, std::optional<std::uint64_t> seed = std::nullopt,
                       bool include_timing = false);

// The structural part of an analysis: cotree or witness, classes, quotient
// order, chain cover, characteristic polynomial, multiplicity spectrum.
nlohmann::json describe(const GraphAnalysis& a);

enum class CampaignMode { Exhaustive, Random, AllGraphs };

std::string to_string(CampaignMode m);
CampaignMode parse_campaign_mode(const std::string& s);

inline constexpr std::size_t kExhaustiveCap = 12;
inline constexpr std::size_t kRandomCap = 64;

struct CampaignConfig {
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  CampaignMode mode = CampaignMode::Exhaustive;
  std::size_t samples = 100;  // per n, random mode only
  std::uint64_t seed = 0;
  std::size_t workers = 1;
};

struct CheckTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;
  std::size_t counterexample = 0;

  std::size_t total() const { return pass + fail + not_applicable + counterexample; }
  bool operator==(const CheckTally&) const = default;
};

struct CampaignFailure {
  std::string graph6;
  std::string check;
  auto operator<=>(const CampaignFailure&) const = default;
};

struct ConjectureCounterexample {
  std::string graph6;
  std::size_t max_multiplicity = 0;
  std::size_t min_chains = 0;
  auto operator<=>(const ConjectureCounterexample&) const = default;
};

struct CampaignSummary {
  CampaignConfig config;
  std::map<std::size_t, std::size_t> graphs_per_n;
  std::map<std::size_t, std::size_t> cographs_per_n;
  std::map<std::string, CheckTally> tallies;
  std::vector<CampaignFailure> failures;  // sorted
  std::vector<ConjectureCounterexample> counterexamples;  // sorted
  // Cographs where the uncorrected zero-multiplicity formula misses, and how
  // many of those have no isolated vertex.
  std::size_t verbatim_mismatches = 0;
  std::size_t verbatim_mismatches_without_isolated = 0;
  std::size_t cographs_with_isolated = 0;

  std::size_t graphs_processed() const;
};

// Samples are derived from (seed, n, index) so results do not depend on the
// worker count. Throws std::out_of_range when the range exceeds the caps.
CampaignSummary run_campaign(const CampaignConfig& config);

std::uint64_t sample_seed(std::uint64_t seed, std::size_t n, std::size_t index);

// Worker count and timing are excluded so summaries compare byte for byte.
nlohmann::json to_json(const CampaignSummary& s);
std::string summary_hash(const CampaignSummary& s);
std::string to_text(const CampaignSummary& s);

}  // namespace cospec
