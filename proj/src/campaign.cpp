#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cospec/isomorphism.hpp"
#include "cospec/theorem_lab.hpp"

namespace cospec {

using nlohmann::json;

std::string to_string(CampaignMode m) {
  switch (m) {
    case CampaignMode::Exhaustive: return "exhaustive";
    case CampaignMode::Random: return "random";
    case CampaignMode::AllGraphs: return "all-graphs";
  }
  return "?";
}

CampaignMode parse_campaign_mode(const std::string& s) {
  if (s == "exhaustive") return CampaignMode::Exhaustive;
  if (s == "random") return CampaignMode::Random;
  if (s == "all-graphs") return CampaignMode::AllGraphs;
  throw std::invalid_argument("unknown campaign mode: " + s);
}

std::size_t CampaignSummary::graphs_processed() const {
  std::size_t t = 0;
  for (const auto& [_, c] : graphs_per_n) t += c;
  return t;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Outcome {
  std::string graph6;
  std::size_t n = 0;
  bool is_cograph = false;
  bool isolated = false;
  bool verbatim_mismatch = false;
  std::vector<CheckStatus> statuses;  // registry order
  std::size_t generic_mult = 0;
  std::size_t min_chains = 0;
};

Outcome evaluate(const Graph& g) {
  const GraphAnalysis a = analyze(g);
  const VerificationReport rep = verify(a);
  Outcome o;
  o.graph6 = rep.graph6;
  o.n = g.order();
  o.is_cograph = rep.is_cograph;
  o.isolated = has_isolated_vertex(g);
  if (o.is_cograph) o.verbatim_mismatch = a.spectrum.mult_zero != a.classes.duplication_excess();
  for (const auto& name : check_names()) o.statuses.push_back(rep.checks.at(name).status);
  o.generic_mult = max_multiplicity_excluding_0_minus1(a.spectrum);
  o.min_chains = a.chains.count();
  return o;
}

void check_config(const CampaignConfig& c) {
  if (c.n_min < 1 || c.n_min > c.n_max) throw std::out_of_range("campaign needs 1 <= n_min <= n_max");
  std::size_t cap = 0;
  switch (c.mode) {
    case CampaignMode::Exhaustive: cap = kExhaustiveCap; break;
    case CampaignMode::Random: cap = kRandomCap; break;
    case CampaignMode::AllGraphs: cap = kAllGraphsCap; break;
  }
  if (c.n_max > cap)
    throw std::out_of_range(to_string(c.mode) + " campaign is capped at n=" + std::to_string(cap));
}

std::vector<Graph> campaign_graphs(const CampaignConfig& c) {
  std::vector<Graph> out;
  for (std::size_t n = c.n_min; n <= c.n_max; ++n) {
    switch (c.mode) {
      case CampaignMode::Exhaustive:
        for (auto& g : enumerate_cographs(n, kExhaustiveCap)) out.push_back(std::move(g));
        break;
      case CampaignMode::Random:
        for (std::size_t i = 0; i < c.samples; ++i) out.push_back(random_cograph(n, sample_seed(c.seed, n, i)));
        break;
      case CampaignMode::AllGraphs:
        for (auto& g : enumerate_graphs(n)) out.push_back(std::move(g));
        break;
    }
  }
  return out;
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t seed, std::size_t n, std::size_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ n) ^ index);
}

CampaignSummary run_campaign(const CampaignConfig& config) {
  check_config(config);
  const std::vector<Graph> graphs = campaign_graphs(config);
  std::vector<Outcome> outcomes(graphs.size());

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_index = graphs.size();
  std::string error_message;
  const auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        outcomes[i] = evaluate(graphs[i]);
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error_message = e.what();
        }
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(config.workers, graphs.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error_index < graphs.size())
    throw std::runtime_error("campaign aborted on " + write_graph6(graphs[error_index]) + ": " + error_message);

  CampaignSummary s;
  s.config = config;
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    s.graphs_per_n[n] = 0;
    s.cographs_per_n[n] = 0;
  }
  const auto& names = check_names();
  for (const auto& name : names) s.tallies[name] = {};
  for (const auto& o : outcomes) {
    ++s.graphs_per_n[o.n];
    if (o.is_cograph) ++s.cographs_per_n[o.n];
    if (o.is_cograph && o.isolated) ++s.cographs_with_isolated;
    if (o.verbatim_mismatch) {
      ++s.verbatim_mismatches;
      if (!o.isolated) ++s.verbatim_mismatches_without_isolated;
    }
    for (std::size_t k = 0; k < names.size(); ++k) {
      auto& t = s.tallies[names[k]];
      switch (o.statuses[k]) {
        case CheckStatus::Pass: ++t.pass; break;
        case CheckStatus::Fail:
          ++t.fail;
          s.failures.push_back({o.graph6, names[k]});
          break;
        case CheckStatus::NotApplicable: ++t.not_applicable; break;
        case CheckStatus::Counterexample:
          ++t.counterexample;
          s.counterexamples.push_back({o.graph6, o.generic_mult, o.min_chains});
          break;
      }
    }
  }
  std::sort(s.failures.begin(), s.failures.end());
  std::sort(s.counterexamples.begin(), s.counterexamples.end());
  return s;
}

namespace {

json summary_body(const CampaignSummary& s) {
  json config = {{"n_min", s.config.n_min}, {"n_max", s.config.n_max}, {"mode", to_string(s.config.mode)}};
  if (s.config.mode == CampaignMode::Random) {
    config["samples"] = s.config.samples;
    config["seed"] = s.config.seed;
  }
  json per_n = json::object();
  for (const auto& [n, c] : s.graphs_per_n)
    per_n[std::to_string(n)] = {{"graphs", c}, {"cographs", s.cographs_per_n.at(n)}};
  json checks = json::object();
  for (const auto& [name, t] : s.tallies)
    checks[name] = {{"pass", t.pass}, {"fail", t.fail}, {"n/a", t.not_applicable}, {"counterexample", t.counterexample}};
  json failures = json::array();
  for (const auto& f : s.failures) failures.push_back({{"graph6", f.graph6}, {"check", f.check}});
  json cex = json::array();
  for (const auto& c : s.counterexamples)
    cex.push_back({{"graph6", c.graph6}, {"max_multiplicity", c.max_multiplicity}, {"min_chains", c.min_chains}});
  return {{"version", kVersion},
          {"config", config},
          {"graphs_processed", s.graphs_processed()},
          {"per_n", per_n},
          {"checks", checks},
          {"failures", failures},
          {"conjecture", {{"counterexamples", cex}, {"status", cex.empty() ? "no counterexample" : "counterexample found"}}},
          {"verbatim_zero_formula",
           {{"mismatches", s.verbatim_mismatches},
            {"mismatches_without_isolated_vertex", s.verbatim_mismatches_without_isolated},
            {"cographs_with_isolated_vertex", s.cographs_with_isolated}}}};
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::string summary_hash(const CampaignSummary& s) { return fnv1a_hex(summary_body(s).dump()); }

json to_json(const CampaignSummary& s) {
  json j = summary_body(s);
  j["hash"] = fnv1a_hex(j.dump());
  return j;
}

std::string to_text(const CampaignSummary& s) {
  std::ostringstream out;
  out << "campaign " << to_string(s.config.mode) << " n=" << s.config.n_min << ".." << s.config.n_max;
  if (s.config.mode == CampaignMode::Random) out << " samples=" << s.config.samples << " seed=" << s.config.seed;
  out << "\n";
  out << "graphs processed: " << s.graphs_processed() << "\n";
  for (const auto& [n, c] : s.graphs_per_n) out << "  n=" << n << ": " << c << " graphs, " << s.cographs_per_n.at(n) << " cographs\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-28s %8s %8s %8s %8s\n", "check", "pass", "fail", "n/a", "cex");
  out << line;
  for (const auto& [name, t] : s.tallies) {
    std::snprintf(line, sizeof line, "%-28s %8zu %8zu %8zu %8zu\n", name.c_str(), t.pass, t.fail, t.not_applicable,
                  t.counterexample);
    out << line;
  }
  out << "failures: " << s.failures.size() << "\n";
  for (const auto& f : s.failures) out << "  " << f.graph6 << " " << f.check << "\n";
  out << "conjecture counterexamples: " << s.counterexamples.size() << "\n";
  for (const auto& c : s.counterexamples)
    out << "  " << c.graph6 << " multiplicity " << c.max_multiplicity << " > chains " << c.min_chains << "\n";
  out << "uncorrected zero-multiplicity formula misses: " << s.verbatim_mismatches << " (without isolated vertex: "
      << s.verbatim_mismatches_without_isolated << ")\n";
  out << "hash: " << summary_hash(s) << "\n";
  return out.str();
}

}  // namespace cospec
