#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "cospec/cograph.hpp"
#include "cospec/graph.hpp"
#include "cospec/theorem_lab.hpp"

namespace cospec::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string graph6;
  std::string file;
};

std::vector<Graph> read_graphs(const GraphInput& input, std::istream& in) {
  const bool have_inline = !input.graph6.empty();
  const bool have_file = !input.file.empty();
  if (have_inline && have_file) throw UsageError("give either a graph6 string or --file, not both");

  std::vector<std::string> lines;
  if (have_inline) {
    lines.push_back(input.graph6);
  } else {
    std::ifstream file;
    std::istream* src = &in;
    if (have_file && input.file != "-") {
      file.open(input.file);
      if (!file) throw UsageError("cannot open " + input.file);
      src = &file;
    }
    for (std::string line; std::getline(*src, line);) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (!line.empty()) lines.push_back(line);
    }
  }

  std::vector<Graph> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      out.push_back(parse_graph6(lines[i]));
    } catch (const ParseError& e) {
      throw UsageError("graph6 parse error on input line " + std::to_string(i + 1) + ", " + e.what());
    }
  }
  if (out.empty()) throw UsageError("no graph given");
  return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto parse_number = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw UsageError("bad n range: " + text);
    return static_cast<std::size_t>(std::stoul(s));
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto n = parse_number(text);
    return {n, n};
  }
  return {parse_number(text.substr(0, dots)), parse_number(text.substr(dots + 2))};
}

std::size_t default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int exit_code(bool failure, bool counterexample) {
  if (failure) return kExitCheckFailure;
  if (counterexample) return kExitCounterexample;
  return kExitOk;
}

std::string join_vertices(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

std::string classes_text(const std::vector<VertexClass>& cs) {
  if (cs.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? " " : "") + std::string("{") + join_vertices(cs[i]) + "}";
  return s;
}

void write_analysis_text(const GraphAnalysis& a, const VerificationReport& rep, std::ostream& out) {
  out << "graph6: " << rep.graph6 << "\n";
  out << "n=" << a.order_n() << " edges=" << a.graph.edge_count() << " cograph=" << (a.is_cograph() ? "yes" : "no")
      << "\n";
  if (a.cotree) out << "cotree: " << to_string(*a.cotree) << "\n";
  if (a.p4) out << "P4 witness: " << join_vertices({a.p4->path.begin(), a.p4->path.end()}) << "\n";
  out << "duplication classes: " << classes_text(a.classes.duplication) << "\n";
  out << "coduplication classes: " << classes_text(a.classes.coduplication) << "\n";
  out << "min chains: " << a.chains.count() << "\n";
  out << "char poly: " << a.char_poly.to_string() << "\n";
  out << "mult(0)=" << a.spectrum.mult_zero << " mult(-1)=" << a.spectrum.mult_minus_one << "\n";
  for (const auto& r : a.spectrum.records) out << "  factor " << r.factor.to_string() << " ^" << r.multiplicity << "\n";
  out << "checks:\n";
  for (const auto& name : check_names()) out << "  " << name << ": " << to_string(rep.checks.at(name).status) << "\n";
}

int cmd_analyze(const GraphInput& input, const std::string& format, bool timing, std::istream& in,
                std::ostream& out) {
  const auto graphs = read_graphs(input, in);
  bool failure = false, counterexample = false;
  for (const auto& g : graphs) {
    const GraphAnalysis a = analyze(g);
    const VerificationReport rep = verify(a);
    failure |= rep.has_failure();
    counterexample |= rep.has_counterexample();
    if (format == "text") {
      write_analysis_text(a, rep, out);
      continue;
    }
    auto j = to_json(rep, std::nullopt, timing);
    j["analysis"] = describe(a);
    out << (graphs.size() == 1 ? j.dump(2) : j.dump()) << "\n";
  }
  return exit_code(failure, counterexample);
}

int cmd_cotree(const GraphInput& input, std::istream& in, std::ostream& out) {
  for (const auto& g : read_graphs(input, in)) {
    if (g.order() == 0) throw UsageError("the empty graph has no cotree");
    const auto t = build_cotree(g);
    if (const auto* tree = std::get_if<Cotree>(&t))
      out << to_string(*tree) << "\n";
    else
      out << "P4 witness: " << join_vertices({std::get<P4Witness>(t).path.begin(), std::get<P4Witness>(t).path.end()})
          << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(std::size_t n, bool count_only, const std::string& format, std::size_t cap, std::ostream& out) {
  if (n == 0 || n > cap) throw UsageError("enumerate needs 1 <= n <= " + std::to_string(cap));
  if (count_only) {
    out << count_cographs(n, cap) << "\n";
    return kExitOk;
  }
  for_each_cotree(
      n,
      [&](const Cotree& t) { out << (format == "cotree" ? to_string(t) : write_graph6(cotree_to_graph(t))) << "\n"; },
      cap);
  return kExitOk;
}

int cmd_verify(const std::string& range, const std::string& mode, std::size_t samples, std::uint64_t seed,
               std::size_t workers, const std::string& format, std::ostream& out) {
  CampaignConfig config;
  std::tie(config.n_min, config.n_max) = parse_range(range);
  try {
    config.mode = parse_campaign_mode(mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  config.samples = samples;
  config.seed = seed;
  config.workers = workers == 0 ? default_workers() : workers;
  CampaignSummary summary;
  try {
    summary = run_campaign(config);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  if (format == "text")
    out << to_text(summary);
  else
    out << to_json(summary).dump(2) << "\n";
  return exit_code(!summary.failures.empty(), !summary.counterexamples.empty());
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral verification toolkit for cographs", "cospec"};
  app.require_subcommand(1);

  GraphInput analyze_input;
  std::string analyze_format = "json";
  bool analyze_timing = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report structure, spectrum and every check for graphs");
  analyze_cmd->add_option("graph6", analyze_input.graph6, "graph6 string");
  analyze_cmd->add_option("--file", analyze_input.file, "newline-delimited graph6 file, - for stdin");
  analyze_cmd->add_option("--format", analyze_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  analyze_cmd->add_flag("--timing", analyze_timing, "include per-check timings in JSON");

  GraphInput cotree_input;
  auto* cotree_cmd = app.add_subcommand("cotree", "Print the cotree or an induced P4");
  cotree_cmd->add_option("graph6", cotree_input.graph6, "graph6 string");
  cotree_cmd->add_option("--file", cotree_input.file, "newline-delimited graph6 file, - for stdin");

  std::size_t enum_n = 0;
  bool enum_count = false;
  std::string enum_format = "graph6";
  std::size_t enum_cap = kDefaultEnumerationCap;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List cographs on n vertices up to isomorphism");
  enumerate_cmd->add_option("n", enum_n, "vertex count")->required();
  enumerate_cmd->add_flag("--count-only", enum_count, "print only the number of cographs");
  enumerate_cmd->add_option("--format", enum_format, "graph6 or cotree")->check(CLI::IsMember({"graph6", "cotree"}));
  enumerate_cmd->add_option("--cap", enum_cap, "largest n accepted");

  std::string verify_range = "1..8";
  std::string verify_mode = "exhaustive";
  std::size_t verify_samples = 100;
  std::uint64_t verify_seed = 0;
  std::size_t verify_workers = 0;
  std::string verify_format = "json";
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification campaign");
  verify_cmd->add_option("--n", verify_range, "vertex count or range a..b");
  verify_cmd->add_option("--mode", verify_mode, "exhaustive, random or all-graphs")
      ->check(CLI::IsMember({"exhaustive", "random", "all-graphs"}));
  verify_cmd->add_option("--samples", verify_samples, "random graphs per n");
  verify_cmd->add_option("--seed", verify_seed, "random seed");
  verify_cmd->add_option("--workers", verify_workers, std::string("worker threads (default $") + kWorkersEnv +
                                                          " or hardware concurrency)");
  verify_cmd->add_option("--format", verify_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_input, analyze_format, analyze_timing, in, out);
    if (*cotree_cmd) return cmd_cotree(cotree_input, in, out);
    if (*enumerate_cmd) return cmd_enumerate(enum_n, enum_count, enum_format, enum_cap, out);
    if (*verify_cmd)
      return cmd_verify(verify_range, verify_mode, verify_samples, verify_seed, verify_workers, verify_format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cospec::cli
