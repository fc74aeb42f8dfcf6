#include "cospec/theorem_lab.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <utility>

namespace cospec {

using nlohmann::json;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "n/a";
    case CheckStatus::Counterexample: return "counterexample";
  }
  return "?";
}

GraphAnalysis analyze(const Graph& g) {
  GraphAnalysis a;
  a.graph = g;
  a.p4 = find_induced_p4(g);
  if (!a.p4 && g.order() > 0) {
    auto t = build_cotree(g);
    if (!std::holds_alternative<Cotree>(t)) throw std::logic_error("cotree construction disagrees with P4 search");
    a.cotree = std::get<Cotree>(std::move(t));
  }
  a.classes = class_partition(g);
  a.order = build_order(g);
  a.chains = min_chain_cover(a.order);
  a.char_poly = char_poly(g);
  a.spectrum = square_free_decomposition(a.char_poly);
  a.rank_zero_shift = rank_exact(g, 0);
  a.rank_unit_shift = rank_exact(g, 1);
  return a;
}

namespace {

// Part of a square-free factor whose roots avoid 0 and -1.
ExactPoly generic_part(const ExactPoly& f) { return strip_root(strip_root(f, 0), -1); }

json factors_json(const MultiplicitySpectrum& s) {
  json out = json::array();
  for (const auto& r : s.records)
    out.push_back({{"factor", r.factor.to_string()},
                   {"coefficients", r.factor.to_decimal_strings()},
                   {"multiplicity", r.multiplicity}});
  return out;
}

json classes_json(const std::vector<VertexClass>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(c);
  return out;
}

json positions_to_vertices(const QuotientOrder& q, const std::vector<std::size_t>& pos) {
  json out = json::array();
  for (auto p : pos) out.push_back(q.representatives()[p]);
  return out;
}

json chains_json(const GraphAnalysis& a) {
  json chains = json::array();
  for (const auto& c : a.chains.chains) chains.push_back(positions_to_vertices(a.order, c));
  return {{"count", a.chains.count()}, {"chains", chains}, {"antichain", positions_to_vertices(a.order, a.chains.antichain)}};
}

CheckRecord na() { return CheckRecord{}; }

CheckRecord verdict(bool ok, json expected, json actual, json witness) {
  CheckRecord r;
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  r.expected = std::move(expected);
  r.actual = std::move(actual);
  if (!ok) r.witness = std::move(witness);
  return r;
}

bool threshold_by_order(const GraphAnalysis& a) { return a.chains.count() <= 1; }

}  // namespace

std::size_t max_multiplicity_excluding_0_minus1(const MultiplicitySpectrum& s) {
  std::size_t m = 0;
  for (const auto& r : s.records)
    if (generic_part(r.factor).degree() > 0) m = std::max(m, r.multiplicity);
  return m;
}

std::size_t max_multiplicity(const MultiplicitySpectrum& s) {
  std::size_t m = 0;
  for (const auto& r : s.records) m = std::max(m, r.multiplicity);
  return m;
}

CheckRecord check_interval_theorem(const GraphAnalysis& a) {
  const std::size_t count = count_eigs_open_interval(a.spectrum, -1, 0);
  if (a.is_cograph()) {
    return verdict(count == 0, {{"count", 0}}, {{"count", count}},
                   {{"interval", {-1, 0}}, {"count", count}, {"factors", factors_json(a.spectrum)}});
  }
  const auto& path = a.p4->path;
  const Graph sub = induced_subgraph(a.graph, path);
  const std::size_t sub_count = count_eigs_open_interval(sub, -1, 0);
  return verdict(sub_count == 1, {{"p4_count", 1}}, {{"p4", path}, {"p4_count", sub_count}, {"count", count}},
                 {{"p4", path}, {"p4_count", sub_count}, {"p4_char_poly", char_poly(sub).to_string()}});
}

CheckRecord check_no_intersect(const GraphAnalysis& a) {
  if (!a.is_cograph()) return na();
  const bool meet = a.classes.kinds_intersect();
  return verdict(!meet, {{"intersect", false}}, {{"intersect", meet}},
                 {{"duplication", classes_json(a.classes.duplication)},
                  {"coduplication", classes_json(a.classes.coduplication)}});
}

CheckRecord check_dup_codup_pair(const GraphAnalysis& a) {
  if (!a.is_cograph() || a.order_n() < 2) return na();
  const std::size_t l = a.classes.class_count();
  return verdict(l >= 1, {{"min_class_count", 1}}, {{"class_count", l}}, {{"class_count", l}});
}

CheckRecord check_cotree_round_trip(const GraphAnalysis& a) {
  if (!a.cotree) return na();
  bool valid = true;
  try {
    validate_cotree(*a.cotree);
  } catch (const std::invalid_argument&) {
    valid = false;
  }
  const bool same = cotree_to_graph(*a.cotree) == a.graph;
  return verdict(valid && same, {{"valid", true}, {"same_graph", true}}, {{"valid", valid}, {"same_graph", same}},
                 {{"cotree", to_string(*a.cotree)}});
}

CheckRecord check_multiplicity_formulas(const GraphAnalysis& a) {
  if (!a.is_cograph()) return na();
  const std::size_t dup = a.classes.duplication_excess();
  const std::size_t codup = a.classes.coduplication_excess();
  const std::size_t iso = has_isolated_vertex(a.graph) ? 1 : 0;
  const std::size_t z = a.spectrum.mult_zero;
  const std::size_t m1 = a.spectrum.mult_minus_one;
  const bool ok = z == dup + iso && m1 == codup;
  return verdict(ok, {{"mult_zero", dup + iso}, {"mult_minus_one", codup}, {"mult_zero_verbatim", dup}},
                 {{"mult_zero", z}, {"mult_minus_one", m1}, {"verbatim_formula_holds", z == dup}},
                 {{"duplication", classes_json(a.classes.duplication)},
                  {"coduplication", classes_json(a.classes.coduplication)},
                  {"isolated_vertex", iso == 1},
                  {"factors", factors_json(a.spectrum)}});
}

CheckRecord check_rank_law(const GraphAnalysis& a) {
  if (!a.is_cograph()) return na();
  const std::size_t rows = distinct_nonzero_rows(a.graph);
  return verdict(a.rank_zero_shift == rows, {{"rank", rows}}, {{"rank", a.rank_zero_shift}},
                 {{"distinct_nonzero_rows", rows}, {"rank", a.rank_zero_shift}});
}

CheckRecord check_rank_cross_check(const GraphAnalysis& a) {
  const std::size_t n = a.order_n();
  const std::size_t nz = n - a.rank_zero_shift;
  const std::size_t nm = n - a.rank_unit_shift;
  const bool ok = nz == a.spectrum.mult_zero && nm == a.spectrum.mult_minus_one;
  return verdict(ok, {{"mult_zero", nz}, {"mult_minus_one", nm}},
                 {{"mult_zero", a.spectrum.mult_zero}, {"mult_minus_one", a.spectrum.mult_minus_one}},
                 {{"rank", a.rank_zero_shift}, {"rank_plus_identity", a.rank_unit_shift},
                  {"factors", factors_json(a.spectrum)}});
}

CheckRecord check_spectrum_real(const GraphAnalysis& a) {
  const long n = static_cast<long>(a.order_n());
  const std::size_t inside = count_eigs_open_interval(a.spectrum, BigInt(-n - 1), BigInt(n + 1));
  return verdict(inside == a.order_n(), {{"count", n}}, {{"count", inside}},
                 {{"interval", {-n - 1, n + 1}}, {"factors", factors_json(a.spectrum)}});
}

CheckRecord check_mult_bounds(const GraphAnalysis& a) {
  if (!a.is_cograph()) return na();
  const std::size_t generic = max_multiplicity_excluding_0_minus1(a.spectrum);
  const std::size_t any = max_multiplicity(a.spectrum);
  const std::size_t classes = a.classes.class_count();
  const std::size_t verbatim_rhs = a.classes.duplication_excess() + a.classes.coduplication_excess();
  const std::size_t rhs = verbatim_rhs + (has_isolated_vertex(a.graph) ? 1 : 0);
  return verdict(generic <= classes && any <= rhs,
                 {{"class_count", classes}, {"corollary_rhs", rhs}, {"corollary_rhs_verbatim", verbatim_rhs}},
                 {{"max_multiplicity_generic", generic},
                  {"max_multiplicity", any},
                  {"corollary_verbatim_holds", any <= verbatim_rhs}},
                 {{"factors", factors_json(a.spectrum)},
                  {"duplication", classes_json(a.classes.duplication)},
                  {"coduplication", classes_json(a.classes.coduplication)}});
}

CheckRecord check_threshold_simple(const GraphAnalysis& a) {
  if (!threshold_by_order(a)) return na();
  const std::size_t generic = max_multiplicity_excluding_0_minus1(a.spectrum);
  return verdict(generic <= 1, {{"max_multiplicity_generic", 1}}, {{"max_multiplicity_generic", generic}},
                 {{"factors", factors_json(a.spectrum)}});
}

CheckRecord check_threshold_characterization(const GraphAnalysis& a) {
  const bool by_order = threshold_by_order(a);
  const bool by_definition = a.is_cograph() && is_split(a.graph);
  return verdict(by_order == by_definition, {{"cograph_and_split", by_definition}}, {{"total_order", by_order}},
                 {{"chain_cover", chains_json(a)}, {"split", is_split(a.graph)}});
}

CheckRecord check_conjecture(const GraphAnalysis& a) {
  if (!a.is_cograph()) return na();
  const std::size_t generic = max_multiplicity_excluding_0_minus1(a.spectrum);
  const std::size_t k = a.chains.count();
  CheckRecord r;
  r.expected = {{"min_chains", k}};
  r.actual = {{"max_multiplicity_generic", generic}};
  if (generic <= k) {
    r.status = CheckStatus::Pass;
  } else {
    r.status = CheckStatus::Counterexample;
    r.witness = {{"chain_cover", chains_json(a)}, {"factors", factors_json(a.spectrum)}};
  }
  return r;
}

CheckRecord check_interlacing(const GraphAnalysis& a) {
  const std::size_t n = a.order_n();
  if (n < 2) return na();
  const auto lambda = numeric_eigenvalues(a.graph);
  std::size_t violations = 0;
  json first_violation;
  for (Vertex v = 0; v < n; ++v) {
    VertexSet removed(n);
    removed.set(v);
    const auto mu = numeric_eigenvalues(delete_vertices(a.graph, removed));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const bool ok = lambda[i] >= mu[i] - kInterlacingTolerance && mu[i] >= lambda[i + 1] - kInterlacingTolerance;
      if (!ok && violations++ == 0)
        first_violation = {{"deleted_vertex", v}, {"index", i}, {"lambda", lambda}, {"mu", mu}};
    }
  }
  return verdict(violations == 0, {{"violations", 0}}, {{"violations", violations}, {"deletions", n}},
                 first_violation);
}

namespace {

using CheckFn = CheckRecord (*)(const GraphAnalysis&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r{
      {"interval_theorem", &check_interval_theorem},
      {"no_intersect", &check_no_intersect},
      {"dup_codup_pair", &check_dup_codup_pair},
      {"cotree_round_trip", &check_cotree_round_trip},
      {"multiplicity_formulas", &check_multiplicity_formulas},
      {"rank_law", &check_rank_law},
      {"rank_cross_check", &check_rank_cross_check},
      {"spectrum_real", &check_spectrum_real},
      {"mult_bounds", &check_mult_bounds},
      {"threshold_simple", &check_threshold_simple},
      {"threshold_characterization", &check_threshold_characterization},
      {"conjecture", &check_conjecture},
      {"interlacing", &check_interlacing},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, _] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

CheckRecord run_check(const std::string& name, const GraphAnalysis& a) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(a);
  throw std::invalid_argument("unknown check: " + name);
}

CheckRecord run_check(const std::string& name, const Graph& g) { return run_check(name, analyze(g)); }

bool VerificationReport::has_failure() const {
  return std::any_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.status == CheckStatus::Fail; });
}

bool VerificationReport::has_counterexample() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const auto& kv) { return kv.second.status == CheckStatus::Counterexample; });
}

VerificationReport verify(const GraphAnalysis& a) {
  VerificationReport rep;
  rep.graph6 = write_graph6(a.graph);
  rep.is_cograph = a.is_cograph();
  for (const auto& [name, fn] : registry()) {
    const auto start = std::chrono::steady_clock::now();
    rep.checks[name] = fn(a);
    const std::chrono::duration<double, std::micro> took = std::chrono::steady_clock::now() - start;
    rep.timing_us[name] = took.count();
  }
  return rep;
}

VerificationReport verify(const Graph& g) { return verify(analyze(g)); }

json to_json(const CheckRecord& r) {
  return {{"status", to_string(r.status)}, {"expected", r.expected}, {"actual", r.actual}, {"witness", r.witness}};
}

json to_json(const VerificationReport& r, std::optional<std::uint64_t> seed, bool include_timing) {
  json checks = json::object();
  for (const auto& [name, rec] : r.checks) checks[name] = to_json(rec);
  json meta = {{"version", kVersion}, {"seed", seed ? json(*seed) : json(nullptr)}};
  if (include_timing) meta["timing_us"] = r.timing_us;
  return {{"graph6", r.graph6}, {"is_cograph", r.is_cograph}, {"checks", checks}, {"meta", meta}};
}

json describe(const GraphAnalysis& a) {
  json d;
  d["n"] = a.order_n();
  d["edges"] = a.graph.edge_count();
  if (a.cotree) d["cotree"] = to_string(*a.cotree);
  if (a.p4) d["p4_witness"] = a.p4->path;
  d["duplication_classes"] = classes_json(a.classes.duplication);
  d["coduplication_classes"] = classes_json(a.classes.coduplication);
  d["equivalence_classes"] = classes_json(a.order.classes());
  json less = json::array();
  const auto& reps = a.order.representatives();
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (a.order.less(i, j)) less.push_back({reps[i], reps[j]});
  d["quotient_order"] = {{"representatives", reps}, {"less", less}};
  d["chain_cover"] = chains_json(a);
  d["is_threshold"] = threshold_by_order(a);
  d["char_poly"] = {{"text", a.char_poly.to_string()}, {"coefficients", a.char_poly.to_decimal_strings()}};
  d["spectrum"] = {{"factors", factors_json(a.spectrum)},
                   {"mult_zero", a.spectrum.mult_zero},
                   {"mult_minus_one", a.spectrum.mult_minus_one}};
  d["rank"] = a.rank_zero_shift;
  d["rank_plus_identity"] = a.rank_unit_shift;
  return d;
}

}  // namespace cospec
