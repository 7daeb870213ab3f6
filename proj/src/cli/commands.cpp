#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "nsg/cli.hpp"
#include "nsg/dim3.hpp"
#include "nsg/factorizations.hpp"
#include "nsg/modular.hpp"
#include "nsg/presentations.hpp"
#include "nsg/quotients.hpp"
#include "nsg/varieties.hpp"

namespace nsg::cli {

namespace {

using Handler = std::function<Json(const CommandRequest&)>;

std::string joined(const std::vector<std::string>& path) {
  std::string out;
  for (const auto& p : path) out += (out.empty() ? "" : " ") + p;
  return out;
}

void require_args(const CommandRequest& r, std::size_t lo, std::size_t hi) {
  if (r.args.size() < lo || r.args.size() > hi) {
    const std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
    fail(ErrorCode::BadInput, "'" + joined(r.path) + "' takes " + want + " positional argument(s), got " +
                                  std::to_string(r.args.size()));
  }
}

Int parse_int(std::string_view text) {
  Int v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    fail(ErrorCode::ParseError, "expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

NumericalSemigroup semigroup_arg(const CommandRequest& r, std::size_t i) {
  const auto gens = parse_int_list(r.args.at(i));
  return NumericalSemigroup::from_generators(gens);
}

Int int_arg(const CommandRequest& r, std::size_t i) { return parse_int(r.args.at(i)); }

std::optional<std::string> flag(const CommandRequest& r, const std::string& name) {
  auto it = r.flags.find(name);
  if (it == r.flags.end()) return std::nullopt;
  return it->second;
}

Int int_flag(const CommandRequest& r, const std::string& name) {
  auto v = flag(r, name);
  if (!v) fail(ErrorCode::BadInput, "'" + joined(r.path) + "' needs --" + name);
  return parse_int(*v);
}

Json semigroup_summary(const NumericalSemigroup& s) {
  Json j = to_json(s);
  j["classification"] = std::string(to_string(classify(s)));
  return j;
}

std::vector<Json> gens_list(const SemigroupList& xs) {
  std::vector<Json> out;
  for (const auto& s : xs) out.push_back(s.min_gens());
  return out;
}

variety::VarietyPredicate variety_flag(const CommandRequest& r) {
  const auto v = flag(r, "variety").value_or("all");
  if (v == "all") return variety::all_semigroups();
  if (v == "arf") return variety::arf_variety();
  if (v == "saturated" || v == "sat") return variety::saturated_variety();
  fail(ErrorCode::BadInput, "unknown variety '" + v + "' (all, arf, saturated)");
}

variety::EnumOptions enum_options(const CommandRequest& r) {
  variety::EnumOptions o;
  o.jobs = std::max(1u, r.jobs);
  o.budget_ms = r.budget_ms;
  if (auto isa = flag(r, "isa")) {
    if (*isa == "scalar") o.isa = simd::Isa::Scalar;
    else if (*isa == "avx2") o.isa = simd::Isa::Avx2;
    else if (*isa == "neon") o.isa = simd::Isa::Neon;
    else fail(ErrorCode::BadInput, "unknown ISA '" + *isa + "'");
  }
  return o;
}

// --- core -------------------------------------------------------------------

Json cmd_info(const CommandRequest& r) {
  require_args(r, 1, 1);
  const auto s = semigroup_arg(r, 0);
  const auto rep = invariant_report(s);
  Json j;
  j["min_gens"] = s.min_gens();
  j["multiplicity"] = rep.multiplicity;
  j["embedding_dimension"] = rep.embedding_dimension;
  j["frobenius"] = rep.frobenius;
  j["genus"] = rep.genus;
  j["type"] = rep.type;
  j["pf"] = rep.pseudo_frobenius;
  j["classification"] = std::string(to_string(classify(s)));
  j["wilf"] = Json{{"left", rep.wilf_left}, {"right", rep.wilf_right}, {"holds", rep.wilf_left <= rep.wilf_right}};
  return j;
}

Json cmd_gaps(const CommandRequest& r) {
  require_args(r, 1, 1);
  const auto s = semigroup_arg(r, 0);
  Json j;
  j["min_gens"] = s.min_gens();
  j["genus"] = s.genus();
  j["gaps"] = s.gaps();
  j["fundamental_gaps"] = fundamental_gaps(s);
  j["special_gaps"] = special_gaps(s);
  return j;
}

Json cmd_apery(const CommandRequest& r) {
  require_args(r, 1, 1);
  const auto s = semigroup_arg(r, 0);
  const Int n = flag(r, "n") ? int_flag(r, "n") : s.multiplicity();
  const auto ap = apery_set(s, n);
  Json j;
  j["min_gens"] = s.min_gens();
  j["n"] = ap.base;
  j["apery"] = ap.witnesses;
  return j;
}

// --- proportionally modular -------------------------------------------------

Json cmd_pm_solve(const CommandRequest& r) {
  require_args(r, 3, 3);
  const Int a = int_arg(r, 0), b = int_arg(r, 1), c = int_arg(r, 2);
  Json j;
  j["a"] = a;
  j["b"] = b;
  j["c"] = c;
  j["semigroup"] = semigroup_summary(modular::solve_prop_modular(a, b, c));
  return j;
}

Json cmd_pm_interval(const CommandRequest& r) {
  require_args(r, 1, 2);
  const std::string text = r.args.size() == 1 ? r.args[0] : r.args[0] + ".." + r.args[1];
  const auto interval = modular::parse_interval(text);
  Json j;
  j["interval"] = modular::to_string(interval);
  j["semigroup"] = semigroup_summary(modular::semigroup_from_interval(interval));
  return j;
}

Json cmd_pm_bezout(const CommandRequest& r) {
  require_args(r, 2, 2);
  const auto f1 = modular::parse_fraction(r.args[0]);
  const auto f2 = modular::parse_fraction(r.args[1]);
  const auto seq = modular::proper_bezout_sequence(f1, f2);
  Json terms = Json::array();
  for (const auto& t : seq.terms) terms.push_back(to_json(t));
  const auto nums = modular::numerators(seq);
  Json j;
  j["terms"] = terms;
  j["proper"] = seq.proper;
  j["numerators"] = nums;
  j["convex"] = modular::is_convex(nums);
  j["semigroup"] = NumericalSemigroup::from_generators(nums).min_gens();
  return j;
}

Json cmd_pm_recognize(const CommandRequest& r) {
  require_args(r, 1, 1);
  const auto s = semigroup_arg(r, 0);
  const auto rec = modular::is_proportionally_modular(s);
  Json j;
  j["min_gens"] = s.min_gens();
  j["verdict"] = std::string(modular::to_string(rec.verdict));
  j["witness"] = rec.witness;
  j["search_limit"] = rec.search_limit;
  return j;
}

// --- quotients --------------------------------------------------------------

Json cmd_quot(const CommandRequest& r) {
  require_args(r, 2, 2);
  const auto s = semigroup_arg(r, 0);
  const Int p = int_arg(r, 1);
  Json j;
  j["source"] = s.min_gens();
  j["p"] = p;
  j["quotient"] = semigroup_summary(quot::quotient(s, p));
  return j;
}

Json cmd_quot_doubles(const CommandRequest& r) {
  require_args(r, 1, 1);
  const auto s = semigroup_arg(r, 0);
  const Int fmax = int_flag(r, "fmax");
  const Int d = flag(r, "d") ? int_flag(r, "d") : 2;
  Json rows = Json::array();
  for (const auto& t : quot::multiples_up_to(s, d, fmax)) {
    rows.push_back(Json{{"min_gens", t.min_gens()},
                        {"frobenius", t.frobenius()},
                        {"genus", t.genus()},
                        {"classification", std::string(to_string(classify(t)))}});
  }
  Json j;
  j["source"] = s.min_gens();
  j["d"] = d;
  j["fmax"] = fmax;
  j["count"] = rows.size();
  j["rows"] = rows;
  return j;
}

Json cmd_quot_decompose(const CommandRequest& r) {
  require_args(r, 1, 1);
  const auto s = semigroup_arg(r, 0);
  const auto dec = quot::irreducible_decomposition(s);
  std::vector<Int> fs;
  for (const auto& c : dec.components) fs.push_back(c.frobenius());
  Json j;
  j["source"] = s.min_gens();
  j["components"] = gens_list(dec.components);
  j["frobenius"] = fs;
  j["minimal"] = dec.minimal;
  return j;
}

// --- varieties --------------------------------------------------------------

Json cmd_tree_count(const CommandRequest& r) {
  require_args(r, 0, 0);
  const Int g = int_flag(r, "genus");
  if (g < 0 || g > variety::kMaxTreeGenus) {
    fail(g < 0 ? ErrorCode::BadInput : ErrorCode::BudgetExceeded,
         "genus must lie in [0, " + std::to_string(variety::kMaxTreeGenus) + "]", {g});
  }
  const auto census = variety::enumerate_tree(static_cast<int>(g), variety_flag(r), enum_options(r));
  Json rows = Json::array();
  for (std::size_t i = 0; i < census.counts.size(); ++i) {
    rows.push_back(Json{{"genus", i}, {"count", census.counts[i]}});
  }
  Json j;
  j["variety"] = census.predicate_name;
  j["rows"] = rows;
  return j;
}

Json cmd_tree_list(const CommandRequest& r) {
  require_args(r, 0, 0);
  const Int g = int_flag(r, "genus");
  if (g < 0 || g > variety::kMaxTreeGenus) {
    fail(g < 0 ? ErrorCode::BadInput : ErrorCode::BudgetExceeded,
         "genus must lie in [0, " + std::to_string(variety::kMaxTreeGenus) + "]", {g});
  }
  const auto pred = variety_flag(r);
  const auto level = variety::list_tree_level(static_cast<int>(g), pred, enum_options(r));
  Json rows = Json::array();
  for (const auto& s : level) {
    rows.push_back(Json{{"min_gens", s.min_gens()}, {"frobenius", s.frobenius()}});
  }
  Json j;
  j["variety"] = pred.name;
  j["genus"] = g;
  j["count"] = level.size();
  j["rows"] = rows;
  return j;
}

Json closure_payload(const CommandRequest& r, bool arf) {
  require_args(r, 1, 1);
  const auto s = semigroup_arg(r, 0);
  const auto c = arf ? variety::arf_closure(s) : variety::saturated_closure(s);
  Json j;
  j["source"] = s.min_gens();
  j["closure"] = to_json(c);
  return j;
}

// --- presentations ----------------------------------------------------------

Json cmd_pres_minimal(const CommandRequest& r) {
  require_args(r, 1, 1);
  const auto s = semigroup_arg(r, 0);
  const auto p = pres::minimal_presentation(s);
  const auto stats = pres::presentation_stats(s);
  Json rels = Json::array();
  for (const auto& rel : p.relations) rels.push_back(to_json(rel));
  Json j;
  j["min_gens"] = s.min_gens();
  j["betti"] = pres::betti_elements(s);
  j["relations"] = rels;
  j["cardinality"] = stats.cardinality;
  j["complete_intersection"] = stats.is_complete_intersection;
  j["unique"] = stats.is_unique_minimal;
  return j;
}

Json cmd_pres_betti(const CommandRequest& r) {
  require_args(r, 1, 1);
  const auto s = semigroup_arg(r, 0);
  Json rows = Json::array();
  for (Int b : pres::betti_elements(s)) {
    const auto g = pres::betti_graph(s, b);
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
    rows.push_back(Json{{"element", b}, {"vertices", g.vertices}, {"edges", edges}, {"components", g.components}});
  }
  Json j;
  j["min_gens"] = s.min_gens();
  j["betti"] = pres::betti_elements(s);
  j["rows"] = rows;
  return j;
}

Json cmd_pres_glue(const CommandRequest& r) {
  require_args(r, 4, 4);
  const auto s1 = semigroup_arg(r, 0);
  const auto s2 = semigroup_arg(r, 1);
  const auto glued = pres::gluing(s1, s2, int_arg(r, 2), int_arg(r, 3));
  const auto stats = pres::presentation_stats(glued);
  Json j = semigroup_summary(glued);
  j["cardinality"] = stats.cardinality;
  j["complete_intersection"] = stats.is_complete_intersection;
  return j;
}

// --- dimension three --------------------------------------------------------

Json cmd_d3_sym(const CommandRequest& r) {
  require_args(r, 1, 1);
  const auto s = semigroup_arg(r, 0);
  const auto w = dim3::symmetric3_witness(s);
  Json j;
  j["min_gens"] = s.min_gens();
  j["symmetric"] = w.has_value();
  j["frobenius"] = s.frobenius();
  if (w) {
    j["witness"] = Json{{"a", w->a}, {"m1", w->m1}, {"m2", w->m2}, {"b", w->b}, {"c", w->c}};
    j["predicted_frobenius"] = w->predicted_frobenius;
  }
  return j;
}

Json cmd_d3_psym(const CommandRequest& r) {
  require_args(r, 3, 3);
  const auto t = dim3::pseudo_symmetric3_test(int_arg(r, 0), int_arg(r, 1), int_arg(r, 2));
  Json j;
  j["pseudo_symmetric"] = t.is_pseudo_symmetric;
  j["delta"] = t.delta;
  if (t.is_pseudo_symmetric) {
    j["order"] = t.order;
    j["predicted_frobenius"] = t.predicted_frobenius;
  }
  return j;
}

Json cmd_d3_rij(const CommandRequest& r) {
  require_args(r, 3, 3);
  const auto x = dim3::rij_solve(int_arg(r, 0), int_arg(r, 1), int_arg(r, 2));
  return Json{{"r12", x.r12}, {"r13", x.r13}, {"r21", x.r21}, {"r23", x.r23}, {"r31", x.r31}, {"r32", x.r32}};
}

Json cmd_d3_c(const CommandRequest& r) {
  require_args(r, 1, 1);
  const auto s = semigroup_arg(r, 0);
  Json j;
  j["min_gens"] = s.min_gens();
  j["c"] = dim3::c_values(s);
  return j;
}

Json cmd_d3_pm(const CommandRequest& r) {
  require_args(r, 3, 3);
  const Int n1 = int_arg(r, 0), n2 = int_arg(r, 1), n3 = int_arg(r, 2);
  const auto t = dim3::pm_representation(n1, n2, n3);
  Json j;
  j["u"] = t.u;
  j["triple"] = Json::array({t.a, t.b, t.c});
  j["semigroup"] = semigroup_summary(modular::solve_prop_modular(t.a, t.b, t.c));
  return j;
}

Json cmd_d3_fermat(const CommandRequest& r) {
  require_args(r, 4, 4);
  const auto f = dim3::fermat_check(int_arg(r, 0), int_arg(r, 1), int_arg(r, 2), int_arg(r, 3));
  Json j;
  j["holds"] = f.holds;
  j["quotient_gens"] = f.quotient_gens;
  j["excluded_gens"] = f.forbidden;
  return j;
}

// --- factorizations ---------------------------------------------------------

Json cmd_fact_lengths(const CommandRequest& r) {
  require_args(r, 2, 2);
  const auto s = semigroup_arg(r, 0);
  const Int n = int_arg(r, 1);
  const auto ld = fact::length_data(s, n);
  Json j;
  j["element"] = n;
  j["factorizations"] = pres::factorizations(s, n);
  j["lengths"] = ld.lengths;
  j["delta"] = ld.delta;
  if (n != 0) j["elasticity"] = to_json(fact::elasticity_of(s, n));
  return j;
}

Json per_element_or_semigroup(const CommandRequest& r, const char* name,
                              Int (*element)(const NumericalSemigroup&, Int),
                              Int (*whole)(const NumericalSemigroup&)) {
  require_args(r, 1, 2);
  const auto s = semigroup_arg(r, 0);
  Json j;
  j["min_gens"] = s.min_gens();
  if (r.args.size() == 2) {
    const Int n = int_arg(r, 1);
    j["element"] = n;
    j[name] = element(s, n);
  } else {
    j[name] = whole(s);
  }
  return j;
}

Json cmd_fact_catenary(const CommandRequest& r) {
  auto j = per_element_or_semigroup(r, "catenary", fact::catenary_degree, fact::catenary_degree_of_semigroup);
  if (r.args.size() == 1) j["betti"] = pres::betti_elements(semigroup_arg(r, 0));
  return j;
}

Json cmd_fact_tame(const CommandRequest& r) {
  return per_element_or_semigroup(r, "tame", fact::tame_degree, fact::tame_degree_of_semigroup);
}

Json cmd_fact_omega(const CommandRequest& r) {
  return per_element_or_semigroup(r, "omega", fact::omega_primality, fact::omega_of_semigroup);
}

Json cmd_fact_elasticity(const CommandRequest& r) {
  require_args(r, 1, 2);
  const auto s = semigroup_arg(r, 0);
  Json j;
  j["min_gens"] = s.min_gens();
  if (r.args.size() == 2) {
    j["element"] = int_arg(r, 1);
    j["elasticity"] = to_json(fact::elasticity_of(s, int_arg(r, 1)));
  } else {
    j["elasticity"] = to_json(fact::elasticity(s));
  }
  return j;
}

Json cmd_fact_delta(const CommandRequest& r) {
  require_args(r, 1, 1);
  const auto s = semigroup_arg(r, 0);
  const Int bound = int_flag(r, "bound");
  Json j;
  j["min_gens"] = s.min_gens();
  j["bound"] = bound;
  j["delta"] = fact::delta_set_up_to(s, bound);
  return j;
}

Json cmd_fact_probe(const CommandRequest& r) {
  require_args(r, 1, 1);
  const auto s = semigroup_arg(r, 0);
  const auto inv = fact::parse_invariant(flag(r, "invariant").value_or("catenary"));
  const Int window = int_flag(r, "window");
  std::vector<Int> candidates = s.min_gens();
  if (auto c = flag(r, "candidates")) candidates = parse_int_list(*c);
  Json rows = Json::array();
  for (const auto& row : fact::periodicity_probe(s, inv, window, candidates)) {
    rows.push_back(Json{{"period", row.period},
                        {"checked", row.checked},
                        {"agreements", row.agreements},
                        {"stable_from", row.stable_from}});
  }
  Json j;
  j["min_gens"] = s.min_gens();
  j["invariant"] = std::string(fact::to_string(inv));
  j["window"] = window;
  j["rows"] = rows;
  return j;
}

// --- corpus -----------------------------------------------------------------

struct SuiteResult {
  bool pass = true;
  Json detail;
};

using Suite = std::function<SuiteResult(const NumericalSemigroup&)>;

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table = {
      {"wilf",
       [](const NumericalSemigroup& s) {
         const auto rep = invariant_report(s);
         return SuiteResult{rep.wilf_left <= rep.wilf_right, Json{{"eg", rep.wilf_left}, {"bound", rep.wilf_right}}};
       }},
      {"fgh",
       [](const NumericalSemigroup& s) {
         const auto rep = invariant_report(s);
         const Int t = rep.type, g = rep.genus, f = rep.frobenius, m = rep.multiplicity, e = rep.embedding_dimension;
         bool pass = true;
         if (!s.is_natural()) {
           pass = t <= m - 1 && (t + 1) * g <= t * (f + 1) && (e != 2 || t == 1) && (e != 3 || t <= 2);
         }
         return SuiteResult{pass, Json{{"type", t}, {"genus", g}, {"frobenius", f}, {"e", e}}};
       }},
      {"herzog-dim3",
       [](const NumericalSemigroup& s) {
         if (s.embedding_dimension() != 3) return SuiteResult{true, Json{{"skipped", "e != 3"}}};
         const bool sym = classify(s) == Irreducibility::Symmetric;
         const bool ci = pres::presentation_stats(s).is_complete_intersection;
         return SuiteResult{sym == ci, Json{{"symmetric", sym}, {"complete_intersection", ci}}};
       }},
      {"presentation-card",
       [](const NumericalSemigroup& s) {
         const Int e = s.embedding_dimension();
         const Int card = pres::presentation_stats(s).cardinality;
         const Int conjectured = e * (e - 1) / 2 - 1;
         return SuiteResult{card >= e - 1, Json{{"cardinality", card},
                                                {"conjectured_bound", conjectured},
                                                {"exceeds_bound", e >= 2 && card > conjectured}}};
       }},
      {"catenary-betti",
       [](const NumericalSemigroup& s) {
         const Int b = fact::catenary_by_betti(s);
         const Int d = fact::catenary_direct(s);
         return SuiteResult{b == d, Json{{"by_betti", b}, {"direct", d}}};
       }},
  };
  return table;
}

Json cmd_corpus(const CommandRequest& r) {
  require_args(r, 1, 1);
  const auto name = flag(r, "suite").value_or("wilf");
  const auto it = suites().find(name);
  if (it == suites().end()) {
    std::string known;
    for (const auto& [k, v] : suites()) known += (known.empty() ? "" : ", ") + k;
    fail(ErrorCode::BadInput, "unknown suite '" + name + "' (" + known + ")");
  }
  std::ifstream in(r.args[0]);
  if (!in) fail(ErrorCode::FileNotFound, "cannot open " + r.args[0]);
  Json rows = Json::array();
  Int passed = 0, failed = 0, line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string text = line.substr(first, last - first + 1);
    NumericalSemigroup s;
    try {
      s = NumericalSemigroup::from_generators(parse_int_list(text));
    } catch (const Error& e) {
      fail(e.code(), "line " + std::to_string(line_no) + ": " + e.what(), {line_no});
    }
    const auto res = it->second(s);
    (res.pass ? passed : failed) += 1;
    rows.push_back(Json{{"line", line_no}, {"min_gens", s.min_gens()}, {"pass", res.pass}, {"detail", res.detail}});
  }
  Json j;
  j["suite"] = name;
  j["checks"] = passed + failed;
  j["passed"] = passed;
  j["failed"] = failed;
  j["rows"] = rows;
  return j;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"info", cmd_info},
      {"gaps", cmd_gaps},
      {"apery", cmd_apery},
      {"pm solve", cmd_pm_solve},
      {"pm interval", cmd_pm_interval},
      {"pm bezout", cmd_pm_bezout},
      {"pm recognize", cmd_pm_recognize},
      {"quot", cmd_quot},
      {"quot doubles", cmd_quot_doubles},
      {"quot decompose", cmd_quot_decompose},
      {"tree count", cmd_tree_count},
      {"tree list", cmd_tree_list},
      {"closure arf", [](const CommandRequest& r) { return closure_payload(r, true); }},
      {"closure sat", [](const CommandRequest& r) { return closure_payload(r, false); }},
      {"pres minimal", cmd_pres_minimal},
      {"pres betti", cmd_pres_betti},
      {"pres glue", cmd_pres_glue},
      {"d3 sym", cmd_d3_sym},
      {"d3 psym", cmd_d3_psym},
      {"d3 rij", cmd_d3_rij},
      {"d3 c", cmd_d3_c},
      {"d3 pm", cmd_d3_pm},
      {"d3 fermat", cmd_d3_fermat},
      {"fact lengths", cmd_fact_lengths},
      {"fact catenary", cmd_fact_catenary},
      {"fact tame", cmd_fact_tame},
      {"fact omega", cmd_fact_omega},
      {"fact elasticity", cmd_fact_elasticity},
      {"fact delta", cmd_fact_delta},
      {"fact probe", cmd_fact_probe},
      {"corpus", cmd_corpus},
  };
  return table;
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
  switch (classify(code)) {
    case ErrorClass::Input: return 2;
    case ErrorClass::Domain: return 3;
    case ErrorClass::Budget: return 4;
    case ErrorClass::Internal: return 1;
  }
  return 1;
}

std::vector<std::string> command_paths() {
  std::vector<std::string> out;
  for (const auto& [k, v] : handlers()) out.push_back(k);
  return out;
}

RunReport execute(const CommandRequest& request) {
  RunReport report;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto it = handlers().find(joined(request.path));
    if (it == handlers().end()) fail(ErrorCode::BadInput, "unknown command '" + joined(request.path) + "'");
    report.payload = it->second(request);
    if (joined(request.path) == "corpus" && report.payload.at("failed").get<Int>() > 0) report.exit_code = 3;
  } catch (const Error& e) {
    report.ok = false;
    report.payload = to_json(e);
    report.exit_code = exit_code_for(e.code());
  } catch (const std::exception& e) {
    report.ok = false;
    report.payload = to_json(Error(ErrorCode::InternalInconsistency, e.what()));
    report.exit_code = 1;
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace nsg::cli
