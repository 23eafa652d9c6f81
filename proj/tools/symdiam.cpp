#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symdiam/reducer.hpp"
#include "symdiam/spectrum.hpp"
#include "symdiam/treenum.hpp"
#include "symdiam/verify.hpp"
#include "symdiam/walks.hpp"

using namespace symdiam;
using nlohmann::ordered_json;

namespace {

ordered_json report_head(const std::string& command, ordered_json config) {
  ordered_json j;
  j["tool"] = "symdiam";
  j["version"] = artifact_version();
  ordered_json c{{"command", command}};
  for (auto& [k, v] : config.items()) c[k] = v;
  j["config"] = c;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void write_report(const std::string& path, const ordered_json& j) {
  if (!path.empty()) write_text(path, j.dump(2) + "\n");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "n=<degree>" header, then one permutation per line in cycle notation
std::vector<Perm> read_generators(const std::string& path) {
  std::istringstream in(read_text(path));
  std::string line;
  int n = -1;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) continue;
    if (n < 0) {
      if (t.rfind("n=", 0) != 0) throw std::invalid_argument(path + ": first line must be an n= header");
      n = std::stoi(t.substr(2));
      if (n < 1) throw std::invalid_argument(path + ": degree must be positive");
      continue;
    }
    gens.push_back(Perm::parse(n, t));
  }
  if (n < 0) throw std::invalid_argument(path + ": missing n= header");
  if (gens.empty()) throw std::invalid_argument(path + ": no generators");
  return gens;
}

Catalog load_catalog(const std::string& path) {
  auto j = nlohmann::json::parse(read_text(path));
  const auto& arr = j.is_object() ? j.at("catalog") : j;
  Catalog cat;
  for (const auto& e : arr) cat.push_back(entry_from_json(e));
  return cat;
}

EnumConstraints parse_constraints(int kappa, int max_path, const std::string& cycle_mode, int power, int max_min_power) {
  EnumConstraints c;
  c.kappa = kappa;
  c.max_path = max_path;
  c.max_power = power;
  c.max_min_power = max_min_power;
  if (cycle_mode == "none") {
    c.cycle_mode = EnumConstraints::forbid_cycles;
  } else {
    c.cycle_mode = EnumConstraints::cycles_exactly;
    try {
      c.cycle_len = std::stoi(cycle_mode);
    } catch (const std::exception&) {
      throw std::invalid_argument("--cycle-mode takes 'none' or a cycle length");
    }
  }
  c.check();
  return c;
}

std::string render_catalog_report(ordered_json head, const Catalog& cat) {
  head["trees"] = cat.size();
  head["aggregate"] = aggregate_poly(cat).to_string();
  std::string s = head.dump(2);
  s.pop_back();  // closing brace
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  std::string body = catalog_to_text(cat);
  std::string indented;
  for (std::size_t i = 0; i < body.size(); ++i) {
    indented += body[i];
    if (body[i] == '\n' && i + 1 < body.size()) indented += "  ";
  }
  while (!indented.empty() && indented.back() == '\n') indented.pop_back();
  return s + ",\n  \"catalog\": " + indented + "\n}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed-point trees, contraction polynomials and the reduction pipeline for Sym(n) diameter bounds"};
  app.require_subcommand(1);
  int status = 0;

  // trees
  auto* trees = app.add_subcommand("trees", "enumerate admitting trees into a catalog");
  std::string word = "w0", cycle_mode = "none", trees_out;
  int power = 60, kappa = 16, max_path = 4, max_min_power = 0;
  unsigned workers = 1;
  trees->add_option("--word", word, "base word over a, A, b, B (or w0)");
  trees->add_option("--power", power, "largest power of the word, divisors are tried")->check(CLI::PositiveNumber);
  trees->add_option("--kappa", kappa, "vertex budget")->check(CLI::PositiveNumber);
  trees->add_option("--max-path", max_path, "vertices per monochromatic path")->check(CLI::PositiveNumber);
  trees->add_option("--cycle-mode", cycle_mode, "'none' or the exact monochromatic cycle length");
  trees->add_option("--max-min-power", max_min_power, "keep trees whose least admitting power is at most this (0: all)");
  trees->add_option("--out", trees_out, "catalog JSON");
  trees->add_option("--workers", workers)->check(CLI::PositiveNumber);
  trees->callback([&] {
    auto c = parse_constraints(kappa, max_path, cycle_mode, power, max_min_power);
    Word base = Word::parse(word);
    Catalog cat = enumerate_admitting_trees(base, c, workers);
    ordered_json config{{"word", base.to_string()}, {"constraints", c.describe()}};
    if (!trees_out.empty()) write_text(trees_out, render_catalog_report(report_head("trees", config), cat));
    std::cout << c.describe() << ": " << cat.size() << " trees\n";
    std::cout << "aggregate " << aggregate_poly(cat).to_string() << "\n";
  });

  // poly
  auto* poly = app.add_subcommand("poly", "aggregate a catalog and compare it with a reference polynomial");
  std::string against = "f", catalog_path, poly_out;
  poly->add_option("--against", against, "f, h2 or h3")->check(CLI::IsMember({"f", "h2", "h3"}));
  poly->add_option("--catalog", catalog_path, "catalog JSON written by trees")->required();
  poly->add_option("--out", poly_out, "report JSON");
  poly->callback([&] {
    Catalog cat = load_catalog(catalog_path);
    DeltaPoly got = aggregate_poly(cat);
    PolyDiff d = compare_polys(got, reference_poly(against));
    auto j = report_head("poly", {{"catalog", catalog_path}, {"against", against}});
    j["aggregate"] = got.to_string();
    j["exact"] = d.exact();
    j["surplus"] = d.surplus.to_string();
    j["missing"] = d.missing.to_string();
    write_report(poly_out, j);
    if (d.exact()) {
      std::cout << "EXACT MATCH\n";
    } else {
      std::cout << "DIFF\n  surplus: " << d.surplus.to_string() << "\n  missing: " << d.missing.to_string() << "\n";
      status = 1;
    }
  });

  // threshold
  auto* threshold = app.add_subcommand("threshold", "threshold, iterates and monotonicity of d -> 1 - scale*poly(d)");
  std::string poly_name = "f", threshold_out;
  double scale = 0.999, start = 0.63, below = 0.326, grid = 1e-3;
  int steps = 9;
  threshold->add_option("--poly", poly_name, "f, h2 or h3")->check(CLI::IsMember({"f", "h2", "h3"}));
  threshold->add_option("--scale", scale);
  threshold->add_option("--start", start);
  threshold->add_option("--steps", steps)->check(CLI::NonNegativeNumber);
  threshold->add_option("--below", below, "required bound on the last iterate");
  threshold->add_option("--grid", grid, "monotonicity grid step");
  threshold->add_option("--out", threshold_out, "report JSON");
  threshold->callback([&] {
    const DeltaPoly& p = reference_poly(poly_name);
    double root = solve_threshold(p, scale);
    auto trace = iterate_map(p, scale, start, steps);
    bool mono = monotone_scan(p, scale, grid);
    bool ok = mono && trace.back() < below;
    auto j = report_head("threshold", {{"poly", poly_name}, {"scale", scale}, {"start", start}, {"steps", steps},
                                       {"below", below}, {"grid", grid}});
    j["root"] = root;
    j["trace"] = trace;
    j["monotone"] = mono;
    j["passed"] = ok;
    write_report(threshold_out, j);
    std::printf("root %.6f\n", root);
    for (std::size_t i = 0; i < trace.size(); ++i) std::printf("  %zu  %.6f\n", i, trace[i]);
    std::printf("monotone %s, last iterate %s %.3f\n", mono ? "yes" : "no", trace.back() < below ? "<" : ">=", below);
    status = ok ? 0 : 1;
  });

  // walk
  auto* walk = app.add_subcommand("walk", "lazy random walk on ordered k-tuples");
  int walk_n = 6, walk_k = 1;
  double eps = 0.1;
  std::string walk_len, walk_gens, walk_out;
  std::uint64_t walk_seed = 0;
  walk->add_option("--n", walk_n)->check(CLI::Range(2, 100000));
  walk->add_option("--k", walk_k)->check(CLI::PositiveNumber);
  walk->add_option("--eps", eps);
  walk->add_option("--len", walk_len, "walk length (default: the mixing bound)");
  walk->add_option("--gens", walk_gens, "generator file (default: (1,2) and (1,...,n))");
  walk->add_option("--seed", walk_seed)->required();
  walk->add_option("--out", walk_out, "report JSON");
  walk->callback([&] {
    std::vector<Perm> gens;
    if (walk_gens.empty()) {
      std::string cyc = "(";
      for (int i = 1; i <= walk_n; ++i) cyc += std::to_string(i) + (i < walk_n ? "," : ")");
      gens = {Perm::parse(walk_n, "(1,2)"), Perm::parse(walk_n, cyc)};
    } else {
      gens = read_generators(walk_gens);
      walk_n = gens.front().n();
    }
    WalkSpec spec{gens, walk_k, walk_len.empty() ? mixing_length(walk_n, walk_k, eps) : BigInt(walk_len)};
    spec.check();
    TupleSpace space(walk_n, walk_k);
    if (space.size() > kMaxTupleStates) throw std::invalid_argument("too many tuple states for an exact distribution");
    std::vector<std::vector<double>> rows;
    if (space.size() <= 1500) {
      rows = exact_walk_matrix(spec);
    } else {
      std::vector<int> first(walk_k);
      for (int i = 0; i < walk_k; ++i) first[i] = i;
      rows.push_back(exact_walk_distribution(spec, first));
    }
    const double u = 1.0 / static_cast<double>(space.size());
    double lo = 1, hi = 0, tv = 0;
    for (const auto& row : rows) {
      double d = 0;
      for (double x : row) lo = std::min(lo, x), hi = std::max(hi, x), d += std::abs(x - u);
      tv = std::max(tv, d / 2);
    }
    bool ok = lo > (1 - eps) * u && hi < (1 + eps) * u;
    auto j = report_head("walk", {{"n", walk_n}, {"k", walk_k}, {"eps", eps}, {"seed", walk_seed}});
    j["length"] = spec.length.str();
    j["states"] = space.size();
    j["starts_checked"] = rows.size();
    j["min_entry"] = lo;
    j["max_entry"] = hi;
    j["max_tv"] = tv;
    j["within_bounds"] = ok;
    try {
      Rng rng(walk_seed);
      WalkResult w = realize_lazy_walk(spec, rng);
      j["sample"] = {{"r", w.r.to_string()}, {"moves", w.word_length_used}};
    } catch (const SymbolicLength& e) {
      j["sample"] = e.what();
    }
    write_report(walk_out, j);
    std::cout << "length " << spec.length << ", " << space.size() << " states\n";
    std::printf("entries in [%.8f, %.8f], uniform %.8f, max TV %.3g: %s\n", lo, hi, u, tv, ok ? "within bounds" : "OUT OF BOUNDS");
    status = ok ? 0 : 1;
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "run the support-reduction pipeline");
  std::string gens_path, reduce_report;
  int start_elt = 1, trials = 20, max_steps = 40;
  double target = 0.323;
  std::uint64_t reduce_seed = 0;
  reduce->add_option("--gens", gens_path, "generator file")->required();
  reduce->add_option("--start-elt", start_elt, "1-based index of the starting generator")->check(CLI::PositiveNumber);
  reduce->add_option("--target", target);
  reduce->add_option("--trials", trials)->check(CLI::PositiveNumber);
  reduce->add_option("--max-steps", max_steps)->check(CLI::PositiveNumber);
  reduce->add_option("--seed", reduce_seed)->required();
  reduce->add_option("--workers", workers)->check(CLI::PositiveNumber);
  reduce->add_option("--report", reduce_report, "report JSON");
  reduce->callback([&] {
    auto gens = read_generators(gens_path);
    if (start_elt > static_cast<int>(gens.size())) throw std::invalid_argument("--start-elt beyond the generator list");
    const Perm& a0 = gens[start_elt - 1];
    const int n = a0.n();
    Rng rng(reduce_seed);
    Rng gen_rng = rng.split(1);
    GenerationResult gr = check_generates(gens, gen_rng);
    Rng run_rng = rng.split(2);
    ReductionResult res = run_reduction(gens, a0, target, trials, max_steps, run_rng, workers);
    bool replay = res.ledger.replay() == res.ledger.length_bound();

    auto j = report_head("reduce", {{"gens", gens_path}, {"n", n}, {"start_elt", start_elt}, {"target", target},
                                    {"trials", trials}, {"max_steps", max_steps}, {"seed", reduce_seed}});
    j["group"] = {{"verdict", verdict_name(gr.verdict)}, {"order_lower_bound", gr.order.str()}};
    j["delta_trace"] = res.delta_trace;
    j["reference_trace"] = iterate_map(reference_poly("f"), 0.999, std::max(res.delta_trace.front(), 1e-9),
                                       static_cast<int>(res.steps.size()));
    auto steps_json = ordered_json::array();
    for (const auto& s : res.steps)
      steps_json.push_back({{"step", s.step},
                            {"case", s.case_name},
                            {"power", s.power_exponent},
                            {"delta_before", s.delta_before},
                            {"delta_after", s.delta_after},
                            {"fixed", s.fixed},
                            {"seven_cycle", s.has_seven_cycle},
                            {"degenerate", s.degenerate},
                            {"trials_used", s.trials_used},
                            {"r", s.r.to_string()}});
    j["steps"] = steps_json;
    auto ledger = ordered_json::array();
    for (const auto& e : res.ledger.history())
      ledger.push_back({{"what", e.description}, {"op", e.kind == LedgerEntry::multiply ? "multiply" : "add"},
                        {"amount", e.amount.str()}});
    j["ledger"] = ledger;
    j["length_bound"] = res.ledger.length_bound().str();
    j["ledger_replays"] = replay;
    j["reached_target"] = res.reached_target;
    j["special_branch_used"] = res.special_branch_used;
    j["final_element"] = res.a_final.to_string();
    if (!res.diagnostic.empty()) j["diagnostic"] = res.diagnostic;
    write_report(reduce_report, j);

    std::cout << "group: " << verdict_name(gr.verdict) << "\n";
    for (const auto& s : res.steps)
      std::printf("step %2d  %-19s power %-4llu  delta %.4f -> %.4f  fixed %d%s\n", s.step, s.case_name.c_str(),
                  static_cast<unsigned long long>(s.power_exponent), s.delta_before, s.delta_after, s.fixed,
                  s.degenerate ? "  (no 7-cycle)" : "");
    std::cout << (res.reached_target ? "target reached" : "target NOT reached: " + res.diagnostic) << "\n";
    std::cout << "length bound " << res.ledger.length_bound() << "\n";
    status = res.reached_target && replay ? 0 : 1;
  });

  // lemma5
  auto* lemma5 = app.add_subcommand("lemma5", "check the seven-cycle constructions");
  std::string lemma5_out;
  lemma5->add_option("--out", lemma5_out, "report JSON");
  lemma5->callback([&] {
    auto checks = verify_lemma5();
    auto j = report_head("lemma5", ordered_json::object());
    auto arr = ordered_json::array();
    bool ok = true;
    for (const auto& c : checks) {
      arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      ok = ok && c.passed;
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << "\n";
    }
    j["checks"] = arr;
    j["passed"] = ok;
    write_report(lemma5_out, j);
    status = ok ? 0 : 1;
  });

  // wordsearch
  auto* ws = app.add_subcommand("wordsearch", "rank balanced alternating words by points in short cycles");
  int min_len = 4, max_len = 8, ws_n = 2000, samples = 500;
  double delta = 0.6;
  std::uint64_t ws_seed = 0;
  std::string ws_out;
  std::vector<std::string> extra_words;
  ws->add_option("--extra", extra_words, "additional candidate words (w0^k allowed)");
  ws->add_option("--min-len", min_len);
  ws->add_option("--max-len", max_len);
  ws->add_option("--n", ws_n)->check(CLI::PositiveNumber);
  ws->add_option("--delta", delta);
  ws->add_option("--samples", samples);
  ws->add_option("--seed", ws_seed)->required();
  ws->add_option("--workers", workers)->check(CLI::PositiveNumber);
  ws->add_option("--out", ws_out, "report JSON");
  ws->callback([&] {
    Rng rng(ws_seed);
    Word w0 = Word::w0();
    std::vector<Word> extra{w0};
    for (const auto& e : extra_words) extra.push_back(Word::parse(e));
    auto res = word_search(min_len, max_len, ws_n, delta, samples, rng, workers, extra);
    auto j = report_head("wordsearch", {{"min_len", min_len}, {"max_len", max_len}, {"n", ws_n}, {"delta", delta},
                                        {"samples", samples}, {"seed", ws_seed}, {"extra", extra_words}});
    auto arr = ordered_json::array();
    for (const auto& s : res.ranking)
      arr.push_back({{"word", s.word.to_string()}, {"class_size", s.class_size}, {"mean", s.mean},
                     {"std_error", s.std_error}});
    j["ranking"] = arr;
    bool top = res.ranking.front().word == class_representative(w0);
    j["w0_top"] = top;
    if (res.ranking.size() > 1) j["paired_std_error_top2"] = paired_std_error(res.counts[0], res.counts[1]);
    write_report(ws_out, j);
    for (const auto& s : res.ranking)
      std::printf("%-24s class %3d  mean %9.3f  se %.3f\n", s.word.to_string().c_str(), s.class_size, s.mean, s.std_error);
    status = top ? 0 : 1;
  });

  // verify-all
  auto* va = app.add_subcommand("verify-all", "run every acceptance criterion");
  std::uint64_t va_seed = 0;
  std::string va_out;
  va->add_option("--seed", va_seed)->required();
  va->add_option("--workers", workers)->check(CLI::PositiveNumber);
  va->add_option("--out", va_out, "report JSON");
  va->callback([&] {
    auto j = acceptance_report(va_seed, workers);
    write_report(va_out, j);
    for (const auto& c : j["criteria"])
      std::cout << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["id"].get<int>() << "  "
                << c["title"].get<std::string>() << "\n";
    std::cout << j["passed"].get<int>() << "/" << j["total"].get<int>() << " passed\n";
    status = j["all_passed"].get<bool>() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
