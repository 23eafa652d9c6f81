#include "symdiam/reducer.hpp"

#include <algorithm>
#include <sstream>

#include "symdiam/parallel.hpp"

namespace symdiam {

void Ledger::multiply(std::string what, const BigInt& factor) {
  bound_ *= factor;
  history_.push_back({std::move(what), LedgerEntry::multiply, factor});
}

void Ledger::add(std::string what, const BigInt& term) {
  bound_ += term;
  history_.push_back({std::move(what), LedgerEntry::add, term});
}

BigInt Ledger::replay() const {
  BigInt x = 1;
  for (const auto& e : history_) {
    if (e.kind == LedgerEntry::multiply)
      x *= e.amount;
    else
      x += e.amount;
  }
  return x;
}

std::string case_name(CaseId id) {
  switch (id) {
    case CaseId::generic_long_cycle: return "generic_long_cycle";
    case CaseId::five_cycle: return "five_cycle";
    case CaseId::order2: return "order2";
    case CaseId::order3: return "order3";
  }
  return "?";
}

namespace {

std::vector<std::vector<int>> nontrivial_cycles(const Perm& a) {
  std::vector<std::vector<int>> out;
  for (auto& c : cycle_structure(a).cycles)
    if (c.size() > 1) out.push_back(std::move(c));
  return out;
}

std::vector<int> fixed_points(const Perm& a) {
  std::vector<int> out;
  for (int i = 0; i < a.n(); ++i)
    if (a[i] == i) out.push_back(i);
  return out;
}

Anchor make_anchor(int n, std::vector<int> points, const std::vector<std::vector<int>>& g_cycles) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<std::vector<int>> one_based;
  for (const auto& c : g_cycles) {
    std::vector<int> cc;
    for (int x : c) cc.push_back(x + 1);
    one_based.push_back(cc);
  }
  return {points, Perm::from_cycles(n, one_based)};
}

std::string shortfall(const std::string& what, std::size_t have, std::size_t need) {
  return what + ": need " + std::to_string(need) + ", have " + std::to_string(have);
}

}  // namespace

CaseSelection select_case(const Perm& a) {
  const int n = a.n();
  if (a.is_identity()) throw SelectionError("identity has no case to select");
  auto cycles = nontrivial_cycles(a);
  auto fixed = fixed_points(a);

  for (const auto& c : cycles) {
    const int m = static_cast<int>(c.size());
    if (m < 7) continue;
    std::vector<int> pts(c.begin(), c.begin() + 6);
    for (int i = m - 4; i < m; ++i) pts.push_back(c[i]);
    return {CaseId::generic_long_cycle, make_anchor(n, pts, {{c[0], c[2], c[m - 1]}}), 16, 10};
  }

  std::vector<int> lengths = cycle_lengths(a);
  bool all5 = std::all_of(lengths.begin(), lengths.end(), [](int l) { return l == 5; });
  bool all2 = std::all_of(lengths.begin(), lengths.end(), [](int l) { return l == 2; });
  bool all3 = std::all_of(lengths.begin(), lengths.end(), [](int l) { return l == 3; });

  if (all5) {
    if (fixed.size() < 2) throw SelectionError(shortfall("order-5 element, fixed points", fixed.size(), 2));
    const auto& c = cycles[0];
    std::vector<int> pts(c.begin(), c.end());
    pts.push_back(fixed[0]);
    pts.push_back(fixed[1]);
    return {CaseId::five_cycle, make_anchor(n, pts, {{c[0], fixed[0]}, {c[2], fixed[1]}}), 16, 10};
  }
  if (all2) {
    if (cycles.size() < 3 || fixed.empty()) {
      std::string msg = "order-2 element";
      if (cycles.size() < 3) msg += "; " + shortfall("transpositions", cycles.size(), 3);
      if (fixed.empty()) msg += "; " + shortfall("fixed points", 0, 1);
      throw SelectionError(msg);
    }
    int x1 = cycles[0][0], x2 = cycles[0][1], x3 = cycles[1][0], x4 = cycles[1][1];
    int x5 = cycles[2][0], x6 = cycles[2][1], x7 = fixed[0];
    return {CaseId::order2, make_anchor(n, {x1, x2, x3, x4, x5, x6, x7}, {{x1, x5, x7, x2, x3}}), 10, 7};
  }
  if (all3) {
    if (cycles.size() < 2 || fixed.empty()) {
      std::string msg = "order-3 element";
      if (cycles.size() < 2) msg += "; " + shortfall("3-cycles", cycles.size(), 2);
      if (fixed.empty()) msg += "; " + shortfall("fixed points", 0, 1);
      throw SelectionError(msg);
    }
    int x1 = cycles[0][0], x2 = cycles[0][1], x3 = cycles[0][2];
    int x4 = cycles[1][0], x5 = cycles[1][1], x6 = cycles[1][2], x7 = fixed[0];
    return {CaseId::order3, make_anchor(n, {x1, x2, x3, x4, x5, x6, x7}, {{x1, x7, x2, x4}}), 10, 7};
  }
  throw SelectionError("element " + a.to_string() + " has no cycle of length >= 7 and is not of order 2, 3 or 5");
}

std::vector<Lemma5Check> verify_lemma5() {
  std::vector<Lemma5Check> out;
  const Word w0 = Word::w0();
  for (int m = 7; m <= 30; ++m) {
    std::vector<int> cyc(m);
    for (int i = 0; i < m; ++i) cyc[i] = i + 1;
    Perm h = Perm::from_cycles(m, {cyc});
    Perm g = Perm::from_cycles(m, {{1, 3, m}});
    Perm c = evaluate_word(w0, h, conjugate(h, g));
    std::vector<int> expect{1, m, 5, 3, m - 1, 4, 2};
    bool ok = true;
    for (std::size_t i = 0; i < expect.size(); ++i)
      ok = ok && c[expect[i] - 1] == expect[(i + 1) % expect.size()] - 1;
    std::ostringstream detail;
    detail << "(1," << m << ",5,3," << m - 1 << ",4,2) " << (ok ? "found" : "missing") << " in " << c.to_string();
    out.push_back({"case1 m=" + std::to_string(m), ok, detail.str()});
  }
  struct Fixed {
    const char* name;
    const char* h;
    const char* g;
  };
  for (const Fixed& f : {Fixed{"case2", "(1,2,3,4,5)", "(1,6)(3,7)"}, Fixed{"case3", "(1,2,3)(4,5,6)", "(1,7,2,4)"},
                         Fixed{"case4", "(1,2)(3,4)(5,6)", "(1,5,7,2,3)"}}) {
    Perm h = Perm::parse(7, f.h), g = Perm::parse(7, f.g);
    Perm c = evaluate_word(w0, h, conjugate(h, g));
    bool ok = has_cycle_of_length(c, 7);
    out.push_back({f.name, ok, std::string("h=") + f.h + " g=" + f.g + " -> " + c.to_string()});
  }
  return out;
}

Perm contraction_image(const Perm& a, const Perm& r) {
  return power(evaluate_word(Word::w0(), a, conjugate(a, r)), 60);
}

namespace {

struct Candidate {
  Perm c, r;
  int fixed;
  bool seven;
};

bool better(const Candidate& x, const Candidate& y) {
  if (x.fixed != y.fixed) return x.fixed > y.fixed;
  return x.c.raw() < y.c.raw();
}

}  // namespace

StepResult reduce_step(const Perm& a, const CaseSelection& sel, int trials, Rng& rng, const Sampler& sampler,
                       unsigned workers) {
  if (trials < 1) throw std::invalid_argument("reduce_step needs at least one trial");
  sel.anchor.check(a.n());
  Rng base(rng());
  std::vector<Candidate> cands;
  auto draw = [&](int from, int to) {
    std::vector<Candidate> batch(to - from);
    parallel_for(batch.size(), workers, [&](std::size_t i) {
      Rng t = base.split(from + i);
      Perm r = sampler(a.n(), sel.anchor, t);
      Perm c = contraction_image(a, r);
      batch[i] = {c, r, fixed_count(c), has_cycle_of_length(c, 7)};
    });
    cands.insert(cands.end(), batch.begin(), batch.end());
  };
  draw(0, trials);
  auto any_seven = [&] { return std::any_of(cands.begin(), cands.end(), [](const Candidate& x) { return x.seven; }); };
  if (!any_seven()) draw(trials, 3 * trials);

  const Candidate* best = nullptr;
  bool seven = any_seven();
  for (const auto& x : cands) {
    if (seven && !x.seven) continue;
    if (!best || better(x, *best)) best = &x;
  }
  StepResult res;
  res.a_next = best->c;
  res.chosen_r = best->r;
  res.fixed = best->fixed;
  res.has_seven_cycle = best->seven;
  res.degenerate = !seven;
  res.trials_used = static_cast<int>(cands.size());
  return res;
}

ReductionResult run_reduction(const std::vector<Perm>& S, const Perm& a0, double target_fraction, int trials_per_step,
                              int max_steps, Rng& rng, unsigned workers) {
  const int n = a0.n();
  for (const auto& s : S)
    if (s.n() != n) throw std::invalid_argument("generators and start element act on different domains");
  if (!(target_fraction > 0 && target_fraction < 0.63)) throw std::invalid_argument("target fraction must lie in (0, 0.63)");
  if (support_size(a0) > 0.63 * n) throw std::invalid_argument("start element moves more than 0.63 n points");

  ReductionResult res;
  res.a_final = a0;
  Perm a = a0;
  res.delta_trace.push_back(static_cast<double>(support_size(a)) / n);
  if (res.delta_trace.back() < target_fraction && !a.is_identity()) {
    res.reached_target = true;
    return res;
  }
  const BigInt nn = BigInt(n) * n;
  for (int step = 1; step <= max_steps; ++step) {
    if (a.is_identity()) {
      res.diagnostic = "element collapsed to the identity";
      break;
    }
    StepRecord rec;
    rec.step = step;
    rec.delta_before = res.delta_trace.back();
    try {
      auto [p, e] = power_coprime6(a);
      a = p;
      rec.power_exponent = e;
    } catch (const SpecialCaseOrder&) {
      // order 2^x 3^y: power down to an element of order 2 (or 3 if odd order)
      std::vector<int> lengths = cycle_lengths(a);
      int e1 = 0, e2 = 0;
      for (int l : lengths) {
        int t = 0, u = 0;
        while (l % 2 == 0) l /= 2, ++t;
        while (l % 3 == 0) l /= 3, ++u;
        e1 = std::max(e1, t), e2 = std::max(e2, u);
      }
      std::uint64_t e = 1;
      if (e1 > 0) {
        for (int i = 0; i < e1 - 1; ++i) e *= 2;
        for (int i = 0; i < e2; ++i) e *= 3;
      } else {
        for (int i = 0; i < e2 - 1; ++i) e *= 3;
      }
      a = power(a, static_cast<long long>(e));
      rec.power_exponent = e;
      res.special_branch_used = true;
    }
    if (rec.power_exponent > 1)
      res.ledger.multiply("step " + std::to_string(step) + ": power by " + std::to_string(rec.power_exponent) + " (bound n^2)", nn);

    CaseSelection sel;
    try {
      sel = select_case(a);
    } catch (const SelectionError& err) {
      res.diagnostic = std::string("step ") + std::to_string(step) + ": " + err.what();
      break;
    }
    rec.case_name = case_name(sel.case_id);
    rec.a_in = a;
    StepResult sr = reduce_step(a, sel, trials_per_step, rng, sample_conditioned, workers);

    BigInt walk = boost::multiprecision::pow(BigInt(n), 2 * (sel.kappa + sel.lambda + 1));
    res.ledger.multiply("step " + std::to_string(step) + ": 480 letters of w0^60 in a and a^r", 480);
    res.ledger.add("step " + std::to_string(step) + ": 480 copies of r (walk length n^" +
                       std::to_string(2 * (sel.kappa + sel.lambda + 1)) + ")",
                   480 * walk);

    a = sr.a_next;
    rec.r = sr.chosen_r;
    rec.a_out = a;
    rec.fixed = sr.fixed;
    rec.has_seven_cycle = sr.has_seven_cycle;
    rec.degenerate = sr.degenerate;
    rec.trials_used = sr.trials_used;
    rec.delta_after = static_cast<double>(support_size(a)) / n;
    res.delta_trace.push_back(rec.delta_after);
    res.steps.push_back(std::move(rec));
    if (res.delta_trace.back() < target_fraction && !a.is_identity()) {
      res.reached_target = true;
      break;
    }
  }
  res.a_final = a;
  if (!res.reached_target && res.diagnostic.empty())
    res.diagnostic = "target not reached within " + std::to_string(max_steps) + " steps";
  return res;
}

}  // namespace symdiam
