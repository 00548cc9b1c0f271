// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "netoutdeg/algebra.hpp"
#include "netoutdeg/axioms.hpp"
#include "netoutdeg/cli.hpp"
#include "netoutdeg/error.hpp"
#include "netoutdeg/profiles.hpp"
#include "netoutdeg/rules.hpp"

#ifndef NETOUTDEG_FIXTURE_DIR
#error "NETOUTDEG_FIXTURE_DIR must be defined"
#endif

using namespace netoutdeg;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------- oracles

// Exact rank over the integers by fraction-free elimination.
std::size_t integer_rank(std::vector<std::vector<long long>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      long long f = a[r][c], p = a[rank][c];
      long long g = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        a[r][k] = a[r][k] * p - a[rank][k] * f;
        g = std::gcd(g, a[r][k]);
      }
      if (g > 1)
        for (auto& v : a[r]) v /= g;
    }
    ++rank;
  }
  return rank;
}

std::vector<std::pair<Alt, Alt>> arcs(std::size_t m) {
  std::vector<std::pair<Alt, Alt>> out;
  for (Alt u = 0; u < m; ++u)
    for (Alt v = 0; v < m; ++v)
      if (u != v) out.emplace_back(u, v);
  return out;
}

// c[x][y] = number of voters with x R y.
std::vector<std::vector<long>> pair_counts(const Profile& p) {
  std::vector<std::vector<long>> c(p.m(), std::vector<long>(p.m(), 0));
  for (const auto& [id, r] : p.ballots())
    for (Alt x = 0; x < p.m(); ++x)
      for (Alt y = 0; y < p.m(); ++y)
        if (x != y && r.holds(x, y)) ++c[x][y];
  return c;
}

// argmax of (# strict wins − # strict losses), straight from the ballots.
AltSet o_oracle(const Profile& p) {
  std::vector<long> o(p.m(), 0);
  for (const auto& [id, r] : p.ballots())
    for (Alt x = 0; x < p.m(); ++x)
      for (Alt y = 0; y < p.m(); ++y)
        if (r.holds(x, y) && !r.holds(y, x)) ++o[x], --o[y];
  long best = *std::max_element(o.begin(), o.end());
  AltSet out;
  for (Alt x = 0; x < p.m(); ++x)
    if (o[x] == best) out.insert(x);
  return out;
}

// ------------------------------------------------------ ballot generators

// Brute-force classes of relations at m = 3 from the 512 bit grids.
struct Classes3 {
  std::vector<Relation> orders, partials, linear, top_truncated, dich[4];
};

Classes3 brute_force_classes3(const AlternativeSet& a) {
  Classes3 out;
  for (unsigned mask = 0; mask < 512; ++mask) {
    bool g[3][3];
    for (int i = 0; i < 9; ++i) g[i / 3][i % 3] = (mask >> i) & 1U;
    bool refl = g[0][0] && g[1][1] && g[2][2], complete = true, trans = true, anti = true;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        if (!g[x][y] && !g[y][x]) complete = false;
        if (x != y && g[x][y] && g[y][x]) anti = false;
        for (int z = 0; z < 3; ++z)
          if (g[x][y] && g[y][z] && !g[x][z]) trans = false;
      }
    std::vector<std::pair<Alt, Alt>> ps;
    for (Alt x = 0; x < 3; ++x)
      for (Alt y = 0; y < 3; ++y)
        if (g[x][y]) ps.emplace_back(x, y);
    Relation r = Relation::from_pairs(a, ps);
    if (refl && trans && anti) out.partials.push_back(r);
    if (!(refl && trans && complete)) continue;
    out.orders.push_back(r);
    if (anti) out.linear.push_back(r);
    // tiers by number of alternatives weakly below
    std::vector<int> below(3, 0);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) below[x] += g[x][y];
    std::vector<int> levels(below);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    // dichotomous: at most two indifference classes; top set size recorded
    if (levels.size() <= 2) {
      int top = 0;
      for (int x = 0; x < 3; ++x) top += below[x] == levels.back();
      out.dich[top].push_back(r);
    }
    // top-truncated: every class other than the lowest is a singleton
    bool tt = true;
    for (int lv : levels)
      if (lv != levels.front() && std::count(below.begin(), below.end(), lv) != 1) tt = false;
    if (tt) out.top_truncated.push_back(r);
  }
  return out;
}

std::vector<Alt> shuffled(std::size_t m, std::mt19937_64& rng) {
  std::vector<Alt> v(m);
  std::iota(v.begin(), v.end(), Alt{0});
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

Relation random_order(const AlternativeSet& a, std::mt19937_64& rng) {
  std::vector<int> level(a.size());
  for (auto& l : level) l = static_cast<int>(rng() % a.size());
  std::vector<std::pair<Alt, Alt>> ps;
  for (Alt x = 0; x < a.size(); ++x)
    for (Alt y = 0; y < a.size(); ++y)
      if (level[x] >= level[y]) ps.emplace_back(x, y);
  return Relation::from_pairs(a, ps);
}

Relation random_partial(const AlternativeSet& a, std::mt19937_64& rng) {
  const std::size_t m = a.size();
  std::vector<Alt> lin = shuffled(m, rng);
  std::vector<std::vector<bool>> g(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    g[lin[i]][lin[i]] = true;
    for (std::size_t j = i + 1; j < m; ++j) g[lin[i]][lin[j]] = rng() % 2 == 0;
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (g[i][k] && g[k][j]) g[i][j] = true;
  std::vector<std::pair<Alt, Alt>> ps;
  for (Alt x = 0; x < m; ++x)
    for (Alt y = 0; y < m; ++y)
      if (g[x][y]) ps.emplace_back(x, y);
  return Relation::from_pairs(a, ps);
}

Relation random_top_truncated(const AlternativeSet& a, std::mt19937_64& rng) {
  std::vector<Alt> lin = shuffled(a.size(), rng);
  lin.resize(rng() % a.size());
  return Relation::top_truncated(a, lin);
}

Relation random_approval(const AlternativeSet& a, std::size_t t, std::mt19937_64& rng) {
  std::vector<Alt> lin = shuffled(a.size(), rng);
  AltSet top;
  for (std::size_t i = 0; i < t; ++i) top.insert(lin[i]);
  return Relation::dichotomous(a, top);
}

Profile random_profile(const AlternativeSet& a, std::size_t max_voters, std::mt19937_64& rng,
                       const std::function<Relation()>& ballot) {
  std::size_t n = 1 + rng() % max_voters;
  std::vector<Relation> ballots;
  for (std::size_t i = 0; i < n; ++i) ballots.push_back(ballot());
  return make_profile(a, ballots);
}

// ------------------------------------------------------------- criteria

Verdict ac1_dimensions() {
  Verdict out;
  auto start = Clock::now();
  for (std::size_t m = 2; m <= 6; ++m) {
    const AlternativeSet a = AlternativeSet::of_size(m);
    const auto arc_list = arcs(m);
    std::vector<std::vector<long long>> delta(m, std::vector<long long>(arc_list.size(), 0));
    std::vector<std::vector<long long>> sym;
    for (std::size_t j = 0; j < arc_list.size(); ++j) {
      delta[arc_list[j].first][j] += 1;
      delta[arc_list[j].second][j] -= 1;
    }
    for (Alt x = 0; x < m; ++x)
      for (Alt y = x + 1; y < m; ++y) {
        std::vector<long long> row(arc_list.size(), 0);
        for (std::size_t j = 0; j < arc_list.size(); ++j)
          if (arc_list[j] == std::pair{x, y} || arc_list[j] == std::pair{y, x}) row[j] = 1;
        sym.push_back(row);
      }
    const std::size_t oracle_rank = integer_rank(delta);
    const std::size_t oracle_r = integer_rank(sym);

    DeltaRankKernel d = delta_rank_kernel(m);
    const std::size_t n = m * (m - 1);
    if (d.rank != m - 1 || oracle_rank != m - 1) out.fail("rank delta at m=" + std::to_string(m));
    if (d.kernel_dim != (m - 1) * (m - 1) || n - oracle_rank != (m - 1) * (m - 1) ||
        pseudo_symmetric_space(a).dim() != (m - 1) * (m - 1))
      out.fail("dim Ker delta at m=" + std::to_string(m));
    if (reversal_symmetric_space(a).dim() != m * (m - 1) / 2 || oracle_r != m * (m - 1) / 2)
      out.fail("dim R at m=" + std::to_string(m));
    if (constant_space(a).dim() != 1) out.fail("dim C at m=" + std::to_string(m));
  }
  double t = seconds_since(start);
  if (t >= 5.0) out.fail("runtime " + std::to_string(t) + " s");
  return out;
}

Verdict ac2_equivalence() {
  Verdict out;
  auto start = Clock::now();
  const AlternativeSet a3 = AlternativeSet::of_size(3);
  Classes3 cl = brute_force_classes3(a3);
  if (cl.orders.size() != 13 || cl.partials.size() != 19 || cl.linear.size() != 6 ||
      cl.dich[1].size() + cl.dich[2].size() + cl.dich[3].size() != 7 || cl.top_truncated.size() != 10)
    out.fail("brute-force class sizes");

  std::vector<Relation> approvals;
  for (int t = 1; t <= 3; ++t) approvals.insert(approvals.end(), cl.dich[t].begin(), cl.dich[t].end());
  struct Case {
    RuleId id;
    const std::vector<Relation>* pool;
  };
  std::vector<Case> cases{{RuleId::BOR, &cl.orders},       {RuleId::BOR, &cl.linear},
                          {RuleId::PBOR, &cl.partials},    {RuleId::ABOR, &cl.top_truncated},
                          {RuleId::AV, &approvals},        {RuleId::PLU, &cl.dich[1]},
                          {RuleId::APLU, &cl.dich[2]},     {RuleId::O, &cl.partials}};
  std::size_t mismatches = 0;
  for (const auto& cs : cases)
    for (const auto& r : *cs.pool) {
      Profile one = make_profile(a3, {r});
      if (evaluate(cs.id, one).winners.members() != o_oracle(one) || rule_O(one).members() != o_oracle(one))
        ++mismatches;
      for (const auto& s : *cs.pool) {
        Profile two = make_profile(a3, {r, s});
        if (evaluate(cs.id, two).winners.members() != o_oracle(two) || rule_O(two).members() != o_oracle(two))
          ++mismatches;
      }
    }

  std::mt19937_64 rng(2024);
  for (std::size_t m : {4, 5}) {
    const AlternativeSet a = AlternativeSet::of_size(m);
    struct Gen {
      RuleId id;
      std::function<Relation()> ballot;
    };
    std::vector<Gen> gens{
        {RuleId::BOR, [&] { return random_order(a, rng); }},
        {RuleId::PBOR, [&] { return random_partial(a, rng); }},
        {RuleId::ABOR, [&] { return random_top_truncated(a, rng); }},
        {RuleId::AV, [&] { return random_approval(a, 1 + rng() % m, rng); }},
        {RuleId::PLU, [&] { return random_approval(a, 1, rng); }},
        {RuleId::APLU, [&] { return random_approval(a, m - 1, rng); }},
    };
    for (const auto& g : gens)
      for (int trial = 0; trial < 10000; ++trial) {
        Profile p = random_profile(a, 7, rng, g.ballot);
        AltSet expect = o_oracle(p);
        if (evaluate(g.id, p).winners.members() != expect || rule_O(p).members() != expect) ++mismatches;
      }
  }
  if (mismatches) out.fail(std::to_string(mismatches) + " mismatches");
  double t = seconds_since(start);
  if (t >= 60.0) out.fail("runtime " + std::to_string(t) + " s");
  return out;
}

// Independent confirmation of a witness: o-winners {x} and c − k·N_x symmetric.
bool witness_confirmed(const WitnessCertificate& w) {
  const Profile& p = w.profile();
  if (o_oracle(p) != AltSet::singleton(w.x())) return false;
  auto c = pair_counts(p);
  Rational k = w.k();
  if (k <= 0) return false;
  for (Alt u = 0; u < p.m(); ++u)
    for (Alt v = 0; v < p.m(); ++v) {
      if (u == v) continue;
      Rational cuv = Rational(c[u][v]) - (u == w.x() ? k : Rational(0));
      Rational cvu = Rational(c[v][u]) - (v == w.x() ? k : Rational(0));
      if (cuv != cvu) return false;
    }
  return true;
}

Verdict ac3_axioms_for_o() {
  Verdict out;
  auto start = Clock::now();
  const Rule o = make_rule(RuleId::O);
  const std::vector<AxiomId> checks{AxiomId::Neutrality, AxiomId::Consistency, AxiomId::Cancellation,
                                    AxiomId::StrongAnonymity};
  for (std::size_t m : {3, 4})
    for (const Domain& d : {Domain::linear(), Domain::order(), Domain::partial(), Domain::dichotomous(),
                            Domain::top_truncated()}) {
      FuzzOptions opt;
      opt.trials = 10000;
      opt.seed = 100 + m;
      opt.m = m;
      opt.max_voters = 5;
      opt.checks = checks;
      FuzzResult r = fuzz_axioms(o, d, opt);
      if (r.summaries.size() != checks.size()) out.fail("missing summaries for " + d.name());
      for (const auto& s : r.summaries) {
        std::string where = axiom_name(s.axiom) + " on " + d.name() + " m=" + std::to_string(m);
        if (s.instances < 10000) out.fail("too few trials: " + where);
        if (s.violations) out.fail("violation: " + where);
      }
    }

  for (std::size_t m : {3, 4}) {
    const AlternativeSet a = AlternativeSet::of_size(m);
    std::vector<std::pair<Domain, WitnessMode>> tags{{Domain::linear(), WitnessMode::Coherence},
                                                     {Domain::linear(), WitnessMode::Faithfulness}};
    for (std::size_t t = 1; t < m; ++t) {
      tags.emplace_back(Domain::di(t), WitnessMode::Coherence);
      tags.emplace_back(Domain::truncated(t), WitnessMode::Coherence);
    }
    for (const auto& [d, mode] : tags) {
      std::string where = d.name() + " m=" + std::to_string(m);
      if (!verify_on_faithfulness(o, d, a, mode).passed()) out.fail("on_faithfulness: " + where);
      for (Alt x = 0; x < m; ++x) {
        WitnessCertificate w = witness_outstar(d, a, x, mode);
        bool in_domain = true;
        for (const auto& [id, r] : w.profile().ballots()) in_domain = in_domain && d.contains(r);
        if (!in_domain || !witness_confirmed(w)) out.fail("witness for x=" + a.label(x) + " on " + where);
      }
    }
  }
  double t = seconds_since(start);
  if (t >= 300.0) out.fail("runtime " + std::to_string(t) + " s");
  return out;
}

Verdict ac4_cancellation_equivalence() {
  Verdict out;
  const AlternativeSet a = AlternativeSet::of_size(3);
  std::vector<Relation> pool;
  for (unsigned top = 1; top < 8; ++top) pool.push_back(Relation::dichotomous(a, AltSet(top)));
  std::size_t profiles = 0, exceptions = 0;
  std::function<void(std::vector<Relation>&)> walk = [&](std::vector<Relation>& ballots) {
    if (!ballots.empty()) {
      Profile p = make_profile(a, ballots);
      ++profiles;
      // oracles: equal approval counts and arcwise symmetric pair counts
      std::vector<int> av(3, 0);
      for (const auto& r : ballots)
        for (Alt x = 0; x < 3; ++x) av[x] += top_bottom(r).top.contains(x);
      bool equal = av[0] == av[1] && av[1] == av[2];
      auto c = pair_counts(p);
      bool symmetric = true;
      for (Alt x = 0; x < 3; ++x)
        for (Alt y = 0; y < 3; ++y) symmetric = symmetric && c[x][y] == c[y][x];
      if (equal != symmetric || fishburn_hypothesis(p) != equal || cancellation_hypothesis(p) != symmetric)
        ++exceptions;
    }
    if (ballots.size() == 3) return;
    for (const auto& r : pool) {
      ballots.push_back(r);
      walk(ballots);
      ballots.pop_back();
    }
  };
  std::vector<Relation> start;
  walk(start);
  if (profiles != 7 + 49 + 343) out.fail("enumerated " + std::to_string(profiles) + " profiles");
  if (exceptions) out.fail(std::to_string(exceptions) + " exceptions");
  return out;
}

Verdict ac5_cycles() {
  Verdict out;
  std::mt19937_64 rng(55);
  std::size_t bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = 2 + rng() % 5;
    const AlternativeSet a = AlternativeSet::of_size(m);
    std::vector<std::vector<long>> cap(m, std::vector<long>(m, 0));
    std::size_t wanted = 1 + rng() % 15;
    for (std::size_t i = 0; i < wanted; ++i) {
      std::vector<Alt> v = shuffled(m, rng);
      v.resize(2 + rng() % (m - 1));
      bool fits = true;
      for (std::size_t j = 0; j < v.size(); ++j) fits = fits && cap[v[j]][v[(j + 1) % v.size()]] < 10;
      if (!fits) continue;
      for (std::size_t j = 0; j < v.size(); ++j) ++cap[v[j]][v[(j + 1) % v.size()]];
    }
    Network n(a);
    for (Alt x = 0; x < m; ++x)
      for (Alt y = 0; y < m; ++y)
        if (x != y) n.set_capacity(x, y, Rational(cap[x][y]));
    for (SuccessorChoice choice : {SuccessorChoice::Least, SuccessorChoice::Random}) {
      std::vector<Cycle> cycles = cycle_decompose(n, choice, static_cast<std::uint64_t>(trial));
      std::vector<std::vector<long>> back(m, std::vector<long>(m, 0));
      bool valid = true;
      for (const auto& c : cycles) {
        std::vector<Alt> sorted(c);
        std::sort(sorted.begin(), sorted.end());
        valid = valid && c.size() >= 2 && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        for (std::size_t j = 0; valid && j < c.size(); ++j) ++back[c[j]][c[(j + 1) % c.size()]];
      }
      if (!valid || back != cap) ++bad;
    }
    CycleLiftDecomposition lifted = m_cycle_decomposition(n);
    Network sum = lifted.residual;
    for (const auto& term : lifted.terms) {
      if (term.cycle.size() != m) ++bad;
      sum += term.coefficient * Network::cycle(a, term.cycle);
    }
    if (!(sum == n) || !classify_network(lifted.residual).reversal_symmetric) ++bad;
  }
  if (bad) out.fail(std::to_string(bad) + " bad decompositions");
  for (std::size_t m = 2; m <= 4; ++m)
    if (!verify_ps_cycle_span(m)) out.fail("cycle span at m=" + std::to_string(m));
  return out;
}

Verdict ac6_regularity() {
  Verdict out;
  for (std::size_t m : {3, 4}) {
    const std::size_t ps_dim = (m - 1) * (m - 1), r_dim = m * (m - 1) / 2;
    std::vector<Domain> ps{Domain::linear(), Domain::order(), Domain::partial()};
    for (std::size_t s = 2; s < m; ++s) ps.push_back(Domain::truncated(s));
    if (m == 4) ps.push_back(Domain::truncated_set({2, 3}));
    std::vector<Domain> r{Domain::dichotomous()};
    for (std::size_t t = 1; t < m; ++t) r.push_back(Domain::di(t));
    r.push_back(Domain::di_set({1, m - 1}));
    if (m == 4) r.push_back(Domain::di_set({1, 2, 3}));
    for (const auto& d : ps) {
      RegularityReport rep = verify_regularity(d, m);
      if (!rep.regular || rep.gamma != GammaClass::PS || rep.gamma_dim != ps_dim || !rep.matches_expected())
        out.fail(d.name() + " m=" + std::to_string(m) + " is not regular with PS");
    }
    for (const auto& d : r) {
      RegularityReport rep = verify_regularity(d, m);
      if (!rep.regular || rep.gamma != GammaClass::R || rep.gamma_dim != r_dim || !rep.matches_expected())
        out.fail(d.name() + " m=" + std::to_string(m) + " is not regular with R");
    }
    if (verify_regularity(Domain::cycles(), m).con) out.fail("cycles satisfy CON at m=" + std::to_string(m));
  }
  return out;
}

Verdict ac7_monotonicity() {
  Verdict out;
  const Rule aborda = make_rule(RuleId::ABOR);
  std::mt19937_64 rng(77);
  for (std::size_t m : {3, 4}) {
    const AlternativeSet a = AlternativeSet::of_size(m);
    std::size_t instances = 0, violations = 0;
    while (instances < 10000) {
      Profile p = random_profile(a, 6, rng, [&] { return random_top_truncated(a, rng); });
      std::vector<Alt> winners = o_oracle(p).members();
      Alt y = winners[rng() % winners.size()];
      std::vector<std::pair<VoterId, Alt>> moves;
      for (const auto& [id, r] : p.ballots())
        for (Alt x = 0; x < m; ++x)
          if (r.holds(x, y) && !r.holds(y, x)) moves.emplace_back(id, x);
      if (moves.empty()) continue;
      auto [voter, x] = moves[rng() % moves.size()];
      ++instances;
      CheckResult res = check_monotonicity(aborda, p, voter, x, y);
      Profile swapped = p.with_ballot(voter, permute_relation(p.at(voter), Permutation::transposition(m, x, y)));
      if (!res.passed() || o_oracle(swapped) != AltSet::singleton(y)) ++violations;
    }
    if (violations) out.fail(std::to_string(violations) + " violations at m=" + std::to_string(m));
  }
  // two voters a>b>c and b>a>c; swapping a and b for voter 1 leaves {b}
  const AlternativeSet a3 = AlternativeSet::of_size(3);
  Profile p = make_profile(a3, {Relation::linear(a3, {0, 1, 2}), Relation::linear(a3, {1, 0, 2})});
  Profile q = p.with_ballot(1, Relation::linear(a3, {1, 0, 2}));
  if (aborda.apply(q).members() != AltSet::singleton(1) || !check_monotonicity(aborda, p, 1, 0, 1).passed())
    out.fail("worked example");
  return out;
}

Verdict ac8_mutants() {
  Verdict out;
  for (const char* name : {"lexo", "dictator", "runoff"}) {
    Rule rule = mutant_rule(name);
    FuzzOptions opt;
    opt.trials = 1000;
    opt.seed = 7;
    opt.m = 3;
    FuzzResult r = fuzz_axioms(rule, Domain::linear(), opt);
    if (r.reports.empty()) out.fail(std::string(name) + " produced no report");
    for (const auto& rep : r.reports)
      if (!recheck(rule, rep)) out.fail(std::string(name) + " report does not recheck");
  }
  return out;
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  int code = run_cli(args, o, e);
  return {code, o.str(), e.str()};
}

Verdict ac9_cli() {
  Verdict out;
  const std::string dir = NETOUTDEG_FIXTURE_DIR;
  auto fx = [&](const std::string& f) { return dir + "/" + f; };
  struct Case {
    std::vector<std::string> args;
    int code;
    bool json;
  };
  std::vector<Case> cases{
      {{"winners", "--rule", "o", fx("linear_abc.txt")}, kExitOk, true},
      {{"winners", "--rule", "borda", fx("weak_tie.txt")}, kExitOk, true},
      {{"scores", "--rule", "av", fx("approvals.txt")}, kExitOk, true},
      {{"scores", "--rule", "aborda", fx("truncated.txt")}, kExitOk, true},
      {{"winners", "--rule", "o", fx("mixed.txt")}, kExitOk, true},
      {{"network", "--emit", "csv", fx("mixed.txt")}, kExitOk, false},
      {{"axioms", "--rule", "o", "--domain", "order", "--trials", "200", "--seed", "3"}, kExitOk, true},
      {{"algebra", "--check", "rank", "--m", "4"}, kExitOk, true},
      {{"winners", "--rule", "o", fx("bad_syntax.txt")}, kExitUsage, false},
      {{"winners", "--rule", "o", fx("bad_label.txt")}, kExitUsage, false},
      {{"winners", "--rule", "stv", fx("linear_abc.txt")}, kExitUsage, false},
      {{"winners", "--rule", "av", fx("linear_abc.txt")}, kExitDomainViolation, false},
      {{"axioms", "--rule", "mutant:lexo", "--domain", "linear", "--trials", "1000", "--seed", "7"},
       kExitViolations, true},
  };
  bool seen[4] = {false, false, false, false};
  for (const auto& cs : cases) {
    CliRun first = cli(cs.args), second = cli(cs.args);
    std::string what = cs.args[0] + " " + cs.args.back();
    if (first.code != cs.code) out.fail("exit " + std::to_string(first.code) + " for " + what);
    if (first.code != second.code || first.out != second.out || first.err != second.err)
      out.fail("output differs across runs for " + what);
    if (cs.json && !nlohmann::json::accept(first.out)) out.fail("invalid JSON for " + what);
    seen[cs.code] = true;
  }
  for (bool s : seen)
    if (!s) out.fail("exit code not covered");
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {"AC1", "dimension suite", ac1_dimensions},
      {"AC2", "classic rules equal O", ac2_equivalence},
      {"AC3", "axioms hold for O", ac3_axioms_for_o},
      {"AC4", "cancellation equivalence on dichotomous profiles", ac4_cancellation_equivalence},
      {"AC5", "cycle decomposition", ac5_cycles},
      {"AC6", "regularity reports", ac6_regularity},
      {"AC7", "monotonicity of averaged Borda", ac7_monotonicity},
      {"AC8", "mutant detection", ac8_mutants},
      {"AC9", "CLI contract", ac9_cli},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = Clock::now();
    Verdict o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds_since(start));
    std::cout << c.id << ' ' << (o.ok ? "PASS" : "FAIL") << "  " << c.title << " (" << timing << ")";
    if (!o.ok) std::cout << ": " << o.detail;
    std::cout << std::endl;
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
