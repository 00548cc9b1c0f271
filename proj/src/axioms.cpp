#include "netoutdeg/axioms.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

namespace netoutdeg {

namespace {

constexpr std::array<std::pair<AxiomId, const char*>, 11> kAxiomNames{{
    {AxiomId::Neutrality, "neutrality"},
    {AxiomId::Consistency, "consistency"},
    {AxiomId::Cancellation, "cancellation"},
    {AxiomId::FishburnCancellation, "fishburn_cancellation"},
    {AxiomId::Faithfulness, "faithfulness"},
    {AxiomId::Averseness, "averseness"},
    {AxiomId::OnFaithfulness, "on_faithfulness"},
    {AxiomId::Anonymity, "anonymity"},
    {AxiomId::StrongAnonymity, "strong_anonymity"},
    {AxiomId::Monotonicity, "monotonicity"},
    {AxiomId::SymmetricFixture, "symmetric_fixture"},
}};

CheckResult pass() { return {CheckStatus::Pass, std::nullopt}; }
CheckResult skip() { return {CheckStatus::Skip, std::nullopt}; }

CheckResult violation(AxiomId axiom, const Rule& rule, Witness w, std::optional<SelectionSet> expected,
                      SelectionSet observed) {
  return {CheckStatus::Violation,
          ViolationReport{axiom, rule.name, std::move(w), std::move(expected), std::move(observed), 0, 0}};
}

CheckResult compare(AxiomId axiom, const Rule& rule, Witness w, const SelectionSet& expected,
                    const SelectionSet& observed) {
  if (expected == observed) return pass();
  return violation(axiom, rule, std::move(w), expected, observed);
}

SelectionSet everything(const AlternativeSet& a) { return SelectionSet(a, a.all()); }

Profile relabel(const Profile& p, const VoterMap& map) {
  Profile::Ballots b;
  for (const auto& [id, r] : p.ballots()) {
    auto it = map.find(id);
    if (it == map.end()) throw NotABijection("relabeling misses voter " + std::to_string(id));
    if (it->second == 0) throw NotABijection("relabeling targets voter id 0");
    if (!b.emplace(it->second, r).second) throw NotABijection("relabeling is not injective");
  }
  if (map.size() != p.size()) throw NotABijection("relabeling covers voters outside the profile");
  return Profile(p.alternatives(), std::move(b));
}

}  // namespace

std::string axiom_name(AxiomId id) {
  for (const auto& [a, n] : kAxiomNames)
    if (a == id) return n;
  return "?";
}

AxiomId parse_axiom(std::string_view text) {
  for (const auto& [a, n] : kAxiomNames)
    if (text == n) return a;
  throw InvalidArgument("unknown axiom '" + std::string(text) + "'");
}

std::vector<AxiomId> all_axioms() {
  std::vector<AxiomId> out;
  for (const auto& entry : kAxiomNames) out.push_back(entry.first);
  return out;
}

CheckResult check_neutrality(const Rule& rule, const Profile& p, const Permutation& psi) {
  SelectionSet before = rule.apply(p);
  SelectionSet after = rule.apply(permute_profile(p, psi));
  SelectionSet expected(p.alternatives(), psi.apply(before.members()));
  Witness w;
  w.profile = p;
  w.permutation = psi;
  return compare(AxiomId::Neutrality, rule, std::move(w), expected, after);
}

CheckResult check_consistency(const Rule& rule, const Profile& p, const Profile& q_in) {
  std::set<VoterId> ids;
  for (VoterId id : p.voters()) ids.insert(id);
  bool overlap = std::any_of(q_in.ballots().begin(), q_in.ballots().end(),
                             [&](const auto& entry) { return ids.count(entry.first) != 0; });
  Profile q = overlap ? clone_disjoint(q_in, ids) : q_in;
  AltSet both = rule.apply(p).members() & rule.apply(q).members();
  if (both.empty()) return skip();
  SelectionSet observed = rule.apply(combine_disjoint(p, q));
  Witness w;
  w.profile = p;
  w.second = q;
  return compare(AxiomId::Consistency, rule, std::move(w), SelectionSet(p.alternatives(), both), observed);
}

bool cancellation_hypothesis(const Profile& p) {
  return classify_network(network_of_profile(p)).reversal_symmetric;
}

bool fishburn_hypothesis(const Profile& p) {
  std::vector<Rational> av;
  for (Alt x = 0; x < p.m(); ++x) av.push_back(approval_score(p, x));
  return std::all_of(av.begin(), av.end(), [&](const Rational& v) { return v == av.front(); });
}

CheckResult check_cancellation(const Rule& rule, const Profile& p) {
  if (!cancellation_hypothesis(p)) return skip();
  Witness w;
  w.profile = p;
  return compare(AxiomId::Cancellation, rule, std::move(w), everything(p.alternatives()), rule.apply(p));
}

CheckResult check_fishburn_cancellation(const Rule& rule, const Profile& p) {
  if (!fishburn_hypothesis(p)) return skip();
  Witness w;
  w.profile = p;
  return compare(AxiomId::FishburnCancellation, rule, std::move(w), everything(p.alternatives()),
                 rule.apply(p));
}

CheckResult check_faithfulness(const Rule& rule, const Profile& p) {
  if (p.size() != 1) throw PreconditionViolation("faithfulness is checked on single-voter profiles");
  const auto& [id, r] = *p.ballots().begin();
  if (!classify_relation(r).order) throw DomainViolation(id, "order");
  Witness w;
  w.profile = p;
  return compare(AxiomId::Faithfulness, rule, std::move(w), SelectionSet(p.alternatives(), top_bottom(r).top),
                 rule.apply(p));
}

CheckResult check_averseness(const Rule& rule, const Profile& p) {
  if (p.size() != 1) throw PreconditionViolation("averseness is checked on single-voter profiles");
  const Relation& r = p.ballots().begin()->second;
  AltSet undominated;
  for (Alt x = 0; x < p.m(); ++x) {
    bool dominated = false;
    for (Alt y = 0; y < p.m(); ++y) dominated = dominated || r.strictly(y, x);
    if (!dominated) undominated.insert(x);
  }
  SelectionSet observed = rule.apply(p);
  if (observed.members().subset_of(undominated)) return pass();
  Witness w;
  w.profile = p;
  std::optional<SelectionSet> expected;
  if (!undominated.empty()) expected = SelectionSet(p.alternatives(), undominated);
  return violation(AxiomId::Averseness, rule, std::move(w), expected, observed);
}

CheckResult verify_on_faithfulness(const Rule& rule, const Domain& domain, const AlternativeSet& alternatives,
                                   WitnessMode mode) {
  for (Alt x = 0; x < alternatives.size(); ++x) {
    WitnessCertificate cert = witness_outstar(domain, alternatives, x, mode);
    SelectionSet observed = rule.apply(cert.profile());
    SelectionSet expected(alternatives, AltSet::singleton(x));
    if (!(observed == expected)) {
      Witness w;
      w.profile = cert.profile();
      w.x = x;
      w.domain = domain;
      w.mode = mode;
      return violation(AxiomId::OnFaithfulness, rule, std::move(w), expected, observed);
    }
  }
  return pass();
}

CheckResult check_anonymity(const Rule& rule, const Profile& p, const VoterMap& relabeling) {
  for (const auto& [from, to] : relabeling)
    if (!p.contains(to)) throw NotABijection("anonymity relabeling must permute Dom(p)");
  Profile q = relabel(p, relabeling);
  Witness w;
  w.profile = p;
  w.relabeling = relabeling;
  return compare(AxiomId::Anonymity, rule, std::move(w), rule.apply(p), rule.apply(q));
}

CheckResult check_strong_anonymity(const Rule& rule, const Profile& p, const VoterMap& relabeling) {
  Profile q = relabel(p, relabeling);
  Witness w;
  w.profile = p;
  w.relabeling = relabeling;
  return compare(AxiomId::StrongAnonymity, rule, std::move(w), rule.apply(p), rule.apply(q));
}

CheckResult check_monotonicity(const Rule& rule, const Profile& p, VoterId i, Alt x, Alt y) {
  for (const auto& [id, r] : p.ballots())
    if (!classify_relation(r).top_truncated)
      throw PreconditionViolation("monotonicity needs top-truncated ballots; voter " + std::to_string(id));
  if (x >= p.m() || y >= p.m() || !p.contains(i) || !p.at(i).strictly(x, y))
    throw PreconditionViolation("monotonicity needs x strictly above y in the chosen ballot");
  if (!rule.apply(p).contains(y)) return skip();
  Profile q = p.with_ballot(i, permute_relation(p.at(i), Permutation::transposition(p.m(), x, y)));
  Witness w;
  w.profile = p;
  w.voter = i;
  w.x = x;
  w.y = y;
  return compare(AxiomId::Monotonicity, rule, std::move(w), SelectionSet(p.alternatives(), AltSet::singleton(y)),
                 rule.apply(q));
}

namespace {

// Backtracking search for a voter bijection matching ballots to permuted ballots.
bool match(const std::vector<Relation>& target, const std::vector<Relation>& permuted, std::vector<bool>& used,
           std::size_t i) {
  if (i == target.size()) return true;
  for (std::size_t j = 0; j < permuted.size(); ++j) {
    if (used[j] || !(permuted[j] == target[i])) continue;
    used[j] = true;
    if (match(target, permuted, used, i + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool symmetric_fixture_hypothesis(const Profile& p) {
  if (p.size() > 6) throw BudgetExceeded("symmetric fixture voter search", p.size(), 6);
  std::vector<Relation> ballots;
  for (const auto& entry : p.ballots()) ballots.push_back(entry.second);
  for (const auto& psi : all_permutations(p.m())) {
    std::vector<Relation> permuted;
    for (const auto& r : ballots) permuted.push_back(permute_relation(r, psi));
    std::vector<bool> used(ballots.size(), false);
    if (!match(ballots, permuted, used, 0)) return false;
  }
  return true;
}

CheckResult check_symmetric_fixture(const Rule& rule, const Profile& p) {
  if (!symmetric_fixture_hypothesis(p)) return skip();
  Witness w;
  w.profile = p;
  return compare(AxiomId::SymmetricFixture, rule, std::move(w), everything(p.alternatives()), rule.apply(p));
}

CheckResult rerun(const Rule& rule, AxiomId axiom, const Witness& w) {
  auto need = [](bool ok) {
    if (!ok) throw InvalidArgument("witness lacks the data this axiom needs");
  };
  need(w.profile.has_value());
  const Profile& p = *w.profile;
  switch (axiom) {
    case AxiomId::Neutrality:
      need(w.permutation.has_value());
      return check_neutrality(rule, p, *w.permutation);
    case AxiomId::Consistency:
      need(w.second.has_value());
      return check_consistency(rule, p, *w.second);
    case AxiomId::Cancellation: return check_cancellation(rule, p);
    case AxiomId::FishburnCancellation: return check_fishburn_cancellation(rule, p);
    case AxiomId::Faithfulness: return check_faithfulness(rule, p);
    case AxiomId::Averseness: return check_averseness(rule, p);
    case AxiomId::OnFaithfulness:
      need(w.domain.has_value() && w.mode.has_value());
      return verify_on_faithfulness(rule, *w.domain, p.alternatives(), *w.mode);
    case AxiomId::Anonymity:
      need(w.relabeling.has_value());
      return check_anonymity(rule, p, *w.relabeling);
    case AxiomId::StrongAnonymity:
      need(w.relabeling.has_value());
      return check_strong_anonymity(rule, p, *w.relabeling);
    case AxiomId::Monotonicity:
      need(w.voter && w.x && w.y);
      return check_monotonicity(rule, p, *w.voter, *w.x, *w.y);
    case AxiomId::SymmetricFixture: return check_symmetric_fixture(rule, p);
  }
  throw InvalidArgument("unhandled axiom");
}

bool recheck(const Rule& rule, const ViolationReport& report) {
  try {
    return rerun(rule, report.axiom, report.witness).violated();
  } catch (const Error&) {
    return false;
  }
}

namespace {

std::optional<ViolationReport> still_violates(const Rule& rule, AxiomId axiom, const Witness& w) {
  try {
    CheckResult r = rerun(rule, axiom, w);
    if (r.violated()) return r.report;
  } catch (const Error&) {
  }
  return std::nullopt;
}

// Witness variants with one voter removed from the primary or second profile.
std::vector<Witness> voter_removals(const Witness& w) {
  std::vector<Witness> out;
  auto from = [&](const Profile& p, bool second) {
    if (p.size() < 2) return;
    for (VoterId id : p.voters()) {
      Witness v = w;
      (second ? v.second : v.profile) = p.without(id);
      if (!second && v.relabeling) v.relabeling->erase(id);
      out.push_back(std::move(v));
    }
  };
  if (w.profile) from(*w.profile, false);
  if (w.second) from(*w.second, true);
  return out;
}

}  // namespace

ViolationReport shrink(const Rule& rule, const ViolationReport& report, const std::vector<Relation>& candidates) {
  if (report.axiom == AxiomId::OnFaithfulness || !recheck(rule, report)) return report;
  ViolationReport best = report;
  auto adopt = [&](const ViolationReport& r) {
    std::uint64_t seed = best.seed, trial = best.trial;
    best = r;
    best.seed = seed;
    best.trial = trial;
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (const Witness& v : voter_removals(best.witness))
      if (auto r = still_violates(rule, best.axiom, v)) {
        adopt(*r);
        changed = true;
        break;
      }
  }

  auto rank_of = [&](const Relation& r) -> std::size_t {
    auto it = std::find(candidates.begin(), candidates.end(), r);
    return static_cast<std::size_t>(it - candidates.begin());
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (int which = 0; which < 2 && !changed; ++which) {
      const std::optional<Profile>& prof = which == 0 ? best.witness.profile : best.witness.second;
      if (!prof) continue;
      for (const auto& [id, ballot] : prof->ballots()) {
        std::size_t limit = std::min(rank_of(ballot), candidates.size());
        for (std::size_t c = 0; c < limit && !changed; ++c) {
          Witness v = best.witness;
          (which == 0 ? v.profile : v.second) = prof->with_ballot(id, candidates[c]);
          if (auto r = still_violates(rule, best.axiom, v)) {
            adopt(*r);
            changed = true;
          }
        }
        if (changed) break;
      }
    }
  }
  return best;
}

std::string label_name(ResultLabel l) {
  switch (l) {
    case ResultLabel::VerifiedExhaustive: return "verified-exhaustive";
    case ResultLabel::NoCounterexample: return "no-counterexample-found";
    case ResultLabel::Violated: return "violated";
    case ResultLabel::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::uint64_t FuzzResult::total_violations() const {
  std::uint64_t n = 0;
  for (const auto& s : summaries) n += s.violations;
  return n;
}

namespace {

struct DomainFacts {
  std::vector<Relation> ballots;
  bool all_orders = true;
  bool all_dichotomous = true;
  bool all_top_truncated = true;
};

DomainFacts domain_facts(const Domain& domain, const AlternativeSet& a) {
  DomainFacts f;
  f.ballots = enumerate_domain(domain, a);
  for (const auto& r : f.ballots) {
    RelationClassification c = classify_relation(r);
    f.all_orders = f.all_orders && c.order;
    f.all_dichotomous = f.all_dichotomous && c.dichotomous;
    f.all_top_truncated = f.all_top_truncated && c.top_truncated;
  }
  std::stable_sort(f.ballots.begin(), f.ballots.end(), [](const Relation& x, const Relation& y) {
    return x.pair_count() < y.pair_count();
  });
  return f;
}

struct OnTag {
  Domain domain;
  WitnessMode mode;
};

std::vector<OnTag> on_faithfulness_tags(const Rule& rule, const Domain& domain, const AlternativeSet& a) {
  const std::size_t m = a.size();
  std::vector<OnTag> candidates{{Domain::linear(), WitnessMode::Coherence},
                                {Domain::linear(), WitnessMode::Faithfulness}};
  for (std::size_t t = 1; t < m; ++t) candidates.push_back({Domain::di(t), WitnessMode::Coherence});
  if (m <= 7)
    for (std::size_t s = 1; s < m; ++s) candidates.push_back({Domain::truncated(s), WitnessMode::Coherence});
  std::vector<OnTag> out;
  for (const auto& tag : candidates) {
    bool inside = true;
    for (Alt x = 0; x < m && inside; ++x) {
      WitnessCertificate cert = witness_outstar(tag.domain, a, x, tag.mode);
      for (const auto& entry : cert.profile().ballots())
        inside = inside && domain.contains(entry.second) && rule.admits(entry.second);
    }
    if (inside) out.push_back(tag);
  }
  return out;
}

bool applies(AxiomId axiom, const Rule& rule, const Domain& domain, const AlternativeSet& a,
             const DomainFacts& f) {
  switch (axiom) {
    case AxiomId::FishburnCancellation: return f.all_dichotomous;
    case AxiomId::Faithfulness: return f.all_orders;
    case AxiomId::Monotonicity: return f.all_top_truncated;
    case AxiomId::OnFaithfulness: return !on_faithfulness_tags(rule, domain, a).empty();
    case AxiomId::SymmetricFixture: return a.size() <= 3;
    default: return true;
  }
}

class Sampler {
 public:
  Sampler(const std::vector<Relation>& ballots, const AlternativeSet& a, std::size_t max_voters)
      : ballots_(ballots), a_(a), max_voters_(max_voters) {}

  Profile profile(std::mt19937_64& rng, std::size_t n = 0) const {
    if (n == 0) n = std::uniform_int_distribution<std::size_t>(1, max_voters_)(rng);
    std::vector<Relation> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(ballot(rng));
    return make_profile(a_, out);
  }
  const Relation& ballot(std::mt19937_64& rng) const {
    return ballots_[std::uniform_int_distribution<std::size_t>(0, ballots_.size() - 1)(rng)];
  }

 private:
  const std::vector<Relation>& ballots_;
  const AlternativeSet& a_;
  std::size_t max_voters_;
};

std::mt19937_64 trial_rng(std::uint64_t seed, AxiomId axiom, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(axiom), static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

// A profile containing p whose network is reversal symmetric, staying inside the domain.
std::optional<Profile> cancelling_extension(const Profile& p, const Rule& rule, const Domain& domain) {
  Profile rev = reverse_profile(p);
  bool closed = std::all_of(rev.ballots().begin(), rev.ballots().end(), [&](const auto& e) {
    return domain.contains(e.second) && rule.admits(e.second);
  });
  std::set<VoterId> ids;
  for (VoterId id : p.voters()) ids.insert(id);
  if (closed) return combine_disjoint(p, clone_disjoint(rev, ids));
  if (p.m() > 6) return std::nullopt;
  return combine_disjoint(p, symmetrize(p));
}

}  // namespace

bool axiom_applies(AxiomId axiom, const Rule& rule, const Domain& domain, std::size_t m) {
  AlternativeSet a = AlternativeSet::of_size(m);
  return applies(axiom, rule, domain, a, domain_facts(domain, a));
}

FuzzResult fuzz_axioms(const Rule& rule, const Domain& domain, const FuzzOptions& options) {
  if (options.trials < 1) throw InvalidArgument("fuzzing needs at least one trial");
  if (options.max_voters < 1) throw InvalidArgument("max_voters must be at least 1");
  AlternativeSet a = AlternativeSet::of_size(options.m);
  DomainFacts facts = domain_facts(domain, a);
  for (const auto& r : facts.ballots)
    if (!rule.admits(r))
      throw InvalidArgument("rule '" + rule.name + "' does not admit every ballot of domain '" + domain.name() + "'");

  FuzzResult result{rule.name, domain, options, {}, {}};
  std::vector<AxiomId> checks = options.checks.empty() ? all_axioms() : options.checks;
  Sampler sample(facts.ballots, a, options.max_voters);
  std::vector<Permutation> perms = all_permutations(options.m);

  for (AxiomId axiom : checks) {
    AxiomSummary summary{axiom};
    if (!applies(axiom, rule, domain, a, facts)) {
      result.summaries.push_back(summary);
      continue;
    }
    std::vector<ViolationReport> kept;
    auto record = [&](CheckResult r, std::uint64_t trial) {
      ++summary.instances;
      if (r.skipped()) return;
      ++summary.applicable;
      if (!r.violated()) return;
      ++summary.violations;
      if (kept.size() >= options.max_reports) return;
      ViolationReport rep = *r.report;
      rep.seed = options.seed;
      rep.trial = trial;
      if (options.shrink) rep = shrink(rule, rep, facts.ballots);
      kept.push_back(std::move(rep));
    };

    bool exhaustive = false;
    if (axiom == AxiomId::OnFaithfulness) {
      std::uint64_t index = 0;
      for (const auto& tag : on_faithfulness_tags(rule, domain, a))
        record(verify_on_faithfulness(rule, tag.domain, a, tag.mode), index++);
      exhaustive = true;
    } else if ((axiom == AxiomId::Faithfulness || axiom == AxiomId::Averseness) &&
               facts.ballots.size() <= options.trials) {
      std::uint64_t index = 0;
      for (const auto& r : facts.ballots) {
        Profile p = make_profile(a, {r});
        record(axiom == AxiomId::Faithfulness ? check_faithfulness(rule, p) : check_averseness(rule, p), index++);
      }
      exhaustive = true;
    } else {
      for (std::uint64_t t = 0; t < options.trials; ++t) {
        std::mt19937_64 rng = trial_rng(options.seed, axiom, t);
        switch (axiom) {
          case AxiomId::Neutrality: {
            Profile p = sample.profile(rng);
            const Permutation& psi = perms[std::uniform_int_distribution<std::size_t>(0, perms.size() - 1)(rng)];
            record(check_neutrality(rule, p, psi), t);
            break;
          }
          case AxiomId::Consistency: {
            Profile p = sample.profile(rng);
            Profile q = sample.profile(rng);
            record(check_consistency(rule, p, q), t);
            break;
          }
          case AxiomId::Cancellation:
          case AxiomId::FishburnCancellation: {
            Profile p = sample.profile(rng);
            std::optional<Profile> ext = cancelling_extension(p, rule, domain);
            const Profile& target = ext ? *ext : p;
            record(axiom == AxiomId::Cancellation ? check_cancellation(rule, target)
                                                  : check_fishburn_cancellation(rule, target),
                   t);
            break;
          }
          case AxiomId::Faithfulness:
            record(check_faithfulness(rule, sample.profile(rng, 1)), t);
            break;
          case AxiomId::Averseness:
            record(check_averseness(rule, sample.profile(rng, 1)), t);
            break;
          case AxiomId::Anonymity: {
            Profile p = sample.profile(rng);
            std::vector<VoterId> ids = p.voters(), image = ids;
            std::shuffle(image.begin(), image.end(), rng);
            VoterMap map;
            for (std::size_t i = 0; i < ids.size(); ++i) map[ids[i]] = image[i];
            record(check_anonymity(rule, p, map), t);
            break;
          }
          case AxiomId::StrongAnonymity: {
            Profile p = sample.profile(rng);
            std::vector<VoterId> pool(3 * p.size() + 8);
            for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i + 1;
            std::shuffle(pool.begin(), pool.end(), rng);
            VoterMap map;
            std::size_t i = 0;
            for (VoterId id : p.voters()) map[id] = pool[i++];
            record(check_strong_anonymity(rule, p, map), t);
            break;
          }
          case AxiomId::Monotonicity: {
            Profile p = sample.profile(rng);
            std::vector<Alt> winners = rule.apply(p).members().members();
            Alt y = winners[std::uniform_int_distribution<std::size_t>(0, winners.size() - 1)(rng)];
            std::vector<std::pair<VoterId, Alt>> moves;
            for (const auto& [id, r] : p.ballots())
              for (Alt x = 0; x < p.m(); ++x)
                if (r.strictly(x, y)) moves.emplace_back(id, x);
            if (moves.empty()) {
              record(skip(), t);
              break;
            }
            auto [i, x] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
            record(check_monotonicity(rule, p, i, x, y), t);
            break;
          }
          case AxiomId::SymmetricFixture: {
            const Relation& r = sample.ballot(rng);
            std::vector<Relation> orbit;
            for (const auto& psi : perms) orbit.push_back(permute_relation(r, psi));
            record(check_symmetric_fixture(rule, make_profile(a, orbit)), t);
            break;
          }
          case AxiomId::OnFaithfulness:
            break;
        }
      }
    }
    if (summary.violations > 0) summary.label = ResultLabel::Violated;
    else summary.label = exhaustive ? ResultLabel::VerifiedExhaustive : ResultLabel::NoCounterexample;
    result.summaries.push_back(summary);
    for (auto& r : kept) result.reports.push_back(std::move(r));
  }
  return result;
}

}  // namespace netoutdeg
