#include "netoutdeg/rules.hpp"

#include <stdexcept>

namespace netoutdeg {

std::string rule_name(RuleId id) {
  switch (id) {
    case RuleId::O: return "o";
    case RuleId::BOR: return "borda";
    case RuleId::PBOR: return "pborda";
    case RuleId::ABOR: return "aborda";
    case RuleId::AV: return "av";
    case RuleId::PLU: return "plu";
    case RuleId::APLU: return "aplu";
    case RuleId::COPELAND: return "copeland";
  }
  return "?";
}

RuleId parse_rule_id(std::string_view text) {
  if (text == "o" || text == "O") return RuleId::O;
  if (text == "borda" || text == "bor") return RuleId::BOR;
  if (text == "pborda" || text == "pbor" || text == "partial-borda") return RuleId::PBOR;
  if (text == "aborda" || text == "abor" || text == "averaged-borda") return RuleId::ABOR;
  if (text == "av" || text == "approval") return RuleId::AV;
  if (text == "plu" || text == "plurality") return RuleId::PLU;
  if (text == "aplu" || text == "antiplurality") return RuleId::APLU;
  if (text == "copeland") return RuleId::COPELAND;
  throw InvalidArgument("unknown rule '" + std::string(text) + "'");
}

std::string required_class(RuleId id, std::size_t m) {
  switch (id) {
    case RuleId::O: return "any relation";
    case RuleId::BOR: return "order";
    case RuleId::PBOR: return "partial order";
    case RuleId::ABOR: return "top-truncated order";
    case RuleId::AV: return "dichotomous order";
    case RuleId::PLU: return "dichotomous order with |T|=1";
    case RuleId::APLU: return "dichotomous order with |T|=" + std::to_string(m - 1);
    case RuleId::COPELAND: return "complete relation";
  }
  return "?";
}

bool admits(RuleId id, const Relation& r) {
  if (id == RuleId::O) return true;
  RelationClassification c = classify_relation(r);
  switch (id) {
    case RuleId::O: return true;
    case RuleId::BOR: return c.order;
    case RuleId::PBOR: return c.partial_order;
    case RuleId::ABOR: return c.top_truncated;
    case RuleId::AV: return c.dichotomous;
    case RuleId::PLU: return c.dichotomous && c.t == 1;
    case RuleId::APLU: return c.dichotomous && c.t == r.m() - 1;
    case RuleId::COPELAND: return c.complete;
  }
  return false;
}

void guard_domain(RuleId id, const Profile& p) {
  for (const auto& [voter, r] : p.ballots())
    if (!admits(id, r)) throw DomainViolation(voter, required_class(id, p.m()));
}

Rational borda_score(const Relation& r, Alt x) {
  if (!classify_relation(r).order) throw PreconditionViolation("Borda scores need an order");
  Partition part = derive_partition(r, x);
  return Rational(static_cast<long>(part.lower.size())) + Rational(static_cast<long>(part.indifferent.size()), 2) -
         make_rational(1, 2);
}

Rational partial_borda_score(const Relation& r, Alt x) {
  if (!classify_relation(r).partial_order) throw PreconditionViolation("partial Borda scores need a partial order");
  Partition part = derive_partition(r, x);
  return Rational(static_cast<long>(2 * part.lower.size() + part.incomparable.size()));
}

Rational approval_score(const Profile& p, Alt x) {
  long count = 0;
  for (const auto& [id, r] : p.ballots()) {
    if (!classify_relation(r).dichotomous) throw DomainViolation(id, "dichotomous order");
    if (top_bottom(r).top.contains(x)) ++count;
  }
  return Rational(count);
}

namespace {

Rational dom_size(const Profile& p) { return Rational(static_cast<unsigned long>(p.size())); }
Rational m_minus_1(const Profile& p) { return Rational(static_cast<unsigned long>(p.m() - 1)); }

void expect(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

}  // namespace

ScoreVector borda_scores(const Profile& p) {
  ScoreVector b(p.alternatives());
  for (const auto& [id, r] : p.ballots())
    for (Alt x = 0; x < p.m(); ++x) b[x] += borda_score(r, x);
  ScoreVector o = profile_scores(p).o;
  for (Alt x = 0; x < p.m(); ++x)
    expect(b[x] == o[x] / 2 + m_minus_1(p) * dom_size(p) / 2, "Borda affine identity failed");
  return b;
}

ScoreVector partial_borda_scores(const Profile& p) {
  ScoreVector pb(p.alternatives());
  for (const auto& [id, r] : p.ballots())
    for (Alt x = 0; x < p.m(); ++x) pb[x] += partial_borda_score(r, x);
  ScoreVector o = profile_scores(p).o;
  for (Alt x = 0; x < p.m(); ++x)
    expect(pb[x] == o[x] + m_minus_1(p) * dom_size(p), "partial Borda affine identity failed");
  return pb;
}

ScoreVector approval_scores(const Profile& p) {
  ScoreVector av(p.alternatives());
  Rational tops = 0;
  for (const auto& [id, r] : p.ballots()) {
    if (!classify_relation(r).dichotomous) throw DomainViolation(id, "dichotomous order");
    AltSet top = top_bottom(r).top;
    tops += static_cast<unsigned long>(top.size());
    for (Alt x : top.members()) av[x] += 1;
  }
  ScoreVector o = profile_scores(p).o;
  Rational m(static_cast<unsigned long>(p.m()));
  for (Alt x = 0; x < p.m(); ++x) expect(o[x] == m * av[x] - tops, "approval affine identity failed");
  return av;
}

SelectionSet rule_O(const Profile& p) { return solution_O(network_of_profile(p)); }

namespace {

SelectionSet argmax_of(const ScoreVector& s) { return SelectionSet(s.alternatives(), s.argmax()); }

ScoreVector copeland_profile_scores(const Profile& p) {
  guard_domain(RuleId::COPELAND, p);
  ScoreVector s(p.alternatives());
  for (const auto& [id, r] : p.ballots()) {
    ScoreVector one = copeland_scores(Network::of_relation(r));
    for (Alt x = 0; x < p.m(); ++x) s[x] += one[x];
  }
  expect(s == net_outdegree(network_of_profile(p)), "Copeland scores differ from δ");
  return s;
}

ScoreVector native_scores(RuleId id, const Profile& p) {
  guard_domain(id, p);
  switch (id) {
    case RuleId::O: return profile_scores(p).o;
    case RuleId::BOR:
    case RuleId::ABOR: return borda_scores(p);
    case RuleId::PBOR: return partial_borda_scores(p);
    case RuleId::AV:
    case RuleId::PLU:
    case RuleId::APLU: return approval_scores(p);
    case RuleId::COPELAND: return copeland_profile_scores(p);
  }
  throw std::logic_error("unhandled rule");
}

}  // namespace

SelectionSet rule_borda(const Profile& p) { return argmax_of(native_scores(RuleId::BOR, p)); }
SelectionSet rule_partial_borda(const Profile& p) { return argmax_of(native_scores(RuleId::PBOR, p)); }
SelectionSet rule_averaged_borda(const Profile& p) { return argmax_of(native_scores(RuleId::ABOR, p)); }
SelectionSet rule_av(const Profile& p) { return argmax_of(native_scores(RuleId::AV, p)); }
SelectionSet rule_plu(const Profile& p) { return argmax_of(native_scores(RuleId::PLU, p)); }
SelectionSet rule_aplu(const Profile& p) { return argmax_of(native_scores(RuleId::APLU, p)); }

SelectionSet rule_copeland(const Profile& p) {
  if (p.size() == 1) {
    guard_domain(RuleId::COPELAND, p);
    return copeland(Network::of_relation(p.ballots().begin()->second));
  }
  return argmax_of(copeland_profile_scores(p));
}

Outcome evaluate(RuleId id, const Profile& p) {
  ScoreVector s = native_scores(id, p);
  return {argmax_of(s), s};
}

Rule make_rule(RuleId id) {
  Rule r;
  r.name = rule_name(id);
  r.apply = [id](const Profile& p) { return evaluate(id, p).winners; };
  r.admits = [id](const Relation& rel) { return admits(id, rel); };
  return r;
}

namespace {

SelectionSet lexo(const Profile& p) {
  SelectionSet w = rule_O(p);
  return SelectionSet(p.alternatives(), AltSet::singleton(w.members().members().front()));
}

SelectionSet dictator(const Profile& p) {
  const auto& first = *p.ballots().begin();
  return rule_O(Profile(p.alternatives(), {{first.first, first.second}}));
}

AltSet maximal_elements(const Relation& r) {
  AltSet out;
  for (Alt x = 0; x < r.m(); ++x) {
    bool dominated = false;
    for (Alt y = 0; y < r.m() && !dominated; ++y) dominated = r.strictly(y, x);
    if (!dominated) out.insert(x);
  }
  return out;
}

SelectionSet runoff(const Profile& p) {
  ScoreVector first(p.alternatives());
  for (const auto& [id, r] : p.ballots())
    for (Alt x : maximal_elements(r).members()) first[x] += 1;
  AltSet finalists = first.argmax();
  if (finalists.size() == 1) {
    ScoreVector rest = first;
    Alt leader = finalists.members().front();
    Rational floor = -1;
    for (Alt x = 0; x < p.m(); ++x)
      if (first[x] < floor) floor = first[x];
    rest[leader] = floor - 1;
    finalists = finalists | rest.argmax();
  }
  Network n = network_of_profile(p);
  AltSet best;
  std::optional<Rational> top;
  for (Alt x : finalists.members()) {
    Rational margin = 0;
    for (Alt y : finalists.members())
      if (y != x) margin += n.capacity(x, y) - n.capacity(y, x);
    if (!top || margin > *top) {
      top = margin;
      best = AltSet::singleton(x);
    } else if (margin == *top) {
      best.insert(x);
    }
  }
  return SelectionSet(p.alternatives(), best);
}

}  // namespace

Rule mutant_rule(std::string_view name) {
  Rule r;
  r.name = "mutant:" + std::string(name);
  r.admits = [](const Relation&) { return true; };
  if (name == "lexo") r.apply = lexo;
  else if (name == "dictator") r.apply = dictator;
  else if (name == "runoff") r.apply = runoff;
  else throw InvalidArgument("unknown mutant rule '" + std::string(name) + "'");
  return r;
}

Rule parse_rule(std::string_view text) {
  constexpr std::string_view prefix = "mutant:";
  if (text.substr(0, prefix.size()) == prefix) return mutant_rule(text.substr(prefix.size()));
  return make_rule(parse_rule_id(text));
}

}  // namespace netoutdeg
