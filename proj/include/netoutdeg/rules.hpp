#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "netoutdeg/networks.hpp"
#include "netoutdeg/profiles.hpp"

namespace netoutdeg {

enum class RuleId { O, BOR, PBOR, ABOR, AV, PLU, APLU, COPELAND };

/// Canonical lowercase name: o, borda, pborda, aborda, av, plu, aplu, copeland.
std::string rule_name(RuleId id);
/// Also accepts bor, pbor, abor, partial-borda, averaged-borda, approval,
/// plurality, antiplurality. Throws InvalidArgument.
RuleId parse_rule_id(std::string_view text);

/// Human-readable name of the ballot class a rule admits.
std::string required_class(RuleId id, std::size_t m);
bool admits(RuleId id, const Relation& r);
/// Throws DomainViolation on the first inadmissible ballot (by voter id).
void guard_domain(RuleId id, const Profile& p);

/// b(R,x) = |L| + |I|/2 − 1/2; R must be an order.
Rational borda_score(const Relation& r, Alt x);
/// pb(R,x) = 2|L| + |IN|; R must be a partial order.
Rational partial_borda_score(const Relation& r, Alt x);
/// av(p,x): voters whose top set contains x; dichotomous ballots.
Rational approval_score(const Profile& p, Alt x);

ScoreVector borda_scores(const Profile& p);
ScoreVector partial_borda_scores(const Profile& p);
ScoreVector approval_scores(const Profile& p);

SelectionSet rule_O(const Profile& p);
SelectionSet rule_borda(const Profile& p);
SelectionSet rule_partial_borda(const Profile& p);
SelectionSet rule_averaged_borda(const Profile& p);
SelectionSet rule_av(const Profile& p);
SelectionSet rule_plu(const Profile& p);
SelectionSet rule_aplu(const Profile& p);
/// Every ballot must be complete; scores are the summed per-ballot
/// Copeland scores, which coincide with δ^{N(p)}.
SelectionSet rule_copeland(const Profile& p);

struct Outcome {
  SelectionSet winners;
  ScoreVector scores;
};

/// Winners plus the rule's own score vector. Throws DomainViolation.
Outcome evaluate(RuleId id, const Profile& p);

/// A rule as seen by the axiom checkers.
struct Rule {
  std::string name;
  std::function<SelectionSet(const Profile&)> apply;
  std::function<bool(const Relation&)> admits;
};

Rule make_rule(RuleId id);

/// Deliberately flawed rules used to show that the checkers can fail:
///  lexo      net-outdegree winners cut to the least label
///  dictator  net-outdegree winners of the least voter id alone
///  runoff    plurality finalists, then net pairwise margins among them
Rule mutant_rule(std::string_view name);

/// "o", "borda", ..., or "mutant:<name>".
Rule parse_rule(std::string_view text);

}  // namespace netoutdeg
