#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netoutdeg/profiles.hpp"
#include "netoutdeg/rules.hpp"

namespace netoutdeg {

enum class AxiomId {
  Neutrality,
  Consistency,
  Cancellation,
  FishburnCancellation,
  Faithfulness,
  Averseness,
  OnFaithfulness,
  Anonymity,
  StrongAnonymity,
  Monotonicity,
  SymmetricFixture,
};

std::string axiom_name(AxiomId id);
/// Throws InvalidArgument.
AxiomId parse_axiom(std::string_view text);
std::vector<AxiomId> all_axioms();

using VoterMap = std::map<VoterId, VoterId>;

/// Instance data of a check; only the fields the axiom uses are set.
struct Witness {
  std::optional<Profile> profile;
  std::optional<Profile> second;  // p' for consistency
  std::optional<Permutation> permutation;
  std::optional<VoterMap> relabeling;
  std::optional<VoterId> voter;
  std::optional<Alt> x;
  std::optional<Alt> y;
  std::optional<Domain> domain;   // on_faithfulness
  std::optional<WitnessMode> mode;
};

struct ViolationReport {
  AxiomId axiom;
  std::string rule;
  Witness witness;
  std::optional<SelectionSet> expected;  // unset when no admissible outcome exists
  SelectionSet observed;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
};

enum class CheckStatus { Pass, Skip, Violation };

struct CheckResult {
  CheckStatus status;
  std::optional<ViolationReport> report;

  bool passed() const { return status == CheckStatus::Pass; }
  bool skipped() const { return status == CheckStatus::Skip; }
  bool violated() const { return status == CheckStatus::Violation; }
};

/// F(p^ψ) = ψ(F(p)).
CheckResult check_neutrality(const Rule& rule, const Profile& p, const Permutation& psi);
/// F(p + p') = F(p) ∩ F(p') when the intersection is nonempty. p' is
/// cloned away from Dom(p) when the voter sets overlap.
CheckResult check_consistency(const Rule& rule, const Profile& p, const Profile& q);

/// N(p) reversal symmetric.
bool cancellation_hypothesis(const Profile& p);
/// All approval scores equal; dichotomous ballots only.
bool fishburn_hypothesis(const Profile& p);
CheckResult check_cancellation(const Rule& rule, const Profile& p);
/// Throws DomainViolation on a non-dichotomous ballot.
CheckResult check_fishburn_cancellation(const Rule& rule, const Profile& p);

/// Single-voter order profile: F(p) = T(p(i)). Throws PreconditionViolation
/// or DomainViolation otherwise.
CheckResult check_faithfulness(const Rule& rule, const Profile& p);
/// Single-voter profile: y ≻ x in the ballot implies x ∉ F(p).
CheckResult check_averseness(const Rule& rule, const Profile& p);

/// Runs every outstar witness of `domain` through the rule.
CheckResult verify_on_faithfulness(const Rule& rule, const Domain& domain, const AlternativeSet& alternatives,
                                   WitnessMode mode = WitnessMode::Coherence);

/// `relabeling` must be a bijection of Dom(p). Throws NotABijection.
CheckResult check_anonymity(const Rule& rule, const Profile& p, const VoterMap& relabeling);
/// `relabeling` may target any positive ids injectively. Throws NotABijection.
CheckResult check_strong_anonymity(const Rule& rule, const Profile& p, const VoterMap& relabeling);

/// Swap x and y in voter i's ballot; requires top-truncated ballots and
/// x ≻ y in p(i). Throws PreconditionViolation.
CheckResult check_monotonicity(const Rule& rule, const Profile& p, VoterId i, Alt x, Alt y);

/// True iff for every ψ some voter bijection φ gives p^(φ,ψ) = p.
/// Throws BudgetExceeded when |Dom(p)| > 6.
bool symmetric_fixture_hypothesis(const Profile& p);
/// Skip when the hypothesis fails; otherwise pass iff F(p) = A.
CheckResult check_symmetric_fixture(const Rule& rule, const Profile& p);

/// Runs the checker named by `axiom` on a stored witness. Errors raised
/// by the checker propagate.
CheckResult rerun(const Rule& rule, AxiomId axiom, const Witness& witness);
/// True iff rerunning the report's witness still yields a violation.
bool recheck(const Rule& rule, const ViolationReport& report);

/// Removes voters, then replaces ballots by earlier `candidates`, while
/// the violation persists. The result always rechecks.
ViolationReport shrink(const Rule& rule, const ViolationReport& report, const std::vector<Relation>& candidates);

struct FuzzOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t max_voters = 5;
  std::size_t m = 3;
  std::vector<AxiomId> checks;  // empty: every meaningful axiom
  std::size_t max_reports = 10;  // per axiom; violations are still counted
  bool shrink = true;
};

enum class ResultLabel { VerifiedExhaustive, NoCounterexample, Violated, NotApplicable };
std::string label_name(ResultLabel l);

struct AxiomSummary {
  AxiomId axiom;
  ResultLabel label = ResultLabel::NotApplicable;
  std::uint64_t instances = 0;  // checks run
  std::uint64_t applicable = 0; // checks whose hypothesis held
  std::uint64_t violations = 0;
};

struct FuzzResult {
  std::string rule;
  Domain domain;
  FuzzOptions options;
  std::vector<AxiomSummary> summaries;
  std::vector<ViolationReport> reports;  // ordered by axiom, then trial

  std::uint64_t total_violations() const;
};

/// Whether `axiom` is meaningful for the given rule and domain at m.
bool axiom_applies(AxiomId axiom, const Rule& rule, const Domain& domain, std::size_t m);

/// Seeded search for violations over profiles drawn uniformly from the
/// enumerated domain. Deterministic in (rule, domain, options).
FuzzResult fuzz_axioms(const Rule& rule, const Domain& domain, const FuzzOptions& options);

}  // namespace netoutdeg
