#include "netoutdeg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "netoutdeg/algebra.hpp"
#include "netoutdeg/axioms.hpp"
#include "netoutdeg/ballot_io.hpp"
#include "netoutdeg/rules.hpp"

namespace netoutdeg {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::string read_input(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

json labels_json(const SelectionSet& s) { return s.labels(); }

json optional_labels(const std::optional<SelectionSet>& s) { return s ? labels_json(*s) : json(nullptr); }

json scores_json(const ScoreVector& s) {
  json out = json::object();
  for (Alt x = 0; x < s.values().size(); ++x) out[s.alternatives().label(x)] = to_string(s[x]);
  return out;
}

json witness_json(const Witness& w) {
  json out = json::object();
  if (w.profile) out["profile"] = print_profile(*w.profile);
  if (w.second) out["second_profile"] = print_profile(*w.second);
  const AlternativeSet* a = w.profile ? &w.profile->alternatives() : nullptr;
  if (w.permutation && a) {
    json perm = json::object();
    for (Alt x = 0; x < a->size(); ++x) perm[a->label(x)] = a->label((*w.permutation)(x));
    out["permutation"] = perm;
  }
  if (w.relabeling) {
    json rel = json::object();
    for (const auto& [from, to] : *w.relabeling) rel[std::to_string(from)] = to;
    out["relabeling"] = rel;
  }
  if (w.voter) out["voter"] = *w.voter;
  if (w.x && a) out["x"] = a->label(*w.x);
  if (w.y && a) out["y"] = a->label(*w.y);
  if (w.domain) out["witness_domain"] = w.domain->name();
  if (w.mode) out["witness_mode"] = *w.mode == WitnessMode::Coherence ? "coherence" : "faithfulness";
  return out;
}

json report_json(const ViolationReport& r) {
  return json{{"axiom", axiom_name(r.axiom)},
              {"rule", r.rule},
              {"seed", r.seed},
              {"trial", r.trial},
              {"expected", optional_labels(r.expected)},
              {"observed", labels_json(r.observed)},
              {"witness", witness_json(r.witness)}};
}

json fuzz_json(const FuzzResult& f) {
  json summaries = json::array();
  for (const auto& s : f.summaries)
    summaries.push_back({{"axiom", axiom_name(s.axiom)},
                         {"label", label_name(s.label)},
                         {"instances", s.instances},
                         {"applicable", s.applicable},
                         {"violations", s.violations}});
  json reports = json::array();
  for (const auto& r : f.reports) reports.push_back(report_json(r));
  return json{{"schema_version", kSchemaVersion},
              {"command", "axioms"},
              {"rule", f.rule},
              {"domain", f.domain.name()},
              {"m", f.options.m},
              {"trials", f.options.trials},
              {"seed", f.options.seed},
              {"max_voters", f.options.max_voters},
              {"summaries", summaries},
              {"violations", f.total_violations()},
              {"reports", reports}};
}

json rank_json(std::size_t m) {
  DeltaRankKernel d = delta_rank_kernel(m);
  std::size_t exp_rank = m - 1, exp_kernel = (m - 1) * (m - 1);
  return json{{"schema_version", kSchemaVersion},
              {"command", "algebra"},
              {"check", "rank"},
              {"m", m},
              {"computed", {{"rank", d.rank}, {"kernel_dim", d.kernel_dim}}},
              {"expected", {{"rank", exp_rank}, {"kernel_dim", exp_kernel}}},
              {"pass", d.rank == exp_rank && d.kernel_dim == exp_kernel}};
}

json ps_span_json(std::size_t m) {
  PsSpanReport r = ps_cycle_span_report(m);
  return json{{"schema_version", kSchemaVersion},
              {"command", "algebra"},
              {"check", "ps-span"},
              {"m", m},
              {"computed",
               {{"cycle_count", r.cycle_count},
                {"m_cycle_count", r.m_cycle_count},
                {"cycles_dim", r.cycles_dim},
                {"kernel_dim", r.kernel_dim},
                {"m_cycles_plus_r_dim", r.m_cycles_plus_r_dim},
                {"cycles_span_kernel", r.cycles_span_kernel},
                {"m_cycles_plus_r_is_ps", r.m_cycles_plus_r_is_ps}}},
              {"expected", {{"cycles_span_kernel", true}, {"m_cycles_plus_r_is_ps", true}}},
              {"pass", r.holds()}};
}

json regular_json(const Domain& domain, std::size_t m) {
  RegularityReport r = verify_regularity(domain, m);
  bool pass = r.regular && r.matches_expected();
  json out{{"schema_version", kSchemaVersion},
           {"command", "algebra"},
           {"check", "regular:" + domain.name()},
           {"domain", domain.name()},
           {"m", m},
           {"relation_count", r.relation_count},
           {"alpha",
            {{"cpa", r.cpa}, {"ca", r.ca}, {"cwc", r.cwc}, {"con", r.con}, {"con_detail", r.con_detail}}},
           {"beta", {{"holds", r.beta}, {"detail", r.beta_detail}}},
           {"gamma",
            {{"span_dim", r.span_dim},
             {"span_plus_r_dim", r.span_plus_r_dim},
             {"dim", r.gamma_dim},
             {"computed", gamma_name(r.gamma)},
             {"expected", r.expected_gamma ? json(gamma_name(*r.expected_gamma)) : json(nullptr)}}},
           {"routed_via_dichotomous", r.routed_via_dichotomous},
           {"regular", r.regular},
           {"matches_expected", r.matches_expected()},
           {"pass", pass},
           {"notes", r.notes}};
  if (!pass) {
    std::string why;
    if (!r.con) why = "CON " + r.con_detail;
    else if (!r.cpa) why = "class is not closed under permutation";
    else if (r.gamma == GammaClass::Other) why = "(gamma) is neither R nor PS";
    else if (!r.matches_expected()) why = "(gamma) differs from the expected space";
    out["explanation"] = why;
  }
  return out;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("NETOUTDEG_SEED")) {
    std::string v(s);
    if (!v.empty() && std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return std::stoull(v);
    throw InvalidArgument("NETOUTDEG_SEED must be a nonnegative integer");
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Net-outdegree social choice toolkit", "netoutdeg"};
  app.require_subcommand(1);

  std::string rule_text = "o", format = "json", file;
  auto* winners = app.add_subcommand("winners", "Winning alternatives of a rule on a ballot file");
  auto* scores = app.add_subcommand("scores", "Score vector of a rule on a ballot file");
  for (auto* sub : {winners, scores}) {
    sub->add_option("--rule", rule_text, "o, borda, pborda, aborda, av, plu, aplu, copeland");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("file", file, "ballot file, or - for stdin")->required();
  }

  std::string emit = "csv";
  auto* network = app.add_subcommand("network", "Export the network of a ballot file");
  network->add_option("--emit", emit, "csv or dot")->check(CLI::IsMember({"csv", "dot"}));
  network->add_option("file", file, "ballot file, or - for stdin")->required();

  std::string domain_text = "order";
  std::uint64_t trials = 1000, seed = 0;
  std::size_t m = 3, max_voters = 5, max_reports = 10;
  std::vector<std::string> check_list;
  bool no_shrink = false;
  auto* axioms = app.add_subcommand("axioms", "Seeded search for axiom violations");
  axioms->add_option("--rule", rule_text, "rule name or mutant:<lexo|dictator|runoff>");
  axioms->add_option("--domain", domain_text, "all, linear, order, partial, dichotomous, di:<t,..>, top-truncated, t:<s,..>, cycles");
  axioms->add_option("--trials", trials, "trials per axiom")->check(CLI::PositiveNumber);
  auto* seed_opt = axioms->add_option("--seed", seed, "seed (default: NETOUTDEG_SEED or 0)");
  axioms->add_option("--m", m, "number of alternatives")->check(CLI::Range(2, 8));
  axioms->add_option("--max-voters", max_voters, "largest sampled profile")->check(CLI::PositiveNumber);
  axioms->add_option("--check", check_list, "comma-separated axioms (default: all meaningful)")->delimiter(',');
  axioms->add_option("--max-reports", max_reports, "reports kept per axiom");
  axioms->add_flag("--no-shrink", no_shrink, "keep witnesses unshrunk");

  std::string algebra_check = "rank";
  std::size_t algebra_m = 3;
  auto* algebra = app.add_subcommand("algebra", "Exact subspace computations");
  algebra->add_option("--m", algebra_m, "number of alternatives")->check(CLI::Range(2, 8));
  algebra->add_option("--check", algebra_check, "rank, ps-span or regular:<domain>");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (winners->parsed() || scores->parsed()) {
      Profile p = parse_profile(read_input(file));
      RuleId id = parse_rule_id(rule_text);
      Outcome o = evaluate(id, p);
      if (format == "json") {
        print_json(out, json{{"rule", rule_name(id)}, {"winners", labels_json(o.winners)}, {"scores", scores_json(o.scores)}});
      } else if (winners->parsed()) {
        out << "rule: " << rule_name(id) << "\nwinners:";
        for (const auto& l : o.winners.labels()) out << " " << l;
        out << "\n";
      } else {
        out << "rule: " << rule_name(id) << "\n";
        for (Alt x = 0; x < p.m(); ++x) out << p.alternatives().label(x) << " " << to_string(o.scores[x]) << "\n";
      }
      return kExitOk;
    }
    if (network->parsed()) {
      Network n = network_of_profile(parse_profile(read_input(file)));
      out << (emit == "csv" ? network_csv(n) : network_dot(n));
      return kExitOk;
    }
    if (axioms->parsed()) {
      Rule rule = parse_rule(rule_text);
      Domain domain = Domain::parse(domain_text);
      FuzzOptions opt;
      opt.trials = trials;
      opt.seed = seed_opt->count() > 0 ? seed : seed_from_env();
      opt.m = m;
      opt.max_voters = max_voters;
      opt.max_reports = max_reports;
      opt.shrink = !no_shrink;
      for (const auto& c : check_list) opt.checks.push_back(parse_axiom(c));
      FuzzResult result = fuzz_axioms(rule, domain, opt);
      print_json(out, fuzz_json(result));
      return result.total_violations() == 0 ? kExitOk : kExitViolations;
    }
    if (algebra->parsed()) {
      if (algebra_check == "rank") print_json(out, rank_json(algebra_m));
      else if (algebra_check == "ps-span") print_json(out, ps_span_json(algebra_m));
      else if (algebra_check.rfind("regular:", 0) == 0)
        print_json(out, regular_json(Domain::parse(algebra_check.substr(8)), algebra_m));
      else throw InvalidArgument("unknown algebra check '" + algebra_check + "'");
      return kExitOk;
    }
  } catch (const DomainViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace netoutdeg
