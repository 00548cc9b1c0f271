#include "netoutdeg/ballot_io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace netoutdeg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Tokens of a chain or pair list: labels plus the punctuation > = ( , ).
std::vector<std::string> tokenize(std::string_view s, std::size_t line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '>' || c == '=' || c == '(' || c == ')' || c == ',') {
      out.emplace_back(1, c);
      ++i;
    } else if (is_label_char(c)) {
      std::size_t j = i;
      while (j < s.size() && is_label_char(s[j])) ++j;
      out.emplace_back(s.substr(i, j - i));
      i = j;
    } else {
      throw ParseError(line, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

struct LineParser {
  const AlternativeSet& a;
  std::size_t line;

  Alt lookup(const std::string& label) const {
    if (auto x = a.find(label)) return *x;
    throw ParseError(line, "unknown alternative '" + label + "'");
  }

  bool is_label(const std::string& t) const { return !t.empty() && is_label_char(t.front()); }

  Relation order(std::string_view rest) const {
    std::vector<std::string> tok = tokenize(rest, line);
    std::vector<std::vector<Alt>> tiers(1);
    AltSet seen;
    bool expect_label = true;
    for (const auto& t : tok) {
      if (expect_label) {
        if (!is_label(t)) throw ParseError(line, "expected an alternative in order chain, got '" + t + "'");
        Alt x = lookup(t);
        if (seen.contains(x)) throw ParseError(line, "alternative '" + t + "' repeated in order chain");
        seen.insert(x);
        tiers.back().push_back(x);
        expect_label = false;
      } else if (t == ">") {
        tiers.emplace_back();
        expect_label = true;
      } else if (t == "=") {
        expect_label = true;
      } else {
        throw ParseError(line, "expected '>' or '=' in order chain, got '" + t + "'");
      }
    }
    if (expect_label) throw ParseError(line, "order chain is empty or ends with an operator");
    if (seen != a.all()) throw ParseError(line, "order chain must list every alternative exactly once");
    return Relation::from_tiers(a, tiers);
  }

  std::vector<Alt> label_list(std::string_view rest, bool distinct) const {
    std::vector<Alt> out;
    AltSet seen;
    for (const auto& w : split_ws(rest)) {
      if (!std::all_of(w.begin(), w.end(), is_label_char)) throw ParseError(line, "malformed label '" + w + "'");
      Alt x = lookup(w);
      if (distinct && seen.contains(x)) throw ParseError(line, "alternative '" + w + "' repeated");
      seen.insert(x);
      out.push_back(x);
    }
    return out;
  }

  Relation approve(std::string_view rest) const {
    std::vector<Alt> xs = label_list(rest, true);
    if (xs.empty()) throw ParseError(line, "approve needs at least one alternative");
    AltSet top;
    for (Alt x : xs) top.insert(x);
    return Relation::dichotomous(a, top);
  }

  Relation top(std::string_view rest) const {
    std::vector<Alt> prefix = label_list(rest, true);
    if (prefix.size() >= a.size()) throw ParseError(line, "top prefix must leave at least one alternative");
    return Relation::top_truncated(a, prefix);
  }

  Relation pairs(std::string_view rest) const {
    std::vector<std::string> tok = tokenize(rest, line);
    std::vector<std::pair<Alt, Alt>> ps;
    std::size_t i = 0;
    while (i < tok.size()) {
      if (i + 5 > tok.size() || tok[i] != "(" || !is_label(tok[i + 1]) || tok[i + 2] != "," ||
          !is_label(tok[i + 3]) || tok[i + 4] != ")")
        throw ParseError(line, "malformed pair list; expected (x,y)");
      ps.emplace_back(lookup(tok[i + 1]), lookup(tok[i + 3]));
      i += 5;
    }
    return Relation::from_pairs(a, ps);
  }

  Relation ballot(std::string_view body) const {
    body = trim(body);
    std::size_t sp = 0;
    while (sp < body.size() && !std::isspace(static_cast<unsigned char>(body[sp]))) ++sp;
    std::string_view kind = body.substr(0, sp);
    std::string_view rest = body.substr(sp);
    if (kind == "order") return order(rest);
    if (kind == "approve") return approve(rest);
    if (kind == "top") return top(rest);
    if (kind == "pairs") return pairs(rest);
    throw ParseError(line, "unknown ballot kind '" + std::string(kind) + "'");
  }
};

std::optional<std::uint64_t> parse_count(std::string_view s) {
  s = trim(s);
  if (s.empty() || s.size() > 18 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return std::nullopt;
  return std::stoull(std::string(s));
}

}  // namespace

Profile parse_profile(std::string_view text) {
  std::optional<AlternativeSet> alts;
  Profile::Ballots explicit_ballots;
  std::vector<Relation> fresh;
  bool seen_content = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "missing ':'");
    std::string_view head = trim(line.substr(0, colon));
    std::string_view body = trim(line.substr(colon + 1));

    if (head == "version") {
      if (seen_content) throw ParseError(line_no, "version must come first");
      if (body != "1") throw ParseError(line_no, "unsupported format version '" + std::string(body) + "'");
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (head == "alternatives") {
      if (alts) throw ParseError(line_no, "alternatives declared twice");
      std::vector<std::string> labels = split_ws(body);
      for (const auto& l : labels)
        if (!std::all_of(l.begin(), l.end(), is_label_char)) throw ParseError(line_no, "malformed label '" + l + "'");
      std::set<std::string> distinct(labels.begin(), labels.end());
      if (distinct.size() != labels.size()) throw ParseError(line_no, "duplicate alternative label");
      if (labels.size() < 2) throw ParseError(line_no, "at least two alternatives are required");
      if (labels.size() > kMaxAlternatives) throw ParseError(line_no, "too many alternatives");
      alts.emplace(labels);
      continue;
    }
    if (!alts) throw ParseError(line_no, "ballot before the alternatives line");
    LineParser lp{*alts, line_no};
    if (!head.empty() && head.front() == '*') {
      auto count = parse_count(head.substr(1));
      if (!count || *count == 0) throw ParseError(line_no, "multiplier must be a positive integer");
      if (*count > 1000000) throw ParseError(line_no, "multiplier too large");
      Relation r = lp.ballot(body);
      for (std::uint64_t i = 0; i < *count; ++i) fresh.push_back(r);
      continue;
    }
    auto id = parse_count(head);
    if (!id || *id == 0) throw ParseError(line_no, "voter id must be a positive integer");
    if (explicit_ballots.count(*id) != 0) throw ParseError(line_no, "duplicate voter id " + std::to_string(*id));
    explicit_ballots.emplace(*id, lp.ballot(body));
  }

  if (!alts) throw ParseError(0, "missing alternatives line");
  VoterId next = explicit_ballots.empty() ? 1 : explicit_ballots.rbegin()->first + 1;
  for (auto& r : fresh) explicit_ballots.emplace(next++, std::move(r));
  if (explicit_ballots.empty()) throw ParseError(0, "empty profile: no ballots");
  return Profile(*alts, std::move(explicit_ballots));
}

std::string format_ballot(const Relation& r) {
  const AlternativeSet& a = r.alternatives();
  if (classify_relation(r).order) {
    // Tiers by number of alternatives weakly below.
    std::vector<std::pair<std::size_t, Alt>> rank;
    for (Alt x = 0; x < r.m(); ++x) rank.emplace_back(r.m() - r.row(x).size(), x);
    std::stable_sort(rank.begin(), rank.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
    std::string out = "order";
    for (std::size_t i = 0; i < rank.size(); ++i) {
      if (i > 0) out += rank[i].first == rank[i - 1].first ? " =" : " >";
      out += " " + a.label(rank[i].second);
    }
    return out;
  }
  std::string out = "pairs";
  for (const auto& [x, y] : r.pairs()) out += " (" + a.label(x) + "," + a.label(y) + ")";
  return out;
}

std::string print_profile(const Profile& p) {
  std::string out = "version: 1\nalternatives:";
  for (const auto& l : p.alternatives().labels()) out += " " + l;
  out += "\n";
  for (const auto& [id, r] : p.ballots()) out += std::to_string(id) + ": " + format_ballot(r) + "\n";
  return out;
}

std::string network_csv(const Network& n) {
  const AlternativeSet& a = n.alternatives();
  std::string out = "from,to,capacity\n";
  for (Alt x = 0; x < n.m(); ++x)
    for (Alt y = 0; y < n.m(); ++y)
      if (x != y) out += a.label(x) + "," + a.label(y) + "," + to_string(n.capacity(x, y)) + "\n";
  return out;
}

std::string network_dot(const Network& n) {
  const AlternativeSet& a = n.alternatives();
  std::string out = "digraph N {\n";
  for (const auto& l : a.labels()) out += "  " + l + ";\n";
  for (Alt x = 0; x < n.m(); ++x)
    for (Alt y = 0; y < n.m(); ++y)
      if (x != y && n.capacity(x, y) != 0)
        out += "  " + a.label(x) + " -> " + a.label(y) + " [label=\"" + to_string(n.capacity(x, y)) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace netoutdeg
