#include "netoutdeg/relations.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "netoutdeg/error.hpp"

namespace netoutdeg {

std::vector<Alt> AltSet::members() const {
  std::vector<Alt> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(static_cast<Alt>(std::countr_zero(b)));
  return out;
}

AlternativeSet::AlternativeSet(std::vector<std::string> labels) {
  if (labels.size() < 2) throw InvalidArgument("an alternative set needs at least 2 alternatives");
  if (labels.size() > kMaxAlternatives)
    throw BudgetExceeded("alternative set", labels.size(), kMaxAlternatives);
  for (const auto& l : labels)
    if (l.empty()) throw InvalidArgument("alternative labels must be non-empty");
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw InvalidArgument("alternative labels must be distinct");
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

AlternativeSet AlternativeSet::of_size(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    if (m <= 26)
      labels.emplace_back(1, static_cast<char>('a' + i));
    else
      labels.push_back("x" + std::to_string(i + 1));
  }
  if (m > 26) {
    // zero-pad so lexicographic order matches numeric order
    std::size_t width = std::to_string(m).size();
    for (std::size_t i = 0; i < m; ++i) {
      std::string n = std::to_string(i + 1);
      labels[i] = "x" + std::string(width - n.size(), '0') + n;
    }
  }
  return AlternativeSet(std::move(labels));
}

std::optional<Alt> AlternativeSet::find(std::string_view label) const {
  auto it = std::lower_bound(labels_->begin(), labels_->end(), label);
  if (it == labels_->end() || *it != label) return std::nullopt;
  return static_cast<Alt>(it - labels_->begin());
}

Alt AlternativeSet::index_of(std::string_view label) const {
  if (auto x = find(label)) return *x;
  throw UnknownAlternative(std::string(label));
}

std::string AlternativeSet::format(AltSet s) const {
  std::string out = "{";
  bool first = true;
  for (Alt x : s.members()) {
    if (!first) out += ",";
    out += label(x);
    first = false;
  }
  return out + "}";
}

// Permutation

Permutation::Permutation(std::vector<Alt> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Alt y : image_) {
    if (y >= image_.size() || seen[y]) throw NotABijection("mapping is not a bijection of the alternatives");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<Alt> id(m);
  std::iota(id.begin(), id.end(), Alt{0});
  return Permutation(std::move(id));
}

Permutation Permutation::transposition(std::size_t m, Alt x, Alt y) {
  std::vector<Alt> img(m);
  std::iota(img.begin(), img.end(), Alt{0});
  if (x >= m || y >= m) throw InvalidArgument("transposition outside the alternative set");
  std::swap(img[x], img[y]);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Alt> inv(image_.size());
  for (Alt x = 0; x < image_.size(); ++x) inv[image_[x]] = x;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw InvalidArgument("composing permutations of different sizes");
  std::vector<Alt> img(size());
  for (Alt x = 0; x < size(); ++x) img[x] = image_[other.image_[x]];
  return Permutation(std::move(img));
}

AltSet Permutation::apply(AltSet s) const {
  AltSet out;
  for (Alt x : s.members()) out.insert(image_[x]);
  return out;
}

bool Permutation::is_identity() const {
  for (Alt x = 0; x < image_.size(); ++x)
    if (image_[x] != x) return false;
  return true;
}

std::vector<Permutation> all_permutations(std::size_t m) {
  std::vector<Alt> img(m);
  std::iota(img.begin(), img.end(), Alt{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Relation

Relation::Relation(AlternativeSet alternatives)
    : alternatives_(std::move(alternatives)), rows_(alternatives_.size(), 0) {}

Relation Relation::from_pairs(AlternativeSet alternatives,
                              const std::vector<std::pair<Alt, Alt>>& pairs) {
  Relation r(std::move(alternatives));
  for (auto [x, y] : pairs) {
    if (x >= r.m() || y >= r.m()) throw InvalidArgument("pair outside the alternative set");
    r.rows_[x] |= std::uint64_t{1} << y;
  }
  return r;
}

Relation Relation::full(AlternativeSet alternatives) {
  Relation r(std::move(alternatives));
  std::fill(r.rows_.begin(), r.rows_.end(), r.alternatives_.all().bits());
  return r;
}

Relation Relation::from_tiers(AlternativeSet alternatives,
                              const std::vector<std::vector<Alt>>& tiers) {
  Relation r(std::move(alternatives));
  std::vector<std::size_t> rank(r.m(), r.m());
  for (std::size_t t = 0; t < tiers.size(); ++t) {
    if (tiers[t].empty()) throw InvalidArgument("empty tier in ranking");
    for (Alt x : tiers[t]) {
      if (x >= r.m()) throw InvalidArgument("tier member outside the alternative set");
      if (rank[x] != r.m()) throw InvalidArgument("alternative '" + r.alternatives_.label(x) + "' ranked twice");
      rank[x] = t;
    }
  }
  for (Alt x = 0; x < r.m(); ++x)
    if (rank[x] == r.m()) throw InvalidArgument("alternative '" + r.alternatives_.label(x) + "' not ranked");
  for (Alt x = 0; x < r.m(); ++x)
    for (Alt y = 0; y < r.m(); ++y)
      if (rank[x] <= rank[y]) r.rows_[x] |= std::uint64_t{1} << y;
  return r;
}

Relation Relation::linear(AlternativeSet alternatives, const std::vector<Alt>& ranking) {
  std::vector<std::vector<Alt>> tiers;
  for (Alt x : ranking) tiers.push_back({x});
  return from_tiers(std::move(alternatives), tiers);
}

Relation Relation::dichotomous(AlternativeSet alternatives, AltSet top) {
  AltSet all = alternatives.all();
  if (top.empty() || !top.subset_of(all)) throw InvalidArgument("dichotomous top set must be a nonempty subset of A");
  if (top == all) return full(std::move(alternatives));
  return from_tiers(std::move(alternatives), {top.members(), all.minus(top).members()});
}

Relation Relation::top_truncated(AlternativeSet alternatives, const std::vector<Alt>& prefix) {
  std::vector<std::vector<Alt>> tiers;
  AltSet rest = alternatives.all();
  for (Alt x : prefix) {
    if (x >= alternatives.size() || !rest.contains(x))
      throw InvalidArgument("top-truncated prefix repeats or leaves the alternative set");
    tiers.push_back({x});
    rest.erase(x);
  }
  if (!rest.empty()) tiers.push_back(rest.members());
  return from_tiers(std::move(alternatives), tiers);
}

std::vector<std::pair<Alt, Alt>> Relation::pairs() const {
  std::vector<std::pair<Alt, Alt>> out;
  for (Alt x = 0; x < m(); ++x)
    for (Alt y : row(x).members()) out.emplace_back(x, y);
  return out;
}

std::size_t Relation::pair_count() const {
  std::size_t n = 0;
  for (auto row : rows_) n += static_cast<std::size_t>(std::popcount(row));
  return n;
}

Relation Relation::with_pair(Alt x, Alt y) const {
  Relation r = *this;
  r.rows_[x] |= std::uint64_t{1} << y;
  return r;
}

// Operations

Partition derive_partition(const Relation& r, Alt x) {
  if (x >= r.m()) throw InvalidArgument("alternative index out of range");
  Partition p;
  for (Alt y = 0; y < r.m(); ++y) {
    bool xy = r.holds(x, y), yx = r.holds(y, x);
    if (xy && !yx) p.lower.insert(y);
    else if (!xy && yx) p.upper.insert(y);
    else if (xy && yx) p.indifferent.insert(y);
    else p.incomparable.insert(y);
  }
  return p;
}

namespace {

bool is_reflexive(const Relation& r) {
  for (Alt x = 0; x < r.m(); ++x)
    if (!r.holds(x, x)) return false;
  return true;
}

bool is_complete(const Relation& r) {
  for (Alt x = 0; x < r.m(); ++x)
    for (Alt y = x; y < r.m(); ++y)
      if (!r.holds(x, y) && !r.holds(y, x)) return false;
  return true;
}

bool is_transitive(const Relation& r) {
  for (Alt x = 0; x < r.m(); ++x) {
    AltSet reach = r.row(x);
    for (Alt y : reach.members())
      if (!r.row(y).subset_of(reach)) return false;
  }
  return true;
}

bool is_antisymmetric(const Relation& r) {
  for (Alt x = 0; x < r.m(); ++x)
    for (Alt y = x + 1; y < r.m(); ++y)
      if (r.holds(x, y) && r.holds(y, x)) return false;
  return true;
}

TopBottom top_bottom_unchecked(const Relation& r) {
  TopBottom tb;
  AltSet all = r.alternatives().all();
  for (Alt x = 0; x < r.m(); ++x) {
    if (r.row(x) == all) tb.top.insert(x);
    bool bottom = true;
    for (Alt y = 0; y < r.m() && bottom; ++y) bottom = r.holds(y, x);
    if (bottom) tb.bottom.insert(x);
  }
  return tb;
}

}  // namespace

RelationClassification classify_relation(const Relation& r) {
  RelationClassification c;
  c.reflexive = is_reflexive(r);
  c.complete = is_complete(r);
  c.transitive = is_transitive(r);
  c.antisymmetric = is_antisymmetric(r);
  c.order = c.complete && c.transitive;
  c.linear_order = c.order && c.antisymmetric;
  c.partial_order = c.reflexive && c.antisymmetric && c.transitive;
  if (c.order) {
    TopBottom tb = top_bottom_unchecked(r);
    AltSet all = r.alternatives().all();
    if ((tb.top | tb.bottom) == all) {
      c.dichotomous = true;
      c.t = tb.top.size();
    }
    bool truncated = true;
    for (Alt x : all.minus(tb.bottom).members())
      if (derive_partition(r, x).indifferent.size() != 1) truncated = false;
    if (truncated) {
      c.top_truncated = true;
      c.s = all.minus(tb.bottom).size();
    }
  }
  return c;
}

TopBottom top_bottom(const Relation& r) {
  if (!classify_relation(r).order) throw PreconditionViolation("T(R) and B(R) require R to be an order");
  return top_bottom_unchecked(r);
}

Relation permute_relation(const Relation& r, const Permutation& psi) {
  if (psi.size() != r.m()) throw NotABijection("permutation size does not match the alternative set");
  std::vector<std::pair<Alt, Alt>> pairs;
  for (auto [x, y] : r.pairs()) pairs.emplace_back(psi(x), psi(y));
  return Relation::from_pairs(r.alternatives(), pairs);
}

Relation reverse_relation(const Relation& r) {
  std::vector<std::pair<Alt, Alt>> pairs;
  for (auto [x, y] : r.pairs()) pairs.emplace_back(y, x);
  return Relation::from_pairs(r.alternatives(), pairs);
}

bool is_cycle_relation(const Relation& r) {
  // N(R) is a k-cycle iff the off-diagonal arcs form one directed cycle
  // through k >= 2 distinct vertices: every vertex on it has exactly one
  // outgoing and one incoming off-diagonal arc and the arcs are connected.
  const std::size_t m = r.m();
  std::vector<int> out(m, -1);
  std::vector<std::size_t> outdeg(m, 0), indeg(m, 0);
  std::size_t arcs = 0;
  for (Alt x = 0; x < m; ++x)
    for (Alt y = 0; y < m; ++y)
      if (x != y && r.holds(x, y)) {
        ++outdeg[x];
        ++indeg[y];
        out[x] = static_cast<int>(y);
        ++arcs;
      }
  if (arcs < 2) return false;
  Alt start = m;
  for (Alt x = 0; x < m; ++x) {
    if (outdeg[x] > 1 || indeg[x] > 1 || outdeg[x] != indeg[x]) return false;
    if (outdeg[x] == 1 && start == m) start = x;
  }
  std::size_t steps = 0;
  Alt v = start;
  do {
    v = static_cast<Alt>(out[v]);
    ++steps;
  } while (v != start && steps <= m);
  return v == start && steps == arcs;
}

// Domains

namespace {

std::vector<std::size_t> normalize(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::size_t> parse_sizes(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw InvalidArgument("malformed size list '" + std::string(text) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return normalize(out);
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

bool contains_size(const std::vector<std::size_t>& v, std::size_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

Domain Domain::di_set(std::vector<std::size_t> x) {
  return {DomainKind::DichotomousSet, normalize(std::move(x))};
}

Domain Domain::truncated_set(std::vector<std::size_t> y) {
  return {DomainKind::TruncatedSet, normalize(std::move(y))};
}

Domain Domain::parse(std::string_view text) {
  if (text == "all" || text == "all-relations") return all();
  if (text == "linear") return linear();
  if (text == "order") return order();
  if (text == "partial") return partial();
  if (text == "dichotomous") return dichotomous();
  if (text == "top-truncated") return top_truncated();
  if (text == "cycles" || text == "cycle-relations") return cycles();
  if (text.starts_with("di:")) {
    auto sizes = parse_sizes(text.substr(3));
    return di_set(sizes);
  }
  if (text.starts_with("t:")) {
    auto sizes = parse_sizes(text.substr(2));
    return truncated_set(sizes);
  }
  throw InvalidArgument("unknown domain '" + std::string(text) + "'");
}

std::string Domain::name() const {
  switch (kind) {
    case DomainKind::AllRelations: return "all";
    case DomainKind::Linear: return "linear";
    case DomainKind::Order: return "order";
    case DomainKind::Partial: return "partial";
    case DomainKind::Dichotomous: return "dichotomous";
    case DomainKind::DichotomousSet: return "di:" + join_sizes(sizes);
    case DomainKind::TopTruncated: return "top-truncated";
    case DomainKind::TruncatedSet: return "t:" + join_sizes(sizes);
    case DomainKind::CycleRelations: return "cycles";
  }
  return "?";
}

bool Domain::contains(const Relation& r) const {
  if (kind == DomainKind::AllRelations) return true;
  if (kind == DomainKind::CycleRelations) return is_cycle_relation(r);
  RelationClassification c = classify_relation(r);
  switch (kind) {
    case DomainKind::Linear: return c.linear_order;
    case DomainKind::Order: return c.order;
    case DomainKind::Partial: return c.partial_order;
    case DomainKind::Dichotomous: return c.dichotomous;
    case DomainKind::DichotomousSet: return c.dichotomous && contains_size(sizes, *c.t);
    case DomainKind::TopTruncated: return c.top_truncated;
    case DomainKind::TruncatedSet: return c.top_truncated && contains_size(sizes, *c.s);
    default: return false;
  }
}

namespace {

constexpr std::size_t kMaxAllRelationsM = 3;
constexpr std::size_t kMaxPartialM = 5;
constexpr std::size_t kMaxEnumerationM = 8;

// Weak orders as surjections A -> {0..k-1}; each weak order appears once.
void enumerate_weak_orders(const AlternativeSet& a, std::vector<Relation>& out) {
  const std::size_t m = a.size();
  std::vector<std::size_t> rank(m, 0);
  // Iterate over all rank vectors in [0,m)^m, keep those with image {0..k-1}.
  while (true) {
    std::size_t maxr = *std::max_element(rank.begin(), rank.end());
    std::vector<bool> used(maxr + 1, false);
    for (auto v : rank) used[v] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) {
      std::vector<std::vector<Alt>> tiers(maxr + 1);
      for (Alt x = 0; x < m; ++x) tiers[rank[x]].push_back(x);
      out.push_back(Relation::from_tiers(a, tiers));
    }
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++rank[i] < m) break;
      rank[i] = 0;
      if (i == 0) return;
    }
  }
}

void enumerate_partial_orders(const AlternativeSet& a, std::vector<Relation>& out) {
  const std::size_t m = a.size();
  std::vector<std::pair<Alt, Alt>> offdiag;
  for (Alt x = 0; x < m; ++x)
    for (Alt y = 0; y < m; ++y)
      if (x != y) offdiag.emplace_back(x, y);
  const std::uint64_t total = std::uint64_t{1} << offdiag.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<Alt, Alt>> pairs;
    for (Alt x = 0; x < m; ++x) pairs.emplace_back(x, x);
    bool skip = false;
    for (std::size_t b = 0; b < offdiag.size() && !skip; ++b)
      if ((mask >> b) & 1U) {
        auto [x, y] = offdiag[b];
        // antisymmetry: skip masks holding both (x,y) and (y,x)
        if (x > y) {
          std::size_t mirror = y * (m - 1) + (x - 1);
          if ((mask >> mirror) & 1U) skip = true;
        }
        pairs.emplace_back(x, y);
      }
    if (skip) continue;
    Relation r = Relation::from_pairs(a, pairs);
    if (is_transitive(r)) out.push_back(std::move(r));
  }
}

void enumerate_all(const AlternativeSet& a, std::vector<Relation>& out) {
  const std::size_t m = a.size();
  const std::uint64_t total = std::uint64_t{1} << (m * m);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<Alt, Alt>> pairs;
    for (std::size_t b = 0; b < m * m; ++b)
      if ((mask >> b) & 1U) pairs.emplace_back(b / m, b % m);
    out.push_back(Relation::from_pairs(a, pairs));
  }
}

void enumerate_truncated(const AlternativeSet& a, std::size_t s, std::vector<Relation>& out) {
  const std::size_t m = a.size();
  if (s == 0) {
    out.push_back(Relation::full(a));
    return;
  }
  // ordered selections of s distinct alternatives
  std::vector<Alt> prefix;
  std::vector<bool> used(m, false);
  auto rec = [&](auto&& self) -> void {
    if (prefix.size() == s) {
      out.push_back(Relation::top_truncated(a, prefix));
      return;
    }
    for (Alt x = 0; x < m; ++x) {
      if (used[x]) continue;
      used[x] = true;
      prefix.push_back(x);
      self(self);
      prefix.pop_back();
      used[x] = false;
    }
  };
  rec(rec);
}

void enumerate_cycle_relations(const AlternativeSet& a, std::vector<Relation>& out) {
  const std::size_t m = a.size();
  // cycles in canonical form: least vertex first, every rotation class once
  std::vector<std::vector<Alt>> cycles;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    AltSet s(mask);
    if (s.size() < 2) continue;
    std::vector<Alt> v = s.members();
    std::vector<Alt> tail(v.begin() + 1, v.end());
    do {
      std::vector<Alt> c{v[0]};
      c.insert(c.end(), tail.begin(), tail.end());
      cycles.push_back(c);
    } while (std::next_permutation(tail.begin(), tail.end()));
  }
  for (const auto& c : cycles) {
    for (std::uint64_t diag = 0; diag < (std::uint64_t{1} << m); ++diag) {
      std::vector<std::pair<Alt, Alt>> pairs;
      for (std::size_t i = 0; i < c.size(); ++i) pairs.emplace_back(c[i], c[(i + 1) % c.size()]);
      for (Alt x = 0; x < m; ++x)
        if ((diag >> x) & 1U) pairs.emplace_back(x, x);
      out.push_back(Relation::from_pairs(a, pairs));
    }
  }
}

}  // namespace

std::vector<Relation> enumerate_domain(const Domain& domain, const AlternativeSet& a) {
  const std::size_t m = a.size();
  if (m > kMaxEnumerationM) throw BudgetExceeded("domain enumeration", m, kMaxEnumerationM);
  std::vector<Relation> out;
  switch (domain.kind) {
    case DomainKind::AllRelations:
      if (m > kMaxAllRelationsM) throw BudgetExceeded("all-relations enumeration (alternatives)", m, kMaxAllRelationsM);
      enumerate_all(a, out);
      break;
    case DomainKind::Linear:
      for (const auto& perm : all_permutations(m)) out.push_back(Relation::linear(a, perm.image()));
      break;
    case DomainKind::Order:
      enumerate_weak_orders(a, out);
      break;
    case DomainKind::Partial:
      if (m > kMaxPartialM) throw BudgetExceeded("partial-order enumeration (alternatives)", m, kMaxPartialM);
      enumerate_partial_orders(a, out);
      break;
    case DomainKind::Dichotomous:
    case DomainKind::DichotomousSet:
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        AltSet top(mask);
        if (domain.kind == DomainKind::DichotomousSet && !contains_size(domain.sizes, top.size())) continue;
        out.push_back(Relation::dichotomous(a, top));
      }
      break;
    case DomainKind::TopTruncated:
      for (std::size_t s = 0; s < m; ++s) enumerate_truncated(a, s, out);
      break;
    case DomainKind::TruncatedSet:
      for (std::size_t s : domain.sizes)
        if (s < m) enumerate_truncated(a, s, out);
      break;
    case DomainKind::CycleRelations:
      enumerate_cycle_relations(a, out);
      break;
  }
  if (out.empty()) throw InvalidArgument("domain '" + domain.name() + "' is empty for m = " + std::to_string(m));
  return out;
}

}  // namespace netoutdeg
