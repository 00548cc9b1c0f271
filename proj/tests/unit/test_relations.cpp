#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "netoutdeg/error.hpp"
#include "netoutdeg/relations.hpp"

using namespace netoutdeg;

namespace {

const AlternativeSet kA3 = AlternativeSet::of_size(3);

Relation chain(const AlternativeSet& a, std::vector<Alt> r) { return Relation::linear(a, r); }

// Brute-force class predicates over a 3x3 bit grid, written from scratch.
struct Grid {
  bool g[3][3];
};

Grid grid_of(unsigned mask) {
  Grid out{};
  for (int i = 0; i < 9; ++i) out.g[i / 3][i % 3] = (mask >> i) & 1U;
  return out;
}

bool g_reflexive(const Grid& r) { return r.g[0][0] && r.g[1][1] && r.g[2][2]; }
bool g_complete(const Grid& r) {
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (!r.g[x][y] && !r.g[y][x]) return false;
  return true;
}
bool g_transitive(const Grid& r) {
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        if (r.g[x][y] && r.g[y][z] && !r.g[x][z]) return false;
  return true;
}
bool g_antisymmetric(const Grid& r) {
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x != y && r.g[x][y] && r.g[y][x]) return false;
  return true;
}

Relation relation_of(const Grid& r) {
  std::vector<std::pair<Alt, Alt>> ps;
  for (Alt x = 0; x < 3; ++x)
    for (Alt y = 0; y < 3; ++y)
      if (r.g[x][y]) ps.emplace_back(x, y);
  return Relation::from_pairs(kA3, ps);
}

Relation random_relation(const AlternativeSet& a, std::mt19937_64& rng) {
  std::vector<std::pair<Alt, Alt>> ps;
  for (Alt x = 0; x < a.size(); ++x)
    for (Alt y = 0; y < a.size(); ++y)
      if (rng() & 1U) ps.emplace_back(x, y);
  return Relation::from_pairs(a, ps);
}

Permutation random_perm(std::size_t m, std::mt19937_64& rng) {
  std::vector<Alt> img(m);
  for (Alt i = 0; i < m; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

}  // namespace

TEST_CASE("alternative sets sort labels and reject bad input") {
  AlternativeSet a({"c", "a", "b"});
  CHECK(a.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(a.index_of("b") == 1);
  CHECK_THROWS_AS(a.index_of("z"), UnknownAlternative);
  CHECK_THROWS_AS(AlternativeSet({"a"}), InvalidArgument);
  CHECK_THROWS_AS(AlternativeSet({"a", "a"}), InvalidArgument);
  CHECK_THROWS_AS(AlternativeSet({"a", ""}), InvalidArgument);
  CHECK(a.format(AltSet(0b101)) == "{a,c}");
}

TEST_CASE("derive_partition") {
  SUBCASE("chain a>b>c at a") {
    Partition p = derive_partition(chain(kA3, {0, 1, 2}), 0);
    CHECK(p.lower == AltSet(0b110));
    CHECK(p.upper.empty());
    CHECK(p.indifferent == AltSet(0b001));
    CHECK(p.incomparable.empty());
  }
  SUBCASE("total indifference") {
    for (Alt x = 0; x < 3; ++x) {
      Partition p = derive_partition(Relation::full(kA3), x);
      CHECK(p.lower.empty());
      CHECK(p.upper.empty());
      CHECK(p.indifferent == kA3.all());
      CHECK(p.incomparable.empty());
    }
  }
  SUBCASE("reflexive pairs plus (a,b)") {
    Relation r = Relation::from_pairs(kA3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}});
    Partition p = derive_partition(r, 0);
    CHECK(p.lower == AltSet(0b010));
    CHECK(p.upper.empty());
    CHECK(p.indifferent == AltSet(0b001));
    CHECK(p.incomparable == AltSet(0b100));
  }
  CHECK_THROWS_AS(derive_partition(Relation::full(kA3), 3), InvalidArgument);
}

TEST_CASE("partition property on random relations") {
  std::mt19937_64 rng(11);
  const AlternativeSet a = AlternativeSet::of_size(5);
  for (int trial = 0; trial < 300; ++trial) {
    Relation r = random_relation(a, rng);
    for (Alt x = 0; x < 5; ++x) {
      Partition p = derive_partition(r, x);
      CHECK((p.lower | p.upper | p.indifferent | p.incomparable) == a.all());
      CHECK(p.lower.size() + p.upper.size() + p.indifferent.size() + p.incomparable.size() == 5);
      RelationClassification c = classify_relation(r);
      if (c.order) CHECK(p.incomparable.empty());
      if (c.partial_order) CHECK(p.indifferent == AltSet::singleton(x));
    }
  }
}

TEST_CASE("classify_relation examples") {
  SUBCASE("chain") {
    RelationClassification c = classify_relation(chain(kA3, {0, 1, 2}));
    CHECK(c.complete);
    CHECK(c.transitive);
    CHECK(c.antisymmetric);
    CHECK(c.order);
    CHECK(c.linear_order);
    CHECK(c.top_truncated);
    CHECK(c.s == std::optional<std::size_t>(2));
    CHECK_FALSE(c.dichotomous);
  }
  SUBCASE("approve {a,b}") {
    RelationClassification c = classify_relation(Relation::dichotomous(kA3, AltSet(0b011)));
    CHECK(c.dichotomous);
    CHECK(c.t == std::optional<std::size_t>(2));
    CHECK(c.order);
    CHECK_FALSE(c.linear_order);
  }
  SUBCASE("full relation") {
    RelationClassification c = classify_relation(Relation::full(kA3));
    CHECK(c.order);
    CHECK(c.dichotomous);
    CHECK(c.t == std::optional<std::size_t>(3));
    CHECK(c.top_truncated);
    CHECK(c.s == std::optional<std::size_t>(0));
  }
}

TEST_CASE("classification agrees with brute force on all 512 relations at m=3") {
  std::size_t orders = 0, partials = 0, linears = 0;
  for (unsigned mask = 0; mask < 512; ++mask) {
    Grid g = grid_of(mask);
    Relation r = relation_of(g);
    RelationClassification c = classify_relation(r);
    bool order = g_complete(g) && g_transitive(g);
    bool partial = g_reflexive(g) && g_antisymmetric(g) && g_transitive(g);
    CHECK(c.reflexive == g_reflexive(g));
    CHECK(c.complete == g_complete(g));
    CHECK(c.transitive == g_transitive(g));
    CHECK(c.antisymmetric == g_antisymmetric(g));
    CHECK(c.order == order);
    CHECK(c.partial_order == partial);
    CHECK(c.linear_order == (order && g_antisymmetric(g)));
    orders += order;
    partials += partial;
    linears += order && g_antisymmetric(g);
    // class flag invariants
    if (c.linear_order) CHECK(c.order);
    if (c.order) CHECK((c.complete && c.transitive));
    if (c.dichotomous || c.top_truncated) CHECK(c.order);
    if (c.t) CHECK((*c.t >= 1 && *c.t <= 3));
  }
  CHECK(orders == 13);
  CHECK(partials == 19);
  CHECK(linears == 6);
}

TEST_CASE("top_bottom") {
  TopBottom tb = top_bottom(chain(kA3, {0, 1, 2}));
  CHECK(tb.top == AltSet(0b001));
  CHECK(tb.bottom == AltSet(0b100));
  tb = top_bottom(Relation::from_tiers(kA3, {{0, 1}, {2}}));
  CHECK(tb.top == AltSet(0b011));
  CHECK(tb.bottom == AltSet(0b100));
  tb = top_bottom(Relation::full(kA3));
  CHECK(tb.top == kA3.all());
  CHECK(tb.bottom == kA3.all());
  CHECK_THROWS_AS(top_bottom(Relation::from_pairs(kA3, {{0, 1}})), PreconditionViolation);
}

TEST_CASE("permutation and reversal") {
  Permutation ab = Permutation::transposition(3, 0, 1);
  CHECK(permute_relation(chain(kA3, {0, 1, 2}), ab) == chain(kA3, {1, 0, 2}));
  CHECK(permute_relation(chain(kA3, {2, 0, 1}), Permutation::identity(3)) == chain(kA3, {2, 0, 1}));
  for (const auto& psi : all_permutations(3)) CHECK(permute_relation(Relation::full(kA3), psi) == Relation::full(kA3));

  CHECK(reverse_relation(chain(kA3, {0, 1, 2})) == chain(kA3, {2, 1, 0}));
  Relation sym = Relation::from_pairs(kA3, {{0, 1}, {1, 0}, {2, 2}});
  CHECK(reverse_relation(sym) == sym);
  Relation refl_ab = Relation::from_pairs(kA3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}});
  CHECK(reverse_relation(refl_ab) == Relation::from_pairs(kA3, {{0, 0}, {1, 1}, {2, 2}, {1, 0}}));

  CHECK_THROWS_AS(Permutation({0, 0, 1}), NotABijection);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), NotABijection);
}

TEST_CASE("group action laws on random relations") {
  std::mt19937_64 rng(5);
  const AlternativeSet a = AlternativeSet::of_size(4);
  for (int trial = 0; trial < 300; ++trial) {
    Relation r = random_relation(a, rng);
    Permutation psi = random_perm(4, rng), sigma = random_perm(4, rng);
    CHECK(permute_relation(permute_relation(r, psi), sigma) == permute_relation(r, sigma.compose(psi)));
    CHECK(reverse_relation(permute_relation(r, psi)) == permute_relation(reverse_relation(r), psi));
    CHECK(reverse_relation(reverse_relation(r)) == r);
    // literal definition: (x,y) in R^psi iff (psi^-1 x, psi^-1 y) in R
    Permutation inv = psi.inverse();
    Relation rp = permute_relation(r, psi);
    for (Alt x = 0; x < 4; ++x)
      for (Alt y = 0; y < 4; ++y) CHECK(rp.holds(x, y) == r.holds(inv(x), inv(y)));
    CHECK(classify_relation(rp) == classify_relation(r));
  }
}

TEST_CASE("enumerate_domain sizes") {
  CHECK(enumerate_domain(Domain::linear(), kA3).size() == 6);
  CHECK(enumerate_domain(Domain::di(1), kA3).size() == 3);
  CHECK(enumerate_domain(Domain::order(), kA3).size() == 13);
  CHECK(enumerate_domain(Domain::partial(), kA3).size() == 19);
  CHECK(enumerate_domain(Domain::dichotomous(), kA3).size() == 7);
  CHECK(enumerate_domain(Domain::all(), kA3).size() == 512);
  // five cycle networks, each with any subset of the three loops
  CHECK(enumerate_domain(Domain::cycles(), kA3).size() == 5 * 8);

  const AlternativeSet a4 = AlternativeSet::of_size(4);
  CHECK(enumerate_domain(Domain::order(), a4).size() == 75);
  CHECK(enumerate_domain(Domain::partial(), a4).size() == 219);
  CHECK(enumerate_domain(Domain::linear(), a4).size() == 24);
  CHECK(enumerate_domain(Domain::truncated(3), a4).size() == 24);
  CHECK_THROWS_AS(enumerate_domain(Domain::all(), a4), BudgetExceeded);

  for (std::size_t m = 2; m <= 5; ++m) {
    const AlternativeSet a = AlternativeSet::of_size(m);
    auto lin = enumerate_domain(Domain::linear(), a);
    CHECK(enumerate_domain(Domain::truncated(m - 1), a) == lin);
    CHECK(enumerate_domain(Domain::di(1), a) == enumerate_domain(Domain::truncated(1), a));
  }
}

TEST_CASE("enumerated classes are duplicate-free, closed and members") {
  const AlternativeSet a = AlternativeSet::of_size(4);
  for (const char* tag : {"linear", "order", "partial", "dichotomous", "di:2", "top-truncated", "t:0,2", "cycles"}) {
    Domain d = Domain::parse(tag);
    auto rel = enumerate_domain(d, a);
    std::set<Relation> distinct(rel.begin(), rel.end());
    CHECK(distinct.size() == rel.size());
    for (const auto& r : rel) {
      CHECK(d.contains(r));
      for (const auto& psi : {Permutation::transposition(4, 0, 1), Permutation({1, 2, 3, 0})})
        CHECK(distinct.count(permute_relation(r, psi)) == 1);
    }
  }
}

TEST_CASE("domain tags parse and print") {
  for (const char* tag : {"all", "linear", "order", "partial", "dichotomous", "di:1,2", "top-truncated", "t:0,2", "cycles"})
    CHECK(Domain::parse(tag).name() == tag);
  CHECK_THROWS_AS(Domain::parse("weird"), InvalidArgument);
  CHECK_THROWS_AS(Domain::parse("di:"), InvalidArgument);
}
