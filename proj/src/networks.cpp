#include "netoutdeg/networks.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "netoutdeg/error.hpp"

namespace netoutdeg {

Network::Network(AlternativeSet alternatives)
    : alternatives_(std::move(alternatives)),
      m_(alternatives_.size()),
      caps_(m_ * m_) {}

Network Network::constant(AlternativeSet alternatives, const Rational& k) {
  Network n(std::move(alternatives));
  for (Alt x = 0; x < n.m_; ++x)
    for (Alt y = 0; y < n.m_; ++y)
      if (x != y) n.caps_[x * n.m_ + y] = k;
  return n;
}

Network Network::arc(AlternativeSet alternatives, Alt x, Alt y) {
  Network n(std::move(alternatives));
  if (x >= n.m_ || y >= n.m_) throw InvalidArgument("arc endpoint outside the alternative set");
  if (x == y) throw InvalidArgument("an arc needs two distinct endpoints");
  n.caps_[x * n.m_ + y] = 1;
  return n;
}

Network Network::outstar(AlternativeSet alternatives, Alt x) {
  Network n(std::move(alternatives));
  if (x >= n.m_) throw InvalidArgument("outstar vertex outside the alternative set");
  for (Alt y = 0; y < n.m_; ++y)
    if (y != x) n.caps_[x * n.m_ + y] = 1;
  return n;
}

Network Network::complete(AlternativeSet alternatives, AltSet b) {
  Network n(std::move(alternatives));
  if (!b.subset_of(n.alternatives_.all())) throw InvalidArgument("complete-network vertex set leaves A");
  for (Alt x : b.members())
    for (Alt y : b.members())
      if (x != y) n.caps_[x * n.m_ + y] = 1;
  return n;
}

Network Network::cycle(AlternativeSet alternatives, const std::vector<Alt>& vertices) {
  Network n(std::move(alternatives));
  const std::size_t k = vertices.size();
  if (k < 2 || k > n.m_)
    throw InvalidArgument("a cycle needs between 2 and m vertices, got " + std::to_string(k));
  AltSet seen;
  for (Alt v : vertices) {
    if (v >= n.m_) throw InvalidArgument("cycle vertex outside the alternative set");
    if (seen.contains(v)) throw InvalidArgument("repeated cycle vertex '" + n.alternatives_.label(v) + "'");
    seen.insert(v);
  }
  for (std::size_t i = 0; i < k; ++i) n.caps_[vertices[i] * n.m_ + vertices[(i + 1) % k]] = 1;
  return n;
}

Network Network::of_relation(const Relation& r) {
  Network n(r.alternatives());
  for (Alt x = 0; x < n.m_; ++x)
    for (Alt y = 0; y < n.m_; ++y)
      if (x != y && r.holds(x, y)) n.caps_[x * n.m_ + y] = 1;
  return n;
}

Network Network::from_coordinates(AlternativeSet alternatives, const std::vector<Rational>& coords) {
  Network n(std::move(alternatives));
  if (coords.size() != n.m_ * (n.m_ - 1)) throw InvalidArgument("coordinate vector has the wrong length");
  std::size_t i = 0;
  for (Alt x = 0; x < n.m_; ++x)
    for (Alt y = 0; y < n.m_; ++y)
      if (x != y) n.caps_[x * n.m_ + y] = coords[i++];
  return n;
}

void Network::set_capacity(Alt x, Alt y, const Rational& value) {
  if (x == y || x >= m_ || y >= m_) throw InvalidArgument("capacity is defined only on arcs of distinct alternatives");
  caps_[x * m_ + y] = value;
}

void Network::add_capacity(Alt x, Alt y, const Rational& value) {
  if (x == y || x >= m_ || y >= m_) throw InvalidArgument("capacity is defined only on arcs of distinct alternatives");
  caps_[x * m_ + y] += value;
}

std::vector<Rational> Network::coordinates() const {
  std::vector<Rational> out;
  out.reserve(m_ * (m_ - 1));
  for (Alt x = 0; x < m_; ++x)
    for (Alt y = 0; y < m_; ++y)
      if (x != y) out.push_back(caps_[x * m_ + y]);
  return out;
}

void Network::check_same(const Network& other) const {
  if (!(alternatives_ == other.alternatives_)) throw InvalidArgument("networks over different alternative sets");
}

Network& Network::operator+=(const Network& other) {
  check_same(other);
  for (std::size_t i = 0; i < caps_.size(); ++i) caps_[i] += other.caps_[i];
  return *this;
}

Network& Network::operator-=(const Network& other) {
  check_same(other);
  for (std::size_t i = 0; i < caps_.size(); ++i) caps_[i] -= other.caps_[i];
  return *this;
}

Network& Network::operator*=(const Rational& k) {
  for (auto& c : caps_) c *= k;
  return *this;
}

bool Network::is_zero() const {
  return std::all_of(caps_.begin(), caps_.end(), [](const Rational& c) { return c == 0; });
}

bool Network::operator==(const Network& other) const {
  return alternatives_ == other.alternatives_ && caps_ == other.caps_;
}

Network linear_combine(const AlternativeSet& alternatives,
                       const std::vector<std::pair<Rational, Network>>& terms) {
  Network out(alternatives);
  for (const auto& [k, n] : terms) {
    Network scaled = n;
    scaled *= k;
    out += scaled;
  }
  return out;
}

Network permute_network(const Network& n, const Permutation& psi) {
  if (psi.size() != n.m()) throw NotABijection("permutation size does not match the alternative set");
  Network out(n.alternatives());
  // c^psi(psi x, psi y) = c(x, y)
  for (Alt x = 0; x < n.m(); ++x)
    for (Alt y = 0; y < n.m(); ++y)
      if (x != y) out.set_capacity(psi(x), psi(y), n.capacity(x, y));
  return out;
}

Network reverse_network(const Network& n) {
  Network out(n.alternatives());
  for (Alt x = 0; x < n.m(); ++x)
    for (Alt y = 0; y < n.m(); ++y)
      if (x != y) out.set_capacity(x, y, n.capacity(y, x));
  return out;
}

// ScoreVector / SelectionSet

ScoreVector::ScoreVector(AlternativeSet alternatives)
    : alternatives_(std::move(alternatives)), values_(alternatives_.size()) {}

ScoreVector::ScoreVector(AlternativeSet alternatives, std::vector<Rational> values)
    : alternatives_(std::move(alternatives)), values_(std::move(values)) {
  if (values_.size() != alternatives_.size()) throw InvalidArgument("score vector length differs from m");
}

AltSet ScoreVector::argmax() const {
  AltSet best;
  const Rational* top = nullptr;
  for (Alt x = 0; x < values_.size(); ++x) {
    if (top == nullptr || values_[x] > *top) {
      top = &values_[x];
      best = AltSet::singleton(x);
    } else if (values_[x] == *top) {
      best.insert(x);
    }
  }
  return best;
}

bool ScoreVector::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v == 0; });
}

SelectionSet::SelectionSet(AlternativeSet alternatives, AltSet members)
    : alternatives_(std::move(alternatives)), members_(members) {
  if (members_.empty()) throw InvalidArgument("a selection set must be nonempty");
  if (!members_.subset_of(alternatives_.all())) throw InvalidArgument("selection set leaves the alternative set");
}

std::vector<std::string> SelectionSet::labels() const {
  std::vector<std::string> out;
  for (Alt x : members_.members()) out.push_back(alternatives_.label(x));
  return out;
}

// δ, classification, solutions

ScoreVector net_outdegree(const Network& n) {
  ScoreVector d(n.alternatives());
  for (Alt x = 0; x < n.m(); ++x)
    for (Alt y = 0; y < n.m(); ++y)
      if (x != y) {
        d[x] += n.capacity(x, y);
        d[x] -= n.capacity(y, x);
      }
  return d;
}

NetworkClassification classify_network(const Network& n) {
  NetworkClassification c;
  c.reversal_symmetric = true;
  c.nonneg_integer = c.integer = c.nonneg_rational = true;
  const Rational& first = n.capacity(0, 1);
  Rational balance = n.capacity(0, 1) + n.capacity(1, 0);
  bool constant = true, balanced = true;
  for (Alt x = 0; x < n.m(); ++x)
    for (Alt y = 0; y < n.m(); ++y) {
      if (x == y) continue;
      const Rational& v = n.capacity(x, y);
      if (v != n.capacity(y, x)) c.reversal_symmetric = false;
      if (!is_integer(v)) c.integer = false;
      if (v < 0) c.nonneg_rational = false;
      if (v != first) constant = false;
      if (v + n.capacity(y, x) != balance) balanced = false;
    }
  c.nonneg_integer = c.integer && c.nonneg_rational;
  c.pseudo_symmetric = net_outdegree(n).is_zero();
  if (balanced) c.balanced_k = balance;
  if (constant) c.constant_k = first;
  return c;
}

SelectionSet solution_O(const Network& n) {
  return SelectionSet(n.alternatives(), net_outdegree(n).argmax());
}

namespace {

void require_complete_01(const Network& n) {
  for (Alt x = 0; x < n.m(); ++x)
    for (Alt y = 0; y < n.m(); ++y) {
      if (x == y) continue;
      const Rational& v = n.capacity(x, y);
      if (v != 0 && v != 1)
        throw PreconditionViolation("Copeland requires a 0-1 network; capacity " + to_string(v) + " on (" +
                                    n.alternatives().label(x) + "," + n.alternatives().label(y) + ")");
      if (x < y && v == 0 && n.capacity(y, x) == 0)
        throw PreconditionViolation("Copeland requires a complete relation; " + n.alternatives().label(x) +
                                    " and " + n.alternatives().label(y) + " are unrelated");
    }
}

}  // namespace

ScoreVector copeland_scores(const Network& n) {
  require_complete_01(n);
  ScoreVector s(n.alternatives());
  for (Alt x = 0; x < n.m(); ++x)
    for (Alt y = 0; y < n.m(); ++y) {
      if (x == y) continue;
      bool xy = n.capacity(x, y) == 1, yx = n.capacity(y, x) == 1;
      if (xy && !yx) s[x] += 1;
      if (yx && !xy) s[x] -= 1;
    }
  return s;
}

SelectionSet copeland(const Network& n) {
  return SelectionSet(n.alternatives(), copeland_scores(n).argmax());
}

// Cycle decomposition

std::vector<Cycle> cycle_decompose(const Network& n, SuccessorChoice choice, std::uint64_t seed) {
  const std::size_t m = n.m();
  std::vector<std::int64_t> c(m * m, 0);
  for (Alt x = 0; x < m; ++x)
    for (Alt y = 0; y < m; ++y) {
      if (x == y) continue;
      const Rational& v = n.capacity(x, y);
      if (!is_integer(v) || v < 0)
        throw PreconditionViolation("cycle decomposition needs nonnegative integer capacities");
      if (!v.get_num().fits_slong_p())
        throw BudgetExceeded("cycle decomposition capacity", 0, std::numeric_limits<long>::max());
      c[x * m + y] = v.get_num().get_si();
    }
  if (!net_outdegree(n).is_zero()) throw PreconditionViolation("cycle decomposition needs a pseudo-symmetric network");

  std::mt19937_64 rng(seed);
  std::vector<Cycle> out;
  auto successors = [&](Alt x) {
    std::vector<Alt> s;
    for (Alt y = 0; y < m; ++y)
      if (y != x && c[x * m + y] >= 1) s.push_back(y);
    return s;
  };
  while (true) {
    // A' = vertices with an incoming arc; pseudo-symmetry gives each an outgoing one.
    std::vector<Alt> active;
    for (Alt x = 0; x < m; ++x)
      for (Alt y = 0; y < m; ++y)
        if (y != x && c[y * m + x] >= 1) {
          active.push_back(x);
          break;
        }
    if (active.empty()) break;
    Alt start = active.front();
    if (choice == SuccessorChoice::Random)
      start = active[std::uniform_int_distribution<std::size_t>(0, active.size() - 1)(rng)];

    std::vector<Alt> walk{start};
    std::vector<std::size_t> position(m, m);
    position[start] = 0;
    while (true) {
      std::vector<Alt> next = successors(walk.back());
      if (next.empty()) throw std::logic_error("successor walk reached a vertex with no outgoing capacity");
      Alt d = next.front();
      if (choice == SuccessorChoice::Random)
        d = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
      if (position[d] != m) {
        Cycle cyc(walk.begin() + static_cast<std::ptrdiff_t>(position[d]), walk.end());
        for (std::size_t i = 0; i < cyc.size(); ++i) --c[cyc[i] * m + cyc[(i + 1) % cyc.size()]];
        out.push_back(std::move(cyc));
        break;
      }
      position[d] = walk.size();
      walk.push_back(d);
    }
  }
  return out;
}

Network sum_of_cycles(const AlternativeSet& alternatives, const std::vector<Cycle>& cycles) {
  Network out(alternatives);
  for (const auto& cyc : cycles) out += Network::cycle(alternatives, cyc);
  return out;
}

Cycle canonical_cycle(const Cycle& c) {
  Cycle out = c;
  auto it = std::min_element(out.begin(), out.end());
  std::rotate(out.begin(), it, out.end());
  return out;
}

LiftStep lift_cycle(const AlternativeSet& alternatives, const Cycle& c, Alt extra) {
  const std::size_t k = c.size();
  if (k < 2 || k >= alternatives.size()) throw InvalidArgument("only cycles shorter than m can be lifted");
  if (std::find(c.begin(), c.end(), extra) != c.end() || extra >= alternatives.size())
    throw InvalidArgument("lifting vertex must lie outside the cycle");
  LiftStep step{{}, Network(alternatives)};
  for (std::size_t j = 0; j < k; ++j) {
    Cycle longer{extra};
    for (std::size_t i = 0; i < k; ++i) longer.push_back(c[(j + i) % k]);
    step.longer.push_back(std::move(longer));
    step.widget.add_capacity(extra, c[j], 1);
    step.widget.add_capacity(c[j], extra, 1);
  }
  return step;
}

namespace {

mpz_class lcm_of_denominators(const Network& n) {
  mpz_class l = 1;
  for (const auto& v : n.coordinates()) {
    mpz_class d = v.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

}  // namespace

CycleLiftDecomposition m_cycle_decomposition(const Network& n) {
  if (!net_outdegree(n).is_zero()) throw PreconditionViolation("decomposition into m-cycles needs a pseudo-symmetric network");
  const AlternativeSet& a = n.alternatives();
  const std::size_t m = n.m();
  const Rational half = make_rational(1, 2);

  // N = S + D with S = (N + N^r)/2 reversal symmetric and D = (N − N^r)/2,
  // which is pseudo-symmetric because δ(N^r) = −δ(N).
  Network nr = reverse_network(n);
  Network sym = half * (n + nr);
  Network anti = half * (n - nr);

  CycleLiftDecomposition result{{}, sym};
  std::map<Cycle, Rational> coeffs;

  if (!anti.is_zero()) {
    // Clear denominators with the least k, then add the least constant h
    // making every capacity nonnegative.
    Rational k(lcm_of_denominators(anti));
    Network scaled = k * anti;
    Rational h = 0;
    for (const auto& v : scaled.coordinates())
      if (-v > h) h = -v;
    Network shifted = scaled + Network::constant(a, h);
    // anti = (1/k)·Σ C_i − (h/k)·N(1)
    result.residual -= (h / k) * Network::constant(a, 1);

    auto add = [&](auto&& self, const Rational& coeff, const Cycle& cyc) -> void {
      if (cyc.size() == m) {
        coeffs[canonical_cycle(cyc)] += coeff;
        return;
      }
      Alt extra = 0;
      while (std::find(cyc.begin(), cyc.end(), extra) != cyc.end()) ++extra;
      LiftStep step = lift_cycle(a, cyc, extra);
      Rational share = coeff / Rational(static_cast<long>(cyc.size() - 1));
      for (const auto& longer : step.longer) self(self, share, longer);
      result.residual -= share * step.widget;
    };
    for (const auto& cyc : cycle_decompose(shifted)) add(add, 1 / k, cyc);
  }

  for (auto& [cyc, q] : coeffs)
    if (q != 0) result.terms.push_back({q, cyc});

  Network rebuilt = result.residual;
  for (const auto& t : result.terms) rebuilt += t.coefficient * Network::cycle(a, t.cycle);
  if (!(rebuilt == n) || !classify_network(result.residual).reversal_symmetric)
    throw std::logic_error("m-cycle decomposition failed to reconstruct the network");
  return result;
}

}  // namespace netoutdeg
