#include "netoutdeg/profiles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace netoutdeg {

Profile::Profile(AlternativeSet alternatives, Ballots ballots)
    : alternatives_(std::move(alternatives)), ballots_(std::move(ballots)) {
  if (ballots_.empty()) throw InvalidArgument("a profile needs at least one voter");
  for (const auto& [id, r] : ballots_) {
    if (id == 0) throw InvalidArgument("voter ids are positive integers");
    if (!(r.alternatives() == alternatives_))
      throw InvalidArgument("voter " + std::to_string(id) + ": ballot over a different alternative set");
  }
}

std::vector<VoterId> Profile::voters() const {
  std::vector<VoterId> out;
  for (const auto& entry : ballots_) out.push_back(entry.first);
  return out;
}

const Relation& Profile::at(VoterId id) const {
  auto it = ballots_.find(id);
  if (it == ballots_.end()) throw InvalidArgument("no voter " + std::to_string(id));
  return it->second;
}

Profile Profile::with_ballot(VoterId id, const Relation& r) const {
  Ballots b = ballots_;
  b.insert_or_assign(id, r);
  return Profile(alternatives_, std::move(b));
}

Profile Profile::without(VoterId id) const {
  Ballots b = ballots_;
  b.erase(id);
  return Profile(alternatives_, std::move(b));
}

Profile make_profile(const AlternativeSet& alternatives, const std::vector<Relation>& ballots) {
  Profile::Ballots b;
  VoterId id = 1;
  for (const auto& r : ballots) b.emplace(id++, r);
  return Profile(alternatives, std::move(b));
}

Network network_of_profile(const Profile& p) {
  const std::size_t m = p.m();
  std::vector<long> count(m * m, 0);
  for (const auto& [id, r] : p.ballots())
    for (Alt x = 0; x < m; ++x)
      for (Alt y : r.row(x).members())
        if (y != x) ++count[x * m + y];
  Network n(p.alternatives());
  for (Alt x = 0; x < m; ++x)
    for (Alt y = 0; y < m; ++y)
      if (x != y && count[x * m + y] != 0) n.set_capacity(x, y, Rational(count[x * m + y]));
  return n;
}

Profile combine_disjoint(const Profile& p, const Profile& q) {
  if (!(p.alternatives() == q.alternatives())) throw InvalidArgument("profiles over different alternative sets");
  Profile::Ballots b = p.ballots();
  for (const auto& [id, r] : q.ballots())
    if (!b.emplace(id, r).second)
      throw InvalidArgument("voter " + std::to_string(id) + " appears in both profiles");
  return Profile(p.alternatives(), std::move(b));
}

Profile clone_disjoint(const Profile& p, const std::set<VoterId>& avoid) {
  Profile::Ballots b;
  VoterId next = 1;
  for (const auto& [id, r] : p.ballots()) {
    while (avoid.count(next) != 0 || p.contains(next)) ++next;
    b.emplace(next++, r);
  }
  return Profile(p.alternatives(), std::move(b));
}

Profile permute_profile(const Profile& p, const Permutation& psi) {
  Profile::Ballots b;
  for (const auto& [id, r] : p.ballots()) b.emplace(id, permute_relation(r, psi));
  return Profile(p.alternatives(), std::move(b));
}

Profile reverse_profile(const Profile& p) {
  Profile::Ballots b;
  for (const auto& [id, r] : p.ballots()) b.emplace(id, reverse_relation(r));
  return Profile(p.alternatives(), std::move(b));
}

ProfileScores profile_scores(const Profile& p) {
  ProfileScores s{ScoreVector(p.alternatives()), ScoreVector(p.alternatives()), ScoreVector(p.alternatives())};
  for (const auto& [id, r] : p.ballots())
    for (Alt x = 0; x < p.m(); ++x) {
      Partition part = derive_partition(r, x);
      s.lower[x] += static_cast<long>(part.lower.size());
      s.upper[x] += static_cast<long>(part.upper.size());
    }
  for (Alt x = 0; x < p.m(); ++x) s.o[x] = s.lower[x] - s.upper[x];
  if (!(s.o == net_outdegree(network_of_profile(p))))
    throw std::logic_error("net-outdegree score differs from δ of the profile network");
  return s;
}

Profile dichotomous_singleton(const AlternativeSet& alternatives, AltSet x) {
  if (x.empty()) throw InvalidArgument("the top set of a dichotomous ballot must be nonempty");
  Profile p = make_profile(alternatives, {Relation::dichotomous(alternatives, x)});
  Network expected = Network::complete(alternatives, alternatives.all().minus(x));
  for (Alt z : x.members()) expected += Network::outstar(alternatives, z);
  if (!(network_of_profile(p) == expected)) throw std::logic_error("dichotomous singleton network identity failed");
  return p;
}

WitnessCertificate::WitnessCertificate(Alt x, Profile profile, Rational k, Network residual)
    : x_(x), profile_(std::move(profile)), k_(std::move(k)), residual_(std::move(residual)) {
  const AlternativeSet& a = profile_.alternatives();
  if (x_ >= a.size()) throw PreconditionViolation("certificate alternative out of range");
  if (k_ <= 0 || !is_integer(k_)) throw PreconditionViolation("certificate multiplier must be a positive integer");
  if (!classify_network(residual_).reversal_symmetric)
    throw PreconditionViolation("certificate remainder is not reversal symmetric");
  Network n = network_of_profile(profile_);
  if (!(n == k_ * Network::outstar(a, x_) + residual_))
    throw PreconditionViolation("N(p) differs from k·N_x + R");
  if (!(solution_O(n).members() == AltSet::singleton(x_)))
    throw PreconditionViolation("certificate profile does not elect {" + a.label(x_) + "}");
}

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// All r-subsets of `pool`, lexicographic on member order.
void combinations(const std::vector<Alt>& pool, std::size_t r, std::vector<std::vector<Alt>>& out) {
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  if (r > pool.size()) return;
  while (true) {
    std::vector<Alt> pick;
    for (std::size_t i : idx) pick.push_back(pool[i]);
    out.push_back(std::move(pick));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == pool.size() - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Alt> others(const AlternativeSet& a, Alt x) {
  std::vector<Alt> rest;
  for (Alt y = 0; y < a.size(); ++y)
    if (y != x) rest.push_back(y);
  return rest;
}

WitnessCertificate finish(const AlternativeSet& a, Alt x, const std::vector<Relation>& ballots, Rational k) {
  Profile p = make_profile(a, ballots);
  Network residual = network_of_profile(p) - k * Network::outstar(a, x);
  return WitnessCertificate(x, std::move(p), std::move(k), std::move(residual));
}

WitnessCertificate linear_witness(const AlternativeSet& a, Alt x, WitnessMode mode) {
  const std::vector<Alt> rest = others(a, x);
  std::vector<Relation> ballots;
  if (mode == WitnessMode::Faithfulness || a.size() == 2) {
    std::vector<Alt> up{x}, down{x};
    up.insert(up.end(), rest.begin(), rest.end());
    down.insert(down.end(), rest.rbegin(), rest.rend());
    ballots.push_back(Relation::linear(a, up));
    ballots.push_back(Relation::linear(a, down));
  } else {
    for (Alt y : rest) {
      std::vector<Alt> first{x, y};
      for (Alt z : rest)
        if (z != y) first.push_back(z);
      Relation r1 = Relation::linear(a, first);
      Relation r2 = permute_relation(reverse_relation(r1), Permutation::transposition(a.size(), x, y));
      ballots.push_back(r1);
      ballots.push_back(r2);
    }
  }
  return finish(a, x, ballots, 2);
}

WitnessCertificate dichotomous_witness(const AlternativeSet& a, Alt x, std::size_t t) {
  const std::size_t m = a.size();
  if (t < 1 || t > m - 1) throw InvalidArgument("Di_t witness needs 1 <= t <= m-1, got t=" + std::to_string(t));
  std::vector<std::vector<Alt>> picks;
  combinations(others(a, x), t - 1, picks);
  std::vector<Relation> ballots;
  for (const auto& pick : picks) {
    AltSet top = AltSet::singleton(x);
    for (Alt z : pick) top.insert(z);
    ballots.push_back(Relation::dichotomous(a, top));
  }
  return finish(a, x, ballots, Rational(static_cast<unsigned long>(binomial(m - 2, t - 1))));
}

WitnessCertificate truncated_witness(const AlternativeSet& a, Alt x, std::size_t s) {
  const std::size_t m = a.size();
  if (s < 1 || s > m - 1) throw InvalidArgument("T_s witness needs 1 <= s <= m-1, got s=" + std::to_string(s));
  if (m > 7) throw BudgetExceeded("T_s witness ballot count (m-1)!", factorial(m - 1), factorial(6));
  const std::vector<Alt> rest = others(a, x);
  std::vector<Alt> prefix{x};
  prefix.insert(prefix.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(s - 1));
  Relation q = Relation::top_truncated(a, prefix);

  std::vector<Relation> ballots;
  std::vector<Alt> image = rest;
  do {
    std::vector<Alt> psi(m);
    psi[x] = x;
    for (std::size_t i = 0; i < rest.size(); ++i) psi[rest[i]] = image[i];
    ballots.push_back(permute_relation(q, Permutation(psi)));
  } while (std::next_permutation(image.begin(), image.end()));

  WitnessCertificate cert = finish(a, x, ballots, Rational(static_cast<unsigned long>(factorial(m - 1))));
  // The remainder is a multiple of K_{A\{x}}.
  AltSet outside = a.all().minus(AltSet::singleton(x));
  Rational alpha = m > 2 ? cert.residual().capacity(rest[0], rest[1]) : Rational(0);
  if (!(cert.residual() == alpha * Network::complete(a, outside)))
    throw std::logic_error("T_s witness remainder is not a multiple of K_{A\\{x}}");
  return cert;
}

}  // namespace

WitnessCertificate witness_outstar(const Domain& domain, const AlternativeSet& alternatives, Alt x,
                                   WitnessMode mode) {
  if (x >= alternatives.size()) throw InvalidArgument("witness alternative out of range");
  switch (domain.kind) {
    case DomainKind::Linear:
      return linear_witness(alternatives, x, mode);
    case DomainKind::DichotomousSet:
      if (domain.sizes.size() == 1) return dichotomous_witness(alternatives, x, domain.sizes[0]);
      break;
    case DomainKind::TruncatedSet:
      if (domain.sizes.size() == 1) return truncated_witness(alternatives, x, domain.sizes[0]);
      break;
    default:
      break;
  }
  throw InvalidArgument("no outstar witness construction for domain '" + domain.name() + "'");
}

Profile symmetrize(const Profile& p) {
  const std::size_t m = p.m();
  if (m > 6) throw BudgetExceeded("symmetrize clone count m!-1", factorial(m) - 1, factorial(6) - 1);
  std::set<VoterId> used;
  for (VoterId id : p.voters()) used.insert(id);
  Profile::Ballots q;
  for (const auto& psi : all_permutations(m)) {
    if (psi.is_identity()) continue;
    Profile clone = clone_disjoint(permute_profile(p, psi), used);
    for (const auto& [id, r] : clone.ballots()) {
      used.insert(id);
      q.emplace(id, r);
    }
  }
  Profile out(p.alternatives(), std::move(q));
  if (!classify_network(network_of_profile(combine_disjoint(p, out))).constant_k)
    throw std::logic_error("symmetrized profile network is not constant");
  return out;
}

}  // namespace netoutdeg
