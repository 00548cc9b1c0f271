#pragma once

#include <map>
#include <set>
#include <vector>

#include "netoutdeg/error.hpp"
#include "netoutdeg/networks.hpp"
#include "netoutdeg/relations.hpp"

namespace netoutdeg {

/// A finite, nonempty assignment of ballots to positive voter ids.
class Profile {
 public:
  using Ballots = std::map<VoterId, Relation>;

  /// Throws InvalidArgument on an empty map, voter id 0, or a ballot over
  /// a different alternative set.
  Profile(AlternativeSet alternatives, Ballots ballots);

  const AlternativeSet& alternatives() const { return alternatives_; }
  std::size_t m() const { return alternatives_.size(); }
  const Ballots& ballots() const { return ballots_; }
  std::size_t size() const { return ballots_.size(); }
  std::vector<VoterId> voters() const;
  bool contains(VoterId id) const { return ballots_.count(id) != 0; }
  const Relation& at(VoterId id) const;
  VoterId max_id() const { return ballots_.rbegin()->first; }

  /// Same profile with voter `id` given `r` (added or replaced).
  Profile with_ballot(VoterId id, const Relation& r) const;
  /// Throws InvalidArgument if removing would empty the profile.
  Profile without(VoterId id) const;

  bool operator==(const Profile& other) const {
    return alternatives_ == other.alternatives_ && ballots_ == other.ballots_;
  }

 private:
  AlternativeSet alternatives_;
  Ballots ballots_;
};

/// Profile with voters 1..n holding the given ballots in order.
Profile make_profile(const AlternativeSet& alternatives, const std::vector<Relation>& ballots);

/// N(p) = Σ_i N(p(i)).
Network network_of_profile(const Profile& p);

/// p + p'. Throws InvalidArgument if the voter sets overlap.
Profile combine_disjoint(const Profile& p, const Profile& q);

/// Relabels p onto the least ids outside avoid ∪ Dom(p), preserving id order.
Profile clone_disjoint(const Profile& p, const std::set<VoterId>& avoid);

Profile permute_profile(const Profile& p, const Permutation& psi);
Profile reverse_profile(const Profile& p);

struct ProfileScores {
  ScoreVector o;  // L − U
  ScoreVector lower;
  ScoreVector upper;
};

/// o(p,x), L(p,x), U(p,x). Checks o = δ^{N(p)}.
ProfileScores profile_scores(const Profile& p);

/// p_X: one voter whose dichotomous ballot has top set X.
Profile dichotomous_singleton(const AlternativeSet& alternatives, AltSet x);

/// A profile whose network is k·N_x plus a reversal-symmetric remainder
/// and whose net-outdegree winner is exactly {x}.
class WitnessCertificate {
 public:
  /// Throws PreconditionViolation unless every invariant holds.
  WitnessCertificate(Alt x, Profile profile, Rational k, Network residual);

  Alt x() const { return x_; }
  const Profile& profile() const { return profile_; }
  const Rational& k() const { return k_; }
  const Network& residual() const { return residual_; }

 private:
  Alt x_;
  Profile profile_;
  Rational k_;
  Network residual_;
};

enum class WitnessMode {
  Coherence,     // pairwise linear profiles, 2(m−1) voters
  Faithfulness,  // two linear ballots sharing the top x
};

/// Builds the outstar witness for `x` over linear orders, Di_t
/// (1 <= t <= m−1) or T_s (1 <= s <= m−1, m <= 7). The mode only affects
/// the linear domain.
WitnessCertificate witness_outstar(const Domain& domain, const AlternativeSet& alternatives, Alt x,
                                   WitnessMode mode = WitnessMode::Coherence);

/// q = disjoint clones of p^ψ for every ψ != id, so that N(p + q) is
/// constant. Requires m <= 6.
Profile symmetrize(const Profile& p);

}  // namespace netoutdeg
