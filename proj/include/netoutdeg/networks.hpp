#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netoutdeg/rational.hpp"
#include "netoutdeg/relations.hpp"

namespace netoutdeg {

/// A rational capacity on every arc (x, y), x != y, of the complete
/// digraph on A. Storage is dense m×m; the diagonal is unused and zero.
class Network {
 public:
  /// The null network N(0).
  explicit Network(AlternativeSet alternatives);

  static Network constant(AlternativeSet alternatives, const Rational& k);
  /// N_xy: 1 on (x, y), 0 elsewhere.
  static Network arc(AlternativeSet alternatives, Alt x, Alt y);
  /// N_x: 1 on every arc leaving x.
  static Network outstar(AlternativeSet alternatives, Alt x);
  /// K_B: 1 on both arcs between any two members of B.
  static Network complete(AlternativeSet alternatives, AltSet b);
  /// C_{v1 v2 ... vk v1}; 2 <= k <= m distinct vertices.
  static Network cycle(AlternativeSet alternatives, const std::vector<Alt>& vertices);
  /// N(R): the 0-1 network of R restricted to off-diagonal pairs.
  static Network of_relation(const Relation& r);
  /// Inverse of coordinates().
  static Network from_coordinates(AlternativeSet alternatives, const std::vector<Rational>& coords);

  const AlternativeSet& alternatives() const { return alternatives_; }
  std::size_t m() const { return m_; }

  const Rational& capacity(Alt x, Alt y) const { return caps_[x * m_ + y]; }
  void set_capacity(Alt x, Alt y, const Rational& value);
  void add_capacity(Alt x, Alt y, const Rational& value);

  /// The m(m-1) capacities in (from, to) label order.
  std::vector<Rational> coordinates() const;

  Network& operator+=(const Network& other);
  Network& operator-=(const Network& other);
  Network& operator*=(const Rational& k);
  friend Network operator+(Network a, const Network& b) { return a += b; }
  friend Network operator-(Network a, const Network& b) { return a -= b; }
  friend Network operator*(const Rational& k, Network n) { return n *= k; }

  bool is_zero() const;
  bool operator==(const Network& other) const;

 private:
  void check_same(const Network& other) const;

  AlternativeSet alternatives_;
  std::size_t m_;
  std::vector<Rational> caps_;
};

/// Σ coeff_i · N_i. An empty list yields N(0) on `alternatives`.
Network linear_combine(const AlternativeSet& alternatives,
                       const std::vector<std::pair<Rational, Network>>& terms);

Network permute_network(const Network& n, const Permutation& psi);
Network reverse_network(const Network& n);

/// A rational value for every alternative.
class ScoreVector {
 public:
  explicit ScoreVector(AlternativeSet alternatives);
  ScoreVector(AlternativeSet alternatives, std::vector<Rational> values);

  const AlternativeSet& alternatives() const { return alternatives_; }
  const Rational& operator[](Alt x) const { return values_[x]; }
  Rational& operator[](Alt x) { return values_[x]; }
  const std::vector<Rational>& values() const { return values_; }

  AltSet argmax() const;
  bool is_zero() const;
  bool operator==(const ScoreVector&) const = default;

 private:
  AlternativeSet alternatives_;
  std::vector<Rational> values_;
};

/// A nonempty subset of A.
class SelectionSet {
 public:
  /// Throws InvalidArgument if `members` is empty or leaves A.
  SelectionSet(AlternativeSet alternatives, AltSet members);

  const AlternativeSet& alternatives() const { return alternatives_; }
  AltSet members() const { return members_; }
  bool contains(Alt x) const { return members_.contains(x); }
  std::size_t size() const { return members_.size(); }
  bool is_all() const { return members_ == alternatives_.all(); }
  std::vector<std::string> labels() const;
  std::string to_string() const { return alternatives_.format(members_); }

  bool operator==(const SelectionSet& other) const {
    return members_ == other.members_ && alternatives_ == other.alternatives_;
  }

 private:
  AlternativeSet alternatives_;
  AltSet members_;
};

/// δ^N(x) = Σ_y c(x,y) − Σ_y c(y,x).
ScoreVector net_outdegree(const Network& n);

struct NetworkClassification {
  bool reversal_symmetric = false;
  bool pseudo_symmetric = false;
  bool nonneg_integer = false;
  bool integer = false;
  bool nonneg_rational = false;
  std::optional<Rational> balanced_k;
  std::optional<Rational> constant_k;
};

NetworkClassification classify_network(const Network& n);

/// The net-outdegree solution: argmax of δ^N, full tie set.
SelectionSet solution_O(const Network& n);

/// Copeland on the 0-1 network of a complete relation. Throws
/// PreconditionViolation when some pair has c(x,y) = c(y,x) = 0 or a
/// capacity outside {0, 1}.
SelectionSet copeland(const Network& n);
ScoreVector copeland_scores(const Network& n);

/// A directed cycle given by its distinct vertices v1 ... vk (closing arc implicit).
using Cycle = std::vector<Alt>;

enum class SuccessorChoice {
  Least,   // least element of I(x) in label order
  Random,  // uniformly random element of I(x); seeded
};

/// Decomposes a pseudo-symmetric network with nonnegative integer
/// capacities into a sum of cycle networks by repeated successor walks.
/// Throws PreconditionViolation on invalid input.
std::vector<Cycle> cycle_decompose(const Network& n,
                                   SuccessorChoice choice = SuccessorChoice::Least,
                                   std::uint64_t seed = 0);

/// Σ cycle_network(c) over the list; N(0) for an empty list.
Network sum_of_cycles(const AlternativeSet& alternatives, const std::vector<Cycle>& cycles);

/// Rotates a cycle so that its least vertex comes first.
Cycle canonical_cycle(const Cycle& c);

struct CycleTerm {
  Rational coefficient;
  Cycle cycle;
};

/// N = Σ coefficient_i · C_i + residual with every C_i an m-cycle and the
/// residual reversal symmetric.
struct CycleLiftDecomposition {
  std::vector<CycleTerm> terms;  // canonical m-cycles, sorted, nonzero coefficients
  Network residual;
};

/// One lifting step for a k-cycle (k < m) through the vertex `extra`
/// outside it:  (k−1)·C = Σ_j C'_j − W  where each C'_j is a (k+1)-cycle
/// and W = Σ_i (N_{extra,v_i} + N_{v_i,extra}).
struct LiftStep {
  std::vector<Cycle> longer;  // the k cycles C'_j
  Network widget;             // W, reversal symmetric
};
LiftStep lift_cycle(const AlternativeSet& alternatives, const Cycle& c, Alt extra);

/// Writes a pseudo-symmetric rational network as a combination of
/// m-cycle networks plus a reversal-symmetric residual. The exact
/// reconstruction is verified before returning. Throws
/// PreconditionViolation if N is not pseudo-symmetric.
CycleLiftDecomposition m_cycle_decomposition(const Network& n);

}  // namespace netoutdeg
