#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace netoutdeg {

/// Index of an alternative inside its AlternativeSet (label order).
using Alt = std::size_t;

inline constexpr std::size_t kMaxAlternatives = 64;

/// A subset of alternatives stored as a bitmask over indices.
class AltSet {
 public:
  constexpr AltSet() = default;
  constexpr explicit AltSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr AltSet singleton(Alt x) { return AltSet(std::uint64_t{1} << x); }
  static constexpr AltSet first(std::size_t m) {
    return AltSet(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }

  constexpr bool contains(Alt x) const { return (bits_ >> x) & 1U; }
  constexpr void insert(Alt x) { bits_ |= std::uint64_t{1} << x; }
  constexpr void erase(Alt x) { bits_ &= ~(std::uint64_t{1} << x); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr AltSet operator&(AltSet o) const { return AltSet(bits_ & o.bits_); }
  constexpr AltSet operator|(AltSet o) const { return AltSet(bits_ | o.bits_); }
  constexpr AltSet minus(AltSet o) const { return AltSet(bits_ & ~o.bits_); }
  constexpr bool subset_of(AltSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<Alt> members() const;

  constexpr auto operator<=>(const AltSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// The finite set of alternatives, m >= 2, with distinct non-empty labels.
/// Labels are kept in lexicographic order; indices follow that order.
class AlternativeSet {
 public:
  explicit AlternativeSet(std::vector<std::string> labels);

  /// Labels "a", "b", ... for m <= 26, "x1".."xm" beyond.
  static AlternativeSet of_size(std::size_t m);

  std::size_t size() const { return labels_->size(); }
  const std::string& label(Alt x) const { return (*labels_)[x]; }
  const std::vector<std::string>& labels() const { return *labels_; }
  std::optional<Alt> find(std::string_view label) const;
  /// Throws UnknownAlternative.
  Alt index_of(std::string_view label) const;
  AltSet all() const { return AltSet::first(size()); }

  std::string format(AltSet s) const;  // "{a,b}"

  bool operator==(const AlternativeSet& other) const {
    return labels_ == other.labels_ || *labels_ == *other.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// A bijection of {0..m-1}; image[x] is psi(x).
class Permutation {
 public:
  /// Throws NotABijection.
  explicit Permutation(std::vector<Alt> image);
  static Permutation identity(std::size_t m);
  static Permutation transposition(std::size_t m, Alt x, Alt y);

  std::size_t size() const { return image_.size(); }
  Alt operator()(Alt x) const { return image_[x]; }
  const std::vector<Alt>& image() const { return image_; }
  Permutation inverse() const;
  /// (this * other)(x) = this(other(x)).
  Permutation compose(const Permutation& other) const;
  AltSet apply(AltSet s) const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Alt> image_;
};

/// All m! permutations in lexicographic order of their images.
std::vector<Permutation> all_permutations(std::size_t m);

/// A binary relation R ⊆ A×A stored as one row bitmask per alternative:
/// y ∈ row(x) iff (x, y) ∈ R.
class Relation {
 public:
  explicit Relation(AlternativeSet alternatives);

  static Relation from_pairs(AlternativeSet alternatives,
                             const std::vector<std::pair<Alt, Alt>>& pairs);
  /// A² (total indifference).
  static Relation full(AlternativeSet alternatives);
  /// Complete preorder from tiers; earlier tiers are preferred. Every
  /// alternative must appear exactly once. Reflexive pairs are included.
  static Relation from_tiers(AlternativeSet alternatives,
                             const std::vector<std::vector<Alt>>& tiers);
  static Relation linear(AlternativeSet alternatives, const std::vector<Alt>& ranking);
  /// Dichotomous order with top set `top` (nonempty).
  static Relation dichotomous(AlternativeSet alternatives, AltSet top);
  /// Strict ranked prefix, all remaining alternatives tied at the bottom.
  static Relation top_truncated(AlternativeSet alternatives, const std::vector<Alt>& prefix);

  const AlternativeSet& alternatives() const { return alternatives_; }
  std::size_t m() const { return rows_.size(); }

  bool holds(Alt x, Alt y) const { return (rows_[x] >> y) & 1U; }
  bool strictly(Alt x, Alt y) const { return holds(x, y) && !holds(y, x); }
  bool indifferent(Alt x, Alt y) const { return holds(x, y) && holds(y, x); }
  bool incomparable(Alt x, Alt y) const { return !holds(x, y) && !holds(y, x); }

  AltSet row(Alt x) const { return AltSet(rows_[x]); }
  std::vector<std::pair<Alt, Alt>> pairs() const;
  std::size_t pair_count() const;

  Relation with_pair(Alt x, Alt y) const;

  bool operator==(const Relation& other) const {
    return rows_ == other.rows_ && alternatives_ == other.alternatives_;
  }
  /// Orders relations by their rows only; used for deterministic sorting.
  bool operator<(const Relation& other) const { return rows_ < other.rows_; }

 private:
  AlternativeSet alternatives_;
  std::vector<std::uint64_t> rows_;
};

/// L(R,x), U(R,x), I(R,x), IN(R,x).
struct Partition {
  AltSet lower;         // x ≻ y
  AltSet upper;         // y ≻ x
  AltSet indifferent;   // x ∼ y
  AltSet incomparable;  // x ⊥ y
};

/// Throws InvalidArgument if x is out of range.
Partition derive_partition(const Relation& r, Alt x);

struct RelationClassification {
  bool reflexive = false;
  bool complete = false;
  bool transitive = false;
  bool antisymmetric = false;
  bool order = false;
  bool linear_order = false;
  bool partial_order = false;
  bool dichotomous = false;
  bool top_truncated = false;
  std::optional<std::size_t> t;  // |T(R)| when dichotomous
  std::optional<std::size_t> s;  // |A \ B(R)| when top-truncated

  bool operator==(const RelationClassification&) const = default;
};

RelationClassification classify_relation(const Relation& r);

struct TopBottom {
  AltSet top;
  AltSet bottom;
};

/// T(R) and B(R). Throws PreconditionViolation if R is not an order.
TopBottom top_bottom(const Relation& r);

/// R^psi = {(psi x, psi y) : (x, y) ∈ R}.
Relation permute_relation(const Relation& r, const Permutation& psi);
Relation reverse_relation(const Relation& r);

/// Tags for the relation classes the toolkit enumerates and samples.
enum class DomainKind {
  AllRelations,
  Linear,
  Order,
  Partial,
  Dichotomous,     // Di(A)
  DichotomousSet,  // Di_X(A), X ⊆ [m]
  TopTruncated,    // T(A)
  TruncatedSet,    // T_Y(A), Y ⊆ [m-1]_0
  CycleRelations,
};

struct Domain {
  DomainKind kind = DomainKind::Order;
  std::vector<std::size_t> sizes;  // X for Di_X, Y for T_Y (sorted, unique)

  static Domain all() { return {DomainKind::AllRelations, {}}; }
  static Domain linear() { return {DomainKind::Linear, {}}; }
  static Domain order() { return {DomainKind::Order, {}}; }
  static Domain partial() { return {DomainKind::Partial, {}}; }
  static Domain dichotomous() { return {DomainKind::Dichotomous, {}}; }
  static Domain di(std::size_t t) { return {DomainKind::DichotomousSet, {t}}; }
  static Domain di_set(std::vector<std::size_t> x);
  static Domain top_truncated() { return {DomainKind::TopTruncated, {}}; }
  static Domain truncated(std::size_t s) { return {DomainKind::TruncatedSet, {s}}; }
  static Domain truncated_set(std::vector<std::size_t> y);
  static Domain cycles() { return {DomainKind::CycleRelations, {}}; }

  /// "all", "linear", "order", "partial", "dichotomous", "di:1,2",
  /// "top-truncated", "t:0,2", "cycles". Throws InvalidArgument.
  static Domain parse(std::string_view text);
  std::string name() const;

  bool contains(const Relation& r) const;

  bool operator==(const Domain&) const = default;
};

/// Exhaustive, duplicate-free, deterministic enumeration of a relation class.
/// Throws BudgetExceeded for all-relations with m > 3 or partial with m > 5.
std::vector<Relation> enumerate_domain(const Domain& domain, const AlternativeSet& a);

/// True iff N(R) is a cycle network.
bool is_cycle_relation(const Relation& r);

}  // namespace netoutdeg
