#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netoutdeg/networks.hpp"
#include "netoutdeg/relations.hpp"

namespace netoutdeg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// One elementary row operation.
struct RowOp {
  enum class Kind { Swap, Scale, AddMultiple };
  Kind kind;
  std::size_t target;
  std::size_t source;  // Swap partner or AddMultiple source
  Rational factor;     // Scale factor or AddMultiple coefficient
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::vector<RowOp> steps;         // applied in order to the input
  std::size_t rank() const { return pivots.size(); }
};

/// Exact reduced row echelon form; the pivot is the first nonzero entry
/// below the current row.
Rref rref(const Matrix& a);
/// Applies `ops` to m in order.
Matrix apply_row_ops(Matrix m, const std::vector<RowOp>& ops);
/// Inverts the recorded steps on the reduced matrix, giving the input back.
Matrix undo_row_ops(Matrix m, const std::vector<RowOp>& ops);

/// Basis of {v : a·v = 0}; `cols` fixes the width when a has no rows.
Matrix nullspace(const Matrix& a, std::size_t cols);

/// A subspace of Q^n kept as the nonzero rows of its reduced echelon form.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient);
  SubspaceBasis(std::size_t ambient, const Matrix& generators);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const Matrix& rows() const { return rows_; }
  bool contains(const Vector& v) const;
  bool contains(const SubspaceBasis& other) const;

  bool operator==(const SubspaceBasis& other) const {
    return ambient_ == other.ambient_ && rows_ == other.rows_;
  }

 private:
  std::size_t ambient_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

/// Q-span of networks in the coordinate order of Network::coordinates().
SubspaceBasis span(const AlternativeSet& alternatives, const std::vector<Network>& networks);
/// Throws InvalidArgument on different ambient dimensions.
SubspaceBasis subspace_sum(const SubspaceBasis& u, const SubspaceBasis& w);
SubspaceBasis subspace_intersection(const SubspaceBasis& u, const SubspaceBasis& w);
bool subspace_equal(const SubspaceBasis& u, const SubspaceBasis& w);

SubspaceBasis outstar_space(const AlternativeSet& a);             // span{N_x}
SubspaceBasis reversal_symmetric_space(const AlternativeSet& a);  // span{N_xy + N_yx}
SubspaceBasis constant_space(const AlternativeSet& a);            // span{N(1)}
SubspaceBasis pseudo_symmetric_space(const AlternativeSet& a);    // Ker δ
SubspaceBasis full_space(const AlternativeSet& a);

/// The m × m(m−1) matrix of δ on the arc basis.
Matrix delta_matrix(const AlternativeSet& a);

struct DeltaRankKernel {
  std::size_t rank;
  std::size_t kernel_dim;
  SubspaceBasis kernel;
};
/// Throws InvalidArgument for m < 2.
DeltaRankKernel delta_rank_kernel(std::size_t m);

struct PsSpanReport {
  std::size_t m;
  std::size_t cycle_count;
  std::size_t m_cycle_count;
  std::size_t cycles_dim;         // dim span{all cycles}
  std::size_t kernel_dim;         // dim Ker δ
  std::size_t m_cycles_plus_r_dim;
  bool cycles_span_kernel;
  bool m_cycles_plus_r_is_ps;
  bool holds() const { return cycles_span_kernel && m_cycles_plus_r_is_ps; }
};
/// Throws BudgetExceeded for m > 5.
PsSpanReport ps_cycle_span_report(std::size_t m);
bool verify_ps_cycle_span(std::size_t m);

enum class GammaClass { R, PS, Other };
std::string gamma_name(GammaClass g);

struct RegularityReport {
  Domain domain;
  std::size_t m;
  std::size_t relation_count = 0;
  bool cpa = false;  // class closed under permutation, checked on every relation
  bool ca = true;    // profiles over a class are closed under disjoint sums
  bool cwc = true;   // and admit disjoint clones
  bool con = false;
  std::string con_detail;
  bool beta = false;
  std::string beta_detail;
  std::size_t span_dim = 0;
  std::size_t span_plus_r_dim = 0;
  std::size_t gamma_dim = 0;
  GammaClass gamma = GammaClass::Other;
  std::optional<GammaClass> expected_gamma;
  bool routed_via_dichotomous = false;
  bool regular = false;
  std::vector<std::string> notes;

  bool matches_expected() const { return !expected_gamma || *expected_gamma == gamma; }
};

/// Checks (α), (β) and (γ) for the profiles over a relation class.
/// Throws InvalidArgument for unsupported domains and BudgetExceeded when
/// the class is too large to enumerate.
RegularityReport verify_regularity(const Domain& domain, std::size_t m);

}  // namespace netoutdeg
