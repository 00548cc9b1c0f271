#include "netoutdeg/algebra.hpp"

#include <algorithm>

#include "netoutdeg/error.hpp"
#include "netoutdeg/profiles.hpp"

namespace netoutdeg {

namespace {

void apply_op(Matrix& m, const RowOp& op) {
  switch (op.kind) {
    case RowOp::Kind::Swap:
      std::swap(m[op.target], m[op.source]);
      break;
    case RowOp::Kind::Scale:
      for (auto& v : m[op.target]) v *= op.factor;
      break;
    case RowOp::Kind::AddMultiple:
      for (std::size_t c = 0; c < m[op.target].size(); ++c) m[op.target][c] += op.factor * m[op.source][c];
      break;
  }
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace

Rref rref(const Matrix& a) {
  Rref out{a, {}, {}};
  Matrix& m = out.reduced;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    auto record = [&](RowOp op) {
      apply_op(m, op);
      out.steps.push_back(std::move(op));
    };
    if (p != r) record({RowOp::Kind::Swap, r, p, 0});
    if (m[r][c] != 1) record({RowOp::Kind::Scale, r, r, 1 / m[r][c]});
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && m[i][c] != 0) record({RowOp::Kind::AddMultiple, i, r, -m[i][c]});
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

Matrix apply_row_ops(Matrix m, const std::vector<RowOp>& ops) {
  for (const auto& op : ops) apply_op(m, op);
  return m;
}

Matrix undo_row_ops(Matrix m, const std::vector<RowOp>& ops) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    RowOp inv = *it;
    if (inv.kind == RowOp::Kind::Scale) inv.factor = 1 / inv.factor;
    if (inv.kind == RowOp::Kind::AddMultiple) inv.factor = -inv.factor;
    apply_op(m, inv);
  }
  return m;
}

Matrix nullspace(const Matrix& a, std::size_t cols) {
  Rref r = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

SubspaceBasis::SubspaceBasis(std::size_t ambient) : ambient_(ambient) {}

SubspaceBasis::SubspaceBasis(std::size_t ambient, const Matrix& generators) : ambient_(ambient) {
  for (const auto& g : generators)
    if (g.size() != ambient) throw InvalidArgument("generator length differs from the ambient dimension");
  Rref r = rref(generators);
  for (std::size_t i = 0; i < r.rank(); ++i) rows_.push_back(r.reduced[i]);
  pivots_ = r.pivots;
}

bool SubspaceBasis::contains(const Vector& v) const {
  if (v.size() != ambient_) throw InvalidArgument("vector length differs from the ambient dimension");
  Vector w = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational f = w[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) w[c] -= f * rows_[i][c];
  }
  return is_zero_vector(w);
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  return std::all_of(other.rows().begin(), other.rows().end(), [&](const Vector& v) { return contains(v); });
}

SubspaceBasis span(const AlternativeSet& alternatives, const std::vector<Network>& networks) {
  Matrix g;
  for (const auto& n : networks) {
    if (!(n.alternatives() == alternatives)) throw InvalidArgument("networks over different alternative sets");
    g.push_back(n.coordinates());
  }
  const std::size_t m = alternatives.size();
  return SubspaceBasis(m * (m - 1), g);
}

namespace {

void same_ambient(const SubspaceBasis& u, const SubspaceBasis& w) {
  if (u.ambient() != w.ambient()) throw InvalidArgument("subspaces of different ambient dimensions");
}

}  // namespace

SubspaceBasis subspace_sum(const SubspaceBasis& u, const SubspaceBasis& w) {
  same_ambient(u, w);
  Matrix g = u.rows();
  g.insert(g.end(), w.rows().begin(), w.rows().end());
  return SubspaceBasis(u.ambient(), g);
}

SubspaceBasis subspace_intersection(const SubspaceBasis& u, const SubspaceBasis& w) {
  same_ambient(u, w);
  const std::size_t n = u.ambient(), du = u.dim(), dw = w.dim();
  // Σ α_i u_i − Σ β_j w_j = 0, one equation per coordinate.
  Matrix system(n, Vector(du + dw));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < du; ++i) system[k][i] = u.rows()[i][k];
    for (std::size_t j = 0; j < dw; ++j) system[k][du + j] = -w.rows()[j][k];
  }
  Matrix g;
  for (const auto& sol : nullspace(system, du + dw)) {
    Vector v(n);
    for (std::size_t i = 0; i < du; ++i)
      if (sol[i] != 0)
        for (std::size_t k = 0; k < n; ++k) v[k] += sol[i] * u.rows()[i][k];
    g.push_back(std::move(v));
  }
  return SubspaceBasis(n, g);
}

bool subspace_equal(const SubspaceBasis& u, const SubspaceBasis& w) {
  same_ambient(u, w);
  return u.contains(w) && w.contains(u);
}

SubspaceBasis outstar_space(const AlternativeSet& a) {
  std::vector<Network> g;
  for (Alt x = 0; x < a.size(); ++x) g.push_back(Network::outstar(a, x));
  return span(a, g);
}

SubspaceBasis reversal_symmetric_space(const AlternativeSet& a) {
  std::vector<Network> g;
  for (Alt x = 0; x < a.size(); ++x)
    for (Alt y = x + 1; y < a.size(); ++y) g.push_back(Network::arc(a, x, y) + Network::arc(a, y, x));
  return span(a, g);
}

SubspaceBasis constant_space(const AlternativeSet& a) { return span(a, {Network::constant(a, 1)}); }

Matrix delta_matrix(const AlternativeSet& a) {
  const std::size_t m = a.size();
  Matrix d(m, Vector(m * (m - 1)));
  std::size_t col = 0;
  for (Alt x = 0; x < m; ++x)
    for (Alt y = 0; y < m; ++y) {
      if (x == y) continue;
      d[x][col] += 1;
      d[y][col] -= 1;
      ++col;
    }
  return d;
}

SubspaceBasis pseudo_symmetric_space(const AlternativeSet& a) {
  const std::size_t n = a.size() * (a.size() - 1);
  return SubspaceBasis(n, nullspace(delta_matrix(a), n));
}

SubspaceBasis full_space(const AlternativeSet& a) {
  const std::size_t n = a.size() * (a.size() - 1);
  Matrix id(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return SubspaceBasis(n, id);
}

DeltaRankKernel delta_rank_kernel(std::size_t m) {
  if (m < 2) throw InvalidArgument("δ needs m >= 2");
  AlternativeSet a = AlternativeSet::of_size(m);
  Matrix d = delta_matrix(a);
  const std::size_t n = m * (m - 1);
  SubspaceBasis kernel(n, nullspace(d, n));
  return {rref(d).rank(), kernel.dim(), kernel};
}

namespace {

std::vector<Cycle> all_cycles(std::size_t m, std::size_t k) {
  std::vector<Cycle> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    AltSet s(mask);
    if (s.size() != k) continue;
    std::vector<Alt> v = s.members();
    std::vector<Alt> tail(v.begin() + 1, v.end());
    do {
      Cycle c{v.front()};
      c.insert(c.end(), tail.begin(), tail.end());
      out.push_back(std::move(c));
    } while (std::next_permutation(tail.begin(), tail.end()));
  }
  return out;
}

}  // namespace

PsSpanReport ps_cycle_span_report(std::size_t m) {
  if (m < 2) throw InvalidArgument("cycle span check needs m >= 2");
  if (m > 5) throw BudgetExceeded("cycle enumeration size m", m, 5);
  AlternativeSet a = AlternativeSet::of_size(m);
  std::vector<Network> every, longest;
  for (std::size_t k = 2; k <= m; ++k)
    for (const auto& c : all_cycles(m, k)) {
      every.push_back(Network::cycle(a, c));
      if (k == m) longest.push_back(every.back());
    }
  SubspaceBasis ps = pseudo_symmetric_space(a);
  SubspaceBasis cycles = span(a, every);
  SubspaceBasis lifted = subspace_sum(span(a, longest), reversal_symmetric_space(a));
  PsSpanReport r;
  r.m = m;
  r.cycle_count = every.size();
  r.m_cycle_count = longest.size();
  r.cycles_dim = cycles.dim();
  r.kernel_dim = ps.dim();
  r.m_cycles_plus_r_dim = lifted.dim();
  r.cycles_span_kernel = subspace_equal(cycles, ps);
  r.m_cycles_plus_r_is_ps = subspace_equal(lifted, ps);
  return r;
}

bool verify_ps_cycle_span(std::size_t m) { return ps_cycle_span_report(m).holds(); }

std::string gamma_name(GammaClass g) {
  switch (g) {
    case GammaClass::R: return "R";
    case GammaClass::PS: return "PS";
    case GammaClass::Other: return "other";
  }
  return "?";
}

namespace {

bool domain_supported(const Domain& d) {
  switch (d.kind) {
    case DomainKind::AllRelations:
    case DomainKind::Linear:
    case DomainKind::Order:
    case DomainKind::Partial:
    case DomainKind::Dichotomous:
    case DomainKind::DichotomousSet:
    case DomainKind::TopTruncated:
    case DomainKind::TruncatedSet:
    case DomainKind::CycleRelations:
      return true;
  }
  return false;
}

std::vector<Domain> witness_tags(std::size_t m) {
  std::vector<Domain> tags{Domain::linear()};
  for (std::size_t t = 1; t < m; ++t) tags.push_back(Domain::di(t));
  if (m <= 7)
    for (std::size_t s = 1; s < m; ++s) tags.push_back(Domain::truncated(s));
  return tags;
}

std::optional<GammaClass> expected_gamma(const Domain& d, std::size_t m, bool& routed) {
  routed = false;
  switch (d.kind) {
    case DomainKind::AllRelations:
    case DomainKind::Linear:
    case DomainKind::Order:
    case DomainKind::Partial:
      return GammaClass::PS;
    case DomainKind::TopTruncated:
      return m >= 3 ? GammaClass::PS : GammaClass::R;
    case DomainKind::Dichotomous:
    case DomainKind::DichotomousSet:
      return GammaClass::R;
    case DomainKind::TruncatedSet: {
      bool deep = std::any_of(d.sizes.begin(), d.sizes.end(), [&](std::size_t s) { return s >= 2 && s <= m - 1; });
      if (deep) return GammaClass::PS;
      routed = std::find(d.sizes.begin(), d.sizes.end(), std::size_t{1}) != d.sizes.end();
      return GammaClass::R;
    }
    case DomainKind::CycleRelations:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

RegularityReport verify_regularity(const Domain& domain, std::size_t m) {
  if (!domain_supported(domain)) throw InvalidArgument("unsupported domain '" + domain.name() + "'");
  if (m < 2) throw InvalidArgument("regularity needs m >= 2");
  AlternativeSet a = AlternativeSet::of_size(m);
  std::vector<Relation> relations = enumerate_domain(domain, a);

  RegularityReport rep;
  rep.domain = domain;
  rep.m = m;
  rep.relation_count = relations.size();

  // (α) CPA on every enumerated relation and every permutation.
  std::vector<Permutation> perms = all_permutations(m);
  rep.cpa = std::all_of(relations.begin(), relations.end(), [&](const Relation& r) {
    return std::all_of(perms.begin(), perms.end(),
                       [&](const Permutation& psi) { return domain.contains(permute_relation(r, psi)); });
  });
  rep.notes.push_back("CA and CWC hold for the set of all finite profiles over a relation class");

  // (γ) with single-relation generators.
  std::vector<Network> generators;
  for (const auto& r : relations) generators.push_back(Network::of_relation(r));
  SubspaceBasis gen = span(a, generators);
  SubspaceBasis r_space = reversal_symmetric_space(a);
  SubspaceBasis ps = pseudo_symmetric_space(a);
  SubspaceBasis plus_r = subspace_sum(gen, r_space);
  SubspaceBasis gamma = subspace_intersection(plus_r, ps);
  rep.span_dim = gen.dim();
  rep.span_plus_r_dim = plus_r.dim();
  rep.gamma_dim = gamma.dim();
  if (subspace_equal(gamma, r_space)) rep.gamma = GammaClass::R;
  else if (subspace_equal(gamma, ps)) rep.gamma = GammaClass::PS;
  else rep.gamma = GammaClass::Other;
  if (m == 2) rep.notes.push_back("for m = 2 the spaces R and PS coincide");
  rep.expected_gamma = expected_gamma(domain, m, rep.routed_via_dichotomous);
  if (rep.routed_via_dichotomous)
    rep.notes.push_back("T_Y with Y ∩ [m-1] = {1} consists of Di_1 ballots plus possibly A²; handled as a dichotomous class");

  // CON: an outstar witness over ballots of the class.
  for (const auto& tag : witness_tags(m)) {
    bool inside = true;
    for (Alt x = 0; x < m && inside; ++x) {
      WitnessCertificate cert = witness_outstar(tag, a, x);
      for (const auto& entry : cert.profile().ballots()) inside = inside && domain.contains(entry.second);
    }
    if (inside) {
      rep.con = true;
      rep.con_detail = "witnessed by the " + tag.name() + " outstar construction for every alternative";
      break;
    }
  }
  if (!rep.con) {
    if (ps.contains(gen))
      rep.con_detail = "fails: every ballot network is pseudo-symmetric, so no profile network equals k·N_x + R with k > 0";
    else
      rep.con_detail = "not established: no outstar construction fits this class";
  }

  // (β) via closure under permutation.
  rep.beta = rep.cpa && !relations.empty();
  rep.beta_detail = rep.beta ? "holds: the relation class is closed under permutation of alternatives"
                             : "not established";

  bool gamma_ok = rep.gamma != GammaClass::Other;
  rep.regular = rep.cpa && rep.ca && rep.cwc && rep.con && rep.beta && gamma_ok;
  return rep;
}

}  // namespace netoutdeg
