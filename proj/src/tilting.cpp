#include "taukit/tilting.hpp"

#include <stdexcept>

namespace taukit {

namespace {

int default_cutoff(const AlgebraPtr& a, int cutoff) { return cutoff >= 0 ? cutoff : 2 * a->dim; }

std::vector<mpq_class> flatten_map(const ModuleMap& h) {
  std::vector<mpq_class> v;
  for (const auto& blk : h.f)
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j) v.push_back(blk.at(i, j));
  return v;
}

std::optional<std::vector<mpq_class>> coords_in(const std::vector<ModuleMap>& basis, const ModuleMap& f) {
  auto fv = flatten_map(f);
  const Field& F = f.source.alg->field;
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& m : basis) rows.push_back(flatten_map(m));
  Mat B = Mat::from_rows(F, rows, static_cast<int>(fv.size()));
  Mat b = Mat::from_rows(F, {fv}, static_cast<int>(fv.size()));
  auto x = solve_left_all(B, b);
  if (!x) return std::nullopt;
  std::vector<mpq_class> out;
  for (int j = 0; j < x->cols(); ++j) out.push_back(x->at(0, j));
  return out;
}

// summand count of a multiplicity-free decomposition, or -1 on repetition
int distinct_summand_count(const AModule& m) {
  auto parts = decompose(m);
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j)
      if (indec_isomorphic(parts[i], parts[j])) return -1;
  return static_cast<int>(parts.size());
}

bool ext_vanishes_up_to(const AModule& m, const AModule& n, int range) {
  for (int i = 1; i <= range; ++i)
    if (ext_dim(m, n, i) != 0) return false;
  return true;
}

bool dim_le(const HomDim& lhs, const HomDim& rhs) {
  if (rhs.kind == HomDim::Kind::Infinite) return true;
  return lhs.finite() && rhs.finite() && lhs.value <= rhs.value;
}

// every indecomposable summand of x occurs among the summands of m
bool in_add(const AModule& x, const AModule& m) {
  if (x.is_zero()) return true;
  auto xs = decompose(x);
  auto ms = decompose(m);
  for (const auto& p : xs) {
    bool found = false;
    for (const auto& q : ms)
      if (indec_isomorphic(p, q)) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool is_faithful(const AModule& m) {
  const AlgebraPtr& a = m.alg;
  const Field& F = a->field;
  int T = m.total_dim();
  std::vector<std::vector<mpq_class>> rows;
  for (int b = 0; b < a->dim; ++b) {
    std::vector<mpq_class> unit(a->dim, mpq_class(0));
    unit[b] = 1;
    Mat t = m.total_matrix_of(unit);
    std::vector<mpq_class> row;
    for (int i = 0; i < T; ++i)
      for (int j = 0; j < T; ++j) row.push_back(t.at(i, j));
    rows.push_back(std::move(row));
  }
  return rank(Mat::from_rows(F, rows, T * T)) == a->dim;
}

bool is_partial_tilting(const AModule& m) {
  return pd_module(m).le(1) && ext_dim(m, m, 1) == 0;
}

bool is_classical_tilting(const AModule& m) {
  return is_partial_tilting(m) && distinct_summand_count(m) == m.alg->n;
}

bool is_classical_cotilting(const AModule& m) { return is_classical_tilting(dual(m)); }

bool is_tilting_n(const AModule& m, int n) {
  if (n < 0 || n > 3) throw std::invalid_argument("coresolution length must be between 0 and 3");
  if (!pd_module(m).le(n)) return false;
  for (int i = 1; i <= n; ++i)
    if (ext_dim(m, m, i) != 0) return false;
  // 0 -> A -> T_0 -> ... -> T_n -> 0 by iterated left approximations; once
  // the running cokernel lies in add(m) it serves as the final term
  AModule x = regular_module(m.alg);
  for (int step = 0; step <= n; ++step) {
    if (in_add(x, m)) return true;
    ModuleMap f = left_approximation(x, m);
    if (!kernel(f).source.is_zero()) return false;
    x = cokernel(f).target;
  }
  return false;  // n+1 proper steps already used up

}

bool is_cotilting_n(const AModule& m, int n) { return is_tilting_n(dual(m), n); }

TorsionTag torsion_tag_over_base(const AModule& t, const AModule& m) {
  bool torsion = ext_dim(t, m, 1) == 0;
  bool free = hom_dim(t, m) == 0;
  if (torsion && free) return TorsionTag::Both;
  if (torsion) return TorsionTag::Torsion;
  if (free) return TorsionTag::Free;
  return TorsionTag::Neither;
}

TorsionTag torsion_tag_over_endo(const EndoData& bb, const AModule& y) {
  bool torsion = tensor_functor(bb, y).is_zero();
  bool free = tor1_functor(bb, y).is_zero();
  if (torsion && free) return TorsionTag::Both;
  if (torsion) return TorsionTag::Torsion;
  if (free) return TorsionTag::Free;
  return TorsionTag::Neither;
}

bool is_splitting_tilting(const EndoData& bb, const std::vector<AModule>& catalog) {
  for (const auto& y : catalog) {
    if (y.alg.get() != bb.algebra.get()) throw std::invalid_argument("catalog module over a different algebra");
    if (torsion_tag_over_endo(bb, y) == TorsionTag::Neither) return false;
  }
  return true;
}

AModule hom_into_functor(const EndoData& bb, const AModule& n) {
  const AlgebraPtr& c = opposite(bb.algebra);
  const Field& F = c->field;
  AModule out;
  out.alg = c;
  std::vector<std::vector<ModuleMap>> bases;
  for (const auto& t : bb.summands) bases.push_back(hom_basis(n, t));
  for (const auto& h : bases) out.dims.push_back(static_cast<int>(h.size()));
  for (int u = 0; u < c->dim; ++u) {
    int i = c->src[u], j = c->tgt[u];
    Mat blk(F, out.dims[i], out.dims[j]);
    for (int p = 0; p < out.dims[i]; ++p) {
      // postcompose with the map summands[i] -> summands[j]
      ModuleMap comp = compose(bases[i][p], bb.basis_maps[u]);
      auto co = coords_in(bases[j], comp);
      if (!co) throw std::logic_error("hom image escapes the basis");
      for (int q = 0; q < out.dims[j]; ++q) blk.at(p, q) = (*co)[q];
    }
    out.act.push_back(std::move(blk));
  }
  check_module(out);
  return out;
}

IteratedChain begin_chain(const AlgebraPtr& a0) {
  if (!gl_dim(a0).le(1)) throw std::invalid_argument("chain must start at a hereditary algebra");
  IteratedChain c;
  c.algebras.push_back(a0);
  return c;
}

void extend_chain(IteratedChain& chain, const std::vector<AModule>& t_summands) {
  const AlgebraPtr& a = chain.algebras.back();
  size_t step = chain.steps.size();
  for (const auto& s : t_summands)
    if (s.alg.get() != a.get())
      throw std::invalid_argument("chain step " + std::to_string(step) + ": summand over the wrong algebra");
  AModule t = direct_sum(t_summands);
  if (!is_classical_tilting(t))
    throw std::runtime_error("chain step " + std::to_string(step) + ": not a classical tilting module");
  EndoData e = endomorphism_algebra(t_summands);
  chain.algebras.push_back(e.algebra);
  chain.steps.push_back(std::move(e));
}

GorensteinReport selfinjective_dims(const AlgebraPtr& a, int cutoff) {
  GorensteinReport r;
  r.right_id = id_module(regular_module(a), cutoff);
  r.left_id = id_module(regular_module(opposite(a)), cutoff);
  r.gorenstein = r.right_id.finite() && r.left_id.finite();
  if (r.gorenstein && r.right_id.value != r.left_id.value)
    throw std::logic_error("one-sided selfinjective dimensions disagree");
  return r;
}

bool is_iwanaga_gorenstein(const AlgebraPtr& a, int cutoff) {
  return selfinjective_dims(a, cutoff).gorenstein;
}

InjDimOneReport verify_inj_dim_one_equivalence(const AlgebraPtr& a) {
  InjDimOneReport r;
  AModule reg = regular_module(a);
  r.id_reg = id_module(reg);
  r.id_le_1 = r.id_reg.le(1);
  r.dual_reg_tau_rigid = is_tau_rigid(dual(regular_module(opposite(a))));
  r.reg_tau_inv_rigid = is_tau_inv_rigid(reg);
  r.consistent = (r.id_le_1 == r.dual_reg_tau_rigid) && (r.id_le_1 == r.reg_tau_inv_rigid);
  return r;
}

CotiltingTiltingReport verify_cotilting_is_tilting(const AlgebraPtr& a,
                                                  const std::vector<AModule>& catalog) {
  const int k = static_cast<int>(catalog.size());
  const int n = a->n;
  if (k > 20) throw std::invalid_argument("catalog too large for subset sweep");
  CotiltingTiltingReport r;
  auto g = selfinjective_dims(a);
  r.gorenstein1 = g.gorenstein && g.right_id.value <= 1;
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    std::vector<AModule> sel;
    for (int i = 0; i < k; ++i)
      if (mask & (1ul << i)) sel.push_back(catalog[i]);
    if (static_cast<int>(sel.size()) != n) continue;
    AModule t = direct_sum(sel);
    if (!is_classical_cotilting(t)) continue;
    ++r.cotilting_count;
    if (is_classical_tilting(t)) ++r.tilting_among;
  }
  r.consistent = ((r.tilting_among == r.cotilting_count) == r.gorenstein1);
  return r;
}

TauInvTiltingReport verify_tau_inv_tilting_gorenstein(const AlgebraPtr& a,
                                                      const std::vector<SttPair>& pairs) {
  TauInvTiltingReport r;
  r.premise = true;
  for (const auto& pr : pairs) {
    if (!pr.p_vertices.empty()) continue;  // only full-support pairs are tau-tilting modules
    if (!is_tau_inv_tilting(pr.m)) r.premise = false;
  }
  auto g = selfinjective_dims(a);
  r.conclusion = g.gorenstein && g.right_id.value <= 1;
  r.consistent = !r.premise || r.conclusion;
  return r;
}

bool wakamatsu_check(const AModule& t, const AModule& x) {
  ModuleMap g = right_approximation(t, x);
  AModule y = kernel(g).source;
  return hom_dim(y, tau(t)) == 0;
}

bool wakamatsu_check_dual(const AModule& t, const AModule& y) {
  ModuleMap f = left_approximation(y, tau(t));
  AModule z = cokernel(f).target;
  return hom_dim(t, z) == 0;
}

PdBoundReport check_pd_bound_fac(const EndoData& bb, const AModule& m, int cutoff) {
  PdBoundReport r;
  AModule t = direct_sum(bb.summands);
  r.rhs = pd_module(m);
  r.precondition_ok =
      fac_contains(t, m) &&
      (r.rhs.le(1) ||
       ext_vanishes_up_to(t, direct_sum({m, t}), default_cutoff(m.alg, cutoff)));
  if (!r.precondition_ok) return r;
  r.lhs = pd_module(hom_functor(bb, m));
  r.holds = dim_le(r.lhs, r.rhs);
  return r;
}

PdBoundReport check_pd_bound_sub(const EndoData& bb, const AModule& n, int cutoff) {
  PdBoundReport r;
  AModule tt = direct_sum(bb.summands);  // tau T
  r.rhs = id_module(n);
  r.precondition_ok =
      sub_contains(tt, n) &&
      (r.rhs.le(1) ||
       ext_vanishes_up_to(direct_sum({n, tt}), tt, default_cutoff(n.alg, cutoff)));
  if (!r.precondition_ok) return r;
  r.lhs = pd_module(hom_into_functor(bb, n));
  r.holds = dim_le(r.lhs, r.rhs);
  return r;
}

}  // namespace taukit
