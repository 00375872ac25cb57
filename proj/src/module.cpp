#include "taukit/module.hpp"

#include <algorithm>
#include <stdexcept>

namespace taukit {

namespace {

// basis elements of e_iA grouped by target vertex, in basis order
std::vector<std::vector<int>> proj_blocks(const BasicAlgebra& a, int i) {
  std::vector<std::vector<int>> blocks(a.n);
  for (int b = 0; b < a.dim; ++b)
    if (a.src[b] == i) blocks[a.tgt[b]].push_back(b);
  return blocks;
}

}  // namespace

int AModule::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

int AModule::offset(int v) const {
  int o = 0;
  for (int i = 0; i < v; ++i) o += dims[i];
  return o;
}

Mat AModule::total_matrix_of(const std::vector<mpq_class>& elem) const {
  const int T = total_dim();
  Mat m(alg->field, T, T);
  for (int b = 0; b < alg->dim; ++b) {
    if (elem[b] == 0) continue;
    int s = alg->src[b], t = alg->tgt[b];
    int os = offset(s), ot = offset(t);
    for (int i = 0; i < dims[s]; ++i)
      for (int j = 0; j < dims[t]; ++j)
        m.at(os + i, ot + j) = alg->field.add(m.at(os + i, ot + j), alg->field.mul(elem[b], act[b].at(i, j)));
  }
  return m;
}

Mat ModuleMap::total_matrix() const {
  const int R = source.total_dim(), C = target.total_dim();
  Mat m(source.alg->field, R, C);
  for (int v = 0; v < source.alg->n; ++v) {
    int os = source.offset(v), ot = target.offset(v);
    for (int i = 0; i < source.dims[v]; ++i)
      for (int j = 0; j < target.dims[v]; ++j) m.at(os + i, ot + j) = f[v].at(i, j);
  }
  return m;
}

bool ModuleMap::is_zero() const {
  for (const auto& m : f)
    if (!m.is_zero()) return false;
  return true;
}

AModule zero_module(const AlgebraPtr& a) {
  AModule m;
  m.alg = a;
  m.dims.assign(a->n, 0);
  for (int b = 0; b < a->dim; ++b) m.act.push_back(Mat(a->field, 0, 0));
  return m;
}

AModule direct_sum(const std::vector<AModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of empty list needs an algebra");
  const AlgebraPtr& a = parts[0].alg;
  AModule m;
  m.alg = a;
  m.dims.assign(a->n, 0);
  for (const auto& p : parts) {
    if (p.alg.get() != a.get()) throw std::invalid_argument("direct_sum: owner mismatch");
    for (int v = 0; v < a->n; ++v) m.dims[v] += p.dims[v];
  }
  for (int b = 0; b < a->dim; ++b) {
    int s = a->src[b], t = a->tgt[b];
    Mat blk(a->field, m.dims[s], m.dims[t]);
    int ro = 0, co = 0;
    for (const auto& p : parts) {
      for (int i = 0; i < p.dims[s]; ++i)
        for (int j = 0; j < p.dims[t]; ++j) blk.at(ro + i, co + j) = p.act[b].at(i, j);
      ro += p.dims[s];
      co += p.dims[t];
    }
    m.act.push_back(std::move(blk));
  }
  return m;
}

bool same_module(const AModule& m, const AModule& n) {
  return m.alg.get() == n.alg.get() && m.dims == n.dims && m.act == n.act;
}

void check_module(const AModule& m) {
  const BasicAlgebra& a = *m.alg;
  if (static_cast<int>(m.dims.size()) != a.n || static_cast<int>(m.act.size()) != a.dim)
    throw std::runtime_error("module shape mismatch");
  for (int b = 0; b < a.dim; ++b)
    if (m.act[b].rows() != m.dims[a.src[b]] || m.act[b].cols() != m.dims[a.tgt[b]])
      throw std::runtime_error("action matrix shape mismatch at " + a.basis_label[b]);
  for (int i = 0; i < a.n; ++i)
    if (!(m.act[i] == Mat::identity(a.field, m.dims[i])))
      throw std::runtime_error("idempotent does not act as identity at vertex " + std::to_string(i));
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      if (a.tgt[i] != a.src[j]) continue;
      Mat lhs = m.act[i] * m.act[j];
      Mat rhs(a.field, m.dims[a.src[i]], m.dims[a.tgt[j]]);
      for (int k = 0; k < a.dim; ++k)
        if (a.prod[i][j][k] != 0) rhs = rhs + m.act[k].scaled(a.prod[i][j][k]);
      if (!(lhs == rhs))
        throw std::runtime_error("action violates structure constants at " + a.basis_label[i] + "*" +
                                 a.basis_label[j]);
    }
}

AModule projective(const AlgebraPtr& a, int i) {
  auto blocks = proj_blocks(*a, i);
  AModule p;
  p.alg = a;
  p.dims.assign(a->n, 0);
  for (int v = 0; v < a->n; ++v) p.dims[v] = static_cast<int>(blocks[v].size());
  for (int c = 0; c < a->dim; ++c) {
    int s = a->src[c], t = a->tgt[c];
    Mat blk(a->field, p.dims[s], p.dims[t]);
    for (size_t r = 0; r < blocks[s].size(); ++r) {
      int b = blocks[s][r];
      const auto& coeffs = a->prod[b][c];
      for (size_t col = 0; col < blocks[t].size(); ++col) blk.at(static_cast<int>(r), static_cast<int>(col)) = coeffs[blocks[t][col]];
    }
    p.act.push_back(std::move(blk));
  }
  return p;
}

AModule simple(const AlgebraPtr& a, int i) {
  AModule s;
  s.alg = a;
  s.dims.assign(a->n, 0);
  s.dims[i] = 1;
  for (int b = 0; b < a->dim; ++b) {
    Mat blk(a->field, s.dims[a->src[b]], s.dims[a->tgt[b]]);
    if (b == i) blk.at(0, 0) = 1;  // the idempotent e_i
    s.act.push_back(std::move(blk));
  }
  return s;
}

AModule regular_module(const AlgebraPtr& a) {
  std::vector<AModule> ps;
  for (int i = 0; i < a->n; ++i) ps.push_back(projective(a, i));
  return direct_sum(ps);
}

StandardModules standard_modules(const AlgebraPtr& a) {
  StandardModules sm;
  AlgebraPtr op = opposite(a);
  for (int i = 0; i < a->n; ++i) {
    sm.proj.push_back(projective(a, i));
    sm.simple.push_back(simple(a, i));
    sm.inj.push_back(dual(projective(op, i)));
  }
  return sm;
}

ModuleMap zero_map(const AModule& m, const AModule& n) {
  ModuleMap f;
  f.source = m;
  f.target = n;
  for (int v = 0; v < m.alg->n; ++v) f.f.push_back(Mat(m.alg->field, m.dims[v], n.dims[v]));
  return f;
}

ModuleMap identity_map(const AModule& m) {
  ModuleMap f = zero_map(m, m);
  for (int v = 0; v < m.alg->n; ++v) f.f[v] = Mat::identity(m.alg->field, m.dims[v]);
  return f;
}

ModuleMap compose(const ModuleMap& first, const ModuleMap& then) {
  if (!same_module(first.target, then.source)) throw std::invalid_argument("compose: middle modules differ");
  ModuleMap f = zero_map(first.source, then.target);
  for (int v = 0; v < f.source.alg->n; ++v) f.f[v] = first.f[v] * then.f[v];
  return f;
}

ModuleMap map_from_total(const AModule& m, const AModule& n, const Mat& rows_concat) {
  ModuleMap f = zero_map(m, n);
  for (int v = 0; v < m.alg->n; ++v) {
    int os = m.offset(v), ot = n.offset(v);
    for (int i = 0; i < m.dims[v]; ++i)
      for (int j = 0; j < n.dims[v]; ++j) f.f[v].at(i, j) = rows_concat.at(os + i, ot + j);
  }
  return f;
}

ModuleMap add_maps(const ModuleMap& a, const ModuleMap& b) {
  ModuleMap f = a;
  for (size_t v = 0; v < f.f.size(); ++v) f.f[v] = f.f[v] + b.f[v];
  return f;
}

ModuleMap scale_map(const ModuleMap& a, const mpq_class& c) {
  ModuleMap f = a;
  for (auto& blk : f.f) blk = blk.scaled(c);
  return f;
}

std::vector<ModuleMap> hom_basis(const AModule& m, const AModule& n) {
  if (m.alg.get() != n.alg.get()) throw std::invalid_argument("hom_basis: owner mismatch");
  const BasicAlgebra& a = *m.alg;
  const Field& F = a.field;

  std::vector<int> voff(a.n + 1, 0);
  for (int v = 0; v < a.n; ++v) voff[v + 1] = voff[v] + m.dims[v] * n.dims[v];
  const int nvars = voff[a.n];
  auto var = [&](int v, int i, int j) { return voff[v] + i * n.dims[v] + j; };

  std::vector<std::vector<mpq_class>> eq_rows;
  for (int b = a.n; b < a.dim; ++b) {  // idempotent blocks are automatic
    int s = a.src[b], t = a.tgt[b];
    for (int p = 0; p < m.dims[s]; ++p)
      for (int q = 0; q < n.dims[t]; ++q) {
        std::vector<mpq_class> row(nvars, mpq_class(0));
        for (int k = 0; k < m.dims[t]; ++k)
          if (m.act[b].at(p, k) != 0) row[var(t, k, q)] = F.add(row[var(t, k, q)], m.act[b].at(p, k));
        for (int l = 0; l < n.dims[s]; ++l)
          if (n.act[b].at(l, q) != 0) row[var(s, p, l)] = F.sub(row[var(s, p, l)], n.act[b].at(l, q));
        bool nz = false;
        for (auto& x : row)
          if (x != 0) {
            nz = true;
            break;
          }
        if (nz) eq_rows.push_back(std::move(row));
      }
  }
  Mat K = kernel_basis(Mat::from_rows(F, eq_rows, nvars));
  std::vector<ModuleMap> basis;
  for (int c = 0; c < K.cols(); ++c) {
    ModuleMap h = zero_map(m, n);
    for (int v = 0; v < a.n; ++v)
      for (int i = 0; i < m.dims[v]; ++i)
        for (int j = 0; j < n.dims[v]; ++j) h.f[v].at(i, j) = K.at(var(v, i, j), c);
    basis.push_back(std::move(h));
  }
  return basis;
}

int hom_dim(const AModule& m, const AModule& n) { return static_cast<int>(hom_basis(m, n).size()); }

ModuleMap yoneda_map(const AlgebraPtr& a, int i, const AModule& m, const Mat& row_at_i) {
  AModule p = projective(a, i);
  auto blocks = proj_blocks(*a, i);
  ModuleMap f = zero_map(p, m);
  for (int v = 0; v < a->n; ++v)
    for (size_t r = 0; r < blocks[v].size(); ++r) {
      Mat img = row_at_i * m.act[blocks[v][r]];
      for (int j = 0; j < m.dims[v]; ++j) f.f[v].at(static_cast<int>(r), j) = img.at(0, j);
    }
  return f;
}

SubQuotient sub_module(const AModule& m, const std::vector<Mat>& span_rows) {
  const BasicAlgebra& a = *m.alg;
  std::vector<Mat> S;
  for (int v = 0; v < a.n; ++v) S.push_back(row_space_basis(span_rows[v]));
  AModule s;
  s.alg = m.alg;
  for (int v = 0; v < a.n; ++v) s.dims.push_back(S[v].rows());
  for (int b = 0; b < a.dim; ++b) {
    int sv = a.src[b], tv = a.tgt[b];
    Mat rows = S[sv] * m.act[b];
    auto sol = solve_left_all(S[tv], rows);
    if (!sol) throw std::invalid_argument("sub_module: span is not action-invariant at " + a.basis_label[b]);
    s.act.push_back(*sol);
  }
  ModuleMap incl;
  incl.source = s;
  incl.target = m;
  incl.f = S;
  return SubQuotient{std::move(s), std::move(incl)};
}

SubQuotient quotient_module(const AModule& m, const std::vector<Mat>& span_rows) {
  const BasicAlgebra& a = *m.alg;
  const Field& F = a.field;
  std::vector<RrefResult> rr;
  std::vector<std::vector<int>> free_cols(a.n);
  for (int v = 0; v < a.n; ++v) {
    rr.push_back(rref(span_rows[v]));
    std::vector<bool> piv(m.dims[v], false);
    for (int p : rr[v].pivots) piv[p] = true;
    for (int j = 0; j < m.dims[v]; ++j)
      if (!piv[j]) free_cols[v].push_back(j);
  }
  AModule q;
  q.alg = m.alg;
  for (int v = 0; v < a.n; ++v) q.dims.push_back(static_cast<int>(free_cols[v].size()));
  // projection matrices: row i = quotient coordinates of e_i
  std::vector<Mat> P;
  for (int v = 0; v < a.n; ++v) {
    Mat pv(F, m.dims[v], q.dims[v]);
    for (int i = 0; i < m.dims[v]; ++i) {
      Mat e(F, 1, m.dims[v]);
      e.at(0, i) = 1;
      Mat r = reduce_row_mod(rr[v], e);
      for (int j = 0; j < q.dims[v]; ++j) pv.at(i, j) = r.at(0, free_cols[v][j]);
    }
    P.push_back(std::move(pv));
  }
  for (int b = 0; b < a.dim; ++b) {
    int sv = a.src[b], tv = a.tgt[b];
    Mat blk(F, q.dims[sv], q.dims[tv]);
    for (int i = 0; i < q.dims[sv]; ++i) {
      Mat e(F, 1, m.dims[sv]);
      e.at(0, free_cols[sv][i]) = 1;  // unit at a free column is its own representative
      Mat img = (e * m.act[b]) * P[tv];
      for (int j = 0; j < q.dims[tv]; ++j) blk.at(i, j) = img.at(0, j);
    }
    q.act.push_back(std::move(blk));
  }
  ModuleMap proj;
  proj.source = m;
  proj.target = q;
  proj.f = P;
  return SubQuotient{std::move(q), std::move(proj)};
}

ModuleMap kernel(const ModuleMap& f) {
  std::vector<Mat> K;
  for (int v = 0; v < f.source.alg->n; ++v) K.push_back(left_kernel_basis(f.f[v]));
  return sub_module(f.source, K).map;
}

ModuleMap image(const ModuleMap& f) {
  std::vector<Mat> I;
  for (size_t v = 0; v < f.f.size(); ++v) I.push_back(row_space_basis(f.f[v]));
  return sub_module(f.target, I).map;
}

ModuleMap cokernel(const ModuleMap& f) {
  std::vector<Mat> I;
  for (size_t v = 0; v < f.f.size(); ++v) I.push_back(f.f[v]);
  return quotient_module(f.target, I).map;
}

AModule dual(const AModule& m) {
  AModule d;
  d.alg = opposite(m.alg);
  d.dims = m.dims;
  for (int b = 0; b < m.alg->dim; ++b) d.act.push_back(m.act[b].transpose());
  return d;
}

ModuleMap dual_map(const ModuleMap& f) {
  ModuleMap g;
  g.source = dual(f.target);
  g.target = dual(f.source);
  for (const auto& blk : f.f) g.f.push_back(blk.transpose());
  return g;
}

RadTopSoc radical_top_socle(const AModule& m) {
  const BasicAlgebra& a = *m.alg;
  const Field& F = a.field;
  // homogeneous (s,t) tag per radical row
  std::vector<std::vector<Mat>> rad_actions(a.n);  // by source vertex, matrices into their targets
  std::vector<Mat> rad_rows(a.n);
  for (int v = 0; v < a.n; ++v) rad_rows[v] = Mat(F, 0, m.dims[v]);
  std::vector<std::vector<Mat>> by_src(a.n);
  for (int r = 0; r < a.radical.rows(); ++r) {
    auto elem = a.radical.row_vec(r);
    int s = -1, t = -1;
    for (int b = 0; b < a.dim; ++b)
      if (elem[b] != 0) {
        s = a.src[b];
        t = a.tgt[b];
        break;
      }
    if (s < 0) continue;
    Mat action(F, m.dims[s], m.dims[t]);
    for (int b = 0; b < a.dim; ++b)
      if (elem[b] != 0) action = action + m.act[b].scaled(elem[b]);
    rad_rows[t] = Mat::vstack(rad_rows[t], action);
    by_src[s].push_back(std::move(action));
  }
  RadTopSoc out;
  out.rad_incl = sub_module(m, rad_rows).map;
  out.top_proj = quotient_module(m, rad_rows).map;
  std::vector<Mat> soc(a.n);
  for (int v = 0; v < a.n; ++v) {
    if (by_src[v].empty()) {
      soc[v] = Mat::identity(F, m.dims[v]);
      continue;
    }
    Mat h = by_src[v][0];
    for (size_t i = 1; i < by_src[v].size(); ++i) h = Mat::hstack(h, by_src[v][i]);
    soc[v] = left_kernel_basis(h);
  }
  out.soc_incl = sub_module(m, soc).map;
  return out;
}

SubQuotient trace_submodule(const AModule& t, const AModule& m) {
  auto homs = hom_basis(t, m);
  std::vector<Mat> rows;
  for (int v = 0; v < m.alg->n; ++v) {
    Mat r(m.alg->field, 0, m.dims[v]);
    for (const auto& h : homs) r = Mat::vstack(r, h.f[v]);
    rows.push_back(row_space_basis(r));
  }
  return sub_module(m, rows);
}

bool fac_contains(const AModule& t, const AModule& m) {
  auto tr = trace_submodule(t, m);
  return tr.module.dims == m.dims;
}

bool sub_contains(const AModule& u, const AModule& n) {
  auto homs = hom_basis(n, u);
  for (int v = 0; v < n.alg->n; ++v) {
    if (n.dims[v] == 0) continue;
    Mat h(n.alg->field, n.dims[v], 0);
    for (const auto& hm : homs) h = Mat::hstack(h, hm.f[v]);
    if (left_kernel_basis(h).rows() > 0) return false;
  }
  return true;
}

namespace {

// does every map in hom(t, x) (resp. hom(x, u)) factor through the kept
// components of the assembled approximation?
bool spans_hom(const std::vector<ModuleMap>& gens, const std::vector<ModuleMap>& hom) {
  if (hom.empty()) return true;
  const AModule& src = hom[0].source;
  const AModule& tgt = hom[0].target;
  auto flatten = [&](const ModuleMap& h) {
    std::vector<mpq_class> v;
    for (int w = 0; w < src.alg->n; ++w)
      for (int i = 0; i < src.dims[w]; ++i)
        for (int j = 0; j < tgt.dims[w]; ++j) v.push_back(h.f[w].at(i, j));
    return v;
  };
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : gens) rows.push_back(flatten(g));
  size_t width = rows.empty() ? flatten(hom[0]).size() : rows[0].size();
  Mat G = Mat::from_rows(src.alg->field, rows, static_cast<int>(width));
  RrefResult rr = rref(G);
  for (const auto& h : hom) {
    Mat v = Mat::from_rows(src.alg->field, {flatten(h)}, static_cast<int>(width));
    if (!reduce_row_mod(rr, v).is_zero()) return false;
  }
  return true;
}

}  // namespace

ModuleMap right_approximation(const AModule& t, const AModule& x) {
  auto homs = hom_basis(t, x);
  if (homs.empty()) return zero_map(zero_module(t.alg), x);
  auto ends = hom_basis(t, t);
  std::vector<int> keep(homs.size());
  for (size_t i = 0; i < homs.size(); ++i) keep[i] = static_cast<int>(i);
  // greedy discarding: remove a copy when the rest still generate Hom(t,x)
  for (size_t i = 0; i < homs.size(); ++i) {
    std::vector<int> trial;
    for (int k : keep)
      if (k != static_cast<int>(i)) trial.push_back(k);
    if (trial.size() == keep.size()) continue;
    std::vector<ModuleMap> gens;
    for (int k : trial)
      for (const auto& u : ends) gens.push_back(compose(u, homs[k]));
    if (spans_hom(gens, homs)) keep = trial;
  }
  std::vector<AModule> copies(keep.size(), t);
  AModule source = keep.empty() ? zero_module(t.alg) : direct_sum(copies);
  ModuleMap f = zero_map(source, x);
  for (int v = 0; v < t.alg->n; ++v) {
    int ro = 0;
    for (int k : keep) {
      for (int i = 0; i < t.dims[v]; ++i)
        for (int j = 0; j < x.dims[v]; ++j) f.f[v].at(ro + i, j) = homs[k].f[v].at(i, j);
      ro += t.dims[v];
    }
  }
  return f;
}

ModuleMap left_approximation(const AModule& x, const AModule& u) {
  auto homs = hom_basis(x, u);
  if (homs.empty()) return zero_map(x, zero_module(x.alg));
  auto ends = hom_basis(u, u);
  std::vector<int> keep(homs.size());
  for (size_t i = 0; i < homs.size(); ++i) keep[i] = static_cast<int>(i);
  for (size_t i = 0; i < homs.size(); ++i) {
    std::vector<int> trial;
    for (int k : keep)
      if (k != static_cast<int>(i)) trial.push_back(k);
    if (trial.size() == keep.size()) continue;
    std::vector<ModuleMap> gens;
    for (int k : trial)
      for (const auto& e : ends) gens.push_back(compose(homs[k], e));
    if (spans_hom(gens, homs)) keep = trial;
  }
  std::vector<AModule> copies(keep.size(), u);
  AModule target = keep.empty() ? zero_module(x.alg) : direct_sum(copies);
  ModuleMap f = zero_map(x, target);
  for (int v = 0; v < x.alg->n; ++v) {
    int co = 0;
    for (int k : keep) {
      for (int i = 0; i < x.dims[v]; ++i)
        for (int j = 0; j < u.dims[v]; ++j) f.f[v].at(i, co + j) = homs[k].f[v].at(i, j);
      co += u.dims[v];
    }
  }
  return f;
}

int module_order(const AModule& a, const AModule& b) {
  if (a.dims != b.dims) return a.dims < b.dims ? -1 : 1;
  for (size_t i = 0; i < a.act.size(); ++i) {
    std::string x = a.act[i].str(), y = b.act[i].str();
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

AModule module_from_arrow_actions(const AlgebraPtr& a, const std::vector<int>& dims,
                                  const std::vector<Mat>& arrow_acts) {
  if (!a->provenance) throw std::invalid_argument("algebra has no quiver presentation");
  const QuiverPresentation& qp = *a->provenance;
  if (arrow_acts.size() != qp.arrows.size()) throw std::invalid_argument("one matrix per arrow required");
  for (size_t k = 0; k < qp.arrows.size(); ++k)
    if (arrow_acts[k].rows() != dims[qp.arrows[k].src] || arrow_acts[k].cols() != dims[qp.arrows[k].tgt])
      throw std::invalid_argument("arrow matrix shape mismatch at " + qp.arrows[k].name);
  AModule m;
  m.alg = a;
  m.dims = dims;
  for (int b = 0; b < a->dim; ++b) {
    if (b < a->n) {
      m.act.push_back(Mat::identity(a->field, dims[b]));
      continue;
    }
    // basis labels are '*'-joined arrow names along the path
    const std::string& label = a->basis_label[b];
    Mat acc = Mat::identity(a->field, dims[a->src[b]]);
    size_t pos = 0;
    while (pos <= label.size()) {
      size_t star = label.find('*', pos);
      std::string name = label.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
      int k = qp.arrow_index(name);
      if (k < 0) throw std::invalid_argument("unknown arrow in basis label: " + name);
      acc = acc * arrow_acts[k];
      if (star == std::string::npos) break;
      pos = star + 1;
    }
    m.act.push_back(acc);
  }
  check_module(m);
  return m;
}

std::string diagram_label(const AModule& m) {
  if (m.is_zero()) return "0";
  std::vector<AModule> parts = decompose(m);
  std::sort(parts.begin(), parts.end(), [](const AModule& a, const AModule& b) { return module_order(a, b) > 0; });
  std::string out;
  for (size_t p = 0; p < parts.size(); ++p) {
    if (p) out += " (+) ";
    AModule cur = parts[p];
    bool first_layer = true;
    while (!cur.is_zero()) {
      auto rts = radical_top_socle(cur);
      if (!first_layer) out += "|";
      first_layer = false;
      bool first_v = true;
      for (int v = 0; v < cur.alg->n; ++v) {
        int mult = rts.top_proj.target.dims[v];
        for (int k = 0; k < mult; ++k) {
          if (!first_v) out += " ";
          first_v = false;
          out += cur.alg->vertex_label[v];
        }
      }
      cur = rts.rad_incl.source;
    }
  }
  return out;
}

}  // namespace taukit
