#include "taukit/homology.hpp"

#include <stdexcept>

namespace taukit {

namespace {

AModule sum_of_projectives(const AlgebraPtr& a, const std::vector<int>& verts) {
  if (verts.empty()) return zero_module(a);
  std::vector<AModule> parts;
  for (int v : verts) parts.push_back(projective(a, v));
  return direct_sum(parts);
}

// row index of the generator of summand s inside the direct sum, at the
// summand's own vertex
int generator_index(const AlgebraPtr& a, const std::vector<int>& verts, int s) {
  int off = 0;
  for (int q = 0; q < s; ++q) off += projective(a, verts[q]).dims[verts[s]];
  return off;
}

}  // namespace

ModuleMap projective_cover(const AModule& m) {
  const AlgebraPtr& a = m.alg;
  auto rts = radical_top_socle(m);
  const ModuleMap& top = rts.top_proj;
  std::vector<int> verts;
  std::vector<Mat> gens;  // generator rows per vertex
  for (int v = 0; v < a->n; ++v) {
    int q = top.target.dims[v];
    if (q == 0) {
      gens.push_back(Mat(a->field, 0, m.dims[v]));
      continue;
    }
    auto x = solve_left_all(top.f[v], Mat::identity(a->field, q));
    if (!x) throw std::logic_error("top projection is not surjective");
    gens.push_back(*x);
    for (int k = 0; k < q; ++k) verts.push_back(v);
  }
  AModule p0 = sum_of_projectives(a, verts);
  ModuleMap cover = zero_map(p0, m);
  int part = 0;
  std::vector<int> row_off(a->n, 0);
  for (int v = 0; v < a->n; ++v)
    for (int k = 0; k < top.target.dims[v]; ++k) {
      ModuleMap g = yoneda_map(a, v, m, gens[v].row(k));
      for (int w = 0; w < a->n; ++w) {
        int base = 0;
        for (int q = 0; q < part; ++q) base += projective(a, verts[q]).dims[w];
        for (int i = 0; i < g.source.dims[w]; ++i)
          for (int j = 0; j < m.dims[w]; ++j) cover.f[w].at(base + i, j) = g.f[w].at(i, j);
      }
      ++part;
    }
  return cover;
}

ProjPresentation minimal_presentation(const AModule& m) {
  ProjPresentation pres;
  pres.cover = projective_cover(m);
  const AlgebraPtr& a = m.alg;
  {
    auto rts = radical_top_socle(m);
    for (int v = 0; v < a->n; ++v)
      for (int k = 0; k < rts.top_proj.target.dims[v]; ++k) pres.p0_vertices.push_back(v);
  }
  ModuleMap incl = kernel(pres.cover);
  ModuleMap cover1 = projective_cover(incl.source);
  {
    auto rts = radical_top_socle(incl.source);
    for (int v = 0; v < a->n; ++v)
      for (int k = 0; k < rts.top_proj.target.dims[v]; ++k) pres.p1_vertices.push_back(v);
  }
  pres.d = compose(cover1, incl);
  return pres;
}

Resolution build_resolution(const AModule& m, int depth) {
  Resolution res;
  AModule cur = m;
  ModuleMap incl;  // kernel of the previous cover
  for (int t = 0; t <= depth; ++t) {
    ModuleMap cover = projective_cover(cur);
    if (t == 0)
      res.cover = cover;
    else
      res.d.push_back(compose(cover, incl));
    res.p.push_back(cover.source);
    {
      auto rts = radical_top_socle(cur);
      std::vector<int> vs;
      for (int v = 0; v < m.alg->n; ++v)
        for (int k = 0; k < rts.top_proj.target.dims[v]; ++k) vs.push_back(v);
      res.verts.push_back(vs);
    }
    incl = kernel(cover);
    cur = incl.source;
  }
  return res;
}

AModule transpose(const AModule& m) {
  const AlgebraPtr& a = m.alg;
  AlgebraPtr op = opposite(a);
  ProjPresentation pres = minimal_presentation(m);
  const auto& b = pres.p0_vertices;  // summands of P0
  const auto& av = pres.p1_vertices; // summands of P1
  // coefficient of the presentation as algebra elements x_{jk} in
  // e_{b_k} A e_{a_j}, read off from the generator rows of d
  AModule src = sum_of_projectives(op, b);
  AModule tgt = sum_of_projectives(op, av);
  ModuleMap dstar = zero_map(src, tgt);
  for (size_t j = 0; j < av.size(); ++j) {
    int vj = av[j];
    int grow = generator_index(a, av, static_cast<int>(j));
    // image row of the generator, split over the P0 summands
    int col = 0;
    for (size_t k = 0; k < b.size(); ++k) {
      AModule pk = projective(a, b[k]);
      // coefficients on basis elements of e_{b_k} A with target vj
      std::vector<mpq_class> coef(a->dim, mpq_class(0));
      int blk = pk.dims[vj];
      {
        int pos = 0;
        for (int e = 0; e < a->dim; ++e)
          if (a->src[e] == b[k] && a->tgt[e] == vj) {
            coef[e] = pres.d.f[vj].at(grow, col + pos);
            ++pos;
          }
      }
      col += blk;
      // left multiplication by x_{jk} in the opposite algebra:
      // P^op_{b_k} -> P^op_{a_j}
      AModule ptgt = projective(op, vj);
      Mat row(a->field, 1, ptgt.dims[b[k]]);
      {
        int pos = 0;
        for (int e = 0; e < a->dim; ++e)
          if (op->src[e] == vj && op->tgt[e] == b[k]) {
            row.at(0, pos) = coef[e];
            ++pos;
          }
      }
      ModuleMap y = yoneda_map(op, b[k], ptgt, row);
      // place the block: source summand k, target summand j
      for (int w = 0; w < a->n; ++w) {
        int ro = 0, co = 0;
        for (size_t q = 0; q < k; ++q) ro += projective(op, b[q]).dims[w];
        for (size_t q = 0; q < j; ++q) co += projective(op, av[q]).dims[w];
        for (int i = 0; i < y.source.dims[w]; ++i)
          for (int jj = 0; jj < y.target.dims[w]; ++jj)
            dstar.f[w].at(ro + i, co + jj) =
                a->field.add(dstar.f[w].at(ro + i, co + jj), y.f[w].at(i, jj));
      }
    }
  }
  return cokernel(dstar).target;
}

AModule tau(const AModule& m) { return dual(transpose(m)); }

AModule tau_inv(const AModule& m) { return transpose(dual(m)); }

std::string HomDim::str() const {
  switch (kind) {
    case Kind::Finite: return std::to_string(value);
    case Kind::Infinite: return "infinite";
    default: return "unknown";
  }
}

HomDim pd_module(const AModule& m, int cutoff) {
  if (cutoff < 0) cutoff = 4 * m.alg->dim;
  AModule cur = m;
  std::vector<AModule> seen;
  for (int d = 0;; ++d) {
    AModule k = kernel(projective_cover(cur)).source;
    if (k.is_zero()) return HomDim{HomDim::Kind::Finite, d};
    if (d + 1 > cutoff) return HomDim{HomDim::Kind::Unknown, -1};
    // a repeated syzygy in a minimal resolution certifies infinite depth
    try {
      for (const auto& s : seen)
        if (is_isomorphic(s, k)) return HomDim{HomDim::Kind::Infinite, -1};
      seen.push_back(k);
    } catch (const CannotCertify&) {
    }
    cur = k;
  }
}

HomDim id_module(const AModule& m, int cutoff) { return pd_module(dual(m), cutoff); }

HomDim gl_dim(const AlgebraPtr& a, int cutoff) {
  HomDim best{HomDim::Kind::Finite, 0};
  for (int i = 0; i < a->n; ++i) {
    HomDim d = pd_module(simple(a, i), cutoff);
    if (d.kind == HomDim::Kind::Infinite) return d;
    if (d.kind == HomDim::Kind::Unknown) best = d;
    if (best.kind == HomDim::Kind::Finite && d.kind == HomDim::Kind::Finite && d.value > best.value)
      best = d;
  }
  return best;
}

namespace {

// matrix of Hom(d, n) : Hom(P_t, n) -> Hom(P_{t+1}, n) in the Yoneda bases
Mat hom_complex_map(const AModule& n, const Resolution& res, int t) {
  const AlgebraPtr& a = n.alg;
  const auto& tv = res.verts[t];
  const auto& sv = res.verts[t + 1];
  int rows = 0, cols = 0;
  for (int v : tv) rows += n.dims[v];
  for (int v : sv) cols += n.dims[v];
  Mat out(a->field, rows, cols);
  int r = 0;
  for (size_t k = 0; k < tv.size(); ++k) {
    int vk = tv[k];
    for (int x = 0; x < n.dims[vk]; ++x) {
      Mat row(a->field, 1, n.dims[vk]);
      row.at(0, x) = 1;
      ModuleMap h = yoneda_map(a, vk, n, row);
      // extend to the whole of P_t: zero on the other summands
      ModuleMap hfull = zero_map(res.p[t], n);
      for (int w = 0; w < a->n; ++w) {
        int base = 0;
        for (size_t q = 0; q < k; ++q) base += projective(a, tv[q]).dims[w];
        for (int i = 0; i < h.source.dims[w]; ++i)
          for (int j = 0; j < n.dims[w]; ++j) hfull.f[w].at(base + i, j) = h.f[w].at(i, j);
      }
      ModuleMap c = compose(res.d[t], hfull);
      int col = 0;
      for (size_t s = 0; s < sv.size(); ++s) {
        int vs = sv[s];
        int gs = generator_index(a, sv, static_cast<int>(s));
        for (int j = 0; j < n.dims[vs]; ++j) out.at(r, col + j) = c.f[vs].at(gs, j);
        col += n.dims[vs];
      }
      ++r;
    }
  }
  return out;
}

}  // namespace

int ext_dim(const AModule& m, const AModule& n, int i) {
  if (i == 0) return hom_dim(m, n);
  Resolution res = build_resolution(m, i + 1);
  int hom_i = 0;
  for (int v : res.verts[i]) hom_i += n.dims[v];
  int rank_di = rank(hom_complex_map(n, res, i));
  int rank_prev = rank(hom_complex_map(n, res, i - 1));
  return hom_i - rank_di - rank_prev;
}

int stable_hom_dim_proj(const AModule& m, const AModule& n) {
  auto homs = hom_basis(m, n);
  if (homs.empty()) return 0;
  ModuleMap cover = projective_cover(n);
  auto lifts = hom_basis(m, cover.source);
  auto flatten = [&](const ModuleMap& h) {
    std::vector<mpq_class> v;
    for (int w = 0; w < m.alg->n; ++w)
      for (int i = 0; i < m.dims[w]; ++i)
        for (int j = 0; j < n.dims[w]; ++j) v.push_back(h.f[w].at(i, j));
    return v;
  };
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : lifts) rows.push_back(flatten(compose(g, cover)));
  size_t width = flatten(homs[0]).size();
  int r = rank(Mat::from_rows(m.alg->field, rows, static_cast<int>(width)));
  return static_cast<int>(homs.size()) - r;
}

int stable_hom_dim_inj(const AModule& m, const AModule& n) {
  return stable_hom_dim_proj(dual(n), dual(m));
}

}  // namespace taukit
