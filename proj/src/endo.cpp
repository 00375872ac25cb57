#include "taukit/endo.hpp"

#include <stdexcept>

namespace taukit {

namespace {

std::vector<mpq_class> flatten_map(const ModuleMap& h) {
  std::vector<mpq_class> v;
  for (const auto& blk : h.f)
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j) v.push_back(blk.at(i, j));
  return v;
}

Mat flatten_rows(const Field& F, const std::vector<ModuleMap>& maps, int width) {
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& m : maps) rows.push_back(flatten_map(m));
  return Mat::from_rows(F, rows, width);
}

// coordinates of f in the span of the given maps; nullopt if outside
std::optional<std::vector<mpq_class>> coords_in(const std::vector<ModuleMap>& basis, const ModuleMap& f) {
  auto fv = flatten_map(f);
  const Field& F = f.source.alg->field;
  Mat B = flatten_rows(F, basis, static_cast<int>(fv.size()));
  Mat b = Mat::from_rows(F, {fv}, static_cast<int>(fv.size()));
  auto x = solve_left_all(B, b);
  if (!x) return std::nullopt;
  std::vector<mpq_class> out;
  for (int j = 0; j < x->cols(); ++j) out.push_back(x->at(0, j));
  return out;
}

bool nilpotent_map(const ModuleMap& f) {
  long n = f.source.total_dim();
  for (const auto& blk : f.f)
    if (!blk.power(n).is_zero()) return false;
  return true;
}

mpq_class total_trace(const ModuleMap& f) {
  mpq_class t(0);
  for (const auto& blk : f.f) t += blk.trace();
  return f.source.alg->field.reduce(t);
}

// the scalar lambda with f - lambda*id nilpotent, for a split local
// endomorphism ring
mpq_class scalar_part(const ModuleMap& f, const ModuleMap& id) {
  const Field& F = f.source.alg->field;
  if (F.is_rational()) {
    mpq_class lam = total_trace(f) / f.source.total_dim();
    if (nilpotent_map(add_maps(f, scale_map(id, -lam)))) return lam;
    throw std::runtime_error("non-split local endomorphism ring");
  }
  for (long r = 0; r < F.p; ++r) {
    mpq_class lam(r);
    if (nilpotent_map(add_maps(f, scale_map(id, F.neg(lam))))) return lam;
  }
  throw std::runtime_error("non-split local endomorphism ring");
}

}  // namespace

EndoData endomorphism_algebra(const std::vector<AModule>& summands) {
  if (summands.empty()) throw std::invalid_argument("empty summand list");
  const AlgebraPtr& a = summands[0].alg;
  const Field& F = a->field;
  const int n = static_cast<int>(summands.size());
  for (const auto& s : summands)
    if (!is_indecomposable(s)) throw std::invalid_argument("summand not indecomposable");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (indec_isomorphic(summands[i], summands[j])) throw std::invalid_argument("duplicate summand");

  EndoData out;
  out.summands = summands;
  std::vector<int> src, tgt;
  std::vector<std::string> labels;
  // idempotents: the identities
  for (int i = 0; i < n; ++i) {
    out.basis_maps.push_back(identity_map(summands[i]));
    src.push_back(i);
    tgt.push_back(i);
    labels.push_back("e_" + std::to_string(i + 1));
  }
  // radical part, block by block
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<ModuleMap> block;
      if (i == j) {
        ModuleMap id = identity_map(summands[i]);
        auto ends = hom_basis(summands[i], summands[i]);
        std::vector<ModuleMap> nil;
        for (const auto& g : ends) {
          mpq_class lam = scalar_part(g, id);
          nil.push_back(add_maps(g, scale_map(id, F.neg(lam))));
        }
        // keep an independent subset in order
        std::vector<std::vector<mpq_class>> kept;
        size_t width = flatten_map(id).size();
        for (const auto& g : nil) {
          auto fv = flatten_map(g);
          auto rows = kept;
          rows.push_back(fv);
          if (rank(Mat::from_rows(F, rows, static_cast<int>(width))) > static_cast<int>(kept.size())) {
            kept.push_back(fv);
            block.push_back(g);
          }
        }
      } else {
        block = hom_basis(summands[j], summands[i]);
      }
      int k = 0;
      for (const auto& g : block) {
        out.basis_maps.push_back(g);
        src.push_back(i);
        tgt.push_back(j);
        labels.push_back("f" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" + std::to_string(k++));
      }
    }

  const int dim = static_cast<int>(out.basis_maps.size());
  BasicAlgebra b;
  b.field = F;
  b.dim = dim;
  b.n = n;
  b.basis_label = labels;
  b.src = src;
  b.tgt = tgt;
  for (int i = 0; i < n; ++i) b.vertex_label.push_back(std::to_string(i + 1));
  b.prod.assign(dim, std::vector<std::vector<mpq_class>>(dim, std::vector<mpq_class>(dim, mpq_class(0))));
  for (int u = 0; u < dim; ++u)
    for (int v = 0; v < dim; ++v) {
      if (tgt[u] != src[v]) continue;
      // u*v applies v first: summands[tgt[v]] -> summands[src[u]]
      ModuleMap c = compose(out.basis_maps[v], out.basis_maps[u]);
      std::vector<ModuleMap> block;
      std::vector<int> idx;
      for (int w = 0; w < dim; ++w)
        if (src[w] == src[u] && tgt[w] == tgt[v]) {
          block.push_back(out.basis_maps[w]);
          idx.push_back(w);
        }
      auto co = coords_in(block, c);
      if (!co) throw std::logic_error("composite escapes the hom block");
      for (size_t t = 0; t < idx.size(); ++t) b.prod[u][v][idx[t]] = (*co)[t];
    }
  Mat rad(F, dim - n, dim);
  for (int r = n; r < dim; ++r) rad.at(r - n, r) = 1;
  b.radical = rad;
  out.algebra = register_algebra(std::move(b));
  auto rep = validate(*out.algebra);
  if (!rep.ok) throw std::logic_error("endomorphism algebra failed validation: " + rep.failures.front());
  return out;
}

AModule hom_functor(const EndoData& bb, const AModule& m) {
  const AlgebraPtr& b = bb.algebra;
  const Field& F = b->field;
  AModule out;
  out.alg = b;
  std::vector<std::vector<ModuleMap>> bases;
  for (const auto& t : bb.summands) bases.push_back(hom_basis(t, m));
  for (const auto& h : bases) out.dims.push_back(static_cast<int>(h.size()));
  for (int u = 0; u < b->dim; ++u) {
    int i = b->src[u], j = b->tgt[u];
    Mat blk(F, out.dims[i], out.dims[j]);
    for (int p = 0; p < out.dims[i]; ++p) {
      // precompose with the map summands[j] -> summands[i]
      ModuleMap c = compose(bb.basis_maps[u], bases[i][p]);
      auto co = coords_in(bases[j], c);
      if (!co) throw std::logic_error("hom image escapes the basis");
      for (int q = 0; q < out.dims[j]; ++q) blk.at(p, q) = (*co)[q];
    }
    out.act.push_back(std::move(blk));
  }
  return out;
}

ModuleMap hom_functor_map(const EndoData& bb, const ModuleMap& f) {
  ModuleMap out;
  out.source = hom_functor(bb, f.source);
  out.target = hom_functor(bb, f.target);
  const Field& F = bb.algebra->field;
  for (size_t i = 0; i < bb.summands.size(); ++i) {
    auto sb = hom_basis(bb.summands[i], f.source);
    auto tb = hom_basis(bb.summands[i], f.target);
    Mat blk(F, static_cast<int>(sb.size()), static_cast<int>(tb.size()));
    for (size_t p = 0; p < sb.size(); ++p) {
      auto co = coords_in(tb, compose(sb[p], f));
      if (!co) throw std::logic_error("hom image escapes the basis");
      for (size_t q = 0; q < tb.size(); ++q) blk.at(static_cast<int>(p), static_cast<int>(q)) = (*co)[q];
    }
    out.f.push_back(std::move(blk));
  }
  return out;
}

namespace {

struct TensorData {
  AModule module;          // the quotient, over the original algebra
  std::vector<Mat> proj;   // per vertex, big space -> quotient coordinates
  std::vector<int> big_dims;
};

// offset of block (summand i, y-basis p) at vertex v inside the big space
int block_offset(const EndoData& bb, const AModule& y, int v, int i, int p) {
  int off = 0;
  for (int q = 0; q < i; ++q) off += y.dims[q] * bb.summands[q].dims[v];
  return off + p * bb.summands[i].dims[v];
}

TensorData tensor_data(const EndoData& bb, const AModule& y) {
  const AlgebraPtr& a = bb.summands[0].alg;
  const AlgebraPtr& b = bb.algebra;
  const Field& F = a->field;
  const int n = b->n;
  AModule big;
  big.alg = a;
  big.dims.assign(a->n, 0);
  for (int v = 0; v < a->n; ++v)
    for (int i = 0; i < n; ++i) big.dims[v] += y.dims[i] * bb.summands[i].dims[v];
  for (int e = 0; e < a->dim; ++e) {
    int s = a->src[e], t = a->tgt[e];
    Mat blk(F, big.dims[s], big.dims[t]);
    for (int i = 0; i < n; ++i)
      for (int p = 0; p < y.dims[i]; ++p) {
        int ro = block_offset(bb, y, s, i, p), co = block_offset(bb, y, t, i, p);
        const Mat& act = bb.summands[i].act[e];
        for (int r = 0; r < act.rows(); ++r)
          for (int c = 0; c < act.cols(); ++c) blk.at(ro + r, co + c) = act.at(r, c);
      }
    big.act.push_back(std::move(blk));
  }
  // relations (y*u) tensor t - y tensor (u*t), per original-algebra vertex
  std::vector<Mat> rel;
  for (int v = 0; v < a->n; ++v) rel.push_back(Mat(F, 0, big.dims[v]));
  for (int u = n; u < b->dim; ++u) {
    int i = b->src[u], j = b->tgt[u];
    const ModuleMap& g = bb.basis_maps[u];  // summands[j] -> summands[i]
    for (int p = 0; p < y.dims[i]; ++p)
      for (int v = 0; v < a->n; ++v)
        for (int q = 0; q < bb.summands[j].dims[v]; ++q) {
          Mat row(F, 1, big.dims[v]);
          for (int pp = 0; pp < y.dims[j]; ++pp) {
            const mpq_class& c = y.act[u].at(p, pp);
            if (c != 0) {
              int off = block_offset(bb, y, v, j, pp);
              row.at(0, off + q) = F.add(row.at(0, off + q), c);
            }
          }
          {
            int off = block_offset(bb, y, v, i, p);
            for (int c = 0; c < bb.summands[i].dims[v]; ++c)
              row.at(0, off + c) = F.sub(row.at(0, off + c), g.f[v].at(q, c));
          }
          rel[v] = Mat::vstack(rel[v], row);
        }
  }
  auto sq = quotient_module(big, rel);
  TensorData out;
  out.module = sq.map.target;
  out.proj = sq.map.f;
  for (int v = 0; v < a->n; ++v) out.big_dims.push_back(big.dims[v]);
  return out;
}

}  // namespace

AModule tensor_functor(const EndoData& bb, const AModule& y) { return tensor_data(bb, y).module; }

ModuleMap tensor_functor_map(const EndoData& bb, const ModuleMap& f) {
  const AlgebraPtr& a = bb.summands[0].alg;
  const Field& F = a->field;
  TensorData sd = tensor_data(bb, f.source), td = tensor_data(bb, f.target);
  ModuleMap out;
  out.source = sd.module;
  out.target = td.module;
  const int n = bb.algebra->n;
  for (int v = 0; v < a->n; ++v) {
    Mat wf(F, sd.big_dims[v], td.big_dims[v]);
    for (int i = 0; i < n; ++i)
      for (int p = 0; p < f.source.dims[i]; ++p)
        for (int pp = 0; pp < f.target.dims[i]; ++pp) {
          const mpq_class& c = f.f[i].at(p, pp);
          if (c == 0) continue;
          int ro = block_offset(bb, f.source, v, i, p), co = block_offset(bb, f.target, v, i, pp);
          for (int t = 0; t < bb.summands[i].dims[v]; ++t)
            wf.at(ro + t, co + t) = F.add(wf.at(ro + t, co + t), c);
        }
    auto sect = solve_left_all(sd.proj[v], Mat::identity(F, sd.module.dims[v]));
    if (!sect) throw std::logic_error("tensor projection is not surjective");
    out.f.push_back(*sect * wf * td.proj[v]);
  }
  return out;
}

AModule tor1_functor(const EndoData& bb, const AModule& y) {
  // from 0 -> K -> Q0 -> y -> 0 with Q0 projective over B:
  // Tor_1(y, T) = ker(K tensor T -> Q0 tensor T)
  ModuleMap cover = projective_cover(y);
  ModuleMap incl = kernel(cover);
  return kernel(tensor_functor_map(bb, incl)).source;
}

AModule ext1_functor(const EndoData& bb, const AModule& m) {
  const AlgebraPtr& b = bb.algebra;
  const Field& F = b->field;
  const int n = b->n;
  std::vector<ModuleMap> covers, omegas;  // per summand: P0 -> T_i, Omega T_i -> P0
  std::vector<std::vector<ModuleMap>> hom_omega;  // Hom(Omega T_i, m)
  std::vector<RrefResult> restr;                  // coords of restricted maps
  std::vector<std::vector<int>> free_cols;
  for (int i = 0; i < n; ++i) {
    covers.push_back(projective_cover(bb.summands[i]));
    omegas.push_back(kernel(covers[i]));
    hom_omega.push_back(hom_basis(omegas[i].source, m));
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& h : hom_basis(covers[i].source, m)) {
      auto co = coords_in(hom_omega[i], compose(omegas[i], h));
      if (!co) throw std::logic_error("restriction escapes the basis");
      rows.push_back(*co);
    }
    restr.push_back(rref(Mat::from_rows(F, rows, static_cast<int>(hom_omega[i].size()))));
    std::vector<bool> piv(hom_omega[i].size(), false);
    for (int p : restr[i].pivots) piv[p] = true;
    std::vector<int> fc;
    for (size_t c = 0; c < hom_omega[i].size(); ++c)
      if (!piv[c]) fc.push_back(static_cast<int>(c));
    free_cols.push_back(fc);
  }
  AModule out;
  out.alg = b;
  for (int i = 0; i < n; ++i) out.dims.push_back(static_cast<int>(free_cols[i].size()));
  // lifted maps: for u: T_j -> T_i, a lift on covers and its restriction
  for (int u = 0; u < b->dim; ++u) {
    int i = b->src[u], j = b->tgt[u];
    Mat blk(F, out.dims[i], out.dims[j]);
    if (out.dims[i] > 0 && out.dims[j] > 0) {
      // solve ghat * cover_i = cover_j * g for ghat : P0_j -> P0_i
      auto lift_basis = hom_basis(covers[j].source, covers[i].source);
      auto target_basis = hom_basis(covers[j].source, bb.summands[i]);
      std::vector<std::vector<mpq_class>> lrows;
      for (const auto& l : lift_basis) {
        auto co = coords_in(target_basis, compose(l, covers[i]));
        if (!co) throw std::logic_error("lift escapes the basis");
        lrows.push_back(*co);
      }
      Mat L = Mat::from_rows(F, lrows, static_cast<int>(target_basis.size()));
      auto rhs = coords_in(target_basis, compose(covers[j], bb.basis_maps[u]));
      if (!rhs) throw std::logic_error("lift escapes the basis");
      auto x = solve_left_all(L, Mat::from_rows(F, {*rhs}, static_cast<int>(target_basis.size())));
      if (!x) throw std::logic_error("no lift through the cover");
      ModuleMap ghat = zero_map(covers[j].source, covers[i].source);
      for (int t = 0; t < x->cols(); ++t)
        if (x->at(0, t) != 0) ghat = add_maps(ghat, scale_map(lift_basis[t], x->at(0, t)));
      // induced map on syzygies
      ModuleMap rhs2 = compose(omegas[j], ghat);
      ModuleMap og;
      og.source = omegas[j].source;
      og.target = omegas[i].source;
      for (int v = 0; v < og.source.alg->n; ++v) {
        auto s = solve_left_all(omegas[i].f[v], rhs2.f[v]);
        if (!s) throw std::logic_error("syzygy map does not restrict");
        og.f.push_back(*s);
      }
      for (int p = 0; p < out.dims[i]; ++p) {
        ModuleMap c = compose(og, hom_omega[i][free_cols[i][p]]);
        auto co = coords_in(hom_omega[j], c);
        if (!co) throw std::logic_error("action escapes the basis");
        Mat crow = Mat::from_rows(F, {*co}, static_cast<int>(hom_omega[j].size()));
        Mat red = reduce_row_mod(restr[j], crow);
        for (int q = 0; q < out.dims[j]; ++q) blk.at(p, q) = red.at(0, free_cols[j][q]);
      }
    }
    out.act.push_back(std::move(blk));
  }
  check_module(out);
  return out;
}

}  // namespace taukit
