#include "taukit/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace taukit {

namespace {

using Vec = std::vector<mpq_class>;

bool vec_zero(const Vec& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

Vec scale_vec(const Field& F, const Vec& v, const mpq_class& c) {
  Vec out = v;
  for (auto& x : out) x = F.mul(x, c);
  return out;
}

Mat rows_to_mat(const Field& F, const std::vector<Vec>& rows, int width) {
  return Mat::from_rows(F, rows, width);
}

// c with v1 = c * v2, when the two vectors are proportional and nonzero
std::optional<mpq_class> proportionality(const Field& F, const Vec& v1, const Vec& v2) {
  mpq_class c(0);
  bool have = false;
  for (size_t k = 0; k < v1.size(); ++k) {
    if (v2[k] == 0) {
      if (v1[k] != 0) return std::nullopt;
      continue;
    }
    mpq_class r = F.div(v1[k], v2[k]);
    if (!have) {
      c = r;
      have = true;
    } else if (r != c) {
      return std::nullopt;
    }
  }
  if (!have || c == 0) return std::nullopt;
  return c;
}

// greedy subset of block radical rows independent modulo the radical square
std::vector<Vec> block_generators(const AlgebraPtr& a, const RrefResult& rad2, int s, int t) {
  std::vector<Vec> kept;
  std::vector<Vec> span_rows;
  for (int r = 0; r < rad2.reduced.rows(); ++r) {
    if (r >= rad2.rank) break;
    span_rows.push_back(rad2.reduced.row_vec(r));
  }
  for (int r = 0; r < a->radical.rows(); ++r) {
    Vec row = a->radical.row_vec(r);
    bool in_block = !vec_zero(row);
    for (int k = 0; k < a->dim && in_block; ++k)
      if (row[k] != 0 && (a->src[k] != s || a->tgt[k] != t)) in_block = false;
    if (!in_block) continue;
    auto probe = span_rows;
    probe.push_back(row);
    if (rank(rows_to_mat(a->field, probe, a->dim)) > static_cast<int>(span_rows.size())) {
      span_rows.push_back(row);
      kept.push_back(row);
    }
  }
  return kept;
}

struct ScalarSystem {
  // prod_k x_k^{d_k} = r, per constraint
  std::vector<std::vector<int>> d;
  std::vector<mpq_class> r;
};

// assign nonzero scalars satisfying the multiplicative system; one pass of
// unit-exponent elimination is enough for the presentations handled here
std::optional<std::vector<mpq_class>> solve_scalars(const Field& F, int nvars, ScalarSystem sys) {
  std::vector<mpq_class> lam(nvars, mpq_class(1));
  std::vector<bool> locked(nvars, false);
  std::vector<bool> done(sys.d.size(), false);
  for (size_t pass = 0; pass <= sys.d.size(); ++pass) {
    bool progress = false;
    for (size_t c = 0; c < sys.d.size(); ++c) {
      if (done[c]) continue;
      mpq_class v(1);
      for (int k = 0; k < nvars; ++k)
        for (int e = 0; e < std::abs(sys.d[c][k]); ++e)
          v = sys.d[c][k] > 0 ? F.mul(v, lam[k]) : F.div(v, lam[k]);
      if (v == sys.r[c]) {
        done[c] = true;
        progress = true;
        continue;
      }
      int pick = -1;
      for (int k = 0; k < nvars; ++k)
        if (std::abs(sys.d[c][k]) == 1 && !locked[k]) pick = k;
      if (pick < 0) continue;
      mpq_class adj = F.div(sys.r[c], v);
      lam[pick] = sys.d[c][pick] > 0 ? F.mul(lam[pick], adj) : F.div(lam[pick], adj);
      for (int k = 0; k < nvars; ++k)
        if (sys.d[c][k] != 0) locked[k] = true;
      done[c] = true;
      progress = true;
    }
    if (!progress) break;
  }
  for (bool f : done)
    if (!f) return std::nullopt;
  return lam;
}

std::optional<AlgebraIso> find_iso(const AlgebraPtr& b, const AlgebraPtr& a) {
  if (!b->provenance) return std::nullopt;
  if (a->dim != b->dim || a->n != b->n || a->field != b->field) return std::nullopt;
  const QuiverPresentation& qp = *b->provenance;
  const Field& F = a->field;
  const int n = a->n;
  if (n > 8) throw std::invalid_argument("vertex permutation sweep capped at 8 vertices");

  // radical square of a
  std::vector<Vec> rad2_rows;
  for (int i = 0; i < a->radical.rows(); ++i)
    for (int j = 0; j < a->radical.rows(); ++j) {
      Vec pr = a->multiply(a->radical.row_vec(i), a->radical.row_vec(j));
      if (!vec_zero(pr)) rad2_rows.push_back(pr);
    }
  RrefResult rad2 = rref(rows_to_mat(F, rad2_rows, a->dim));

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool blocks_ok = true;
    for (int s = 0; s < n && blocks_ok; ++s)
      for (int t = 0; t < n && blocks_ok; ++t)
        if (b->hom_dim(s, t) != a->hom_dim(perm[s], perm[t])) blocks_ok = false;
    if (!blocks_ok) continue;

    // group b-arrows by block and pick generator candidates in a
    const int na = static_cast<int>(qp.arrows.size());
    std::vector<std::vector<int>> block_arrows;  // parallel with gens
    std::vector<std::vector<Vec>> gens;
    bool shape_ok = true;
    for (int s = 0; s < n && shape_ok; ++s)
      for (int t = 0; t < n && shape_ok; ++t) {
        std::vector<int> here;
        for (int k = 0; k < na; ++k)
          if (qp.arrows[k].src == s && qp.arrows[k].tgt == t) here.push_back(k);
        auto g = block_generators(a, rad2, perm[s], perm[t]);
        if (g.size() != here.size()) shape_ok = false;
        if (here.empty()) continue;
        block_arrows.push_back(here);
        gens.push_back(std::move(g));
      }
    if (!shape_ok) continue;

    // sweep per-block bijections between arrows and generators
    std::vector<std::vector<int>> assigns;  // per block, permutation index list
    for (auto& blk : block_arrows) {
      if (blk.size() > 3) throw std::invalid_argument("arrow block too large for bijection sweep");
      std::vector<int> id(blk.size());
      std::iota(id.begin(), id.end(), 0);
      assigns.push_back(id);
    }
    while (true) {
      std::vector<Vec> image(na);
      for (size_t bl = 0; bl < block_arrows.size(); ++bl)
        for (size_t q = 0; q < block_arrows[bl].size(); ++q)
          image[block_arrows[bl][q]] = gens[bl][assigns[bl][q]];

      // scaling constraints from the relations
      ScalarSystem sys;
      bool feasible = true;
      for (const auto& rel : qp.relations) {
        struct Term {
          mpq_class c;
          Vec w;
          std::vector<int> e;
        };
        std::vector<Term> live;
        for (const auto& term : rel.terms) {
          Vec w;
          std::vector<int> e(na, 0);
          for (size_t pos = 0; pos < term.arrows.size(); ++pos) {
            int k = term.arrows[pos];
            ++e[k];
            w = pos == 0 ? image[k] : a->multiply(w, image[k]);
          }
          if (!vec_zero(w)) live.push_back({F.reduce(mpq_class(term.coef)), std::move(w), std::move(e)});
        }
        if (live.empty()) continue;
        if (live.size() == 1 || live.size() > 2) {
          feasible = false;
          break;
        }
        auto mu = proportionality(F, live[0].w, live[1].w);
        if (!mu) {
          feasible = false;
          break;
        }
        // c0 L0 mu + c1 L1 = 0  =>  L0 / L1 = -c1 / (c0 mu)
        std::vector<int> d(na, 0);
        for (int k = 0; k < na; ++k) d[k] = live[0].e[k] - live[1].e[k];
        sys.d.push_back(std::move(d));
        sys.r.push_back(F.div(F.neg(live[1].c), F.mul(live[0].c, *mu)));
      }
      std::optional<std::vector<mpq_class>> lam;
      if (feasible) lam = solve_scalars(F, na, sys);
      if (lam) {
        // assemble the coefficient matrix over b's path basis
        Mat C(F, b->dim, a->dim);
        bool built = true;
        for (int j = 0; j < b->dim && built; ++j) {
          Vec row(a->dim, mpq_class(0));
          if (j < n) {
            row[perm[j]] = 1;
          } else {
            const std::string& label = b->basis_label[j];
            Vec acc;
            size_t pos = 0;
            bool first = true;
            while (pos <= label.size()) {
              size_t star = label.find('*', pos);
              std::string name =
                  label.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
              int k = qp.arrow_index(name);
              if (k < 0) {
                built = false;
                break;
              }
              Vec arrow_img = scale_vec(F, image[k], (*lam)[k]);
              acc = first ? arrow_img : a->multiply(acc, arrow_img);
              first = false;
              if (star == std::string::npos) break;
              pos = star + 1;
            }
            if (built) row = acc;
          }
          for (int k = 0; k < a->dim; ++k) C.at(j, k) = row[k];
        }
        if (built && inverse(C)) {
          // full multiplication table check
          bool hom = true;
          for (int i = 0; i < b->dim && hom; ++i)
            for (int j = 0; j < b->dim && hom; ++j) {
              Vec lhs = a->multiply(C.row_vec(i), C.row_vec(j));
              Vec rhs(a->dim, mpq_class(0));
              for (int k = 0; k < b->dim; ++k) {
                const mpq_class& c = b->prod[i][j][k];
                if (c == 0) continue;
                for (int q = 0; q < a->dim; ++q) rhs[q] = F.add(rhs[q], F.mul(c, C.at(k, q)));
              }
              if (lhs != rhs) hom = false;
            }
          if (hom) {
            AlgebraIso iso;
            iso.from = b;
            iso.to = a;
            iso.vertex_map = perm;
            iso.coeff = C;
            return iso;
          }
        }
      }
      // advance the per-block bijection odometer
      size_t bl = 0;
      for (; bl < assigns.size(); ++bl) {
        if (std::next_permutation(assigns[bl].begin(), assigns[bl].end())) break;
        // wrapped around to identity; carry to the next block
      }
      if (bl == assigns.size()) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// does the coefficient matrix C (rows: b-basis images in a-coordinates)
// intertwine the two multiplication tables?
bool tables_match(const AlgebraPtr& b, const AlgebraPtr& a, const Mat& C) {
  const Field& F = a->field;
  for (int i = 0; i < b->dim; ++i)
    for (int j = 0; j < b->dim; ++j) {
      Vec lhs = a->multiply(C.row_vec(i), C.row_vec(j));
      Vec rhs(a->dim, mpq_class(0));
      for (int k = 0; k < b->dim; ++k) {
        const mpq_class& c = b->prod[i][j][k];
        if (c == 0) continue;
        for (int q = 0; q < a->dim; ++q) rhs[q] = F.add(rhs[q], F.mul(c, C.at(k, q)));
      }
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace

std::optional<QuiverPresentation> recover_presentation(const AlgebraPtr& a) {
  if (a->provenance) return a->provenance;
  const Field& F = a->field;
  const int n = a->n;

  std::vector<Vec> rad2_rows;
  for (int i = 0; i < a->radical.rows(); ++i)
    for (int j = 0; j < a->radical.rows(); ++j) {
      Vec pr = a->multiply(a->radical.row_vec(i), a->radical.row_vec(j));
      if (!vec_zero(pr)) rad2_rows.push_back(pr);
    }
  RrefResult rad2 = rref(rows_to_mat(F, rad2_rows, a->dim));

  QuiverPresentation qp;
  qp.field = F;
  qp.vertices = a->vertex_label;
  std::vector<Vec> arrow_img;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (auto& g : block_generators(a, rad2, s, t)) {
        qp.arrows.push_back({"x" + std::to_string(qp.arrows.size() + 1), s, t});
        arrow_img.push_back(g);
      }
  const int na = static_cast<int>(qp.arrows.size());

  // nilpotency index of the radical bounds the surviving path lengths
  int bound = 1;
  {
    std::vector<Vec> cur;
    for (int i = 0; i < a->radical.rows(); ++i) cur.push_back(a->radical.row_vec(i));
    while (!cur.empty()) {
      ++bound;
      std::vector<Vec> next;
      for (const auto& x : cur)
        for (int i = 0; i < a->radical.rows(); ++i) {
          Vec pr = a->multiply(x, a->radical.row_vec(i));
          if (!vec_zero(pr)) next.push_back(pr);
        }
      Mat basis = row_space_basis(rows_to_mat(F, next, a->dim));
      cur.clear();
      for (int i = 0; i < basis.rows(); ++i) cur.push_back(basis.row_vec(i));
      if (bound > a->dim + 1) return std::nullopt;
    }
  }
  if (bound < 2) bound = 2;
  qp.path_length_bound = bound;

  // all composable arrow words up to the bound, with their images
  struct Word {
    int src, tgt;
    std::vector<int> arrows;
    Vec img;
  };
  std::vector<Word> words;
  for (int v = 0; v < n; ++v) {
    Vec e(a->dim, mpq_class(0));
    e[a->idem(v)] = 1;
    words.push_back({v, v, {}, std::move(e)});
  }
  size_t lo = 0, hi = words.size();
  for (int len = 1; len <= bound; ++len) {
    for (size_t w = lo; w < hi; ++w)
      for (int k = 0; k < na; ++k) {
        if (qp.arrows[k].src != words[w].tgt) continue;
        Word ext{words[w].src, qp.arrows[k].tgt, words[w].arrows, a->multiply(words[w].img, arrow_img[k])};
        ext.arrows.push_back(k);
        words.push_back(std::move(ext));
        if (words.size() > 20000) return std::nullopt;
      }
    lo = hi;
    hi = words.size();
  }

  // per (s,t) block: kernel of evaluation on the words of length >= 2
  struct Block {
    std::vector<size_t> word_ids;
    std::vector<Vec> kernel;
  };
  std::vector<Block> blocks(static_cast<size_t>(n) * n);
  for (size_t w = 0; w < words.size(); ++w)
    if (words[w].arrows.size() >= 2) blocks[words[w].src * n + words[w].tgt].word_ids.push_back(w);
  for (auto& blk : blocks) {
    if (blk.word_ids.empty()) continue;
    std::vector<Vec> rows;
    for (size_t w : blk.word_ids) rows.push_back(words[w].img);
    Mat K = left_kernel_basis(rows_to_mat(F, rows, a->dim));
    for (int i = 0; i < K.rows(); ++i) blk.kernel.push_back(K.row_vec(i));
  }

  // greedy relation selection: keep only kernel vectors outside the ideal
  // generated by the relations already chosen
  struct Chosen {
    int src, tgt;
    std::vector<std::pair<mpq_class, std::vector<int>>> terms;
  };
  std::vector<Chosen> chosen;
  auto word_pos = [&](const Block& blk, const std::vector<int>& arrows_seq) -> int {
    for (size_t i = 0; i < blk.word_ids.size(); ++i)
      if (words[blk.word_ids[i]].arrows == arrows_seq) return static_cast<int>(i);
    return -1;
  };
  while (true) {
    // ideal span of the chosen relations, per block, in word coordinates
    std::vector<RrefResult> span(blocks.size());
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
      const Block& blk = blocks[bi];
      if (blk.kernel.empty()) continue;
      std::vector<Vec> gen;
      for (const auto& rel : chosen)
        for (const auto& p : words) {
          if (p.tgt != rel.src) continue;
          for (const auto& q : words) {
            if (q.src != rel.tgt) continue;
            if (static_cast<size_t>(p.src * n + q.tgt) != bi) continue;
            Vec v(blk.word_ids.size(), mpq_class(0));
            bool ok = true;
            for (const auto& [c, wr] : rel.terms) {
              if (p.arrows.size() + wr.size() + q.arrows.size() > static_cast<size_t>(bound)) {
                ok = false;
                break;
              }
              std::vector<int> full = p.arrows;
              full.insert(full.end(), wr.begin(), wr.end());
              full.insert(full.end(), q.arrows.begin(), q.arrows.end());
              int pos = word_pos(blk, full);
              if (pos < 0) {
                ok = false;
                break;
              }
              v[pos] = F.add(v[pos], c);
            }
            if (ok && !vec_zero(v)) gen.push_back(std::move(v));
          }
        }
      span[bi] = rref(rows_to_mat(F, gen, static_cast<int>(blk.word_ids.size())));
    }
    // best residue: smallest (max term length, term count)
    int best_bi = -1;
    Vec best_res;
    std::pair<size_t, size_t> best_score{0, 0};
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
      const Block& blk = blocks[bi];
      for (const auto& kv : blk.kernel) {
        Mat row = rows_to_mat(F, {kv}, static_cast<int>(blk.word_ids.size()));
        Vec res = reduce_row_mod(span[bi], row.row(0)).row_vec(0);
        if (vec_zero(res)) continue;
        size_t maxlen = 0, support = 0;
        for (size_t i = 0; i < res.size(); ++i)
          if (res[i] != 0) {
            ++support;
            maxlen = std::max(maxlen, words[blk.word_ids[i]].arrows.size());
          }
        std::pair<size_t, size_t> score{maxlen, support};
        if (best_bi < 0 || score < best_score) {
          best_bi = static_cast<int>(bi);
          best_res = res;
          best_score = score;
        }
      }
    }
    if (best_bi < 0) break;
    Chosen rel;
    rel.src = static_cast<int>(best_bi) / n;
    rel.tgt = static_cast<int>(best_bi) % n;
    for (size_t i = 0; i < best_res.size(); ++i)
      if (best_res[i] != 0) rel.terms.push_back({best_res[i], words[blocks[best_bi].word_ids[i]].arrows});
    chosen.push_back(std::move(rel));
    if (chosen.size() > 200) return std::nullopt;
  }

  for (const auto& rel : chosen) {
    if (!F.is_rational()) {
      // prime field residues are already integral
      Relation out;
      for (const auto& [c, wr] : rel.terms) out.terms.push_back({c, wr});
      qp.relations.push_back(std::move(out));
      continue;
    }
    // scale to integer coefficients with positive leading term
    mpz_class den(1), num(0);
    for (const auto& [c, wr] : rel.terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpq_class> scaled;
    for (const auto& [c, wr] : rel.terms) {
      mpq_class v = c * den;
      v.canonicalize();
      scaled.push_back(v);
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_num().get_mpz_t());
    }
    Relation out;
    for (size_t i = 0; i < rel.terms.size(); ++i) {
      mpq_class v = scaled[i] / num;
      v.canonicalize();
      if (scaled[0] < 0) v = -v;
      out.terms.push_back({v, rel.terms[i].second});
    }
    qp.relations.push_back(std::move(out));
  }

  try {
    qp.check();
    AlgebraPtr built = build_algebra(qp);
    if (built->dim != a->dim) return std::nullopt;
    Mat C(F, built->dim, a->dim);
    for (int j = 0; j < built->dim; ++j) {
      Vec row(a->dim, mpq_class(0));
      if (j < n) {
        row[a->idem(j)] = 1;
      } else {
        const std::string& label = built->basis_label[j];
        Vec acc;
        size_t pos = 0;
        bool first = true;
        while (pos <= label.size()) {
          size_t star = label.find('*', pos);
          std::string name = label.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
          int k = qp.arrow_index(name);
          if (k < 0) return std::nullopt;
          acc = first ? arrow_img[k] : a->multiply(acc, arrow_img[k]);
          first = false;
          if (star == std::string::npos) break;
          pos = star + 1;
        }
        row = acc;
      }
      for (int k = 0; k < a->dim; ++k) C.at(j, k) = row[k];
    }
    if (!inverse(C) || !tables_match(built, a, C)) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return qp;
}

std::optional<AlgebraIso> algebras_isomorphic(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (b->provenance) {
    if (auto iso = find_iso(b, a)) return iso;
  }
  if (a->provenance) {
    if (auto iso = find_iso(a, b)) {
      // invert to keep the documented direction: from b onto a
      auto inv = inverse(iso->coeff);
      if (!inv) return std::nullopt;
      AlgebraIso out;
      out.from = b;
      out.to = a;
      out.vertex_map.assign(a->n, 0);
      for (int v = 0; v < a->n; ++v) out.vertex_map[iso->vertex_map[v]] = v;
      out.coeff = *inv;
      return out;
    }
  }
  return std::nullopt;
}

AModule transport_module(const AlgebraIso& iso, const AModule& m) {
  if (m.alg.get() != iso.to.get()) throw std::invalid_argument("module is not over the target algebra");
  const AlgebraPtr& b = iso.from;
  AModule out;
  out.alg = b;
  for (int v = 0; v < b->n; ++v) out.dims.push_back(m.dims[iso.vertex_map[v]]);
  for (int j = 0; j < b->dim; ++j) {
    int s = iso.vertex_map[b->src[j]], t = iso.vertex_map[b->tgt[j]];
    Mat total = m.total_matrix_of(iso.coeff.row_vec(j));
    Mat blk(b->field, m.dims[s], m.dims[t]);
    int ro = m.offset(s), co = m.offset(t);
    for (int i = 0; i < blk.rows(); ++i)
      for (int k = 0; k < blk.cols(); ++k) blk.at(i, k) = total.at(ro + i, co + k);
    out.act.push_back(std::move(blk));
  }
  check_module(out);
  return out;
}

}  // namespace taukit
