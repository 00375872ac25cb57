#include "taukit/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace taukit {

namespace {

// row-major residue matrix; the search loop stays in machine integers and
// exact matrices are built only for relation-satisfying candidates
struct SmallMat {
  int rows = 0, cols = 0;
  std::vector<long> a;
  long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

SmallMat small_mul(const SmallMat& x, const SmallMat& y, long p) {
  SmallMat z{x.rows, y.cols, std::vector<long>(static_cast<size_t>(x.rows) * y.cols, 0)};
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      long v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) = (z.at(i, j) + v * y.at(k, j)) % p;
    }
  return z;
}

// relation evaluated on a prefix of fixed arrow matrices; all terms parallel
bool relation_holds(const QuiverPresentation& qp, const Relation& rel, const std::vector<int>& dims,
                    const std::vector<SmallMat>& arrow_acts, long p) {
  int s = qp.arrows[rel.terms[0].arrows.front()].src;
  int t = qp.arrows[rel.terms[0].arrows.back()].tgt;
  SmallMat acc{dims[s], dims[t], std::vector<long>(static_cast<size_t>(dims[s]) * dims[t], 0)};
  for (const auto& term : rel.terms) {
    long c = mpz_class(mpq_class(term.coef).get_num() % p).get_si();
    c = ((c % p) + p) % p;
    SmallMat w{dims[s], dims[s], {}};
    w.a.assign(static_cast<size_t>(dims[s]) * dims[s], 0);
    for (int i = 0; i < dims[s]; ++i) w.at(i, i) = 1;
    for (int k : term.arrows) w = small_mul(w, arrow_acts[k], p);
    for (size_t i = 0; i < acc.a.size(); ++i) acc.a[i] = (acc.a[i] + c * w.a[i]) % p;
  }
  for (long v : acc.a)
    if (v != 0) return false;
  return true;
}

long small_rank(SmallMat m, long p) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    long inv = 1;  // modular inverse by Fermat
    for (long e = p - 2, b = m.at(r, c); e; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv % p;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      long f = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = ((m.at(i, j) - f * m.at(r, j)) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// nullspace basis of a homogeneous system, one solution vector per row
std::vector<std::vector<long>> small_nullspace(std::vector<std::vector<long>> rows, int nvars, long p) {
  int r = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < nvars && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    long inv = 1;
    for (long e = p - 2, b = rows[r][c]; e; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (int j = 0; j < nvars; ++j) rows[r][j] = rows[r][j] * inv % p;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      long f = rows[i][c];
      for (int j = 0; j < nvars; ++j) rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(nvars, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<long>> basis;
  for (int c = 0; c < nvars; ++c) {
    if (is_pivot[c]) continue;
    std::vector<long> v(nvars, 0);
    v[c] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = (p - rows[i][c]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// homomorphisms x -> y as per-vertex blocks, from the arrow intertwining system
std::vector<std::vector<SmallMat>> small_hom(const QuiverPresentation& qp,
                                             const std::vector<int>& dx, const std::vector<int>& dy,
                                             const std::vector<SmallMat>& ax,
                                             const std::vector<SmallMat>& ay, long p) {
  int n = static_cast<int>(dx.size());
  std::vector<int> off(n + 1, 0);
  for (int v = 0; v < n; ++v) off[v + 1] = off[v] + dx[v] * dy[v];
  int nvars = off[n];
  std::vector<std::vector<long>> rows;
  for (size_t k = 0; k < qp.arrows.size(); ++k) {
    int s = qp.arrows[k].src, t = qp.arrows[k].tgt;
    // act_x(k) f_t = f_s act_y(k), entrywise over (i, j) in dx[s] x dy[t]
    for (int i = 0; i < dx[s]; ++i)
      for (int j = 0; j < dy[t]; ++j) {
        std::vector<long> row(nvars, 0);
        for (int m = 0; m < dx[t]; ++m)
          row[off[t] + m * dy[t] + j] = (row[off[t] + m * dy[t] + j] + ax[k].at(i, m)) % p;
        for (int m = 0; m < dy[s]; ++m)
          row[off[s] + i * dy[s] + m] = ((row[off[s] + i * dy[s] + m] - ay[k].at(m, j)) % p + p) % p;
        rows.push_back(std::move(row));
      }
  }
  std::vector<std::vector<SmallMat>> basis;
  for (const auto& sol : small_nullspace(rows, nvars, p)) {
    std::vector<SmallMat> f;
    for (int v = 0; v < n; ++v) {
      SmallMat b{dx[v], dy[v], std::vector<long>(static_cast<size_t>(dx[v]) * dy[v], 0)};
      for (size_t c = 0; c < b.a.size(); ++c) b.a[c] = sol[off[v] + c];
      f.push_back(std::move(b));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

// stable Fitting rank of an endomorphism; a value strictly between 0 and the
// total dimension certifies a direct-sum splitting
long fitting_rank(const std::vector<SmallMat>& f, long total, long p) {
  long r = 0;
  for (const auto& blk : f) {
    SmallMat x = blk;
    for (long i = 1; i < total; ++i) x = small_mul(x, blk, p);
    r += small_rank(x, p);
  }
  return r;
}

// exhaustive invertible-combination search; complete for small hom spaces
enum class SmallIso { Yes, No, TooBig };
SmallIso small_iso(const std::vector<std::vector<SmallMat>>& homs, const std::vector<int>& d, long p) {
  if (homs.empty()) return SmallIso::No;
  int h = static_cast<int>(homs.size());
  double combos = std::pow(static_cast<double>(p), h);
  if (combos > (1 << 18)) return SmallIso::TooBig;
  int n = static_cast<int>(d.size());
  std::vector<long> coef(h, 0);
  while (true) {
    int c = 0;
    for (; c < h; ++c) {
      if (++coef[c] < p) break;
      coef[c] = 0;
    }
    if (c == h) return SmallIso::No;
    bool inv = true;
    for (int v = 0; v < n && inv; ++v) {
      SmallMat sum{d[v], d[v], std::vector<long>(static_cast<size_t>(d[v]) * d[v], 0)};
      for (int k = 0; k < h; ++k) {
        if (coef[k] == 0) continue;
        for (size_t i = 0; i < sum.a.size(); ++i)
          sum.a[i] = (sum.a[i] + coef[k] * homs[k][v].a[i]) % p;
      }
      if (small_rank(sum, p) != d[v]) inv = false;
    }
    if (inv) return SmallIso::Yes;
  }
}

struct Search {
  const AlgebraPtr& a;
  const QuiverPresentation& qp;
  const std::vector<int>& dims;
  long p;
  // relations fully supported on arrows 0..k, checked as soon as k is fixed
  std::vector<std::vector<const Relation*>> due;
  std::vector<SmallMat> acts;
  std::vector<AModule>* out;
  std::vector<std::vector<SmallMat>> reps;  // small copies of this dim vector's catalog entries

  void leaf() {
    long total = 0;
    for (int d : dims) total += d;
    // reject decomposables exposed by a middle Fitting rank; sums of basis
    // pairs widen the net cheaply, exact decompose certifies the remainder
    auto endos = small_hom(qp, dims, dims, acts, acts, p);
    for (size_t i = 0; i < endos.size(); ++i) {
      long r = fitting_rank(endos[i], total, p);
      if (r > 0 && r < total) return;
      for (size_t j = i + 1; j < endos.size(); ++j) {
        std::vector<SmallMat> sum = endos[i];
        for (size_t v = 0; v < sum.size(); ++v)
          for (size_t c = 0; c < sum[v].a.size(); ++c)
            sum[v].a[c] = (sum[v].a[c] + endos[j][v].a[c]) % p;
        r = fitting_rank(sum, total, p);
        if (r > 0 && r < total) return;
      }
    }
    bool dedup_exact = false;
    for (const auto& rep : reps) {
      SmallIso verdict = small_iso(small_hom(qp, dims, dims, rep, acts, p), dims, p);
      if (verdict == SmallIso::Yes) return;
      if (verdict == SmallIso::TooBig) dedup_exact = true;
    }
    std::vector<Mat> exact;
    for (const auto& sm : acts) {
      Mat m(a->field, sm.rows, sm.cols);
      for (int i = 0; i < sm.rows; ++i)
        for (int j = 0; j < sm.cols; ++j) m.at(i, j) = sm.at(i, j);
      exact.push_back(std::move(m));
    }
    AModule m = module_from_arrow_actions(a, dims, exact);
    if (decompose(m).size() != 1) return;
    if (dedup_exact)
      for (const auto& seen : *out)
        if (seen.dims == m.dims && is_isomorphic(seen, m)) return;
    reps.push_back(acts);
    out->push_back(std::move(m));
  }

  void run(size_t k) {
    if (k == qp.arrows.size()) {
      leaf();
      return;
    }
    SmallMat& mat = acts[k];
    int cells = mat.rows * mat.cols;
    std::fill(mat.a.begin(), mat.a.end(), 0);
    while (true) {
      bool ok = true;
      for (const Relation* rel : due[k])
        if (!relation_holds(qp, *rel, dims, acts, p)) ok = false;
      if (ok) run(k + 1);
      int c = 0;
      for (; c < cells; ++c) {
        if (++mat.a[c] < p) break;
        mat.a[c] = 0;
      }
      if (c == cells) break;
    }
  }
};

std::vector<int> effective_caps(const AlgebraPtr& a, const EnumerationBound& bound) {
  if (!bound.caps.empty()) {
    if (static_cast<int>(bound.caps.size()) != a->n)
      throw std::invalid_argument("one cap per vertex required");
    for (int c : bound.caps)
      if (c < 0) throw std::invalid_argument("caps must be nonnegative");
    return bound.caps;
  }
  return regular_module(a).dims;
}

bool catalog_less(const AModule& x, const AModule& y) {
  if (x.total_dim() != y.total_dim()) return x.total_dim() < y.total_dim();
  if (x.dims != y.dims) return x.dims < y.dims;
  for (size_t b = 0; b < x.act.size(); ++b)
    for (int i = 0; i < x.act[b].rows(); ++i)
      for (int j = 0; j < x.act[b].cols(); ++j) {
        int c = cmp(x.act[b].at(i, j), y.act[b].at(i, j));
        if (c != 0) return c < 0;
      }
  return false;
}

}  // namespace

std::vector<AModule> enumerate_indecomposables(const AlgebraPtr& a, const EnumerationBound& bound) {
  if (!a->provenance) throw std::invalid_argument("enumeration needs a quiver presentation");
  if (a->field.kind != Field::Kind::Prime)
    throw std::invalid_argument("enumeration runs over a prime field");
  const QuiverPresentation& qp = *a->provenance;
  const long p = a->field.p;
  std::vector<int> caps = effective_caps(a, bound);

  // total candidate count across all dimension vectors, checked up front
  double total = 0;
  {
    std::vector<int> d(a->n, 0);
    while (true) {
      double cells = 0;
      for (const auto& ar : qp.arrows) cells += static_cast<double>(d[ar.src]) * d[ar.tgt];
      total += std::pow(static_cast<double>(p), cells);
      if (total > static_cast<double>(bound.budget))
        throw std::runtime_error("enumeration budget exceeded; partial catalog withheld");
      int v = 0;
      for (; v < a->n; ++v) {
        if (++d[v] <= caps[v]) break;
        d[v] = 0;
      }
      if (v == a->n) break;
    }
  }

  std::vector<AModule> out;
  std::vector<int> d(a->n, 0);
  while (true) {
    int v = 0;
    for (; v < a->n; ++v) {
      if (++d[v] <= caps[v]) break;
      d[v] = 0;
    }
    if (v == a->n) break;  // skips the zero vector, ends after the caps vector
    Search s{a, qp, d, p, {}, {}, &out};
    s.due.resize(qp.arrows.size());
    for (const auto& rel : qp.relations) {
      int last = 0;
      for (const auto& term : rel.terms)
        for (int k : term.arrows) last = std::max(last, k);
      s.due[last].push_back(&rel);
    }
    for (const auto& ar : qp.arrows)
      s.acts.push_back(SmallMat{d[ar.src], d[ar.tgt],
                                std::vector<long>(static_cast<size_t>(d[ar.src]) * d[ar.tgt], 0)});
    s.run(0);
  }
  std::sort(out.begin(), out.end(), catalog_less);
  return out;
}

bool catalog_stability_probe(const AlgebraPtr& a, const EnumerationBound& bound) {
  auto base = enumerate_indecomposables(a, bound);
  EnumerationBound wider = bound;
  wider.caps = effective_caps(a, bound);
  for (int& c : wider.caps) ++c;
  auto probe = enumerate_indecomposables(a, wider);
  return probe.size() == base.size();
}

std::vector<AModule> transfer_catalog(const std::vector<AModule>& catalog, const AlgebraPtr& target) {
  if (!target->provenance) throw std::invalid_argument("target algebra has no quiver presentation");
  const QuiverPresentation& qp = *target->provenance;
  std::vector<AModule> out;
  for (const auto& m : catalog) {
    std::vector<Mat> acts;
    for (const auto& ar : qp.arrows) {
      int b = -1;
      for (int j = target->n; j < target->dim; ++j)
        if (target->basis_label[j] == ar.name) b = j;
      if (b < 0) throw std::runtime_error("arrow " + ar.name + " is not a basis element");
      Mat src(target->field, m.dims[ar.src], m.dims[ar.tgt]);
      for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j) src.at(i, j) = target->field.reduce(m.act[b].at(i, j));
      acts.push_back(std::move(src));
    }
    AModule t = module_from_arrow_actions(target, m.dims, acts);
    if (decompose(t).size() != 1)
      throw std::runtime_error("representative decomposes after the field change");
    for (const auto& seen : out)
      if (is_isomorphic(seen, t)) throw std::runtime_error("representatives collide after the field change");
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace taukit
