#include "taukit/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace taukit {

namespace {

struct Path {
  std::vector<int> arrows;  // empty = trivial path at src
  int src, tgt;
};

// Paths ordered by (length, lexicographic arrow sequence); trivial paths
// first in vertex order.
std::vector<Path> enumerate_paths(const QuiverPresentation& qp, int bound, size_t cap = 200000) {
  std::vector<Path> paths;
  for (size_t v = 0; v < qp.vertices.size(); ++v) paths.push_back(Path{{}, static_cast<int>(v), static_cast<int>(v)});
  std::vector<Path> frontier = paths;
  for (int len = 1; len <= bound; ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (size_t a = 0; a < qp.arrows.size(); ++a)
        if (qp.arrows[a].src == p.tgt) {
          Path q = p;
          q.arrows.push_back(static_cast<int>(a));
          q.tgt = qp.arrows[a].tgt;
          next.push_back(std::move(q));
        }
    std::sort(next.begin(), next.end(), [](const Path& x, const Path& y) { return x.arrows < y.arrows; });
    for (auto& p : next) paths.push_back(std::move(p));
    if (paths.size() > cap) throw std::runtime_error("path space exceeds cap; lower pathlen_bound");
    frontier.clear();
    for (size_t i = paths.size() - next.size(); i < paths.size(); ++i) frontier.push_back(paths[i]);
    if (next.empty()) break;
  }
  return paths;
}

std::string path_label(const QuiverPresentation& qp, const Path& p) {
  if (p.arrows.empty()) return "e_" + qp.vertices[p.src];
  std::string s;
  for (size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) s += "*";
    s += qp.arrows[p.arrows[k]].name;
  }
  return s;
}

}  // namespace

std::vector<mpq_class> BasicAlgebra::multiply(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) const {
  std::vector<mpq_class> r(dim, mpq_class(0));
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      mpq_class c = a[i] * b[j];
      const auto& pij = prod[i][j];
      for (int k = 0; k < dim; ++k)
        if (pij[k] != 0) r[k] += c * pij[k];
    }
  }
  for (auto& x : r) x = field.reduce(x);
  return r;
}

int BasicAlgebra::hom_dim(int s, int t) const {
  int c = 0;
  for (int i = 0; i < dim; ++i)
    if (src[i] == s && tgt[i] == t) ++c;
  return c;
}

std::vector<std::vector<int>> BasicAlgebra::cartan() const {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < dim; ++i) c[src[i]][tgt[i]]++;
  return c;
}

AlgebraPtr register_algebra(BasicAlgebra a) {
  auto sp = std::make_shared<BasicAlgebra>(std::move(a));
  sp->self = sp;

  BasicAlgebra op;
  op.field = sp->field;
  op.dim = sp->dim;
  op.n = sp->n;
  op.basis_label = sp->basis_label;
  op.vertex_label = sp->vertex_label;
  op.src = sp->tgt;
  op.tgt = sp->src;
  op.prod.assign(sp->dim, std::vector<std::vector<mpq_class>>(sp->dim));
  for (int i = 0; i < sp->dim; ++i)
    for (int j = 0; j < sp->dim; ++j) op.prod[i][j] = sp->prod[j][i];
  op.radical = sp->radical;
  auto opsp = std::make_shared<BasicAlgebra>(std::move(op));
  opsp->self = opsp;
  sp->op_link = opsp;
  opsp->op_weak = sp;
  return sp;
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  if (a->op_link) return a->op_link;
  if (auto back = a->op_weak.lock()) return back;
  throw std::logic_error("algebra was not created through register_algebra");
}

AlgebraPtr build_algebra(const QuiverPresentation& qp) {
  qp.check();
  const Field& F = qp.field;
  const int bound = qp.effective_bound();
  std::vector<Path> paths = enumerate_paths(qp, bound);
  const int np = static_cast<int>(paths.size());

  std::map<std::vector<int>, int> path_index;
  for (int i = 0; i < np; ++i) {
    // trivial paths share the empty key; disambiguate by source vertex
    std::vector<int> key = paths[i].arrows;
    key.insert(key.begin(), paths[i].src);
    path_index[key] = i;
  }
  auto lookup = [&](int srcv, const std::vector<int>& arrows) {
    std::vector<int> key = arrows;
    key.insert(key.begin(), srcv);
    auto it = path_index.find(key);
    return it == path_index.end() ? -1 : it->second;
  };

  // Span of the two-sided ideal inside the path space: u * r * v for every
  // relation r and composable paths u, v keeping every term within bound.
  std::vector<std::vector<mpq_class>> ideal_rows;
  for (const auto& rel : qp.relations) {
    int rs = qp.arrows[rel.terms[0].arrows.front()].src;
    int rt = qp.arrows[rel.terms[0].arrows.back()].tgt;
    for (const auto& u : paths) {
      if (u.tgt != rs) continue;
      for (const auto& v : paths) {
        if (v.src != rt) continue;
        int fit = 0, unfit = 0;
        for (const auto& term : rel.terms) {
          size_t len = u.arrows.size() + term.arrows.size() + v.arrows.size();
          (static_cast<int>(len) <= bound ? fit : unfit)++;
        }
        if (fit == 0) continue;
        if (unfit > 0)
          throw std::runtime_error("not admissible within bound: relation term escapes the path length bound");
        std::vector<mpq_class> row(np, mpq_class(0));
        for (const auto& term : rel.terms) {
          std::vector<int> word = u.arrows;
          word.insert(word.end(), term.arrows.begin(), term.arrows.end());
          word.insert(word.end(), v.arrows.begin(), v.arrows.end());
          int idx = lookup(u.src, word);
          if (idx < 0) throw std::logic_error("path lookup failed");
          row[idx] = F.add(row[idx], term.coef);
        }
        ideal_rows.push_back(std::move(row));
      }
    }
  }
  Mat ideal = Mat::from_rows(F, ideal_rows, np);
  RrefResult ir = rref(ideal);

  std::vector<bool> is_pivot(np, false);
  for (int p : ir.pivots) is_pivot[p] = true;

  // Admissibility within the bound: every path of maximal length must lie
  // in the ideal span.
  for (int i = 0; i < np; ++i) {
    if (static_cast<int>(paths[i].arrows.size()) != bound) continue;
    Mat v(F, 1, np);
    v.at(0, i) = 1;
    if (!reduce_row_mod(ir, v).is_zero())
      throw std::runtime_error("not admissible within bound: path " + path_label(qp, paths[i]) +
                               " survives at maximal length");
  }

  std::vector<int> basis_paths;  // indices into paths
  std::vector<int> compress(np, -1);
  for (int i = 0; i < np; ++i)
    if (!is_pivot[i]) {
      compress[i] = static_cast<int>(basis_paths.size());
      basis_paths.push_back(i);
    }
  const int dim = static_cast<int>(basis_paths.size());

  auto reduce_path = [&](int srcv, const std::vector<int>& word) {
    std::vector<mpq_class> out(dim, mpq_class(0));
    if (static_cast<int>(word.size()) > bound) return out;  // in the ideal
    int idx = lookup(srcv, word);
    if (idx < 0) return out;  // no such path (shouldn't happen for composable words)
    Mat v(F, 1, np);
    v.at(0, idx) = 1;
    Mat r = reduce_row_mod(ir, v);
    for (int j = 0; j < np; ++j)
      if (r.at(0, j) != 0) out[compress[j]] = r.at(0, j);
    return out;
  };

  BasicAlgebra a;
  a.field = F;
  a.dim = dim;
  a.n = static_cast<int>(qp.vertices.size());
  a.vertex_label = qp.vertices;
  for (int bi : basis_paths) {
    a.basis_label.push_back(path_label(qp, paths[bi]));
    a.src.push_back(paths[bi].src);
    a.tgt.push_back(paths[bi].tgt);
  }
  for (int v = 0; v < a.n; ++v)
    if (!(v < dim && paths[basis_paths[v]].arrows.empty() && paths[basis_paths[v]].src == v))
      throw std::logic_error("trivial path eliminated by relations; ideal not admissible");

  a.prod.assign(dim, std::vector<std::vector<mpq_class>>(dim, std::vector<mpq_class>(dim, mpq_class(0))));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const Path& pi = paths[basis_paths[i]];
      const Path& pj = paths[basis_paths[j]];
      if (pi.tgt != pj.src) continue;
      std::vector<int> word = pi.arrows;
      word.insert(word.end(), pj.arrows.begin(), pj.arrows.end());
      a.prod[i][j] = reduce_path(pi.src, word);
    }

  std::vector<std::vector<mpq_class>> rad_rows;
  for (int i = a.n; i < dim; ++i) {
    std::vector<mpq_class> r(dim, mpq_class(0));
    r[i] = 1;
    rad_rows.push_back(std::move(r));
  }
  a.radical = Mat::from_rows(F, rad_rows, dim);
  a.provenance = qp;
  return register_algebra(std::move(a));
}

ValidationReport validate(const BasicAlgebra& a) {
  ValidationReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };
  const int d = a.dim;
  const Field& F = a.field;

  // basis adaptation: products must respect (src, tgt) grading
  for (int i = 0; i < d && rep.ok; ++i)
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k)
        if (a.prod[i][j][k] != 0 && (a.src[k] != a.src[i] || a.tgt[k] != a.tgt[j] || a.tgt[i] != a.src[j])) {
          fail("product b" + std::to_string(i) + "*b" + std::to_string(j) + " violates the idempotent grading");
          break;
        }
      if (!rep.ok) break;
    }

  // associativity on basis triples
  for (int i = 0; i < d && rep.ok; ++i)
    for (int j = 0; j < d && rep.ok; ++j)
      for (int k = 0; k < d; ++k) {
        std::vector<mpq_class> ei(d, mpq_class(0)), ej(d, mpq_class(0)), ek(d, mpq_class(0));
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        auto lhs = a.multiply(a.multiply(ei, ej), ek);
        auto rhs = a.multiply(ei, a.multiply(ej, ek));
        if (lhs != rhs) {
          fail("associativity fails on (b" + std::to_string(i) + ",b" + std::to_string(j) + ",b" + std::to_string(k) +
               ")");
          break;
        }
      }

  // orthogonal idempotents summing to a two-sided unit
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      std::vector<mpq_class> ei(d, mpq_class(0)), ej(d, mpq_class(0));
      ei[i] = 1;
      ej[j] = 1;
      auto p = a.multiply(ei, ej);
      std::vector<mpq_class> expect(d, mpq_class(0));
      if (i == j) expect[i] = 1;
      if (p != expect) fail("idempotent orthogonality fails on (e" + std::to_string(i) + ",e" + std::to_string(j) + ")");
    }
  {
    std::vector<mpq_class> unit(d, mpq_class(0));
    for (int i = 0; i < a.n; ++i) unit[i] = 1;
    for (int j = 0; j < d; ++j) {
      std::vector<mpq_class> ej(d, mpq_class(0));
      ej[j] = 1;
      if (a.multiply(unit, ej) != ej || a.multiply(ej, unit) != ej) fail("sum of idempotents is not a unit");
    }
  }

  // radical: two-sided ideal, nilpotent, split semisimple quotient
  {
    auto mul_into = [&](const Mat& rows, bool left) {
      std::vector<std::vector<mpq_class>> out;
      for (int r = 0; r < rows.rows(); ++r)
        for (int j = 0; j < d; ++j) {
          std::vector<mpq_class> ej(d, mpq_class(0));
          ej[j] = 1;
          auto rv = rows.row_vec(r);
          out.push_back(left ? a.multiply(ej, rv) : a.multiply(rv, ej));
        }
      return Mat::from_rows(F, out, d);
    };
    RrefResult rad_rr = rref(a.radical);
    for (bool left : {false, true}) {
      Mat prods = mul_into(a.radical, left);
      for (int r = 0; r < prods.rows(); ++r)
        if (!reduce_row_mod(rad_rr, prods.row(r)).is_zero()) {
          fail("radical is not a two-sided ideal");
          break;
        }
    }
    // nilpotency
    Mat layer = row_space_basis(a.radical);
    int guard = d + 1;
    while (layer.rows() > 0 && guard-- > 0) {
      std::vector<std::vector<mpq_class>> next;
      for (int i = 0; i < layer.rows(); ++i)
        for (int r = 0; r < a.radical.rows(); ++r) next.push_back(a.multiply(layer.row_vec(i), a.radical.row_vec(r)));
      layer = row_space_basis(Mat::from_rows(F, next, d));
    }
    if (layer.rows() > 0) fail("radical is not nilpotent");
    // split semisimple quotient: dim e_i (A/rad) e_j = delta_ij
    for (int i = 0; i < a.n; ++i)
      for (int j = 0; j < a.n; ++j) {
        int total = a.hom_dim(i, j);
        int radpart = 0;
        // count radical basis rows supported in e_i A e_j
        Mat hom_rows(F, 0, d);
        std::vector<std::vector<mpq_class>> rr;
        for (int r = 0; r < a.radical.rows(); ++r) {
          auto v = a.radical.row_vec(r);
          bool in_block = true, nonzero = false;
          for (int k = 0; k < d; ++k)
            if (v[k] != 0) {
              nonzero = true;
              if (a.src[k] != i || a.tgt[k] != j) in_block = false;
            }
          if (nonzero && in_block) rr.push_back(v);
        }
        radpart = rank(Mat::from_rows(F, rr, d));
        int q = total - radpart;
        if ((i == j && q != 1) || (i != j && q != 0))
          fail("quotient by the radical is not split semisimple at (" + std::to_string(i) + "," + std::to_string(j) +
               ")");
      }
  }
  return rep;
}

AlgebraPtr reinterpret_over_field(const AlgebraPtr& a, const Field& f) {
  BasicAlgebra b = *a;
  b.field = f;
  b.op_link = nullptr;
  b.op_weak.reset();
  auto map_val = [&](const mpq_class& x) {
    mpq_class y = x;
    y.canonicalize();
    if (y.get_den() != 1) throw std::runtime_error("non-integer structure constant " + y.get_str());
    return f.reduce(y);
  };
  for (auto& row : b.prod)
    for (auto& cell : row)
      for (auto& v : cell) v = map_val(v);
  Mat rad(f, b.radical.rows(), b.radical.cols());
  for (int i = 0; i < rad.rows(); ++i)
    for (int j = 0; j < rad.cols(); ++j) rad.at(i, j) = map_val(b.radical.at(i, j));
  b.radical = rad;
  if (b.provenance) {
    b.provenance->field = f;
    for (auto& rel : b.provenance->relations)
      for (auto& t : rel.terms) t.coef = map_val(t.coef);
  }
  auto out = register_algebra(std::move(b));
  ValidationReport rep = validate(*out);
  if (!rep.ok) throw std::runtime_error("reinterpreted algebra fails validation: " + rep.failures.front());
  return out;
}

}  // namespace taukit
