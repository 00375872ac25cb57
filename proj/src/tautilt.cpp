#include "taukit/tautilt.hpp"

#include <algorithm>
#include <stdexcept>

namespace taukit {

bool is_tau_rigid(const AModule& m) {
  if (m.is_zero()) return true;
  return hom_dim(m, tau(m)) == 0;
}

bool is_tau_inv_rigid(const AModule& m) {
  if (m.is_zero()) return true;
  return hom_dim(tau_inv(m), m) == 0;
}

namespace {

bool multiplicity_free_of_size(const AModule& m, int n) {
  auto parts = decompose(m);
  if (static_cast<int>(parts.size()) != n) return false;
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j)
      if (indec_isomorphic(parts[i], parts[j])) return false;
  return true;
}

}  // namespace

bool is_tau_tilting(const AModule& m) {
  return is_tau_rigid(m) && multiplicity_free_of_size(m, m.alg->n);
}

bool is_tau_inv_tilting(const AModule& m) {
  return is_tau_inv_rigid(m) && multiplicity_free_of_size(m, m.alg->n);
}

std::vector<AModule> indec_tau_rigid_catalog(const AlgebraPtr& a, const std::vector<AModule>& indecs) {
  std::vector<AModule> out;
  for (const auto& m : indecs) {
    if (m.alg.get() != a.get()) throw std::invalid_argument("catalog module over a different algebra");
    if (!is_tau_rigid(m)) continue;
    bool dup = false;
    for (const auto& seen : out)
      if (indec_isomorphic(seen, m)) dup = true;
    if (!dup) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const AModule& x, const AModule& y) { return module_order(x, y) < 0; });
  return out;
}

std::vector<SttPair> stt_pairs(const AlgebraPtr& a, const std::vector<AModule>& catalog) {
  const int n = a->n;
  const int k = static_cast<int>(catalog.size());
  if (k > 24) throw std::invalid_argument("catalog too large for subset sweep");
  std::vector<AModule> taus;
  for (const auto& m : catalog) taus.push_back(tau(m));
  // pairwise compatibility: Hom(X, tau Y) = 0 both ways
  std::vector<std::vector<bool>> compat(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      compat[i][j] = hom_dim(catalog[i], taus[j]) == 0;
  std::vector<AModule> projs;
  for (int v = 0; v < n; ++v) projs.push_back(projective(a, v));

  std::vector<SttPair> out;
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    std::vector<int> sel;
    for (int i = 0; i < k; ++i)
      if (mask & (1ul << i)) sel.push_back(i);
    if (static_cast<int>(sel.size()) > n) continue;
    bool ok = true;
    for (int i : sel)
      for (int j : sel)
        if (!compat[i][j]) ok = false;
    if (!ok) continue;
    std::vector<AModule> parts;
    for (int i : sel) parts.push_back(catalog[i]);
    AModule m = parts.empty() ? zero_module(a) : direct_sum(parts);
    std::vector<int> supp;
    for (int v = 0; v < n; ++v)
      if (hom_dim(projs[v], m) == 0) supp.push_back(v);
    if (static_cast<int>(sel.size()) + static_cast<int>(supp.size()) != n) continue;
    SttPair pair;
    pair.m_summands = parts;
    std::sort(pair.m_summands.begin(), pair.m_summands.end(),
              [](const AModule& x, const AModule& y) { return module_order(x, y) < 0; });
    pair.p_vertices = supp;
    pair.m = pair.m_summands.empty() ? zero_module(a) : direct_sum(pair.m_summands);
    std::vector<AModule> pparts;
    for (int v : supp) pparts.push_back(projs[v]);
    pair.p = pparts.empty() ? zero_module(a) : direct_sum(pparts);
    out.push_back(std::move(pair));
  }
  std::sort(out.begin(), out.end(), [](const SttPair& x, const SttPair& y) {
    int c = module_order(x.m, y.m);
    if (c != 0) return c > 0;  // larger modules first: (A,0) leads
    return x.p_vertices < y.p_vertices;
  });
  return out;
}

SttQuiver stt_hasse_quiver(const AlgebraPtr& a, const std::vector<SttPair>& pairs) {
  const int k = static_cast<int>(pairs.size());
  // (M,P) >= (M',P') iff every summand of M' lies in Fac M
  std::vector<std::vector<bool>> ge(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      bool all = true;
      for (const auto& s : pairs[j].m_summands)
        if (!fac_contains(pairs[i].m, s)) all = false;
      ge[i][j] = all;
    }
  SttQuiver q;
  q.pairs = pairs;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !ge[i][j] || ge[j][i]) continue;
      bool cover = true;
      for (int t = 0; t < k; ++t) {
        if (t == i || t == j) continue;
        if (ge[i][t] && !ge[t][i] && ge[t][j] && !ge[j][t]) cover = false;
      }
      if (cover) q.edges.push_back({i, j});
    }
  for (int i = 0; i < k; ++i) {
    bool is_source = true, is_sink = true;
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      if (!(ge[i][j] && !ge[j][i])) is_source = false;
      if (!(ge[j][i] && !ge[i][j])) is_sink = false;
    }
    if (is_source) q.source = i;
    if (is_sink) q.sink = i;
  }
  if (q.source < 0 || q.sink < 0) throw std::logic_error("hasse quiver lacks a unique source or sink");
  (void)a;
  return q;
}

std::string stt_dot(const SttQuiver& q) {
  std::string out = "digraph stt {\n";
  for (size_t i = 0; i < q.pairs.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + diagram_label(q.pairs[i].m) + "\"];\n";
  for (const auto& e : q.edges)
    out += "  n" + std::to_string(e.first) + " -> n" + std::to_string(e.second) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace taukit
