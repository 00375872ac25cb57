#include <algorithm>
#include <stdexcept>

#include "taukit/module.hpp"

namespace taukit {

namespace {

// blockwise f^e for an endomorphism
std::vector<Mat> endo_power(const ModuleMap& f, long e) {
  std::vector<Mat> out;
  for (const auto& blk : f.f) out.push_back(blk.power(e));
  return out;
}

int total_rank(const std::vector<Mat>& blocks) {
  int r = 0;
  for (const auto& b : blocks) r += rank(b);
  return r;
}

std::vector<mpq_class> flatten_endo(const std::vector<Mat>& blocks) {
  std::vector<mpq_class> v;
  for (const auto& b : blocks)
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) v.push_back(b.at(i, j));
  return v;
}

// monic minimal polynomial of the endomorphism, low degree first
std::vector<mpq_class> min_poly(const ModuleMap& f) {
  const Field& F = f.source.alg->field;
  std::vector<Mat> pw;
  for (int v = 0; v < f.source.alg->n; ++v) pw.push_back(Mat::identity(F, f.source.dims[v]));
  std::vector<std::vector<mpq_class>> rows;
  while (true) {
    rows.push_back(flatten_endo(pw));
    size_t width = rows[0].size();
    Mat M = Mat::from_rows(F, rows, static_cast<int>(width));
    if (rank(M) < static_cast<int>(rows.size())) {
      // express the last power in the earlier ones
      std::vector<std::vector<mpq_class>> prev(rows.begin(), rows.end() - 1);
      Mat P = Mat::from_rows(F, prev, static_cast<int>(width));
      Mat b = Mat::from_rows(F, {rows.back()}, static_cast<int>(width));
      auto x = solve_left_all(P, b);
      std::vector<mpq_class> poly;
      for (int i = 0; i < x->cols(); ++i) poly.push_back(F.neg(x->at(0, i)));
      poly.push_back(1);
      return poly;
    }
    for (size_t v = 0; v < pw.size(); ++v) pw[v] = pw[v] * f.f[v];
  }
}

std::vector<mpz_class> small_divisors(mpz_class n) {
  std::vector<mpz_class> out;
  n = abs(n);
  if (n == 0) return out;
  for (mpz_class d = 1; d * d <= n && d <= 1000000; ++d)
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// rational roots of a monic polynomial over Q (char 0 only)
std::vector<mpq_class> rational_roots(std::vector<mpq_class> poly) {
  std::vector<mpq_class> roots;
  while (poly.size() > 1 && poly[0] == 0) {
    roots.push_back(0);
    poly.erase(poly.begin());
  }
  if (poly.size() <= 1) return roots;
  mpz_class den(1);
  for (auto& c : poly) den = lcm(den, c.get_den());
  std::vector<mpz_class> ip;
  for (auto& c : poly) {
    mpq_class v = c * den;
    v.canonicalize();
    ip.push_back(v.get_num());
  }
  auto eval = [&](const mpq_class& x) {
    mpq_class acc(0);
    for (auto it = ip.rbegin(); it != ip.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
  };
  auto ps = small_divisors(ip.front());
  auto qs = small_divisors(ip.back());
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int sgn : {1, -1}) {
        mpq_class cand(mpz_class(sgn * p), q);
        cand.canonicalize();
        if (eval(cand) == 0) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end(), [](const mpq_class& a, const mpq_class& b) { return a < b; });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// If f^N has rank strictly between 0 and dim, split m = ker(f^N) + im(f^N).
std::optional<std::pair<AModule, AModule>> try_fitting(const AModule& m, const ModuleMap& f) {
  const int T = m.total_dim();
  auto pw = endo_power(f, T);
  int r = total_rank(pw);
  if (r == 0 || r == T) return std::nullopt;
  std::vector<Mat> ker, im;
  for (const auto& b : pw) {
    ker.push_back(left_kernel_basis(b));
    im.push_back(row_space_basis(b));
  }
  return std::make_pair(sub_module(m, ker).module, sub_module(m, im).module);
}

ModuleMap linear_comb(const std::vector<ModuleMap>& basis, const std::vector<mpq_class>& coef) {
  ModuleMap out = zero_map(basis[0].source, basis[0].target);
  for (size_t i = 0; i < basis.size(); ++i)
    if (coef[i] != 0) out = add_maps(out, scale_map(basis[i], coef[i]));
  return out;
}

// complete search over F_p: every endomorphism is nilpotent or invertible
// iff the endomorphism ring is local
std::optional<std::pair<AModule, AModule>> prime_field_search(const AModule& m,
                                                             const std::vector<ModuleMap>& ends) {
  const long p = m.alg->field.p;
  const size_t e = ends.size();
  double count = 1;
  for (size_t i = 0; i < e; ++i) count *= static_cast<double>(p);
  if (count > double(1 << 22)) throw CannotCertify("endomorphism enumeration exceeds budget");
  std::vector<long> digits(e, 0);
  while (true) {
    size_t k = 0;
    while (k < e && digits[k] == p - 1) digits[k++] = 0;
    if (k == e) break;
    ++digits[k];
    std::vector<mpq_class> coef(e);
    for (size_t i = 0; i < e; ++i) coef[i] = digits[i];
    auto split = try_fitting(m, linear_comb(ends, coef));
    if (split) return split;
  }
  return std::nullopt;
}

std::optional<std::pair<AModule, AModule>> find_split(const AModule& m) {
  auto ends = hom_basis(m, m);
  if (ends.size() == 1) return std::nullopt;  // scalars only
  std::vector<ModuleMap> candidates;
  for (const auto& f : ends) candidates.push_back(f);
  for (size_t i = 0; i < ends.size(); ++i)
    for (size_t j = i + 1; j < ends.size(); ++j) {
      candidates.push_back(add_maps(ends[i], ends[j]));
      candidates.push_back(add_maps(ends[i], scale_map(ends[j], -1)));
    }
  for (size_t i = 0; i < ends.size(); ++i)
    for (size_t j = 0; j < ends.size(); ++j) candidates.push_back(compose(ends[i], ends[j]));
  for (const auto& f : candidates) {
    auto split = try_fitting(m, f);
    if (split) return split;
  }
  if (m.alg->field.kind == Field::Kind::Prime) return prime_field_search(m, ends);
  // eigenvalue shifts: f - lambda for rational eigenvalues lambda
  ModuleMap id = identity_map(m);
  for (const auto& f : candidates) {
    for (const auto& lam : rational_roots(min_poly(f))) {
      if (lam == 0) continue;
      auto split = try_fitting(m, add_maps(f, scale_map(id, -lam)));
      if (split) return split;
    }
  }
  // locality certificate: the radical of the trace form has codimension
  // dim(End/rad); codimension one forces a local ring
  Mat gram(m.alg->field, static_cast<int>(ends.size()), static_cast<int>(ends.size()));
  for (size_t i = 0; i < ends.size(); ++i)
    for (size_t j = 0; j < ends.size(); ++j) {
      mpq_class tr(0);
      auto c = compose(ends[i], ends[j]);
      for (const auto& blk : c.f) tr += blk.trace();
      gram.at(static_cast<int>(i), static_cast<int>(j)) = m.alg->field.reduce(tr);
    }
  if (rank(gram) == 1) return std::nullopt;
  throw CannotCertify("no splitting found and no locality certificate");
}

void decompose_into(const AModule& m, std::vector<AModule>& out) {
  if (m.is_zero()) return;
  auto split = find_split(m);
  if (!split) {
    out.push_back(m);
    return;
  }
  decompose_into(split->first, out);
  decompose_into(split->second, out);
}

bool nilpotent_endo(const ModuleMap& f) {
  return total_rank(endo_power(f, f.source.total_dim())) == 0;
}

}  // namespace

std::vector<AModule> decompose(const AModule& m) {
  std::vector<AModule> out;
  decompose_into(m, out);
  return out;
}

bool is_indecomposable(const AModule& m) { return !m.is_zero() && decompose(m).size() == 1; }

bool indec_isomorphic(const AModule& m, const AModule& n) {
  if (m.dims != n.dims) return false;
  auto fwd = hom_basis(m, n), bwd = hom_basis(n, m);
  // complete for local endomorphism rings: some basis composite must avoid
  // the radical, since nilpotents form a subspace there
  for (const auto& f : fwd)
    for (const auto& g : bwd)
      if (!nilpotent_endo(compose(f, g))) return true;
  return false;
}

bool summands_match(std::vector<AModule> a, std::vector<AModule> b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      if (indec_isomorphic(x, b[j])) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_isomorphic(const AModule& m, const AModule& n) {
  if (m.dims != n.dims) return false;
  if (m.is_zero()) return true;
  return summands_match(decompose(m), decompose(n));
}

}  // namespace taukit
