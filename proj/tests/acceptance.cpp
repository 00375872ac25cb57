#include <iostream>
#include <random>

#include "taukit/enumerate.hpp"
#include "taukit/homology.hpp"
#include "taukit/report.hpp"
#include "taukit/testfix.hpp"

using namespace taukit;

namespace {

int failures = 0;

void line(int num, const std::string& what, bool ok) {
  std::cout << (num < 10 ? " " : "") << num << ". " << what << ": " << (ok ? "pass" : "fail")
            << "\n";
  if (!ok) ++failures;
}

bool scenario_ok(const std::string& name) { return run_scenario(name).all_pass(); }

// change of basis by invertible matrices at every vertex
AModule conjugate(const AModule& m, std::mt19937& rng) {
  const Field& F = m.alg->field;
  std::uniform_int_distribution<int> coin(-2, 2);
  std::vector<Mat> S(m.alg->n), Sinv(m.alg->n);
  for (int v = 0; v < m.alg->n; ++v) {
    while (true) {
      Mat s(F, m.dims[v], m.dims[v]);
      for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j) s.at(i, j) = coin(rng);
      auto inv = inverse(s);
      if (inv) {
        S[v] = s;
        Sinv[v] = *inv;
        break;
      }
    }
  }
  AModule out;
  out.alg = m.alg;
  out.dims = m.dims;
  for (int b = 0; b < m.alg->dim; ++b)
    out.act.push_back(S[m.alg->src[b]] * m.act[b] * Sinv[m.alg->tgt[b]]);
  check_module(out);
  return out;
}

std::vector<int> summand_dims(const AModule& m) {
  std::vector<int> out;
  for (const auto& s : decompose(m)) out.push_back(s.total_dim());
  std::sort(out.begin(), out.end());
  return out;
}

bool infrastructure_ok() {
  auto a = build_algebra(fix::auslander_kx3());
  // duality is an involution up to isomorphism
  for (int v = 0; v < a->n; ++v) {
    auto m = projective(a, v);
    if (!is_isomorphic(dual(dual(m)), m)) return false;
    if (!is_isomorphic(dual(dual(simple(a, v))), simple(a, v))) return false;
  }
  // summand shape is stable under repeated change of basis
  auto reg = regular_module(a);
  auto base = summand_dims(reg);
  std::mt19937 rng(20240817);
  for (int k = 0; k < 20; ++k)
    if (summand_dims(conjugate(reg, rng)) != base) return false;
  // tau_inv after tau recovers every non-projective indecomposable
  auto ap = reinterpret_over_field(build_algebra(fix::a4_rel12_23()), Field::prime(2));
  for (const auto& m : enumerate_indecomposables(ap, EnumerationBound{})) {
    if (pd_module(m).le(0)) continue;
    if (!is_isomorphic(tau_inv(tau(m)), m)) return false;
  }
  // serialized verdicts are byte-identical across thread counts
  if (serialize_reports(run_all_scenarios(1)) != serialize_reports(run_all_scenarios(4)))
    return false;
  return true;
}

}  // namespace

int main() {
  line(1, "two-vertex self-injective fixture: six support pairs, quiver shape, tau-tilting checks",
       scenario_ok("ex2.9"));
  line(2, "Nakayama fixture: global dimension two and the four tilting properties", scenario_ok("ex2.10"));
  line(3, "injective-dimension-one equivalence battery on five algebras", scenario_ok("thm2.6-battery") &&
       scenario_ok("thm2.7-battery"));
  line(4, "iterated tilting chain, recovered quotient algebras, seven-member catalog all tau-rigid",
       scenario_ok("ex3.8"));
  line(5, "endomorphism algebra shape and projective dimension bounds for the tau-tilting fixture",
       scenario_ok("ex4.4") && scenario_ok("thm4.2") && scenario_ok("thm4.3"));
  line(6, "Ext-vanishing against Fac equivalence over both complete catalogs", scenario_ok("prop2.5-property"));
  line(7, "translate duality dimension match on all indecomposable pairs", scenario_ok("ar-duality"));
  line(8, "approximation kernels and cokernels land in the right perpendicular categories",
       scenario_ok("lemma4.1-property"));
  line(9, "torsion pair equivalences object by object on the tau-tilting fixture", scenario_ok("thm3.3-objects"));
  line(10, "dual involution, summand stability, translate inverses, report determinism",
       infrastructure_ok());
  return failures == 0 ? 0 : 1;
}
