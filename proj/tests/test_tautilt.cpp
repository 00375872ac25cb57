#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taukit/tautilt.hpp"
#include "taukit/testfix.hpp"

using namespace taukit;

namespace {

AModule interval(const AlgebraPtr& a, int lo, int hi) {
  auto p = projective(a, lo);
  std::vector<Mat> span;
  for (int v = 0; v < a->n; ++v) {
    if (v > hi && p.dims[v] == 1)
      span.push_back(Mat::identity(a->field, 1));
    else
      span.push_back(Mat(a->field, 0, p.dims[v]));
  }
  return quotient_module(p, span).map.target;
}

std::vector<AModule> crossed_catalog(const AlgebraPtr& a) {
  return {projective(a, 0), projective(a, 1), simple(a, 0), simple(a, 1)};
}

}  // namespace

TEST_CASE("projectives are tau-rigid, the regular module is tau-tilting") {
  for (auto a : {build_algebra(fix::linear_quiver(4)), build_algebra(fix::crossed_two_vertex()),
                 build_algebra(fix::auslander_kx3())}) {
    for (int i = 0; i < a->n; ++i) CHECK(is_tau_rigid(projective(a, i)));
    CHECK(is_tau_tilting(regular_module(a)));
  }
}

TEST_CASE("every indecomposable over hereditary A4 is tau-rigid") {
  auto a = build_algebra(fix::linear_quiver(4));
  std::vector<AModule> cat;
  for (int lo = 0; lo < 4; ++lo)
    for (int hi = lo; hi < 4; ++hi) cat.push_back(interval(a, lo, hi));
  CHECK(indec_tau_rigid_catalog(a, cat).size() == 10);
}

TEST_CASE("the crossed algebra's catalog keeps all four indecomposables") {
  auto a = build_algebra(fix::crossed_two_vertex());
  auto cat = indec_tau_rigid_catalog(a, crossed_catalog(a));
  CHECK(cat.size() == 4);
}

TEST_CASE("S2 + P2 over the crossed algebra: tau-tilting but not tau-inv-tilting") {
  auto a = build_algebra(fix::crossed_two_vertex());
  auto m = direct_sum({simple(a, 1), projective(a, 1)});  // P2 has top S2, socle S1
  CHECK(is_tau_tilting(m));
  CHECK(!is_tau_inv_tilting(m));
  CHECK(is_tau_rigid(m));
  CHECK(!is_tau_inv_rigid(m));
}

TEST_CASE("crossed algebra has exactly six support pairs in a diamond") {
  auto a = build_algebra(fix::crossed_two_vertex());
  auto pairs = stt_pairs(a, indec_tau_rigid_catalog(a, crossed_catalog(a)));
  REQUIRE(pairs.size() == 6);
  auto q = stt_hasse_quiver(a, pairs);
  CHECK(q.pairs[q.source].m_summands.size() == 2);
  CHECK(q.pairs[q.source].p_vertices.empty());
  CHECK(q.pairs[q.sink].m_summands.empty());
  CHECK(q.pairs[q.sink].p_vertices.size() == 2);
  CHECK(q.edges.size() == 6);
  int src_out = 0, sink_in = 0;
  for (auto& e : q.edges) {
    if (e.first == q.source) ++src_out;
    if (e.second == q.sink) ++sink_in;
  }
  CHECK(src_out == 2);
  CHECK(sink_in == 2);
  // two chains: every non-extremal node has in- and out-degree 1
  for (int i = 0; i < 6; ++i) {
    if (i == q.source || i == q.sink) continue;
    int din = 0, dout = 0;
    for (auto& e : q.edges) {
      if (e.second == i) ++din;
      if (e.first == i) ++dout;
    }
    CHECK(din == 1);
    CHECK(dout == 1);
  }
  auto dot = stt_dot(q);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("linear A2 has the five pentagon pairs") {
  auto a = build_algebra(fix::linear_quiver(2));
  std::vector<AModule> cat{projective(a, 0), projective(a, 1), simple(a, 0)};
  auto pairs = stt_pairs(a, indec_tau_rigid_catalog(a, cat));
  CHECK(pairs.size() == 5);
  auto q = stt_hasse_quiver(a, pairs);
  int src_out = 0;
  for (auto& e : q.edges)
    if (e.first == q.source) ++src_out;
  CHECK(src_out == 2);
}

TEST_CASE("local algebra has only the two trivial pairs") {
  auto a = build_algebra(fix::kx2());
  auto cat = indec_tau_rigid_catalog(a, {projective(a, 0), simple(a, 0)});
  CHECK(cat.size() == 1);  // the simple is not tau-rigid
  auto pairs = stt_pairs(a, cat);
  REQUIRE(pairs.size() == 2);
  auto q = stt_hasse_quiver(a, pairs);
  CHECK(q.edges.size() == 1);
}

TEST_CASE("summand subsets of pair modules stay tau-rigid") {
  auto a = build_algebra(fix::crossed_two_vertex());
  auto pairs = stt_pairs(a, indec_tau_rigid_catalog(a, crossed_catalog(a)));
  for (const auto& pr : pairs) {
    CHECK(is_tau_rigid(pr.m));
    CHECK(hom_dim(pr.p, pr.m) == 0);
    for (const auto& s : pr.m_summands) CHECK(is_tau_rigid(s));
  }
}

TEST_CASE("zero module and empty catalog behave") {
  auto a = build_algebra(fix::linear_quiver(2));
  CHECK(is_tau_rigid(zero_module(a)));
  auto pairs = stt_pairs(a, {});
  REQUIRE(pairs.size() == 1);  // only (0, A)
  CHECK(pairs[0].p_vertices.size() == 2);
}
