#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taukit/module.hpp"
#include "taukit/testfix.hpp"

using namespace taukit;

namespace {

// conjugate a module by deterministic invertible matrices to hide the
// block structure
AModule conjugate(const AModule& m, unsigned long seed) {
  struct Lcg {
    unsigned long s;
    int next(int lo, int hi) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      return lo + static_cast<int>((s >> 33) % static_cast<unsigned long>(hi - lo + 1));
    }
  } rng{seed};
  const Field& F = m.alg->field;
  std::vector<Mat> C, Cinv;
  for (int v = 0; v < m.alg->n; ++v) {
    int d = m.dims[v];
    Mat c(F, d, d);
    while (true) {
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) c.at(i, j) = F.reduce(mpq_class(rng.next(-3, 3)));
      auto inv = inverse(c);
      if (inv) {
        C.push_back(c);
        Cinv.push_back(*inv);
        break;
      }
    }
  }
  AModule out = m;
  for (int b = 0; b < m.alg->dim; ++b) {
    int s = m.alg->src[b], t = m.alg->tgt[b];
    out.act[b] = Cinv[s] * m.act[b] * C[t];
  }
  check_module(out);
  return out;
}

}  // namespace

TEST_CASE("projectives and simples are indecomposable") {
  for (auto a : {build_algebra(fix::linear_quiver(4)), build_algebra(fix::auslander_kx3()),
                 build_algebra(fix::crossed_two_vertex())}) {
    for (int i = 0; i < a->n; ++i) {
      CHECK(is_indecomposable(projective(a, i)));
      CHECK(is_indecomposable(simple(a, i)));
    }
  }
}

TEST_CASE("regular module splits into the projectives") {
  auto a = build_algebra(fix::auslander_kx3());
  auto parts = decompose(regular_module(a));
  REQUIRE(parts.size() == 3);
  std::vector<AModule> expect;
  for (int i = 0; i < 3; ++i) expect.push_back(projective(a, i));
  CHECK(summands_match(parts, expect));
}

TEST_CASE("multiplicity is detected") {
  auto a = build_algebra(fix::linear_quiver(4));
  auto p1 = projective(a, 0);
  auto m = direct_sum({p1, p1});
  auto parts = decompose(m);
  REQUIRE(parts.size() == 2);
  CHECK(indec_isomorphic(parts[0], p1));
  CHECK(indec_isomorphic(parts[1], p1));
}

TEST_CASE("decomposition is stable under basis conjugation") {
  auto a = build_algebra(fix::linear_quiver(4));
  auto m = direct_sum({projective(a, 0), simple(a, 1), projective(a, 2)});
  std::vector<AModule> expect{projective(a, 0), simple(a, 1), projective(a, 2)};
  for (unsigned long seed = 1; seed <= 20; ++seed) {
    auto parts = decompose(conjugate(m, seed));
    REQUIRE(parts.size() == 3);
    CHECK(summands_match(parts, expect));
  }
}

TEST_CASE("isomorphism testing") {
  auto a = build_algebra(fix::auslander_kx3());
  auto p1 = projective(a, 0), p2 = projective(a, 1);
  CHECK(indec_isomorphic(p1, conjugate(p1, 5)));
  CHECK(!indec_isomorphic(p1, p2));
  CHECK(is_isomorphic(direct_sum({p1, p2}), direct_sum({p2, conjugate(p1, 9)})));
  CHECK(!is_isomorphic(direct_sum({p1, p1}), direct_sum({p1, p2})));
}

TEST_CASE("decomposition over a prime field") {
  auto a = reinterpret_over_field(build_algebra(fix::crossed_two_vertex()), Field::prime(2));
  auto m = direct_sum({projective(a, 0), simple(a, 1)});
  auto parts = decompose(m);
  REQUIRE(parts.size() == 2);
  CHECK(summands_match(parts, {projective(a, 0), simple(a, 1)}));
  CHECK(is_indecomposable(projective(a, 0)));
}

TEST_CASE("diagram labels") {
  auto a = build_algebra(fix::linear_quiver(4));
  CHECK(diagram_label(projective(a, 0)) == "1|2|3|4");
  CHECK(diagram_label(simple(a, 2)) == "3");
  CHECK(diagram_label(zero_module(a)) == "0");
  auto sum = direct_sum({simple(a, 0), projective(a, 2)});
  CHECK(diagram_label(sum) == "1 (+) 3|4");
}
