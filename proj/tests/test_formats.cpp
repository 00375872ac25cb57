#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taukit/formats.hpp"
#include "taukit/testfix.hpp"

using namespace taukit;

namespace {

const std::string kData = TAUKIT_DATA_DIR;

bool same_presentation(const QuiverPresentation& x, const QuiverPresentation& y) {
  if (x.field != y.field || x.vertices != y.vertices) return false;
  if (x.arrows.size() != y.arrows.size() || x.relations.size() != y.relations.size()) return false;
  for (size_t i = 0; i < x.arrows.size(); ++i)
    if (x.arrows[i].name != y.arrows[i].name || x.arrows[i].src != y.arrows[i].src ||
        x.arrows[i].tgt != y.arrows[i].tgt)
      return false;
  for (size_t i = 0; i < x.relations.size(); ++i) {
    const auto& a = x.relations[i].terms;
    const auto& b = y.relations[i].terms;
    if (a.size() != b.size()) return false;
    for (size_t j = 0; j < a.size(); ++j)
      if (a[j].coef != b[j].coef || a[j].arrows != b[j].arrows) return false;
  }
  return x.path_length_bound == y.path_length_bound;
}

}  // namespace

TEST_CASE("algebra text round trips through print and parse") {
  for (auto qp : {fix::crossed_two_vertex(), fix::one_rel_a3(), fix::auslander_kx3(), fix::kx2()}) {
    auto parsed = parse_algebra_text(print_algebra_text(qp));
    CHECK(same_presentation(parsed, parse_algebra_text(print_algebra_text(parsed))));
    CHECK(build_algebra(parsed)->dim == build_algebra(qp)->dim);
  }
  // signed and scaled terms survive the trip
  std::string text =
      "field Fp 3\nvertex 1\nvertex 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n"
      "relation 2*a*b*a - a*b*a\npathlen_bound 5\n";
  auto qp = parse_algebra_text(text);
  REQUIRE(qp.relations.size() == 1);
  REQUIRE(qp.relations[0].terms.size() == 2);
  CHECK(qp.relations[0].terms[0].coef == 2);
  CHECK(qp.relations[0].terms[1].coef == -1);
  CHECK(qp.field == Field::prime(3));
  CHECK(same_presentation(qp, parse_algebra_text(print_algebra_text(qp))));
}

TEST_CASE("data files build the expected algebras") {
  CHECK(read_algebra_file(kData + "/ex2.9.alg")->dim == 4);
  CHECK(read_algebra_file(kData + "/ex2.10.alg")->dim == 5);
  CHECK(read_algebra_file(kData + "/a4.alg")->dim == 10);
  CHECK(read_algebra_file(kData + "/ex3.8-a1.alg")->dim == 8);
  CHECK(read_algebra_file(kData + "/ex3.8-a2.alg")->dim == 7);
  CHECK(read_algebra_file(kData + "/ex4.4.alg")->dim == 14);
  CHECK(read_algebra_file(kData + "/kx2.alg")->dim == 2);
}

TEST_CASE("module files load, validate, and match the named modules") {
  auto p2 = read_module_file(kData + "/ex2.9-p2.mod");
  CHECK(is_isomorphic(p2, projective(p2.alg, 1)));
  auto s2 = read_module_file(kData + "/ex2.9-s2.mod");
  CHECK(is_isomorphic(s2, simple(s2.alg, 1)));
  auto t1 = read_module_file(kData + "/ex4.4-t1.mod");
  CHECK(is_isomorphic(t1, projective(t1.alg, 0)));
  auto t2 = read_module_file(kData + "/ex4.4-t2.mod");
  CHECK(is_isomorphic(t2, projective(t2.alg, 1)));
  auto m = read_module_file(kData + "/ex4.4-m.mod");
  CHECK(m.dims == std::vector<int>{0, 1, 1});
  auto p1 = read_module_file(kData + "/ex3.8-t1-2.mod");
  CHECK(is_isomorphic(p1, projective(p1.alg, 0)));
}

TEST_CASE("module text round trips through print and parse") {
  for (const char* name : {"/ex4.4-t2.mod", "/ex2.10-t1.mod", "/ex2.9-s2.mod"}) {
    auto m = read_module_file(kData + name);
    auto again = parse_module_text(print_module_text(m, "unused.alg"), m.alg);
    CHECK(again.dims == m.dims);
    bool equal = true;
    for (size_t b = 0; b < m.act.size(); ++b)
      if (!(again.act[b] == m.act[b])) equal = false;
    CHECK(equal);
  }
}

TEST_CASE("rational matrix entries parse over Q") {
  auto a = build_algebra(fix::linear_quiver(2));
  auto m = parse_module_text("module over x\ndim 1: 1\ndim 2: 1\nbasis a1: [[1/2]]\n", a);
  CHECK(m.act[2].at(0, 0) == mpq_class(1, 2));
}

TEST_CASE("malformed input reports line and column") {
  try {
    parse_algebra_text("field Q\nvertex 1\narrow a: 1 -> 9\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.col > 1);
  }
  CHECK_THROWS_AS(parse_algebra_text("field Q\nvertex 1\nvertex 1\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_text("widget 7\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_text("field Q\nvertex 1\narrow x: 1 -> 1\nrelation x*y\n"),
                  ParseError);
  auto a = build_algebra(fix::linear_quiver(2));
  CHECK_THROWS_AS(parse_module_text("module over x\ndim 1: 1\ndim 2: 1\nbasis a1: [[1,2]]\n", a),
                  ParseError);
  CHECK_THROWS_AS(parse_module_text("dim 1: 1\n", a), ParseError);
}
