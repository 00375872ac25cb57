#pragma once

// Shared in-code fixtures for the unit tests. The CLI-facing fixtures live
// as data files under data/; these are the same presentations built inline
// so unit tests do not depend on the filesystem.

#include "taukit/quiver.hpp"

namespace taukit::fix {

// 1 <-> 2 with both length-2 cycles zero (the 4-dimensional self-injective
// Nakayama algebra).
inline QuiverPresentation crossed_two_vertex() {
  QuiverPresentation qp;
  qp.field = Field::rational();
  qp.vertices = {"1", "2"};
  qp.arrows = {{"a", 0, 1}, {"b", 1, 0}};
  qp.relations = {Relation{{RelationTerm{1, {0, 1}}}}, Relation{{RelationTerm{1, {1, 0}}}}};
  return qp;
}

// 1 -> 2 -> ... -> n, no relations.
inline QuiverPresentation linear_quiver(int n) {
  QuiverPresentation qp;
  qp.field = Field::rational();
  for (int i = 1; i <= n; ++i) qp.vertices.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) qp.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
  return qp;
}

// 1 -> 2 -> 3 with the length-2 path zero.
inline QuiverPresentation one_rel_a3() {
  QuiverPresentation qp = linear_quiver(3);
  qp.relations = {Relation{{RelationTerm{1, {0, 1}}}}};
  return qp;
}

// 1 <-> 2 <-> 3 with a1*b2 = 0 and a2*b1 = b2*a1 (the Auslander algebra of
// K[x]/(x^3)).
inline QuiverPresentation auslander_kx3() {
  QuiverPresentation qp;
  qp.field = Field::rational();
  qp.vertices = {"1", "2", "3"};
  qp.arrows = {{"a1", 0, 1}, {"b2", 1, 0}, {"a2", 1, 2}, {"b1", 2, 1}};
  // arrow indices: a1=0 b2=1 a2=2 b1=3
  qp.relations = {Relation{{RelationTerm{1, {0, 1}}}},
                  Relation{{RelationTerm{1, {2, 3}}, RelationTerm{-1, {1, 0}}}}};
  qp.path_length_bound = 6;
  return qp;
}

// one vertex, loop x, x^2 = 0.
inline QuiverPresentation kx2() {
  QuiverPresentation qp;
  qp.field = Field::rational();
  qp.vertices = {"1"};
  qp.arrows = {{"x", 0, 0}};
  qp.relations = {Relation{{RelationTerm{1, {0, 0}}}}};
  qp.path_length_bound = 4;
  return qp;
}

// A4 with one relation a2*a3 = 0 (first iterated-tilt stage).
inline QuiverPresentation a4_rel23() {
  QuiverPresentation qp = linear_quiver(4);
  qp.relations = {Relation{{RelationTerm{1, {1, 2}}}}};
  return qp;
}

// A4 with relations a1*a2 = a2*a3 = 0 (second iterated-tilt stage).
inline QuiverPresentation a4_rel12_23() {
  QuiverPresentation qp = linear_quiver(4);
  qp.relations = {Relation{{RelationTerm{1, {0, 1}}}}, Relation{{RelationTerm{1, {1, 2}}}}};
  return qp;
}

}  // namespace taukit::fix
