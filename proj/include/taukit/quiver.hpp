#pragma once

#include <string>
#include <vector>

#include "taukit/field.hpp"

namespace taukit {

struct Arrow {
  std::string name;
  int src = 0, tgt = 0;  // vertex indices
};

// A linear combination of parallel paths; each path is a list of arrow
// indices composed left to right (a then b is the word {a,b}).
struct RelationTerm {
  mpq_class coef;
  std::vector<int> arrows;
};

struct Relation {
  std::vector<RelationTerm> terms;
};

struct QuiverPresentation {
  Field field;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  int path_length_bound = -1;  // -1: use default 2*|arrows|+2

  int vertex_index(const std::string& label) const;
  int arrow_index(const std::string& name) const;
  int effective_bound() const;

  // Throws std::invalid_argument on malformed data: non-parallel relation
  // terms, relation terms of path length < 2, dangling arrow endpoints.
  void check() const;
};

}  // namespace taukit
