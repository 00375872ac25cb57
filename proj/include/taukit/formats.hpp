#pragma once

#include <stdexcept>

#include "taukit/module.hpp"

namespace taukit {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(col_) +
                           ": " + msg),
        line(line_),
        col(col_) {}
};

// One declaration per line; '#' starts a comment.
//   field Q | field Fp <prime>
//   vertex <label>
//   arrow <name>: <src> -> <tgt>
//   relation [-]<term> (+|-) <term> ...   with term = [<int>*]<name>(*<name>)*
//   pathlen_bound <n>
QuiverPresentation parse_algebra_text(const std::string& text);
std::string print_algebra_text(const QuiverPresentation& qp);
AlgebraPtr read_algebra_file(const std::string& path);

// Module files:
//   module over <algebra-file>
//   dim <vertex>: <n>            (omitted vertices have dimension 0)
//   basis <arrow>: [[row],...]   (omitted arrows act as zero; longer paths derived)
AModule parse_module_text(const std::string& text, const AlgebraPtr& a);
std::string print_module_text(const AModule& m, const std::string& over);
AModule read_module_file(const std::string& path);

}  // namespace taukit
