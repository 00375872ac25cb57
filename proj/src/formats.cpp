#include "taukit/formats.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace taukit {

namespace {

struct Line {
  int no;
  std::string text;
};

std::vector<Line> logical_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    size_t b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = raw.find_last_not_of(" \t\r");
    out.push_back({no, raw.substr(b, e - b + 1)});
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

int find_col(const std::string& line, const std::string& token) {
  size_t p = line.find(token);
  return p == std::string::npos ? 1 : static_cast<int>(p) + 1;
}

long parse_long(const std::string& s, int line, int col) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'", line, col);
  }
}

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// [<int>*]<name>(*<name>)*
RelationTerm parse_term(const QuiverPresentation& qp, const std::string& term, int sign,
                        const Line& ln) {
  RelationTerm t;
  t.coef = sign;
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos <= term.size()) {
    size_t star = term.find('*', pos);
    parts.push_back(term.substr(pos, star == std::string::npos ? std::string::npos : star - pos));
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  size_t first = 0;
  if (is_integer_token(parts[0])) {
    t.coef *= parse_long(parts[0], ln.no, find_col(ln.text, parts[0]));
    first = 1;
  }
  if (first == parts.size())
    throw ParseError("relation term has no arrows", ln.no, find_col(ln.text, term));
  for (size_t i = first; i < parts.size(); ++i) {
    int k = qp.arrow_index(parts[i]);
    if (k < 0) throw ParseError("unknown arrow '" + parts[i] + "'", ln.no, find_col(ln.text, parts[i]));
    t.arrows.push_back(k);
  }
  return t;
}

// [[a,b],[c,d]] with rational entries; row count may be zero
Mat parse_matrix(const Field& F, int rows, int cols, const std::string& lit, const Line& ln) {
  std::string s;
  for (char c : lit)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg, ln.no, find_col(ln.text, lit.empty() ? ln.text : lit));
  };
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw fail("matrix literal must be bracketed");
  std::string body = s.substr(1, s.size() - 2);
  std::vector<std::vector<std::string>> entries;
  size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] == ',') {
      ++pos;
      continue;
    }
    if (body[pos] != '[') throw fail("expected a row '['");
    size_t close = body.find(']', pos);
    if (close == std::string::npos) throw fail("unterminated row");
    std::string row = body.substr(pos + 1, close - pos - 1);
    entries.push_back({});
    size_t rp = 0;
    while (rp < row.size()) {
      size_t comma = row.find(',', rp);
      entries.back().push_back(row.substr(rp, comma == std::string::npos ? std::string::npos : comma - rp));
      if (comma == std::string::npos) break;
      rp = comma + 1;
    }
    pos = close + 1;
  }
  if (static_cast<int>(entries.size()) != rows)
    throw fail("expected " + std::to_string(rows) + " rows, got " + std::to_string(entries.size()));
  Mat m(F, rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(entries[i].size()) != cols && !(cols == 0 && entries[i].size() == 1 && entries[i][0].empty()))
      throw fail("expected " + std::to_string(cols) + " entries in row " + std::to_string(i + 1));
    for (int j = 0; j < cols; ++j) {
      try {
        m.at(i, j) = F.reduce(mpq_class(entries[i][j]));
      } catch (const std::exception&) {
        throw ParseError("bad matrix entry '" + entries[i][j] + "'", ln.no, find_col(ln.text, entries[i][j]));
      }
    }
  }
  return m;
}

std::string print_matrix(const Mat& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m.at(i, j).get_str();
    }
    s += "]";
  }
  return s + "]";
}

struct ModuleLines {
  std::string over;
  std::vector<std::pair<std::string, int>> dims;            // vertex label, count
  std::vector<std::pair<std::string, Line>> basis;          // arrow name, literal line
};

ModuleLines split_module_lines(const std::string& text) {
  ModuleLines out;
  for (const Line& ln : logical_lines(text)) {
    auto w = words(ln.text);
    if (w[0] == "module") {
      if (w.size() != 3 || w[1] != "over") throw ParseError("expected 'module over <file>'", ln.no, 1);
      out.over = w[2];
    } else if (w[0] == "dim") {
      if (w.size() != 3 || w[1].back() != ':')
        throw ParseError("expected 'dim <vertex>: <n>'", ln.no, 1);
      out.dims.push_back({w[1].substr(0, w[1].size() - 1),
                          static_cast<int>(parse_long(w[2], ln.no, find_col(ln.text, w[2])))});
    } else if (w[0] == "basis") {
      if (w.size() < 3 || w[1].back() != ':')
        throw ParseError("expected 'basis <arrow>: [[row],...]'", ln.no, 1);
      std::string lit;
      for (size_t i = 2; i < w.size(); ++i) lit += w[i];
      out.basis.push_back({w[1].substr(0, w[1].size() - 1), Line{ln.no, lit}});
    } else {
      throw ParseError("unknown declaration '" + w[0] + "'", ln.no, 1);
    }
  }
  if (out.over.empty()) throw ParseError("missing 'module over <file>' line", 1, 1);
  return out;
}

}  // namespace

QuiverPresentation parse_algebra_text(const std::string& text) {
  QuiverPresentation qp;
  qp.field = Field::rational();
  bool field_seen = false;
  std::vector<Line> deferred_relations;
  for (const Line& ln : logical_lines(text)) {
    auto w = words(ln.text);
    if (w[0] == "field") {
      if (field_seen) throw ParseError("duplicate field declaration", ln.no, 1);
      field_seen = true;
      if (w.size() == 2 && w[1] == "Q")
        qp.field = Field::rational();
      else if (w.size() == 3 && w[1] == "Fp")
        qp.field = Field::prime(parse_long(w[2], ln.no, find_col(ln.text, w[2])));
      else
        throw ParseError("expected 'field Q' or 'field Fp <prime>'", ln.no, 1);
    } else if (w[0] == "vertex") {
      if (w.size() != 2) throw ParseError("expected 'vertex <label>'", ln.no, 1);
      if (qp.vertex_index(w[1]) >= 0) throw ParseError("duplicate vertex '" + w[1] + "'", ln.no, find_col(ln.text, w[1]));
      qp.vertices.push_back(w[1]);
    } else if (w[0] == "arrow") {
      // arrow <name>: <src> -> <tgt>
      if (w.size() != 5 || w[1].back() != ':' || w[3] != "->")
        throw ParseError("expected 'arrow <name>: <src> -> <tgt>'", ln.no, 1);
      std::string name = w[1].substr(0, w[1].size() - 1);
      if (qp.arrow_index(name) >= 0) throw ParseError("duplicate arrow '" + name + "'", ln.no, find_col(ln.text, name));
      int s = qp.vertex_index(w[2]), t = qp.vertex_index(w[4]);
      if (s < 0) throw ParseError("unknown vertex '" + w[2] + "'", ln.no, find_col(ln.text, w[2]));
      if (t < 0) throw ParseError("unknown vertex '" + w[4] + "'", ln.no, find_col(ln.text, w[4]));
      qp.arrows.push_back({name, s, t});
    } else if (w[0] == "relation") {
      deferred_relations.push_back(ln);
    } else if (w[0] == "pathlen_bound") {
      if (w.size() != 2) throw ParseError("expected 'pathlen_bound <n>'", ln.no, 1);
      qp.path_length_bound = static_cast<int>(parse_long(w[1], ln.no, find_col(ln.text, w[1])));
    } else {
      throw ParseError("unknown declaration '" + w[0] + "'", ln.no, 1);
    }
  }
  for (const Line& ln : deferred_relations) {
    auto w = words(ln.text);
    if (w.size() < 2) throw ParseError("empty relation", ln.no, 1);
    Relation rel;
    int sign = 1;
    size_t i = 1;
    if (w[i] == "-") {
      sign = -1;
      ++i;
    }
    while (i < w.size()) {
      rel.terms.push_back(parse_term(qp, w[i], sign, ln));
      ++i;
      if (i == w.size()) break;
      if (w[i] == "+")
        sign = 1;
      else if (w[i] == "-")
        sign = -1;
      else
        throw ParseError("expected '+' or '-' between terms", ln.no, find_col(ln.text, w[i]));
      ++i;
      if (i == w.size()) throw ParseError("dangling sign", ln.no, 1);
    }
    qp.relations.push_back(std::move(rel));
  }
  try {
    qp.check();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  }
  return qp;
}

std::string print_algebra_text(const QuiverPresentation& qp) {
  std::ostringstream out;
  out << "field " << (qp.field.is_rational() ? "Q" : "Fp " + std::to_string(qp.field.p)) << "\n";
  for (const auto& v : qp.vertices) out << "vertex " << v << "\n";
  for (const auto& a : qp.arrows)
    out << "arrow " << a.name << ": " << qp.vertices[a.src] << " -> " << qp.vertices[a.tgt] << "\n";
  for (const auto& rel : qp.relations) {
    out << "relation";
    for (size_t i = 0; i < rel.terms.size(); ++i) {
      mpq_class c = rel.terms[i].coef;
      bool neg = c < 0;
      if (neg) c = -c;
      out << (i == 0 ? (neg ? " - " : " ") : (neg ? " - " : " + "));
      if (c != 1) out << c.get_str() << "*";
      for (size_t k = 0; k < rel.terms[i].arrows.size(); ++k)
        out << (k ? "*" : "") << qp.arrows[rel.terms[i].arrows[k]].name;
    }
    out << "\n";
  }
  if (qp.path_length_bound >= 0) out << "pathlen_bound " << qp.path_length_bound << "\n";
  return out.str();
}

AlgebraPtr read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open algebra file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return build_algebra(parse_algebra_text(buf.str()));
}

AModule parse_module_text(const std::string& text, const AlgebraPtr& a) {
  if (!a->provenance) throw std::invalid_argument("module files need a quiver presentation");
  const QuiverPresentation& qp = *a->provenance;
  ModuleLines ml = split_module_lines(text);
  std::vector<int> dims(a->n, 0);
  for (const auto& [label, d] : ml.dims) {
    int v = qp.vertex_index(label);
    if (v < 0) throw std::runtime_error("unknown vertex '" + label + "' in module file");
    dims[v] = d;
  }
  std::vector<Mat> acts;
  for (size_t k = 0; k < qp.arrows.size(); ++k)
    acts.push_back(Mat(a->field, dims[qp.arrows[k].src], dims[qp.arrows[k].tgt]));
  for (const auto& [name, lit] : ml.basis) {
    int k = qp.arrow_index(name);
    if (k < 0) throw ParseError("unknown arrow '" + name + "'", lit.no, 1);
    acts[k] = parse_matrix(a->field, dims[qp.arrows[k].src], dims[qp.arrows[k].tgt], lit.text, lit);
  }
  return module_from_arrow_actions(a, dims, acts);
}

std::string print_module_text(const AModule& m, const std::string& over) {
  if (!m.alg->provenance) throw std::invalid_argument("module printing needs a quiver presentation");
  const QuiverPresentation& qp = *m.alg->provenance;
  std::ostringstream out;
  out << "module over " << over << "\n";
  for (int v = 0; v < m.alg->n; ++v) out << "dim " << qp.vertices[v] << ": " << m.dims[v] << "\n";
  for (size_t k = 0; k < qp.arrows.size(); ++k) {
    // arrows are exactly the length-one basis labels
    for (int b = m.alg->n; b < m.alg->dim; ++b)
      if (m.alg->basis_label[b] == qp.arrows[k].name && m.act[b].rows() > 0 &&
          m.act[b].cols() > 0 && !m.act[b].is_zero())
        out << "basis " << qp.arrows[k].name << ": " << print_matrix(m.act[b]) << "\n";
  }
  return out.str();
}

AModule read_module_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open module file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  ModuleLines ml = split_module_lines(text);
  auto dir = std::filesystem::path(path).parent_path();
  AlgebraPtr a = read_algebra_file((dir / ml.over).string());
  return parse_module_text(text, a);
}

}  // namespace taukit
