#include "taukit/quiver.hpp"

#include <stdexcept>

namespace taukit {

int QuiverPresentation::vertex_index(const std::string& label) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return static_cast<int>(i);
  return -1;
}

int QuiverPresentation::arrow_index(const std::string& name) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

int QuiverPresentation::effective_bound() const {
  return path_length_bound > 0 ? path_length_bound : 2 * static_cast<int>(arrows.size()) + 2;
}

void QuiverPresentation::check() const {
  const int nv = static_cast<int>(vertices.size());
  if (nv == 0) throw std::invalid_argument("quiver has no vertices");
  for (const auto& a : arrows)
    if (a.src < 0 || a.src >= nv || a.tgt < 0 || a.tgt >= nv)
      throw std::invalid_argument("arrow " + a.name + " has a dangling endpoint");
  for (const auto& r : relations) {
    if (r.terms.empty()) throw std::invalid_argument("empty relation");
    int s = -1, t = -1;
    for (const auto& term : r.terms) {
      if (term.arrows.size() < 2) throw std::invalid_argument("relation term of path length < 2");
      for (size_t k = 0; k + 1 < term.arrows.size(); ++k)
        if (arrows[term.arrows[k]].tgt != arrows[term.arrows[k + 1]].src)
          throw std::invalid_argument("relation term is not a composable path");
      int ts = arrows[term.arrows.front()].src;
      int tt = arrows[term.arrows.back()].tgt;
      if (s == -1) {
        s = ts;
        t = tt;
      } else if (s != ts || t != tt) {
        throw std::invalid_argument("relation terms are not parallel paths");
      }
    }
  }
}

}  // namespace taukit
