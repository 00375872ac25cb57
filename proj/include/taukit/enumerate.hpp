#pragma once

#include "taukit/module.hpp"

namespace taukit {

struct EnumerationBound {
  std::vector<int> caps;             // per vertex; empty: dimension vector of the regular module
  unsigned long budget = 1ul << 24;  // candidate arrow-matrix tuples across all dimension vectors
};

// All indecomposable right modules with dimension vector bounded by the caps,
// one representative per isomorphism class, in a deterministic order. The
// algebra must carry a quiver presentation over a prime field. Throws when
// the candidate count exceeds the budget instead of truncating silently.
std::vector<AModule> enumerate_indecomposables(const AlgebraPtr& a, const EnumerationBound& bound);

// Re-run with every cap raised by one; true iff no new isomorphism class
// appears. Heuristic completeness evidence only.
bool catalog_stability_probe(const AlgebraPtr& a, const EnumerationBound& bound);

// Re-read the arrow matrices of each catalog member over another realization
// of the same presentation (typically over Q) and re-validate the module
// axioms, indecomposability, and pairwise non-isomorphism.
std::vector<AModule> transfer_catalog(const std::vector<AModule>& catalog, const AlgebraPtr& target);

}  // namespace taukit
