#pragma once

#include "taukit/homology.hpp"

namespace taukit {

// The endomorphism algebra B of a direct sum of pairwise non-isomorphic
// indecomposables, with a fixed basis of homomorphisms. Vertex i of B
// corresponds to summands[i], and a basis element in e_i B e_j is a map
// summands[j] -> summands[i]; multiplication u*v applies v first.
struct EndoData {
  AlgebraPtr algebra;
  std::vector<AModule> summands;
  std::vector<ModuleMap> basis_maps;  // per B basis element
};

EndoData endomorphism_algebra(const std::vector<AModule>& summands);

// Hom(T, m) as a right module over B, graded by Hom(summands[i], m) in the
// deterministic hom_basis order.
AModule hom_functor(const EndoData& bb, const AModule& m);
ModuleMap hom_functor_map(const EndoData& bb, const ModuleMap& f);

// y tensor_B T as a right module over the original algebra, for a right
// B-module y.
AModule tensor_functor(const EndoData& bb, const AModule& y);
ModuleMap tensor_functor_map(const EndoData& bb, const ModuleMap& f);

// Tor_1^B(y, T) over the original algebra.
AModule tor1_functor(const EndoData& bb, const AModule& y);

// Ext^1(T, m) as a right B-module.
AModule ext1_functor(const EndoData& bb, const AModule& m);

}  // namespace taukit
