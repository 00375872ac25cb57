#pragma once

#include "taukit/module.hpp"

namespace taukit {

// Minimal projective cover P(m) -> m (surjective, kernel superfluous).
ModuleMap projective_cover(const AModule& m);

// Minimal presentation P1 -d-> P0 -cover-> m -> 0 with the vertex
// multiset of each projective recorded for transpose extraction.
struct ProjPresentation {
  std::vector<int> p0_vertices, p1_vertices;
  ModuleMap d;      // P1 -> P0
  ModuleMap cover;  // P0 -> m
};
ProjPresentation minimal_presentation(const AModule& m);

// Minimal projective resolution truncated at the given depth:
// P[depth] -> ... -> P[1] -> P[0] -> m, with d[t] : P[t+1] -> P[t].
struct Resolution {
  std::vector<AModule> p;
  std::vector<std::vector<int>> verts;
  std::vector<ModuleMap> d;
  ModuleMap cover;  // P[0] -> m
};
Resolution build_resolution(const AModule& m, int depth);

// Cokernel of the A-dual of a minimal presentation; a module over the
// opposite algebra, with no projective summands.
AModule transpose(const AModule& m);

AModule tau(const AModule& m);      // dual of the transpose
AModule tau_inv(const AModule& m);  // transpose of the dual

// A homological dimension: finite value, certified infinite (by syzygy
// recurrence), or unknown (cutoff reached without recurrence).
struct HomDim {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Unknown;
  int value = -1;

  bool finite() const { return kind == Kind::Finite; }
  bool le(int b) const { return kind == Kind::Finite && value <= b; }
  std::string str() const;
};

// cutoff < 0 means the default, 4 * dim A
HomDim pd_module(const AModule& m, int cutoff = -1);
HomDim id_module(const AModule& m, int cutoff = -1);
HomDim gl_dim(const AlgebraPtr& a, int cutoff = -1);

// dim Ext^i(m, n) computed from a minimal resolution of m
int ext_dim(const AModule& m, const AModule& n, int i);

// Hom modulo maps factoring through projectives / injectives
int stable_hom_dim_proj(const AModule& m, const AModule& n);
int stable_hom_dim_inj(const AModule& m, const AModule& n);

}  // namespace taukit
