#pragma once

#include "taukit/endo.hpp"
#include "taukit/tautilt.hpp"

namespace taukit {

// right annihilator {a in A : m.a = 0} is zero
bool is_faithful(const AModule& m);

bool is_partial_tilting(const AModule& m);  // pd <= 1 and Ext^1(m,m) = 0
bool is_classical_tilting(const AModule& m);
bool is_classical_cotilting(const AModule& m);

// pd <= n, Ext^i(m,m) = 0 for 1 <= i <= n, and the regular module has a
// coresolution by iterated left add(m)-approximations of length <= n.
bool is_tilting_n(const AModule& m, int n);
bool is_cotilting_n(const AModule& m, int n);

// Membership in the torsion pair induced by a tilting module. Over the base
// algebra: Torsion iff Ext^1(T,m) = 0, Free iff Hom(T,m) = 0. Over the
// endomorphism algebra: Torsion iff y (x) T = 0, Free iff Tor_1(y,T) = 0.
enum class TorsionTag { Torsion, Free, Both, Neither };

TorsionTag torsion_tag_over_base(const AModule& t, const AModule& m);
TorsionTag torsion_tag_over_endo(const EndoData& bb, const AModule& y);

// every member of a complete indecomposable catalog over End(T) lands in one
// of the two torsion classes
bool is_splitting_tilting(const EndoData& bb, const std::vector<AModule>& catalog);

// Hom(n, tau T) as a right module over the opposite of End(tau T), acting by
// postcomposition; bb holds the tau T summands.
AModule hom_into_functor(const EndoData& bb, const AModule& n);

// A chain A_0, A_1, ..., with A_0 hereditary and A_{i+1} the endomorphism
// algebra of a classical tilting module over A_i.
struct IteratedChain {
  std::vector<AlgebraPtr> algebras;
  std::vector<EndoData> steps;  // steps[i] is the tilting data over algebras[i]
};

IteratedChain begin_chain(const AlgebraPtr& a0);
void extend_chain(IteratedChain& chain, const std::vector<AModule>& t_summands);

struct GorensteinReport {
  HomDim right_id, left_id;  // id of the regular module on each side
  bool gorenstein = false;
};
GorensteinReport selfinjective_dims(const AlgebraPtr& a, int cutoff = -1);
bool is_iwanaga_gorenstein(const AlgebraPtr& a, int cutoff = -1);

// Three independently computed conditions that are equivalent for every
// algebra: id of the regular module <= 1 on the right, the dual of the
// regular module is tau-rigid, and the regular module is tau-inv-rigid.
struct InjDimOneReport {
  HomDim id_reg;
  bool id_le_1 = false, dual_reg_tau_rigid = false, reg_tau_inv_rigid = false;
  bool consistent = false;
};
InjDimOneReport verify_inj_dim_one_equivalence(const AlgebraPtr& a);

// Over a complete indecomposable catalog: every classical cotilting module
// is classical tilting if and only if the algebra is 1-Gorenstein.
struct CotiltingTiltingReport {
  bool gorenstein1 = false;
  int cotilting_count = 0, tilting_among = 0;
  bool consistent = false;
};
CotiltingTiltingReport verify_cotilting_is_tilting(const AlgebraPtr& a,
                                                  const std::vector<AModule>& catalog);

// If every support pair module with full support is tau-inv-tilting, the
// algebra must be 1-Gorenstein (one implication only).
struct TauInvTiltingReport {
  bool premise = false, conclusion = false, consistent = false;
};
TauInvTiltingReport verify_tau_inv_tilting_gorenstein(const AlgebraPtr& a,
                                                      const std::vector<SttPair>& pairs);

// Wakamatsu-style vanishing: the kernel of a right add(t)-approximation has
// no maps to tau t; the cokernel of a left add(tau t)-approximation receives
// no maps from t. Requires t tau-rigid.
bool wakamatsu_check(const AModule& t, const AModule& x);
bool wakamatsu_check_dual(const AModule& t, const AModule& y);

struct PdBoundReport {
  bool precondition_ok = false;
  HomDim lhs, rhs;
  bool holds = false;
};

// pd over End(T) of Hom(T,m) <= pd of m, for m in Fac T with pd m <= 1 or
// Ext^i(T, m + T) vanishing up to the cutoff.
PdBoundReport check_pd_bound_fac(const EndoData& bb, const AModule& m, int cutoff = -1);

// pd over the opposite of End(tau T) of Hom(n, tau T) <= id of n, for n in
// Sub tau T with id n <= 1 or Ext^i(n + tau T, tau T) vanishing; bb holds
// the tau T summands.
PdBoundReport check_pd_bound_sub(const EndoData& bb, const AModule& n, int cutoff = -1);

}  // namespace taukit
