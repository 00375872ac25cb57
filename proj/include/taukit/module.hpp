#pragma once

#include <string>
#include <vector>

#include "taukit/algebra.hpp"

namespace taukit {

// A right module as a representation: one space per idempotent, one action
// matrix per algebra basis element. Row-vector convention: act(b) is the
// d_s x d_t matrix of m -> m*b for b in e_s A e_t.
struct AModule {
  AlgebraPtr alg;
  std::vector<int> dims;
  std::vector<Mat> act;  // indexed by algebra basis element

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  // offset of vertex v's block in the concatenated coordinate row
  int offset(int v) const;
  // the action of an arbitrary algebra element on the whole space,
  // restricted to source block s: returns the full total x total matrix
  Mat total_matrix_of(const std::vector<mpq_class>& elem) const;
};

// A morphism: one d_v(src) x d_v(tgt) matrix per vertex, intertwining all
// actions blockwise.
struct ModuleMap {
  AModule source, target;
  std::vector<Mat> f;

  Mat total_matrix() const;
  bool is_zero() const;
};

AModule zero_module(const AlgebraPtr& a);
AModule direct_sum(const std::vector<AModule>& parts);
bool same_module(const AModule& m, const AModule& n);  // literal equality
void check_module(const AModule& m);                   // throws on violated axioms

struct StandardModules {
  std::vector<AModule> proj, inj, simple;
};
StandardModules standard_modules(const AlgebraPtr& a);
AModule projective(const AlgebraPtr& a, int i);
AModule simple(const AlgebraPtr& a, int i);
AModule regular_module(const AlgebraPtr& a);

ModuleMap zero_map(const AModule& m, const AModule& n);
ModuleMap identity_map(const AModule& m);
ModuleMap compose(const ModuleMap& first, const ModuleMap& then);  // first, then "then"
ModuleMap map_from_total(const AModule& m, const AModule& n, const Mat& rows_concat);
ModuleMap add_maps(const ModuleMap& a, const ModuleMap& b);
ModuleMap scale_map(const ModuleMap& a, const mpq_class& c);

std::vector<ModuleMap> hom_basis(const AModule& m, const AModule& n);
int hom_dim(const AModule& m, const AModule& n);

// Yoneda: Hom(P_i, m) = m_i; the map sending the generator of e_iA to the
// given coordinate row of m at vertex i.
ModuleMap yoneda_map(const AlgebraPtr& a, int i, const AModule& m, const Mat& row_at_i);

// Submodule spanned by the given rows (must be action-invariant) and the
// corresponding quotient, with canonical inclusion/projection.
struct SubQuotient {
  AModule module;
  ModuleMap map;  // inclusion (sub -> m) or projection (m -> quotient)
};
SubQuotient sub_module(const AModule& m, const std::vector<Mat>& span_rows);
SubQuotient quotient_module(const AModule& m, const std::vector<Mat>& span_rows);

ModuleMap kernel(const ModuleMap& f);    // inclusion ker -> source
ModuleMap image(const ModuleMap& f);     // inclusion im -> target
ModuleMap cokernel(const ModuleMap& f);  // projection target -> coker

AModule dual(const AModule& m);  // over opposite(alg)
ModuleMap dual_map(const ModuleMap& f);

struct RadTopSoc {
  ModuleMap rad_incl;  // rad m -> m
  ModuleMap top_proj;  // m -> top m
  ModuleMap soc_incl;  // soc m -> m
};
RadTopSoc radical_top_socle(const AModule& m);

bool fac_contains(const AModule& t, const AModule& m);
bool sub_contains(const AModule& u, const AModule& n);
// trace of t in m as a submodule inclusion
SubQuotient trace_submodule(const AModule& t, const AModule& m);

ModuleMap right_approximation(const AModule& t, const AModule& x);  // add(t)-approx onto x
ModuleMap left_approximation(const AModule& x, const AModule& u);   // x into add(u)

// deterministic total order on modules (dimension vector, then action bytes)
int module_order(const AModule& a, const AModule& b);

// Assemble a module over a quiver-presented algebra from arrow matrices
// alone; longer path actions are derived and the result is checked.
AModule module_from_arrow_actions(const AlgebraPtr& a, const std::vector<int>& dims,
                                  const std::vector<Mat>& arrow_acts);

// --- decomposition & isomorphism (decompose.cpp) ---

struct CannotCertify : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fitting-lemma recursion; throws CannotCertify when neither a splitting
// nor a locality certificate is found within budget.
std::vector<AModule> decompose(const AModule& m);

bool is_indecomposable(const AModule& m);
bool indec_isomorphic(const AModule& m, const AModule& n);  // both certified indecomposable
bool is_isomorphic(const AModule& m, const AModule& n);

// multiset comparison up to isomorphism of two decompositions
bool summands_match(std::vector<AModule> a, std::vector<AModule> b);

// radical-filtration label, e.g. "1|2"; direct sums join with " (+) "
std::string diagram_label(const AModule& m);

}  // namespace taukit
