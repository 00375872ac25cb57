#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "taukit/mat.hpp"
#include "taukit/quiver.hpp"

namespace taukit {

// A finite-dimensional basic algebra with a fixed adapted basis: every
// basis element b_i lies in e_s A e_t for recorded idempotents (src/tgt),
// the first n basis elements are the primitive orthogonal idempotents,
// and the radical is recorded as a row-span of homogeneous elements.
class BasicAlgebra {
 public:
  Field field;
  int dim = 0;
  int n = 0;  // number of idempotents / vertices
  std::vector<std::string> basis_label;
  std::vector<int> src, tgt;           // per basis element
  std::vector<std::string> vertex_label;
  // prod[i][j] = coefficient vector of b_i * b_j in the basis (size dim)
  std::vector<std::vector<std::vector<mpq_class>>> prod;
  // Rows span rad(A); each row is homogeneous (supported on one (s,t)).
  Mat radical;
  std::optional<QuiverPresentation> provenance;

  // idempotent i is basis element i by construction
  int idem(int i) const { return i; }

  std::vector<mpq_class> multiply(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) const;

  // dim e_s A e_t
  int hom_dim(int s, int t) const;
  std::vector<std::vector<int>> cartan() const;

  // set by register_algebra: the primary holds its opposite strongly, the
  // opposite points back weakly, so opposite(opposite(a)) == a by pointer
  mutable std::weak_ptr<const BasicAlgebra> self;
  mutable std::shared_ptr<const BasicAlgebra> op_link;
  mutable std::weak_ptr<const BasicAlgebra> op_weak;
};

using AlgebraPtr = std::shared_ptr<const BasicAlgebra>;

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Basis of the quotient path algebra: normal-form paths modulo the ideal
// generated by the relations, inside the path space of length <= bound.
// Throws std::runtime_error("not admissible within bound") when a path of
// maximal length survives reduction.
AlgebraPtr build_algebra(const QuiverPresentation& qp);

// Wrap an already-assembled algebra, eagerly constructing and linking its
// opposite so that opposite(opposite(a)) is pointer-identical to a.
AlgebraPtr register_algebra(BasicAlgebra a);

AlgebraPtr opposite(const AlgebraPtr& a);

ValidationReport validate(const BasicAlgebra& a);

// Map integer structure constants into another field and re-validate.
AlgebraPtr reinterpret_over_field(const AlgebraPtr& a, const Field& f);

}  // namespace taukit
