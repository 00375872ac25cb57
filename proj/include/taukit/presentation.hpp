#pragma once

#include "taukit/module.hpp"

namespace taukit {

// An isomorphism from algebra b onto algebra a: vertex_map sends b-vertices
// to a-vertices, and coeff row j holds the coordinates of the image of b's
// j-th basis element in a's basis.
struct AlgebraIso {
  AlgebraPtr from, to;
  std::vector<int> vertex_map;
  Mat coeff;
};

// Search for a structure-constant isomorphism. At least one side must carry
// a quiver presentation; arrow images are sought among radical elements
// that stay independent modulo the radical square, with scalings solved
// from the relations. Returns nothing when no isomorphism is found within
// this search space.
std::optional<AlgebraIso> algebras_isomorphic(const AlgebraPtr& a, const AlgebraPtr& b);

// The module over iso.from obtained by pulling back the action of iso.to.
AModule transport_module(const AlgebraIso& iso, const AModule& m);

// Reconstruct a quiver presentation for an algebra that was assembled
// without one (for instance an endomorphism algebra). Arrows come from
// radical elements independent modulo the radical square; relations span
// the kernel of path evaluation. The candidate is certified by rebuilding
// the algebra and matching the full multiplication table; returns nothing
// when certification fails.
std::optional<QuiverPresentation> recover_presentation(const AlgebraPtr& a);

}  // namespace taukit
