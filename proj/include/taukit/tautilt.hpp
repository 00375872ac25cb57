#pragma once

#include "taukit/homology.hpp"

namespace taukit {

bool is_tau_rigid(const AModule& m);      // Hom(m, tau m) = 0
bool is_tau_inv_rigid(const AModule& m);  // Hom(tau_inv m, m) = 0
bool is_tau_tilting(const AModule& m);
bool is_tau_inv_tilting(const AModule& m);

// filter a complete indecomposable catalog down to the tau-rigid members,
// deduplicated and deterministically sorted
std::vector<AModule> indec_tau_rigid_catalog(const AlgebraPtr& a, const std::vector<AModule>& indecs);

struct SttPair {
  std::vector<AModule> m_summands;  // tau-rigid part, sorted
  std::vector<int> p_vertices;      // support projectives
  AModule m, p;                     // assembled direct sums
};

// all support tau-tilting pairs over a complete catalog of indecomposable
// tau-rigid modules
std::vector<SttPair> stt_pairs(const AlgebraPtr& a, const std::vector<AModule>& catalog);

struct SttQuiver {
  std::vector<SttPair> pairs;
  std::vector<std::pair<int, int>> edges;  // Hasse covers, larger -> smaller
  int source = -1, sink = -1;
};

SttQuiver stt_hasse_quiver(const AlgebraPtr& a, const std::vector<SttPair>& pairs);

std::string stt_dot(const SttQuiver& q);

}  // namespace taukit
