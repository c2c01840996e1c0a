#pragma once

#include <memory>
#include <vector>

#include "dcut/graph.hpp"
#include "dcut/params.hpp"
#include "dcut/stream.hpp"
#include "dcut/vc_max.hpp"

namespace dcut {

struct NdKernel {
  // A nice module X with at least 3d+2 vertices and its neighbourhood T_X.
  struct BadModule {
    int module;
    std::vector<Vertex> t;        // ids in G
    std::vector<Vertex> members;  // X, ids in G
    std::vector<Vertex> kept;     // X ∩ V(H)
    std::vector<Vertex> anchors;  // S1(X): kept vertices carrying a pendant clique
  };

  std::shared_ptr<const Graph> g;
  NeighborhoodDecomposition nd;
  Graph h;
  std::vector<Vertex> to_g;  // -1 on clique vertices
  std::vector<Vertex> from_g;
  int d = 1;
  std::vector<PendantClique> cliques;
  std::vector<int> clique_size;  // per vertex of G
  std::vector<char> in_clique;   // per vertex of H
  std::vector<BadModule> bad;
  std::vector<int> bad_of;  // per vertex of G
};

NdKernel mark_nd(const Graph& g, const NeighborhoodDecomposition& nd, int d);
bool touches_cliques(const NdKernel& k, const EdgeCut& f);
// f is a minimal d-cut of H; result in ids of G.
std::vector<EdgeCut> lift_nd_min(const NdKernel& k, const EdgeCut& f);
// f is a d-cut (all) or maximal d-cut (max) of H.
void enum_nd(const NdKernel& k, const EdgeCut& f, const CutSink& sink, StreamStats* stats = nullptr);

std::size_t nd_size_bound(std::size_t modules, int d);

}  // namespace dcut
