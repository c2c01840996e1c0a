#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "dcut/graph.hpp"
#include "dcut/params.hpp"

namespace dcut {

struct VcMinKernel {
  struct AttachedClique {
    Vertex anchor;                // id in H
    bool synthetic_anchor = false;  // anchor is a fresh pendant, not a vertex of G
    std::vector<Vertex> clique;   // ids in H
  };

  std::shared_ptr<const Graph> g;
  Graph h;
  std::vector<Vertex> to_g;  // -1 for vertices that do not exist in G
  std::vector<Vertex> marked;
  std::optional<AttachedClique> attached;
  bool disconnected = false;
  std::vector<Vertex> cover;
  int d = 1;
  std::vector<Vertex> outside_low;  // I \ Z with degree at most d, ids in G
};

VcMinKernel kernelize_vc_min(const Graph& g, const VertexCoverWitness& s, int d);
bool is_distinguished(const VcMinKernel& k, const EdgeCut& f);
// f is a minimal d-cut of k.h; the result is expressed in ids of G.
std::vector<EdgeCut> lift_vc_min(const VcMinKernel& k, const EdgeCut& f);

std::size_t vc_min_size_bound(std::size_t s, int d);

}  // namespace dcut
