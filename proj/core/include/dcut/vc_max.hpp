#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "dcut/graph.hpp"
#include "dcut/params.hpp"
#include "dcut/stream.hpp"

namespace dcut {

struct PendantClique {
  Vertex anchor;                // id in G
  std::vector<Vertex> members;  // ids in H
};

struct VcMaxKernel {
  // T is a set of at most d cover vertices; members are all outside vertices
  // with neighbourhood exactly T.
  struct BadSet {
    std::vector<Vertex> t;
    std::vector<Vertex> members;         // ids in G, sorted
    std::vector<Vertex> marked_members;  // lowest-id members kept in H
  };

  std::shared_ptr<const Graph> g;
  Graph h;
  std::vector<Vertex> to_g;  // -1 on clique vertices
  std::vector<Vertex> from_g;
  std::vector<Vertex> marked;
  std::vector<Vertex> cover;
  int d = 1;
  std::vector<PendantClique> cliques;
  std::vector<int> clique_size;   // per vertex of G, 0 when it anchors no clique
  std::vector<BadSet> bad;        // sorted by t
  std::vector<int> bad_of;        // per vertex of G, index into bad or -1
  std::vector<char> in_clique;    // per vertex of H
  bool identity = false;
};

struct MarkVcOptions {
  bool small_input_identity = true;  // identity kernel when |V(G)| <= |S|^(d+1)
};

VcMaxKernel mark_vc(const Graph& g, const VertexCoverWitness& s, int d, MarkVcOptions opts = {});

// Both edge sets in ids of G.
bool equivalent_edge_sets(const VcMaxKernel& k, const EdgeCut& f1, const EdgeCut& f2);
// f in ids of H; bad_index selects T.
std::optional<int> r_suitability(const VcMaxKernel& k, const EdgeCut& f, std::size_t bad_index);
bool touches_cliques(const VcMaxKernel& k, const EdgeCut& f);
// f is a maximal d-cut of H; streams its equivalence class in ids of G.
void enum_equivalent_max(const VcMaxKernel& k, const EdgeCut& f, const CutSink& sink, StreamStats* stats = nullptr);

double vc_max_size_bound(std::size_t s, int d);

}  // namespace dcut
