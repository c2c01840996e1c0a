#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dcut/graph.hpp"
#include "dcut/params.hpp"
#include "dcut/stream.hpp"

namespace dcut {

struct VcAllKernel {
  std::shared_ptr<const Graph> g;
  Graph h;
  std::vector<Vertex> to_g;
  std::vector<Vertex> from_g;  // -1 outside H
  std::vector<Vertex> marked;
  std::vector<Vertex> cover;
  int d = 1;
  std::vector<Vertex> outside_low;  // I \ Z with 1 <= degree <= d, ids in G
  bool identity_fallback = false;
  std::string warning;
};

struct LegalContext {
  EdgeCut f;                         // kernel cut, ids in H
  std::vector<std::uint8_t> h_side;  // a realizing side assignment of H
  std::vector<Vertex> j_a, j_b;      // outside vertices whose neighbourhood lies in side 0 / side 1
  std::map<Vertex, int> load;        // crossing degree of each cover vertex, ids in G
};

VcAllKernel kernelize_vc_all(const Graph& g, const VertexCoverWitness& s, int d);
LegalContext legal_context(const VcAllKernel& k, const EdgeCut& f);
// p moves vertices of j_b to side 0, q moves vertices of j_a to side 1.
bool is_legal_pair(const VcAllKernel& k, const LegalContext& ctx, const std::vector<Vertex>& p,
                   const std::vector<Vertex>& q);
// Streams every legal extension of the kernel d-cut f, ids in G.
void enum_legal_extensions(const VcAllKernel& k, const EdgeCut& f, const CutSink& sink, StreamStats* stats = nullptr);
// Legal extensions, then for the canonical kernel cut of a connected H the
// cuts whose whole side lies outside H.
void lift_vc_all(const VcAllKernel& k, const EdgeCut& f, bool is_canonical, const CutSink& sink,
                 StreamStats* stats = nullptr);

std::size_t vc_all_size_bound(std::size_t s, int d);

}  // namespace dcut
