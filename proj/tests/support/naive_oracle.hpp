#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dcut/graph.hpp"
#include "dcut/oracle.hpp"

namespace dcut::testing {

using RawCut = std::vector<std::pair<int, int>>;
using RawCutSet = std::set<RawCut>;

// Every bipartition of the whole vertex set, no component tricks and no
// shared code with the library oracle beyond the Graph accessors.
RawCutSet naive_d_cuts(const Graph& g, int d);
RawCutSet naive_minimal(const RawCutSet& all);
RawCutSet naive_maximal(const RawCutSet& all);

CutSet to_cut_set(const RawCutSet& raw);
EdgeCut cut(std::initializer_list<std::pair<int, int>> edges);
Graph graph(int n, std::initializer_list<std::pair<int, int>> edges);

// Pairs {u,v} lying on a common side of every naive d-cut.
std::vector<std::vector<char>> naive_together(const Graph& g, int d);

std::string describe(const CutSet& cuts);

}  // namespace dcut::testing
