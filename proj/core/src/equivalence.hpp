#pragma once

#include <algorithm>
#include <vector>

#include "dcut/graph.hpp"
#include "dcut/stream.hpp"

namespace dcut::detail {

// One replaceable neighbourhood class: pick |current| vertices of pool, either
// the kernel's own choice or a set containing a vertex the kernel dropped.
struct Choice {
  const std::vector<Vertex>* pool;  // sorted, ids in G
  const std::vector<Vertex>* kept;  // sorted subset of pool present in the kernel
  const std::vector<Vertex>* t;     // common neighbourhood of pool
  std::vector<Vertex> current;
};

inline bool sizes_are_consecutive(std::vector<int> sizes, int d) {
  std::sort(sizes.begin(), sizes.end());
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] != 2 * d + 1 + static_cast<int>(i)) return false;
  return !sizes.empty();
}

class EqvEnumerator {
 public:
  EqvEnumerator(std::vector<Edge> base, std::vector<Choice> choices, Emitter& out)
      : edges_(std::move(base)), choices_(std::move(choices)), out_(out) {}

  void run() {
    out_.node();
    level(0);
  }

 private:
  void level(std::size_t i) {
    if (out_.stopped()) return;
    if (i == choices_.size()) {
      out_.emit(EdgeCut(edges_));
      return;
    }
    const auto& c = choices_[i];
    const auto& pool = *c.pool;
    std::vector<std::size_t> idx(c.current.size());
    for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
    std::vector<Vertex> pick(idx.size());
    while (!out_.stopped()) {
      for (std::size_t j = 0; j < idx.size(); ++j) pick[j] = pool[idx[j]];
      bool has_dropped = std::any_of(pick.begin(), pick.end(), [&](Vertex v) {
        return !std::binary_search(c.kept->begin(), c.kept->end(), v);
      });
      if (has_dropped || pick == c.current) {
        out_.node();
        std::size_t before = edges_.size();
        for (Vertex u : pick)
          for (Vertex x : *c.t) edges_.push_back(make_edge(u, x));
        level(i + 1);
        edges_.resize(before);
      }
      if (!advance(idx, pool.size())) break;
    }
  }

  static bool advance(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t r = idx.size();
    for (std::size_t j = r; j-- > 0;) {
      if (idx[j] + (r - j) < n) {
        ++idx[j];
        for (std::size_t t = j + 1; t < r; ++t) idx[t] = idx[t - 1] + 1;
        return true;
      }
    }
    return false;
  }

  std::vector<Edge> edges_;
  std::vector<Choice> choices_;
  Emitter& out_;
};

}  // namespace dcut::detail
