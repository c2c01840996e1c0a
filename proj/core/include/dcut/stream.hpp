#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>

#include "dcut/graph.hpp"

namespace dcut {

// Receives lifted solutions one at a time; returning false stops the stream.
using CutSink = std::function<bool(const EdgeCut&)>;

struct StreamStats {
  std::uint64_t yields = 0;
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes_between_yields = 0;
  std::uint64_t nodes_since_yield = 0;
};

class Emitter {
 public:
  Emitter(const CutSink& sink, StreamStats* stats) : sink_(sink), stats_(stats) {}

  void node() {
    if (!stats_) return;
    ++stats_->nodes;
    ++stats_->nodes_since_yield;
  }

  bool emit(const EdgeCut& f) {
    if (stats_) {
      ++stats_->yields;
      stats_->max_nodes_between_yields = std::max(stats_->max_nodes_between_yields, stats_->nodes_since_yield);
      stats_->nodes_since_yield = 0;
    }
    stopped_ = stopped_ || !sink_(f);
    return !stopped_;
  }

  bool stopped() const { return stopped_; }

 private:
  const CutSink& sink_;
  StreamStats* stats_;
  bool stopped_ = false;
};

}  // namespace dcut
