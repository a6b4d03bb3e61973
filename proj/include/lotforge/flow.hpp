#pragma once

// Small exact-rational flow network: Edmonds–Karp max flow and successive
// shortest paths (Bellman–Ford) min-cost flow.

#include <optional>
#include <vector>

#include "lotforge/rational.hpp"

namespace lotforge {

class FlowGraph {
 public:
  explicit FlowGraph(int nodes) : adj_(nodes) {}

  int add_node();
  int nodes() const { return static_cast<int>(adj_.size()); }

  /// Returns an edge handle for flow().
  int add_edge(int from, int to, const Rational& cap, const Rational& cost = 0);

  /// Augments from the current flow. Returns the value added.
  Rational max_flow(int source, int sink);

  /// Sends exactly `amount` at minimum cost from a zero flow, or nullopt when
  /// the network cannot carry it. Requires no negative-cost cycles.
  std::optional<Rational> min_cost_flow(int source, int sink, const Rational& amount);

  const Rational& flow(int edge) const { return edges_.at(edge).flow; }

 private:
  struct Edge {
    int to;
    int rev;  // index of the reverse edge
    Rational cap;
    Rational cost;
    Rational flow;
  };

  Rational residual(const Edge& e) const { return e.cap - e.flow; }
  void push(int e, const Rational& amount);

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace lotforge
