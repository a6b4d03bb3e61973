#include "lotforge/flow.hpp"

#include <deque>
#include <stdexcept>

namespace lotforge {

int FlowGraph::add_node() {
  adj_.emplace_back();
  return nodes() - 1;
}

int FlowGraph::add_edge(int from, int to, const Rational& cap, const Rational& cost) {
  if (from < 0 || from >= nodes() || to < 0 || to >= nodes()) throw std::out_of_range("flow node");
  if (cap < 0) throw std::invalid_argument("negative capacity");
  const int id = static_cast<int>(edges_.size());
  edges_.push_back({to, id + 1, cap, cost, 0});
  edges_.push_back({from, id, 0, -cost, 0});
  adj_[from].push_back(id);
  adj_[to].push_back(id + 1);
  return id;
}

void FlowGraph::push(int e, const Rational& amount) {
  edges_[e].flow += amount;
  edges_[edges_[e].rev].flow -= amount;
}

Rational FlowGraph::max_flow(int source, int sink) {
  Rational total = 0;
  for (;;) {
    std::vector<int> via(nodes(), -1);
    std::vector<bool> seen(nodes(), false);
    std::deque<int> queue{source};
    seen[source] = true;
    while (!queue.empty() && !seen[sink]) {
      const int u = queue.front();
      queue.pop_front();
      for (int e : adj_[u]) {
        const Edge& edge = edges_[e];
        if (seen[edge.to] || residual(edge) <= 0) continue;
        seen[edge.to] = true;
        via[edge.to] = e;
        queue.push_back(edge.to);
      }
    }
    if (!seen[sink]) return total;
    Rational bottleneck;
    bool first = true;
    for (int v = sink; v != source; v = edges_[edges_[via[v]].rev].to) {
      Rational r = residual(edges_[via[v]]);
      if (first || r < bottleneck) bottleneck = std::move(r);
      first = false;
    }
    for (int v = sink; v != source; v = edges_[edges_[via[v]].rev].to) push(via[v], bottleneck);
    total += bottleneck;
  }
}

std::optional<Rational> FlowGraph::min_cost_flow(int source, int sink, const Rational& amount) {
  Rational sent = 0;
  Rational cost = 0;
  while (sent < amount) {
    std::vector<std::optional<Rational>> dist(nodes());
    std::vector<int> via(nodes(), -1);
    dist[source] = Rational(0);
    for (int round = 0; round < nodes(); ++round) {
      bool changed = false;
      for (int u = 0; u < nodes(); ++u) {
        if (!dist[u]) continue;
        for (int e : adj_[u]) {
          const Edge& edge = edges_[e];
          if (residual(edge) <= 0) continue;
          Rational d = *dist[u] + edge.cost;
          if (!dist[edge.to] || d < *dist[edge.to]) {
            dist[edge.to] = std::move(d);
            via[edge.to] = e;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (!dist[sink]) return std::nullopt;
    Rational bottleneck = amount - sent;
    for (int v = sink; v != source; v = edges_[edges_[via[v]].rev].to) {
      bottleneck = rmin(bottleneck, residual(edges_[via[v]]));
    }
    for (int v = sink; v != source; v = edges_[edges_[via[v]].rev].to) push(via[v], bottleneck);
    sent += bottleneck;
    cost += bottleneck * *dist[sink];
  }
  return cost;
}

}  // namespace lotforge
