#include "netsing/graph.hpp"

#include <algorithm>
#include <queue>

#include "netsing/errors.hpp"

namespace netsing {

SignedGraph::SignedGraph(Index n_nodes, std::vector<Edge> edges)
    : n_(n_nodes), edges_(std::move(edges)) {
  if (n_ < 1) throw Error("graph needs at least one node");
  if (edges_.empty()) throw Error("graph needs at least one edge");
  for (const Edge& e : edges_) {
    if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_)
      throw Error("edge endpoint out of range");
    if (e.tail == e.head) throw Error("self-loops are not allowed");
  }
}

bool SignedGraph::is_connected() const {
  std::vector<std::vector<Index>> adj(static_cast<std::size_t>(n_));
  for (const Edge& e : edges_) {
    adj[static_cast<std::size_t>(e.tail)].push_back(e.head);
    adj[static_cast<std::size_t>(e.head)].push_back(e.tail);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  std::queue<Index> frontier;
  frontier.push(0);
  seen[0] = true;
  Index visited = 1;
  while (!frontier.empty()) {
    Index u = frontier.front();
    frontier.pop();
    for (Index w : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++visited;
        frontier.push(w);
      }
    }
  }
  return visited == n_;
}

Matrix SignedGraph::incidence() const {
  Matrix d = Matrix::Zero(n_, n_edges());
  for (Index j = 0; j < n_edges(); ++j) {
    d(edges_[static_cast<std::size_t>(j)].tail, j) = 1.0;
    d(edges_[static_cast<std::size_t>(j)].head, j) = -1.0;
  }
  return d;
}

Vector SignedGraph::weights() const {
  Vector w(n_edges());
  for (Index j = 0; j < n_edges(); ++j)
    w[j] = edges_[static_cast<std::size_t>(j)].weight;
  return w;
}

SignedGraph SignedGraph::with_weight(Index edge_index, Real weight) const {
  std::vector<Edge> edges = edges_;
  edges.at(static_cast<std::size_t>(edge_index)).weight = weight;
  return SignedGraph(n_, std::move(edges));
}

NodePartition::NodePartition(Index n_nodes, std::vector<Index> boundary)
    : n_(n_nodes),
      boundary_(std::move(boundary)),
      boundary_mask_(static_cast<std::size_t>(n_nodes), false) {
  if (boundary_.empty()) throw Error("partition needs at least one boundary node");
  for (Index i : boundary_) {
    if (i < 0 || i >= n_) throw Error("boundary node index out of range");
    if (boundary_mask_[static_cast<std::size_t>(i)])
      throw Error("duplicate boundary node index");
    boundary_mask_[static_cast<std::size_t>(i)] = true;
  }
  for (Index i = 0; i < n_; ++i)
    if (!boundary_mask_[static_cast<std::size_t>(i)]) central_.push_back(i);
}

Vector NodePartition::boundary_part(const Vector& z) const {
  Vector out(n_boundary());
  for (Index p = 0; p < n_boundary(); ++p) out[p] = z[boundary_[static_cast<std::size_t>(p)]];
  return out;
}

Vector NodePartition::central_part(const Vector& z) const {
  Vector out(n_central());
  for (Index p = 0; p < n_central(); ++p) out[p] = z[central_[static_cast<std::size_t>(p)]];
  return out;
}

Vector NodePartition::assemble(const Vector& z_boundary,
                               const Vector& z_central) const {
  Vector z(n_);
  for (Index p = 0; p < n_boundary(); ++p) z[boundary_[static_cast<std::size_t>(p)]] = z_boundary[p];
  for (Index p = 0; p < n_central(); ++p) z[central_[static_cast<std::size_t>(p)]] = z_central[p];
  return z;
}

}  // namespace netsing
