#ifndef NETSING_GRAPH_HPP
#define NETSING_GRAPH_HPP

#include <vector>

#include "netsing/types.hpp"

namespace netsing {

/// One undirected edge with a signed weight. Orientation (tail -> head) fixes
/// the sign of the edge voltage y = z[tail] - z[head]; the Laplacian itself
/// does not depend on it.
struct Edge {
  Index tail = 0;
  Index head = 0;
  Real weight = 1.0;
};

/// A weighted graph whose edge weights may be negative. Node indices are
/// 0-based and must satisfy 0 <= tail, head < n_nodes with tail != head.
class SignedGraph {
 public:
  SignedGraph(Index n_nodes, std::vector<Edge> edges);

  Index n_nodes() const { return n_; }
  Index n_edges() const { return static_cast<Index>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(Index j) const { return edges_[static_cast<std::size_t>(j)]; }

  /// Whether the underlying undirected graph is connected.
  bool is_connected() const;

  /// Node-by-edge incidence matrix D (+1 at tail, -1 at head).
  Matrix incidence() const;

  /// Diagonal of signed edge weights, ordered like edges().
  Vector weights() const;

  /// Copy of the graph with one edge's weight replaced.
  SignedGraph with_weight(Index edge_index, Real weight) const;

 private:
  Index n_;
  std::vector<Edge> edges_;
};

/// Ordered split of {0, .., n-1} into boundary (terminal) and central
/// (internal) nodes. Boundary must be nonempty; central may be empty.
class NodePartition {
 public:
  NodePartition(Index n_nodes, std::vector<Index> boundary);

  Index n_nodes() const { return n_; }
  Index n_boundary() const { return static_cast<Index>(boundary_.size()); }
  Index n_central() const { return static_cast<Index>(central_.size()); }
  const std::vector<Index>& boundary() const { return boundary_; }
  const std::vector<Index>& central() const { return central_; }

  /// True if node i is a boundary node.
  bool is_boundary(Index i) const { return boundary_mask_[static_cast<std::size_t>(i)]; }

  Vector boundary_part(const Vector& z) const;
  Vector central_part(const Vector& z) const;
  /// Assemble a full vector from boundary and central blocks.
  Vector assemble(const Vector& z_boundary, const Vector& z_central) const;

 private:
  Index n_;
  std::vector<Index> boundary_;
  std::vector<Index> central_;
  std::vector<bool> boundary_mask_;
};

}  // namespace netsing

#endif
