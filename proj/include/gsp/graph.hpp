#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <memory>
#include <optional>
#include <vector>

#include "gsp/error.hpp"

namespace gsp {

// Operator matrices are materialized densely up to this node count; above it
// only the sparse form exists and dense-only algorithms refuse to run.
inline constexpr int kDenseThreshold = 2048;

struct Edge {
  int src = 0;
  int dst = 0;
  double weight = 1.0;
};

inline bool operator==(const Edge& a, const Edge& b) {
  return a.src == b.src && a.dst == b.dst && a.weight == b.weight;
}

/// Weighted graph with 0-based node indices. Undirected graphs keep both
/// orientations of every edge, so the edge list is always the literal
/// nonzero pattern of the adjacency matrix.
class Graph {
 public:
  static Graph from_edge_list(const std::vector<Edge>& rows, int n,
                              bool directed);

  int node_count() const noexcept { return n_; }
  bool directed() const noexcept { return directed_; }
  // sorted by (src, dst)
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // sum of incoming weights per node; equals the usual degree for
  // undirected graphs
  std::vector<double> degrees() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && directed_ == other.directed_ &&
           edges_ == other.edges_;
  }

 private:
  Graph(int n, bool directed, std::vector<Edge> edges)
      : n_(n), directed_(directed), edges_(std::move(edges)) {}

  int n_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
};

/// Directed n-cycle: edge (k, k+1 mod n) of weight 1 for every k, the graph
/// whose adjacency is the cyclic shift matrix. Undirected variant is the
/// symmetrized ring (needs n >= 3).
Graph cycle_graph(int n, bool directed);

/// Gaussian-kernel k-nearest-neighbor graph over the rows of `points`.
/// Neighborhoods are symmetrized by union and weighted exp(-d^2 / (2 sigma^2)).
Graph knn_graph(const Eigen::MatrixXd& points, int k, double sigma);

/// Relabel nodes: node i becomes perm[i]. The new adjacency is Pi * A * Pi^T.
Graph relabel(const Graph& g, const std::vector<int>& perm);

enum class ShiftKind {
  Adjacency,
  CombinatorialLaplacian,
  NormalizedLaplacian,
};

const char* shift_kind_name(ShiftKind kind);

/// A concrete shift matrix built from a graph. Entry (i, j) of the adjacency
/// is the weight of the edge j -> i, so applying the adjacency of the
/// directed cycle delays a signal by one step. The sparse form always
/// exists; a dense copy is kept for graphs small enough for dense solvers.
class ShiftOperator {
 public:
  ShiftKind kind() const noexcept { return kind_; }
  int size() const noexcept { return n_; }
  bool symmetric() const noexcept { return symmetric_; }
  const Eigen::SparseMatrix<double>& sparse() const noexcept {
    return sparse_;
  }
  const Eigen::MatrixXd& dense() const;
  const std::shared_ptr<const Graph>& graph() const noexcept { return graph_; }

  // y = M x for complex signals (the matrix itself is real)
  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;

 private:
  friend ShiftOperator shift(const Graph& g, ShiftKind kind);

  ShiftKind kind_ = ShiftKind::Adjacency;
  int n_ = 0;
  bool symmetric_ = false;
  Eigen::SparseMatrix<double> sparse_;
  std::optional<Eigen::MatrixXd> dense_;
  std::shared_ptr<const Graph> graph_;
};

/// Build the requested operator matrix. Laplacian kinds require an
/// undirected graph; the normalized Laplacian additionally requires every
/// degree to be strictly positive.
ShiftOperator shift(const Graph& g, ShiftKind kind);

}  // namespace gsp
