#include "gsp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

namespace gsp {

namespace {

void check_index(int v, int n) {
  if (v < 0 || v >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "node index " + std::to_string(v) + " outside [0, " +
                    std::to_string(n) + ")");
  }
}

void sort_edges(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
}

}  // namespace

Graph Graph::from_edge_list(const std::vector<Edge>& rows, int n,
                            bool directed) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "node count must be >= 1");
  }
  for (const Edge& e : rows) {
    check_index(e.src, n);
    check_index(e.dst, n);
    if (e.src == e.dst) {
      throw Error(ErrorCode::SelfLoop,
                  "self-loop at node " + std::to_string(e.src));
    }
    if (!std::isfinite(e.weight)) {
      throw Error(ErrorCode::InvalidArgument, "non-finite edge weight");
    }
    if (!directed && e.weight < 0.0) {
      throw Error(ErrorCode::NegativeWeight,
                  "negative weight on undirected edge (" +
                      std::to_string(e.src) + ", " + std::to_string(e.dst) +
                      ")");
    }
  }

  std::vector<Edge> edges;
  if (directed) {
    std::map<std::pair<int, int>, double> seen;
    for (const Edge& e : rows) {
      auto key = std::make_pair(e.src, e.dst);
      if (!seen.emplace(key, e.weight).second) {
        throw Error(ErrorCode::DuplicateEdge,
                    "duplicate edge (" + std::to_string(e.src) + ", " +
                        std::to_string(e.dst) + ")");
      }
      edges.push_back(e);
    }
  } else {
    // key: node pair with min first; value: weight plus which orientations
    // were supplied
    struct Entry {
      double weight;
      bool fwd;
      bool rev;
    };
    std::map<std::pair<int, int>, Entry> pairs;
    for (const Edge& e : rows) {
      const bool fwd = e.src < e.dst;
      auto key = std::minmax(e.src, e.dst);
      auto [it, fresh] = pairs.emplace(key, Entry{e.weight, fwd, !fwd});
      if (!fresh) {
        Entry& ent = it->second;
        if ((fwd && ent.fwd) || (!fwd && ent.rev)) {
          throw Error(ErrorCode::DuplicateEdge,
                      "duplicate edge (" + std::to_string(e.src) + ", " +
                          std::to_string(e.dst) + ")");
        }
        if (std::abs(ent.weight - e.weight) > 1e-12) {
          throw Error(ErrorCode::AsymmetricWeight,
                      "conflicting weights for undirected edge (" +
                          std::to_string(key.first) + ", " +
                          std::to_string(key.second) + ")");
        }
        (fwd ? ent.fwd : ent.rev) = true;
      }
    }
    for (const auto& [key, ent] : pairs) {
      edges.push_back({key.first, key.second, ent.weight});
      edges.push_back({key.second, key.first, ent.weight});
    }
  }
  sort_edges(edges);
  return Graph(n, directed, std::move(edges));
}

std::vector<double> Graph::degrees() const {
  std::vector<double> deg(static_cast<std::size_t>(n_), 0.0);
  for (const Edge& e : edges_) deg[static_cast<std::size_t>(e.dst)] += e.weight;
  return deg;
}

Graph cycle_graph(int n, bool directed) {
  if (n < 2 || (!directed && n < 3)) {
    throw Error(ErrorCode::TooSmall,
                "cycle graph needs n >= 2 (n >= 3 undirected), got " +
                    std::to_string(n));
  }
  std::vector<Edge> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) rows.push_back({k, (k + 1) % n, 1.0});
  return Graph::from_edge_list(rows, n, directed);
}

Graph knn_graph(const Eigen::MatrixXd& points, int k, double sigma) {
  const int n = static_cast<int>(points.rows());
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  if (!(sigma > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "sigma must be > 0");
  }
  if (n < k + 1) {
    throw Error(ErrorCode::KTooLarge, "k = " + std::to_string(k) +
                                          " needs at least k+1 points, got " +
                                          std::to_string(n));
  }

  std::map<std::pair<int, int>, double> chosen;
  std::vector<std::pair<double, int>> dist;
  for (int i = 0; i < n; ++i) {
    dist.clear();
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d2 = (points.row(i) - points.row(j)).squaredNorm();
      if (d2 == 0.0) {
        throw Error(ErrorCode::DuplicatePoints,
                    "points " + std::to_string(i) + " and " +
                        std::to_string(j) + " coincide");
      }
      dist.emplace_back(d2, j);
    }
    std::partial_sort(dist.begin(), dist.begin() + k, dist.end());
    for (int r = 0; r < k; ++r) {
      const auto [d2, j] = dist[static_cast<std::size_t>(r)];
      const auto key = std::minmax(i, j);
      chosen.emplace(key, std::exp(-d2 / (2.0 * sigma * sigma)));
    }
  }

  std::vector<Edge> rows;
  rows.reserve(chosen.size());
  for (const auto& [key, w] : chosen) rows.push_back({key.first, key.second, w});
  return Graph::from_edge_list(rows, n, false);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.node_count();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::NotAPermutation, "permutation length " +
                                                std::to_string(perm.size()) +
                                                " != " + std::to_string(n));
  }
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::NotAPermutation, "not a bijection on [0, n)");
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Edge> rows;
  rows.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    rows.push_back({perm[static_cast<std::size_t>(e.src)],
                    perm[static_cast<std::size_t>(e.dst)], e.weight});
  }
  if (!g.directed()) {
    // both orientations are already present; keep one per pair so
    // from_edge_list does not see duplicates
    std::vector<Edge> half;
    half.reserve(rows.size() / 2);
    for (const Edge& e : rows) {
      if (e.src < e.dst) half.push_back(e);
    }
    rows = std::move(half);
  }
  return Graph::from_edge_list(rows, n, g.directed());
}

const char* shift_kind_name(ShiftKind kind) {
  switch (kind) {
    case ShiftKind::Adjacency:
      return "adjacency";
    case ShiftKind::CombinatorialLaplacian:
      return "laplacian";
    case ShiftKind::NormalizedLaplacian:
      return "normalized";
  }
  return "?";
}

const Eigen::MatrixXd& ShiftOperator::dense() const {
  if (!dense_) {
    throw Error(ErrorCode::TooLarge,
                "dense form unavailable for n = " + std::to_string(n_) +
                    " (threshold " + std::to_string(kDenseThreshold) + ")");
  }
  return *dense_;
}

Eigen::VectorXcd ShiftOperator::apply(const Eigen::VectorXcd& x) const {
  if (x.size() != n_) {
    throw Error(ErrorCode::DimensionMismatch,
                "signal length " + std::to_string(x.size()) +
                    " != " + std::to_string(n_));
  }
  Eigen::VectorXd re = sparse_ * x.real();
  Eigen::VectorXd im = sparse_ * x.imag();
  Eigen::VectorXcd y(n_);
  y.real() = re;
  y.imag() = im;
  return y;
}

ShiftOperator shift(const Graph& g, ShiftKind kind) {
  const int n = g.node_count();
  if (kind != ShiftKind::Adjacency && g.directed()) {
    throw Error(ErrorCode::DirectedLaplacian,
                "Laplacian operators require an undirected graph");
  }

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(g.edges().size() + static_cast<std::size_t>(n));
  const std::vector<double> deg = g.degrees();

  switch (kind) {
    case ShiftKind::Adjacency:
      for (const Edge& e : g.edges()) trips.emplace_back(e.dst, e.src, e.weight);
      break;
    case ShiftKind::CombinatorialLaplacian:
      // L = D - A
      for (const Edge& e : g.edges())
        trips.emplace_back(e.dst, e.src, -e.weight);
      for (int i = 0; i < n; ++i)
        trips.emplace_back(i, i, deg[static_cast<std::size_t>(i)]);
      break;
    case ShiftKind::NormalizedLaplacian: {
      // D^{-1/2} (D - A) D^{-1/2}
      std::vector<double> inv_sqrt(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        const double d = deg[static_cast<std::size_t>(i)];
        if (!(d > 0.0)) {
          throw Error(ErrorCode::IsolatedNode,
                      "node " + std::to_string(i) +
                          " has zero degree; normalized Laplacian undefined");
        }
        inv_sqrt[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(d);
      }
      for (const Edge& e : g.edges()) {
        trips.emplace_back(e.dst, e.src,
                           -e.weight * inv_sqrt[static_cast<std::size_t>(e.dst)] *
                               inv_sqrt[static_cast<std::size_t>(e.src)]);
      }
      for (int i = 0; i < n; ++i) trips.emplace_back(i, i, 1.0);
      break;
    }
  }

  ShiftOperator op;
  op.kind_ = kind;
  op.n_ = n;
  op.symmetric_ = kind != ShiftKind::Adjacency || !g.directed();
  op.sparse_.resize(n, n);
  op.sparse_.setFromTriplets(trips.begin(), trips.end());
  op.sparse_.makeCompressed();
  if (n <= kDenseThreshold) op.dense_ = Eigen::MatrixXd(op.sparse_);
  op.graph_ = std::make_shared<const Graph>(g);
  return op;
}

}  // namespace gsp
