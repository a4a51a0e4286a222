#pragma once

#include <cstddef>
#include <vector>

#include "unimod/integer.hpp"
#include "unimod/limits.hpp"
#include "unimod/system.hpp"

namespace unimod {

/// Oriented edge; vertices are 0-based.
struct Edge {
  std::size_t tail;
  std::size_t head;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Multigraph with an ordered, oriented edge list. Loops and parallel edges
/// are allowed.
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws DimensionError if an edge names a vertex outside [0, vertex_count).
  Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }

  bool is_connected() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// N x m matrix with +1 where an edge points to a vertex and -1 where it
/// points from it. Loop rows are zero.
IntMatrix incidence_matrix(const Multigraph& g);

/// Edges whose removal disconnects the graph. Throws ConnectivityError.
std::vector<std::size_t> bridges(const Multigraph& g);
std::vector<std::size_t> loops(const Multigraph& g);

/// Breadth-first spanning tree from vertex 0, edges scanned in input order.
/// Throws ConnectivityError.
std::vector<std::size_t> first_spanning_tree(const Multigraph& g);

/// Every spanning tree as an ascending edge index set, in lexicographic order.
/// Throws ConnectivityError, or CapError when the edge count exceeds
/// limits.enumeration_cap.
std::vector<std::vector<std::size_t>> spanning_trees(const Multigraph& g, const Limits& limits = {});

/// Edge functionals on the cycle space in the fundamental-cycle basis of
/// first_spanning_tree(), re-expressed in standard form over the first
/// independent rows; bridges are dropped. Labels are "e<k>" with k the
/// 1-based edge position. Throws ConnectivityError, or DegenerateSystemError
/// when every edge is a bridge.
UnimodularSystem graphic_system(const Multigraph& g);

/// Edge functionals on the cut space in the fundamental-cut basis of
/// first_spanning_tree(), in standard form; loops are dropped. Throws ConnectivityError, or
/// DegenerateSystemError when every edge is a loop or there is one vertex.
UnimodularSystem cographic_system(const Multigraph& g);

/// Contracts every bridge and deletes every loop until neither remains.
/// Vertices are renumbered by first appearance; surviving edges keep their
/// relative order. Throws ConnectivityError.
Multigraph stabilize(const Multigraph& g);

/// Laplacian D - Adj (parallel edges counted, loops ignored) with the row and
/// column of `removed` deleted.
IntMatrix reduced_laplacian(const Multigraph& g, std::size_t removed = 0);

}  // namespace unimod
