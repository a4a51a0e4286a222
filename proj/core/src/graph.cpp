#include "unimod/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "unimod/linalg.hpp"

namespace unimod {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool connected_without(const Multigraph& g, std::size_t skipped_edge) {
  if (g.vertex_count() == 0) return false;
  DisjointSets sets(g.vertex_count());
  std::size_t components = g.vertex_count();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (e == skipped_edge) continue;
    if (sets.unite(g.edge(e).tail, g.edge(e).head)) --components;
  }
  return components == 1;
}

void require_connected(const Multigraph& g) {
  if (!g.is_connected()) throw ConnectivityError("graph is not connected");
}

// Spanning tree rooted at vertex 0 with parent links.
struct RootedTree {
  std::vector<std::size_t> edges;        // ascending
  std::vector<std::size_t> parent;       // parent vertex, root points to itself
  std::vector<std::size_t> parent_edge;  // edge to parent, unused at the root
  std::vector<std::size_t> depth;
  std::vector<bool> in_tree;             // by edge index
};

RootedTree breadth_first_tree(const Multigraph& g) {
  require_connected(g);
  const std::size_t m = g.vertex_count();
  std::vector<std::vector<std::size_t>> incident(m);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop()) continue;
    incident[edge.tail].push_back(e);
    incident[edge.head].push_back(e);
  }
  RootedTree tree;
  tree.parent.assign(m, 0);
  tree.parent_edge.assign(m, 0);
  tree.depth.assign(m, 0);
  tree.in_tree.assign(g.edge_count(), false);
  std::vector<bool> seen(m, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : incident[v]) {
      const Edge& edge = g.edge(e);
      const std::size_t w = edge.tail == v ? edge.head : edge.tail;
      if (seen[w]) continue;
      seen[w] = true;
      tree.parent[w] = v;
      tree.parent_edge[w] = e;
      tree.depth[w] = tree.depth[v] + 1;
      tree.in_tree[e] = true;
      tree.edges.push_back(e);
      queue.push_back(w);
    }
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

std::vector<std::string> edge_labels(const std::vector<std::size_t>& edges) {
  std::vector<std::string> labels;
  for (std::size_t e : edges) labels.push_back("e" + std::to_string(e + 1));
  return labels;
}

// Keeps the nonzero rows of `m`, remembering which edges they came from.
UnimodularSystem system_from_edge_rows(const IntMatrix& m) {
  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row_is_zero(r)) kept.push_back(r);
  return from_matrix(m.select_rows(kept), edge_labels(kept));
}

}  // namespace

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].tail >= vertex_count_ || edges_[e].head >= vertex_count_)
      throw DimensionError("edge " + std::to_string(e + 1) + " names a vertex outside the graph");
}

bool Multigraph::is_connected() const { return connected_without(*this, edges_.size()); }

IntMatrix incidence_matrix(const Multigraph& g) {
  IntMatrix m(g.edge_count(), g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    m(e, edge.tail) -= 1;
    m(e, edge.head) += 1;
  }
  return m;
}

std::vector<std::size_t> bridges(const Multigraph& g) {
  require_connected(g);
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (!g.edge(e).is_loop() && !connected_without(g, e)) out.push_back(e);
  return out;
}

std::vector<std::size_t> loops(const Multigraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (g.edge(e).is_loop()) out.push_back(e);
  return out;
}

std::vector<std::size_t> first_spanning_tree(const Multigraph& g) { return breadth_first_tree(g).edges; }

std::vector<std::vector<std::size_t>> spanning_trees(const Multigraph& g, const Limits& limits) {
  require_connected(g);
  if (g.edge_count() > limits.enumeration_cap)
    throw CapError("spanning tree enumeration over " + std::to_string(g.edge_count()) + " edges exceeds cap " +
                   std::to_string(limits.enumeration_cap));
  const std::size_t k = g.vertex_count() - 1;
  std::vector<std::vector<std::size_t>> trees;
  if (k > g.edge_count()) return trees;
  std::vector<std::size_t> subset(k);
  std::iota(subset.begin(), subset.end(), std::size_t{0});
  do {
    DisjointSets sets(g.vertex_count());
    bool acyclic = std::all_of(subset.begin(), subset.end(),
                               [&](std::size_t e) { return sets.unite(g.edge(e).tail, g.edge(e).head); });
    if (acyclic) trees.push_back(subset);
  } while (next_subset(subset, g.edge_count()));
  return trees;
}

UnimodularSystem graphic_system(const Multigraph& g) {
  const RootedTree tree = breadth_first_tree(g);
  std::vector<std::size_t> chords;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (!tree.in_tree[e]) chords.push_back(e);
  if (chords.empty()) throw DegenerateSystemError("graph is a tree: every edge is a bridge, the cycle space is zero");

  IntMatrix m(g.edge_count(), chords.size());
  for (std::size_t t = 0; t < chords.size(); ++t) {
    const Edge& chord = g.edge(chords[t]);
    m(chords[t], t) = 1;
    // Close the cycle by walking the tree from the chord's head back to its tail.
    std::size_t u = chord.head;
    std::size_t v = chord.tail;
    while (u != v) {
      if (tree.depth[u] >= tree.depth[v]) {
        const std::size_t e = tree.parent_edge[u];
        m(e, t) += g.edge(e).tail == u ? 1 : -1;
        u = tree.parent[u];
      } else {
        const std::size_t e = tree.parent_edge[v];
        m(e, t) += g.edge(e).head == v ? 1 : -1;
        v = tree.parent[v];
      }
    }
  }
  return system_from_edge_rows(m);
}

UnimodularSystem cographic_system(const Multigraph& g) {
  const RootedTree tree = breadth_first_tree(g);
  if (tree.edges.empty()) throw DegenerateSystemError("graph has one vertex: the cut space is zero");

  const std::size_t m_vertices = g.vertex_count();
  IntMatrix m(g.edge_count(), tree.edges.size());
  for (std::size_t t = 0; t < tree.edges.size(); ++t) {
    const Edge& cut_edge = g.edge(tree.edges[t]);
    // The child endpoint of a tree edge roots the subtree cut off by removing it.
    const bool head_is_child = cut_edge.head != 0 && tree.parent_edge[cut_edge.head] == tree.edges[t];
    const std::size_t child = head_is_child ? cut_edge.head : cut_edge.tail;
    std::vector<bool> in_subtree(m_vertices, false);
    for (std::size_t v = 0; v < m_vertices; ++v) {
      std::size_t w = v;
      while (w != child && w != 0) w = tree.parent[w];
      in_subtree[v] = w == child;
    }
    // Head side of the cut edge.
    std::vector<bool> head_side(m_vertices);
    for (std::size_t v = 0; v < m_vertices; ++v) head_side[v] = child == cut_edge.head ? in_subtree[v] : !in_subtree[v];
    for (std::size_t f = 0; f < g.edge_count(); ++f) {
      const Edge& edge = g.edge(f);
      m(f, t) = static_cast<long>(head_side[edge.head]) - static_cast<long>(head_side[edge.tail]);
    }
  }
  return system_from_edge_rows(m);
}

Multigraph stabilize(const Multigraph& g) {
  require_connected(g);
  Multigraph current = g;
  while (true) {
    const std::vector<std::size_t> cut = bridges(current);
    const std::vector<std::size_t> self = loops(current);
    if (cut.empty() && self.empty()) return current;

    DisjointSets sets(current.vertex_count());
    for (std::size_t e : cut) sets.unite(current.edge(e).tail, current.edge(e).head);
    std::vector<std::size_t> label(current.vertex_count());
    std::size_t next = 0;
    std::vector<std::size_t> rep_label(current.vertex_count(), current.vertex_count());
    for (std::size_t v = 0; v < current.vertex_count(); ++v) {
      const std::size_t r = sets.find(v);
      if (rep_label[r] == current.vertex_count()) rep_label[r] = next++;
      label[v] = rep_label[r];
    }
    std::vector<bool> drop(current.edge_count(), false);
    for (std::size_t e : cut) drop[e] = true;
    for (std::size_t e : self) drop[e] = true;
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < current.edge_count(); ++e)
      if (!drop[e]) edges.push_back({label[current.edge(e).tail], label[current.edge(e).head]});
    current = Multigraph(next, std::move(edges));
  }
}

IntMatrix reduced_laplacian(const Multigraph& g, std::size_t removed) {
  const std::size_t m = g.vertex_count();
  if (removed >= m) throw DimensionError("removed vertex outside the graph");
  IntMatrix laplacian(m, m);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    laplacian(e.tail, e.tail) += 1;
    laplacian(e.head, e.head) += 1;
    laplacian(e.tail, e.head) -= 1;
    laplacian(e.head, e.tail) -= 1;
  }
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < m; ++v)
    if (v != removed) keep.push_back(v);
  return laplacian.submatrix(keep, keep);
}

}  // namespace unimod
