#pragma once

// Seeded random inputs for the property tests.

#include <algorithm>
#include <numeric>
#include <random>

#include "unimod/graph.hpp"
#include "unimod/integer.hpp"
#include "unimod/system.hpp"

namespace gen {

using unimod::Edge;
using unimod::IntMatrix;
using unimod::Multigraph;
using unimod::UnimodularSystem;

inline std::size_t uniform(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random spanning tree plus `extra` random edges; loops only when allowed.
inline Multigraph connected_graph(std::mt19937& rng, std::size_t vertices, std::size_t extra, bool allow_loops) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < vertices; ++v) {
    const std::size_t u = uniform(rng, 0, v - 1);
    if (uniform(rng, 0, 1)) edges.push_back({u, v});
    else edges.push_back({v, u});
  }
  for (std::size_t k = 0; k < extra; ++k) {
    const std::size_t a = uniform(rng, 0, vertices - 1);
    std::size_t b = uniform(rng, 0, vertices - 1);
    if (a == b && !allow_loops) b = (a + 1) % vertices;
    edges.push_back({a, b});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Multigraph(vertices, std::move(edges));
}

/// Product of random elementary operations; determinant +-1.
inline IntMatrix unimodular_matrix(std::mt19937& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && uniform(rng, 0, 1)) u(0, 0) = -1;
    return u;
  }
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const std::size_t i = uniform(rng, 0, n - 1);
    std::size_t j = uniform(rng, 0, n - 2);
    if (j >= i) ++j;
    const long factor = static_cast<long>(uniform(rng, 0, 2)) - 1;
    for (std::size_t c = 0; c < n; ++c) u(i, c) += factor * u(j, c);
  }
  return u;
}

/// Rows permuted, signs flipped and coordinates changed by a unimodular map.
/// from_matrix of the result is isomorphic to `sys`.
inline IntMatrix disguise(std::mt19937& rng, const UnimodularSystem& sys) {
  const IntMatrix changed = sys.matrix() * unimodular_matrix(rng, sys.dimension());
  std::vector<std::size_t> order(sys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  IntMatrix out = changed.select_rows(order);
  for (std::size_t r = 0; r < out.rows(); ++r)
    if (uniform(rng, 0, 1))
      for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = -out(r, c);
  return out;
}

/// Random matrix with entries in [-bound, bound].
inline IntMatrix small_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  std::uniform_int_distribution<long> d(-bound, bound);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

}  // namespace gen
