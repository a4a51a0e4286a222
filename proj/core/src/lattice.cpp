#include "unimod/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <map>

#include "unimod/linalg.hpp"

namespace unimod {
namespace {

constexpr long kSmallBound = 1L << 60;

bool fits_small(const Integer& bound) { return bound < kSmallBound; }

template <typename T>
T convert(const Integer& x) {
  if constexpr (std::is_same_v<T, Integer>) {
    return x;
  } else {
    return static_cast<T>(x.get_si());
  }
}

template <typename T>
T absolute(const T& x) {
  if constexpr (std::is_same_v<T, Integer>) {
    return abs(x);
  } else {
    return x < 0 ? -x : x;
  }
}

template <typename T>
bool is_zero_value(const T& x) {
  if constexpr (std::is_same_v<T, Integer>) {
    return sgn(x) == 0;
  } else {
    return x == 0;
  }
}

std::size_t rank_of_rows(const IntMatrix& a, const std::vector<std::size_t>& rows) {
  if (rows.empty()) return 0;
  return rank(a.select_rows(rows));
}

std::vector<std::size_t> active_rows(std::span<const int> point) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (point[i] == 1 || point[i] == -1) rows.push_back(i);
  return rows;
}

// ---------------------------------------------------------------------------
// 3^N scan of {-1, 0, 1}^N against the complement basis.

template <typename T>
struct ScanData {
  std::size_t length = 0;                       // N
  std::size_t constraints = 0;                  // rows of the complement basis
  std::vector<std::vector<T>> column;           // column[i][r] = complement[r][i]
  std::vector<std::vector<T>> suffix_abs;       // suffix_abs[i][r] = sum_{j >= i} |complement[r][j]|
};

template <typename T>
ScanData<T> make_scan_data(const std::vector<IntVector>& complement, std::size_t length) {
  ScanData<T> data;
  data.length = length;
  data.constraints = complement.size();
  data.column.assign(length, std::vector<T>(data.constraints));
  data.suffix_abs.assign(length + 1, std::vector<T>(data.constraints, T(0)));
  for (std::size_t i = 0; i < length; ++i)
    for (std::size_t r = 0; r < data.constraints; ++r) data.column[i][r] = convert<T>(complement[r][i]);
  for (std::size_t i = length; i-- > 0;)
    for (std::size_t r = 0; r < data.constraints; ++r)
      data.suffix_abs[i][r] = data.suffix_abs[i + 1][r] + absolute(data.column[i][r]);
  return data;
}

template <typename T>
void scan_from(const ScanData<T>& data, std::size_t i, std::vector<T>& partial, std::vector<int>& point,
               std::vector<std::vector<int>>& out) {
  for (std::size_t r = 0; r < data.constraints; ++r)
    if (absolute(partial[r]) > data.suffix_abs[i][r]) return;
  if (i == data.length) {
    out.push_back(point);
    return;
  }
  for (int value : {-1, 0, 1}) {
    point[i] = value;
    if (value != 0)
      for (std::size_t r = 0; r < data.constraints; ++r) partial[r] += value * data.column[i][r];
    scan_from(data, i + 1, partial, point, out);
    if (value != 0)
      for (std::size_t r = 0; r < data.constraints; ++r) partial[r] -= value * data.column[i][r];
  }
  point[i] = 0;
}

template <typename T>
std::vector<std::vector<int>> scan_direct(const ScanData<T>& data, unsigned threads) {
  // Work is split by the values of the first two coordinates.
  const std::size_t prefix_len = std::min<std::size_t>(2, data.length);
  std::size_t blocks = 1;
  for (std::size_t i = 0; i < prefix_len; ++i) blocks *= 3;
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(blocks)));
  std::vector<std::vector<std::vector<int>>> found(workers);

  auto work = [&](unsigned worker) {
    for (std::size_t b = worker; b < blocks; b += workers) {
      std::vector<int> point(data.length, 0);
      std::vector<T> partial(data.constraints, T(0));
      std::size_t code = b;
      for (std::size_t i = 0; i < prefix_len; ++i) {
        point[i] = static_cast<int>(code % 3) - 1;
        code /= 3;
        for (std::size_t r = 0; r < data.constraints; ++r) partial[r] += point[i] * data.column[i][r];
      }
      scan_from(data, prefix_len, partial, point, found[worker]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  std::vector<std::vector<int>> all;
  for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
  return all;
}

// Odometer over {-1, 0, 1}^len.
bool next_ternary(std::vector<int>& digits) {
  for (auto& d : digits) {
    if (d < 1) {
      ++d;
      return true;
    }
    d = -1;
  }
  return false;
}

template <typename T>
std::vector<std::vector<int>> scan_meet_in_the_middle(const ScanData<T>& data) {
  const std::size_t half = data.length / 2;
  std::map<std::vector<T>, std::vector<std::vector<int>>> left;
  std::vector<int> digits(half, -1);
  do {
    std::vector<T> partial(data.constraints, T(0));
    for (std::size_t i = 0; i < half; ++i)
      if (digits[i] != 0)
        for (std::size_t r = 0; r < data.constraints; ++r) partial[r] += digits[i] * data.column[i][r];
    left[partial].push_back(digits);
  } while (next_ternary(digits));

  std::vector<std::vector<int>> out;
  std::vector<int> right(data.length - half, -1);
  do {
    std::vector<T> needed(data.constraints, T(0));
    for (std::size_t i = 0; i < right.size(); ++i)
      if (right[i] != 0)
        for (std::size_t r = 0; r < data.constraints; ++r) needed[r] -= right[i] * data.column[half + i][r];
    auto it = left.find(needed);
    if (it == left.end()) continue;
    for (const auto& prefix : it->second) {
      std::vector<int> point(prefix);
      point.insert(point.end(), right.begin(), right.end());
      out.push_back(std::move(point));
    }
  } while (next_ternary(right));
  return out;
}

template <typename T>
std::vector<std::vector<int>> run_scan(const std::vector<IntVector>& complement, std::size_t length,
                                       const Limits& limits, ScanMethod method) {
  const ScanData<T> data = make_scan_data<T>(complement, length);
  const bool split = method == ScanMethod::MeetInTheMiddle ||
                     (method == ScanMethod::Automatic && length >= 15);
  return split ? scan_meet_in_the_middle(data) : scan_direct(data, limits.threads);
}

// ---------------------------------------------------------------------------
// Orthogonal cube projection: y = P s with P = A adj(G) A^T, so xi(pi(s)) = y / det G.

template <typename T>
T max_abs_block(const std::vector<std::vector<T>>& projector, std::uint64_t begin, std::uint64_t end) {
  const std::size_t N = projector.size();
  auto gray = [](std::uint64_t t) { return t ^ (t >> 1); };
  std::vector<int> signs(N);
  std::vector<T> y(N, T(0));
  const std::uint64_t g0 = gray(begin);
  for (std::size_t j = 0; j < N; ++j) signs[j] = (g0 >> j) & 1U ? 1 : -1;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) y[i] += signs[j] * projector[i][j];

  T best(0);
  for (std::uint64_t t = begin;;) {
    for (std::size_t i = 0; i < N; ++i) best = std::max<T>(best, absolute(y[i]));
    if (++t == end) break;
    const std::size_t flip = static_cast<std::size_t>(std::countr_zero(t));
    const int delta = signs[flip] < 0 ? 2 : -2;
    signs[flip] = -signs[flip];
    for (std::size_t i = 0; i < N; ++i) y[i] += delta * projector[i][flip];
  }
  return best;
}

template <typename T>
Integer max_abs_projection(const IntMatrix& projector_exact, unsigned threads) {
  const std::size_t N = projector_exact.rows();
  std::vector<std::vector<T>> projector(N, std::vector<T>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) projector[i][j] = convert<T>(projector_exact(i, j));
  const std::uint64_t total = std::uint64_t{1} << N;
  const unsigned workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total)));
  std::vector<T> parts(workers, T(0));
  auto work = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    if (begin < end) parts[w] = max_abs_block(projector, begin, end);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  const T best = *std::max_element(parts.begin(), parts.end());
  if constexpr (std::is_same_v<T, Integer>) {
    return best;
  } else {
    return Integer(static_cast<long>(best));
  }
}

}  // namespace

LatticeModel lattice_of(const UnimodularSystem& sys) {
  LatticeModel lat;
  lat.ambient_dim = sys.size();
  lat.basis_columns = sys.matrix();
  lat.gram = sys.matrix().transpose() * sys.matrix();
  lat.complement_basis = kernel_basis(sys.matrix());
  lat.coordinate_rows = sys.base_rows();
  return lat;
}

Integer discriminant(const LatticeModel& lat) { return determinant(lat.gram); }

std::vector<LatticePoint> polytope_points(const UnimodularSystem& sys, const Limits& limits, ScanMethod method) {
  const std::size_t N = sys.size();
  if (N > limits.scan_cap)
    throw CapError("polytope scan over " + std::to_string(N) + " forms exceeds cap " +
                   std::to_string(limits.scan_cap));
  const std::vector<IntVector> complement = kernel_basis(sys.matrix());
  Integer bound = 0;
  for (const auto& v : complement)
    for (const auto& x : v) bound = std::max(bound, Integer(abs(x)));
  bound *= static_cast<unsigned long>(N + 1);

  std::vector<std::vector<int>> coords = fits_small(bound)
                                             ? run_scan<std::int64_t>(complement, N, limits, method)
                                             : run_scan<Integer>(complement, N, limits, method);
  std::sort(coords.begin(), coords.end());

  const IntMatrix& a = sys.matrix();
  const auto& base = sys.base_rows();
  std::vector<LatticePoint> points;
  points.reserve(coords.size());
  for (auto& c : coords) {
    LatticePoint p;
    p.coefficients.resize(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) p.coefficients[j] = c[base[j]];
    for (std::size_t i = 0; i < N; ++i) {
      long value = 0;
      for (std::size_t j = 0; j < base.size(); ++j) value += a(i, j).get_si() * p.coefficients[j];
      if (value != c[i]) throw std::logic_error("scanned point is not an integer combination of the basis columns");
      if (c[i] != 0) ++p.square;
    }
    p.vertex = rank_of_rows(a, active_rows(c)) == sys.dimension() && sys.dimension() > 0;
    p.coords = std::move(c);
    points.push_back(std::move(p));
  }
  return points;
}

bool vertex_test(const UnimodularSystem& sys, std::span<const int> point) {
  const std::size_t N = sys.size();
  if (point.size() != N) throw MembershipError("point has " + std::to_string(point.size()) + " coordinates, expected " + std::to_string(N));
  for (int x : point)
    if (x < -1 || x > 1) throw MembershipError("point lies outside the cube");
  const IntMatrix& a = sys.matrix();
  const auto& base = sys.base_rows();
  for (std::size_t i = 0; i < N; ++i) {
    long value = 0;
    for (std::size_t j = 0; j < base.size(); ++j) value += a(i, j).get_si() * point[base[j]];
    if (value != point[i]) throw MembershipError("point is not in the lattice of the system");
  }
  if (sys.dimension() == 0) return false;
  return rank_of_rows(a, active_rows(point)) == sys.dimension();
}

std::vector<FacetPair> facets(const UnimodularSystem& sys, const std::vector<LatticePoint>& points) {
  const std::size_t n = sys.dimension();
  auto build = [&](std::size_t row, int side) {
    Facet f;
    f.row = row;
    f.side = side;
    std::vector<IntVector> vertex_coefficients;
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (points[p].coords[row] != side) continue;
      f.points.push_back(p);
      if (points[p].vertex) {
        f.vertices.push_back(p);
        vertex_coefficients.emplace_back(points[p].coefficients.begin(), points[p].coefficients.end());
      }
    }
    f.full_dimensional =
        !vertex_coefficients.empty() && rank(IntMatrix::from_rows(vertex_coefficients, n)) == n;
    return f;
  };
  std::vector<FacetPair> pairs;
  for (auto& cls : multiplicity_classes(sys)) {
    FacetPair pair;
    pair.positive = build(cls.front(), 1);
    pair.negative = build(cls.front(), -1);
    pair.rows = std::move(cls);
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::vector<FacetPair> facets(const UnimodularSystem& sys, const Limits& limits) {
  return facets(sys, polytope_points(sys, limits));
}

VertexEnumeration enumerate_vertices(const UnimodularSystem& sys, const Limits& limits) {
  VertexEnumeration out;
  const IntMatrix& a = sys.matrix();
  const std::size_t N = sys.size();
  const std::size_t n = sys.dimension();
  if (n == 0) return out;
  for (const auto& base : enumerate_bases(sys, limits)) {
    const IntMatrix block = a.select_rows(base);
    const IntMatrix adj = adjugate(block);
    const Integer d = determinant(block);
    const Integer bound = abs(d);
    std::vector<int> eps(n, -1);
    while (true) {
      ++out.candidates;
      // xi(w) = A adj(B) eps / d.
      IntVector numer(n, Integer(0));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) numer[j] += adj(j, k) * eps[k];
      IntVector values(N, Integer(0));
      bool inside = true;
      bool integral = true;
      for (std::size_t i = 0; i < N && inside; ++i) {
        for (std::size_t j = 0; j < n; ++j) values[i] += a(i, j) * numer[j];
        if (abs(values[i]) > bound) inside = false;
        if (!mpz_divisible_p(values[i].get_mpz_t(), d.get_mpz_t())) integral = false;
      }
      if (inside) {
        if (!integral) {
          out.integral = false;
        } else {
          std::vector<int> vertex(N);
          for (std::size_t i = 0; i < N; ++i) vertex[i] = static_cast<int>(Integer(values[i] / d).get_si());
          out.vertices.push_back(std::move(vertex));
        }
      }
      std::size_t k = 0;
      while (k < n && eps[k] == 1) eps[k++] = -1;
      if (k == n) break;
      eps[k] = 1;
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  return out;
}

ZonotopeCheck zonotope_check(const UnimodularSystem& sys, const Limits& limits) {
  ZonotopeCheck check;
  const std::size_t N = sys.size();
  const std::size_t n = sys.dimension();
  const auto vertices = enumerate_vertices(sys, limits).vertices;

  // Two vertices span an edge when the rows tight at both with equal sign have rank n - 1.
  std::map<std::vector<int>, bool> zones;
  for (std::size_t u = 0; u < vertices.size(); ++u) {
    for (std::size_t v = u + 1; v < vertices.size(); ++v) {
      std::vector<std::size_t> common;
      for (std::size_t i = 0; i < N; ++i)
        if (vertices[u][i] == vertices[v][i] && vertices[u][i] != 0) common.push_back(i);
      if (rank_of_rows(sys.matrix(), common) + 1 != n) continue;
      std::vector<int> direction(N);
      for (std::size_t i = 0; i < N; ++i) direction[i] = vertices[v][i] - vertices[u][i];
      auto lead = std::find_if(direction.begin(), direction.end(), [](int x) { return x != 0; });
      if (lead != direction.end() && *lead < 0)
        for (auto& x : direction) x = -x;
      zones[direction] = true;
    }
  }
  for (const auto& [g, unused] : zones) check.generators.push_back(g);
  const std::size_t k = check.generators.size();
  // A zonotope with k edge classes spanning R^n has at least 2^n and at least 2k vertices.
  const bool too_few = n < 63 && vertices.size() < (std::size_t{1} << n);
  if (vertices.empty() || too_few || vertices.size() < 2 * k) {
    check.contained = false;
    return check;
  }
  if (k > limits.projection_cap || k >= 63)
    throw CapError("zonotope check over " + std::to_string(k) + " edge classes exceeds cap " +
                   std::to_string(limits.projection_cap));
  check.projections = std::size_t{1} << k;

  // Doubled image 2 * sum_z eps_z g_z / 2 = sum_z eps_z g_z, walked in Gray-code order.
  std::vector<int> signs(k, -1);
  std::vector<long> image(N, 0);
  for (std::size_t z = 0; z < k; ++z)
    for (std::size_t i = 0; i < N; ++i) image[i] -= check.generators[z][i];
  std::vector<bool> hit(vertices.size(), false);
  std::vector<int> halved(N);
  for (std::uint64_t t = 0;;) {
    bool even = true;
    for (std::size_t i = 0; i < N; ++i) {
      if (image[i] > 2 || image[i] < -2) check.contained = false;
      if (image[i] % 2 != 0) even = false;
      halved[i] = static_cast<int>(image[i] / 2);
    }
    if (even) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), halved);
      if (it != vertices.end() && *it == halved) hit[static_cast<std::size_t>(it - vertices.begin())] = true;
    }
    if (++t == check.projections) break;
    const std::size_t flip = static_cast<std::size_t>(std::countr_zero(t));
    const int delta = signs[flip] < 0 ? 2 : -2;
    signs[flip] = -signs[flip];
    for (std::size_t i = 0; i < N; ++i) image[i] += delta * check.generators[flip][i];
  }
  check.covers_vertices = !vertices.empty() && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  check.zonotope = check.contained && check.covers_vertices;
  return check;
}

CubeProjection project_cube(const UnimodularSystem& sys, const Limits& limits) {
  const std::size_t N = sys.size();
  if (N > limits.projection_cap || N >= 63)
    throw CapError("cube projection over " + std::to_string(N) + " forms exceeds cap " +
                   std::to_string(limits.projection_cap));
  CubeProjection out;
  out.projections = std::size_t{1} << N;
  if (N == 0) return out;
  const IntMatrix& a = sys.matrix();
  const IntMatrix gram = a.transpose() * a;
  out.denominator = determinant(gram);
  const IntMatrix projector = a * adjugate(gram) * a.transpose();
  const Integer bound = projector.max_abs() * static_cast<unsigned long>(2 * N + 2);
  out.max_numerator = fits_small(bound) ? max_abs_projection<std::int64_t>(projector, limits.threads)
                                        : max_abs_projection<Integer>(projector, limits.threads);
  return out;
}

ShortVectorCensus short_vector_census(const std::vector<LatticePoint>& points) {
  ShortVectorCensus census;
  census.counts = {{1, 0}, {2, 0}, {3, 0}};
  std::size_t minimum = 0;
  for (const auto& p : points) {
    if (p.square == 0) continue;
    if (p.square <= 3) ++census.counts[p.square];
    if (minimum == 0 || p.square < minimum) minimum = p.square;
  }
  census.minimum.value = minimum;
  if (minimum == 0)
    census.minimum.kind = MinimumSquare::Kind::None;
  else if (minimum <= 3)
    census.minimum.kind = MinimumSquare::Kind::Exact;
  else if (minimum == 4)
    census.minimum.kind = MinimumSquare::Kind::AtLeastFourAttained;
  else
    census.minimum.kind = MinimumSquare::Kind::AtLeastFour;
  return census;
}

ShortVectorCensus short_vector_census(const UnimodularSystem& sys, const Limits& limits) {
  return short_vector_census(polytope_points(sys, limits));
}

namespace {

// Hermite basis (coefficient coordinates) of the span of lattice vectors.
IntMatrix coefficient_hermite_basis(const LatticeModel& lat, const std::vector<IntVector>& vectors) {
  const std::size_t n = lat.basis_columns.cols();
  std::vector<IntVector> coefficients;
  for (const auto& v : vectors) {
    if (v.size() != lat.ambient_dim) throw MembershipError("vector has the wrong number of coordinates");
    for (const auto& z : lat.complement_basis)
      if (sgn(dot(v, z)) != 0) throw MembershipError("vector " + to_string(v) + " is not in the lattice");
    IntVector c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = v[lat.coordinate_rows[j]];
    for (std::size_t i = 0; i < lat.ambient_dim; ++i) {
      Integer value = 0;
      for (std::size_t j = 0; j < n; ++j) value += lat.basis_columns(i, j) * c[j];
      if (value != v[i]) throw MembershipError("vector " + to_string(v) + " is not in the lattice");
    }
    coefficients.push_back(std::move(c));
  }
  return hermite_normal_form(IntMatrix::from_rows(coefficients, n));
}

}  // namespace

std::optional<Integer> lattice_index(const LatticeModel& lat, const std::vector<IntVector>& vectors) {
  const IntMatrix h = coefficient_hermite_basis(lat, vectors);
  if (h.rows() != lat.basis_columns.cols()) return std::nullopt;
  return abs(determinant(h));
}

bool lattice_generated_by(const LatticeModel& lat, const std::vector<IntVector>& vectors) {
  const IntMatrix h = coefficient_hermite_basis(lat, vectors);
  if (h.rows() != lat.basis_columns.cols()) return false;
  const IntMatrix ambient = h * lat.basis_columns.transpose();
  return determinant(ambient * ambient.transpose()) == discriminant(lat);
}

PolytopeReport polytope_report(const UnimodularSystem& sys, const Limits& limits) {
  PolytopeReport report;
  report.points = polytope_points(sys, limits);
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    const auto& p = report.points[i];
    if (p.vertex) report.vertices.push_back(i);
    if (p.square == 0)
      report.origin_present = true;
    else
      ++report.census[p.square];
  }
  report.facet_pairs = facets(sys, report.points);

  report.centrally_symmetric = std::all_of(report.points.begin(), report.points.end(), [&](const LatticePoint& p) {
    std::vector<int> negated(p.coords);
    for (auto& x : negated) x = -x;
    return std::binary_search(report.points.begin(), report.points.end(), negated,
                              [](const auto& lhs, const auto& rhs) {
                                if constexpr (std::is_same_v<std::decay_t<decltype(lhs)>, LatticePoint>)
                                  return lhs.coords < rhs;
                                else
                                  return lhs < rhs.coords;
                              });
  });

  report.zonotope_verified = zonotope_check(sys, limits).zonotope;

  const VertexEnumeration enumerated = enumerate_vertices(sys, limits);
  std::vector<std::vector<int>> lattice_vertices;
  for (std::size_t i : report.vertices) lattice_vertices.push_back(report.points[i].coords);
  const bool facets_ok = std::all_of(report.facet_pairs.begin(), report.facet_pairs.end(), [](const FacetPair& pair) {
    return pair.positive.full_dimensional && pair.negative.full_dimensional;
  });
  report.reflexive_verified = enumerated.integral && enumerated.vertices == lattice_vertices && facets_ok;
  return report;
}

}  // namespace unimod
