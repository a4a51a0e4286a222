#pragma once

// The lattice L = W cap Z^N of a system (W the image of the evaluation map
// u -> (xi_1(u), ..., xi_N(u))) and the polytope Delta = W cap [-1, 1]^N.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "unimod/integer.hpp"
#include "unimod/limits.hpp"
#include "unimod/system.hpp"

namespace unimod {

struct LatticeModel {
  std::size_t ambient_dim = 0;
  /// N x n; column j is the image of the j-th dual base vector.
  IntMatrix basis_columns;
  /// basis_columns^T basis_columns.
  IntMatrix gram;
  /// Saturated basis of W^perp cap Z^N.
  std::vector<IntVector> complement_basis;
  /// Rows of the source system forming its base. A lattice vector z has
  /// coefficients z[coordinate_rows[j]] in basis_columns.
  std::vector<std::size_t> coordinate_rows;
};

LatticeModel lattice_of(const UnimodularSystem& sys);

/// det(gram).
Integer discriminant(const LatticeModel& lat);

/// A point of Delta cap L. Coordinates are the form values xi_i(p).
struct LatticePoint {
  std::vector<int> coords;
  std::size_t square = 0;
  std::vector<int> coefficients;
  bool vertex = false;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

enum class ScanMethod { Automatic, Direct, MeetInTheMiddle };

/// Every point of Delta cap L including the origin, sorted lexicographically
/// by coordinates. Runs a 3^N coordinate scan filtered by orthogonality to
/// the complement basis; Automatic switches to a meet-in-the-middle split for
/// N >= 15. Vertex flags are filled in. Throws CapError above limits.scan_cap.
std::vector<LatticePoint> polytope_points(const UnimodularSystem& sys, const Limits& limits = {},
                                          ScanMethod method = ScanMethod::Automatic);

/// True iff the forms at level +-1 on `point` have rank n. Throws
/// MembershipError unless the point lies in Delta cap L.
bool vertex_test(const UnimodularSystem& sys, std::span<const int> point);

struct Facet {
  /// Defining row and side: the facet is {p : side * xi_row(p) = 1}.
  std::size_t row = 0;
  int side = 1;
  /// Indices into the point list the facet was computed from.
  std::vector<std::size_t> points;
  std::vector<std::size_t> vertices;
  /// The facet's vertices span a hyperplane (rank n coefficient set).
  bool full_dimensional = false;
};

struct FacetPair {
  /// The multiplicity class of forms defining this pair.
  std::vector<std::size_t> rows;
  Facet positive;
  Facet negative;
};

/// One parallel facet pair per multiplicity class, computed against `points`
/// (the output of polytope_points for the same system).
std::vector<FacetPair> facets(const UnimodularSystem& sys, const std::vector<LatticePoint>& points);
std::vector<FacetPair> facets(const UnimodularSystem& sys, const Limits& limits = {});

/// Vertices of Delta computed without the lattice scan: every base S and sign
/// vector eps determine the unique w with xi_S(w) = eps, solved over the
/// rationals; the solutions inside Delta are the vertices.
struct VertexEnumeration {
  /// Integral vertices in ambient coordinates, sorted.
  std::vector<std::vector<int>> vertices;
  /// No vertex had a fractional coordinate.
  bool integral = true;
  std::size_t candidates = 0;
};

/// Throws CapError when base enumeration exceeds limits.enumeration_cap.
VertexEnumeration enumerate_vertices(const UnimodularSystem& sys, const Limits& limits = {});

struct ZonotopeCheck {
  /// Delta equals the image of [-1, 1]^k under eps -> sum_z eps_z g_z / 2.
  bool zonotope = false;
  /// Every image of a cube vertex lies in Delta.
  bool contained = true;
  /// Every vertex of Delta is the image of a cube vertex.
  bool covers_vertices = false;
  /// One edge vector of Delta per class of parallel edges.
  std::vector<std::vector<int>> generators;
  /// 2^k.
  std::size_t projections = 0;
};

/// Certifies that Delta is a zonotope by rebuilding it as the sum of its edge
/// classes and comparing vertex sets exactly. Fails without enumerating the
/// cube (projections = 0) when Delta has fewer than max(2^n, 2k) vertices.
/// Throws CapError when more than limits.projection_cap edge classes remain.
ZonotopeCheck zonotope_check(const UnimodularSystem& sys, const Limits& limits = {});

struct CubeProjection {
  std::size_t projections = 0;
  /// max over cube vertices s and rows i of |xi_i(pi(s))|, as a fraction.
  Integer max_numerator = 0;
  Integer denominator = 1;

  bool contained() const { return max_numerator <= denominator; }
};

/// Orthogonal projection pi of all 2^N vertices of [-1, 1]^N onto W, in exact
/// arithmetic. Throws CapError above limits.projection_cap.
CubeProjection project_cube(const UnimodularSystem& sys, const Limits& limits = {});

struct MinimumSquare {
  enum class Kind {
    /// The value is the lattice minimum (certified when it is <= 3).
    Exact,
    /// No vector of square <= 3 exists and a square-4 point of Delta does.
    AtLeastFourAttained,
    /// No vector of square <= 3 exists; only the bound 4 is known.
    AtLeastFour,
    /// The lattice is zero.
    None,
  };
  Kind kind = Kind::None;
  /// Smallest nonzero square seen in Delta cap L.
  std::size_t value = 0;
};

struct ShortVectorCensus {
  /// Number of lattice vectors (both signs) of square 1, 2 and 3.
  std::map<std::size_t, std::size_t> counts;
  MinimumSquare minimum;

  std::size_t units() const { return counts.at(1); }
  std::size_t roots() const { return counts.at(2); }
};

ShortVectorCensus short_vector_census(const std::vector<LatticePoint>& points);
ShortVectorCensus short_vector_census(const UnimodularSystem& sys, const Limits& limits = {});

/// Index of the sublattice generated by `vectors` (ambient coordinates), or
/// nullopt when they do not span. Throws MembershipError if a vector is not
/// in L.
std::optional<Integer> lattice_index(const LatticeModel& lat, const std::vector<IntVector>& vectors);

/// True iff the vectors generate L: the Gram determinant of a Hermite basis of
/// their span equals the discriminant.
bool lattice_generated_by(const LatticeModel& lat, const std::vector<IntVector>& vectors);

struct PolytopeReport {
  std::vector<LatticePoint> points;
  /// Indices into points.
  std::vector<std::size_t> vertices;
  std::vector<FacetPair> facet_pairs;
  /// Point counts by square, origin excluded.
  std::map<std::size_t, std::size_t> census;
  bool origin_present = false;
  /// zonotope_check(sys).zonotope.
  bool zonotope_verified = false;
  /// The vertices from enumerate_vertices are integral and agree with the
  /// vertices found by the scan, and every facet is full-dimensional at level 1.
  bool reflexive_verified = false;
  bool centrally_symmetric = false;
};

PolytopeReport polytope_report(const UnimodularSystem& sys, const Limits& limits = {});

}  // namespace unimod
