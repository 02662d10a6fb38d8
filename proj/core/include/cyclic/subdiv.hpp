#pragma once

#include "cyclic/cyclic_core.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cyclic {

/// Cells of a subdivision of C(n,d), kept sorted in mask order.
class Subdivision {
 public:
  Subdivision() = default;
  Subdivision(int n, int d, std::vector<FaceSet> cells);

  /// The one-cell subdivision {[n]}.
  static Subdivision trivial(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<FaceSet>& cells() const { return cells_; }
  bool contains(FaceSet cell) const;
  bool is_triangulation() const;

  /// Cells in lexicographic order, each in the face text format.
  std::string to_string() const;

  bool operator==(const Subdivision& other) const = default;
  auto operator<=>(const Subdivision& other) const = default;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<FaceSet> cells_;
};

/// Triangulations are subdivisions whose cells all have d+1 vertices.
using Triangulation = Subdivision;

/// d!-scaled volume of C(n,d): the sum of the simplex volumes of its pulling triangulation.
Rational total_volume(const ParamVector& params);

/// Cones from the smallest vertex over the facets of the cell that avoid it.
std::vector<FaceSet> pulling_triangulation(FaceSet cell, int d);

/// Exact check that the cells form a polytopal subdivision of C(n,d): every cell facet is either
/// a boundary facet of C(n,d) used once or an interior wall with cells on both sides, and the
/// cell volumes add up to the volume of C(n,d).
/// Throws std::invalid_argument for cells with at most d vertices.
bool is_valid_subdivision(const std::vector<FaceSet>& cells, const ParamVector& params);
bool is_valid_subdivision(const Subdivision& sub, const ParamVector& params);

/// Every cell spans a face of C(n,d') (the full vertex set counts as the whole polytope).
/// With verify_condition_ii the literal compatibility condition is also checked geometrically
/// at `params`, and a disagreement with the combinatorial answer throws std::logic_error.
bool is_pi_induced(const Subdivision& sub, int d_prime);
bool is_pi_induced(const Subdivision& sub, int d_prime, const ParamVector& params, bool verify_condition_ii);

/// Literal compatibility condition for the family of faces spanned by the cells: for every cell C
/// and every face G of the cell, π(G) is a face of π(C), decided by strict feasibility.
bool satisfies_condition_ii(const Subdivision& sub, const ParamVector& params);

/// Sign of det of the homogenized points in the given order.
int orientation(const ParamVector& params, std::span<const int> vertices);

/// Incremental placing triangulation in the given insertion order (a permutation of 1..n).
Triangulation placing_triangulation(const ParamVector& params, std::span<const int> insertion_order);

/// Places the new point n+1 (params has n+1 entries, t_{n+1} > t_n) over a triangulation of C(n,d).
Triangulation extend_by_placing(const Triangulation& t, const ParamVector& extended_params);

/// All triangulations reachable by one bistellar flip.
std::vector<Triangulation> bistellar_flips(const Triangulation& t);

struct FlipGraph {
  std::vector<Triangulation> triangulations;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Breadth-first search of the flip graph from the placing triangulation in natural order.
/// `workers` threads expand each frontier; results are ordered deterministically.
FlipGraph enumerate_triangulations(int n, int d, unsigned workers = 1);

/// Σ over non-simplex cells of (|cell| − d − 1).
int ranking(const Subdivision& sub);

/// Sizes of the non-simplex cells, largest first.
struct SubdivisionType {
  int d = 0;
  std::vector<int> sizes;

  /// `[2C(6,4)]`, `[C(6,3),C(5,3)]`, `[]` for triangulations.
  std::string to_string() const;
  int ranking() const;
  bool operator==(const SubdivisionType&) const = default;
};
SubdivisionType subdivision_type(const Subdivision& sub);

/// All types of the given ranking whose cells have between d+2 and n−1 vertices.
std::vector<SubdivisionType> types_of_ranking(int n, int d, int r);

/// Subdivisions of the requested type: one fixed triangulation per cell is looked up inside the
/// enumerated triangulations and each match, merged back, is a subdivision of that type.
std::vector<Subdivision> enumerate_subdivisions_by_type(const FlipGraph& graph, const SubdivisionType& type);

/// Triangulations, then every type of ranking 1, 2, ... until a ranking contributes nothing,
/// then the trivial subdivision.
std::vector<Subdivision> enumerate_all_subdivisions(const FlipGraph& graph);

/// Dissections of the convex n-gon by non-crossing diagonals, as subdivisions of C(n,2).
std::vector<Subdivision> polygon_dissections(int n);

/// a ≤ b in the refinement order: every cell of a lies inside some cell of b.
bool refines(const Subdivision& a, const Subdivision& b);

struct BauesPoset {
  int n = 0;
  int d = 0;
  int d_prime = 0;
  std::vector<Subdivision> elements;
  /// leq[i][j] iff elements[i] refines elements[j].
  std::vector<std::vector<bool>> leq;
  /// Set by the coherence module; empty until then.
  std::vector<bool> coherent;

  std::size_t size() const { return elements.size(); }
  /// Index of the trivial subdivision, or size() if absent.
  std::size_t top() const;
  std::vector<std::size_t> minimal_elements() const;
  bool is_partial_order() const;
  /// Induced subposet on the selected elements.
  BauesPoset restricted(const std::vector<std::size_t>& keep) const;
  /// Poset without its top element.
  BauesPoset proper_part() const;
};

/// π-induced subdivisions of C(n,d) for π: C(n,d') → C(n,d), ordered by refinement.
/// d = 2 uses polygon dissections; larger d uses enumerate_all_subdivisions (n ≤ 9).
BauesPoset enumerate_baues_poset(int n, int d, int d_prime);

struct EulerCharacteristic {
  long long chi = 0;
  long long reduced = 0;
};
/// Euler characteristic of the order complex (all chains) of the poset.
EulerCharacteristic order_complex_euler(const BauesPoset& poset);
/// Same for an arbitrary finite poset given by its strict order relation less[i][j].
EulerCharacteristic order_complex_euler(const std::vector<std::vector<bool>>& less);

/// Every cell containing v, with v removed, is a facet of the cyclic polytope on [n] \ {v}.
bool has_good_link(const Triangulation& t, int v);
std::vector<int> good_link_vertices(const Triangulation& t);

/// Orbits of the combinatorial symmetry group of C(n,d): reversal i ↦ n+1−i, plus the cyclic
/// shift when d is even. Returns one orbit id per triangulation.
std::vector<std::size_t> symmetry_orbits(const std::vector<Triangulation>& triangulations);
std::size_t symmetry_orbit_count(const std::vector<Triangulation>& triangulations);

/// Parses one triangulation line: cells separated by ',' (digit strings, n ≤ 9) or by ';'
/// (comma-separated indices). Text after '#' is ignored.
Subdivision parse_subdivision(std::string_view line, int n, int d);
/// Inverse of parse_subdivision.
std::string format_subdivision(const Subdivision& sub);

}  // namespace cyclic
