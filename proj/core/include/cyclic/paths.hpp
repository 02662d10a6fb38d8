#pragma once

#include "cyclic/cyclic_core.hpp"
#include "cyclic/linalg.hpp"
#include "cyclic/lp.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cyclic {

/// λ ∈ {0,+,−}^m, entries stored as 0, +1, −1.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<int> entries);

  /// Compact text over `+ - 0`, e.g. `++0--0--++-`.
  static SignVector parse(std::string_view text);
  std::string to_string() const;

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  /// Componentwise order in which + < 0 and − < 0 (0 is above both signs).
  bool leq(const SignVector& other) const;

  bool operator==(const SignVector&) const = default;
  auto operator<=>(const SignVector&) const = default;

 private:
  std::vector<int> entries_;
};

/// Zeros plus even gaps (opposite signs, even number of zeros between) plus odd gaps
/// (equal signs, odd number of zeros between).
int m_of_lambda(const SignVector& lambda);

/// Number of maximal constant-sign blocks of a zero-free vector.
int sign_blocks(const SignVector& lambda);

/// Faces F_1, …, F_k of C(n,d) with max(F_i) = min(F_{i+1}), from vertex 1 to vertex n.
struct CellularString {
  std::vector<FaceSet> faces;

  bool is_tight() const;
  /// `1-3-5-8` for tight strings; faces joined by `|` otherwise.
  std::string to_string(int n) const;
  bool operator==(const CellularString&) const = default;
  auto operator<=>(const CellularString&) const = default;
};

bool is_valid_string(const CellularString& s, int n, int d);

/// Entry i−2 encodes vertex i (2 ≤ i ≤ n−1): + if absent, − if it joins two faces, 0 if it is
/// interior to a face.
SignVector lambda_of_string(const CellularString& s, int n);

/// All cellular strings of C(n,d) in lexicographic order of their face lists.
std::vector<CellularString> enumerate_cellular_strings(int n, int d);

/// Strings made of edges only (monotone edge paths).
std::vector<CellularString> enumerate_monotone_paths(int n, int d);

/// σ₁ ≤ σ₂: every face of σ₁ lies inside a face of σ₂.
bool string_refines(const CellularString& a, const CellularString& b);

/// Coherence criterion m(λ) ≤ d−2.
bool is_coherent_string(const SignVector& lambda, int d);

/// Coherence decided from the definition: a polynomial f of degree ≤ d with every face on a
/// chord of the lifted points (t_j, f(t_j)) and every other point strictly above it.
StrictSystem string_coherence_system(const CellularString& s, const ParamVector& params);
bool is_coherent_string_lp(const CellularString& s, const ParamVector& params);

/// 2·Σ_{j=0}^{d−2} C(n−3, j).
std::uint64_t count_coherent_paths(int n, int d);

/// 2·Σ_{j=0}^{d−2} C(C(n,3)−1, j).
std::uint64_t path_count_upper_bound(int n, int d);

/// Proper faces of the cyclic zonotope Z(n,d): all λ ∈ {0,+,−}^n with m(λ) ≤ d−1.
std::vector<SignVector> zonotope_face_poset(int n, int d);

/// Coherent strings of C(n,d) mapped by σ ↦ λσ onto the faces of Z(n−2,d−1), order-preserving
/// in both directions.
bool coherent_strings_match_zonotope(int n, int d);

/// Polytope given by its vertex columns.
class GeneralPolytope {
 public:
  /// Throws std::invalid_argument if the vertices are not full-dimensional or not all extreme.
  explicit GeneralPolytope(RationalMatrix vertices);

  int dimension() const { return static_cast<int>(vertices_.rows()); }
  int vertex_count() const { return static_cast<int>(vertices_.cols()); }
  const RationalMatrix& vertices() const { return vertices_; }
  RationalVector vertex(int i) const { return vertices_.column(static_cast<std::size_t>(i)); }

  /// Vertex sets of the facets (0-based indices), by brute force over d-subsets.
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  /// Graph edges (0-based, u < v).
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  RationalMatrix vertices_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::pair<int, int>> edges_;
};

/// Vertex is not in the convex hull of the others.
bool is_extreme_vertex(const RationalMatrix& vertices, int index);

/// Monotone edge paths from the lowest to the highest vertex in coordinate `direction` (0-based).
/// Throws std::invalid_argument when two vertices tie in that coordinate.
std::vector<std::vector<int>> monotone_paths(const GeneralPolytope& p, int direction);

/// Some functional lifts every other vertex strictly above each lifted path edge.
bool is_coherent_path(const GeneralPolytope& p, int direction, const std::vector<int>& path);

/// Coherent monotone paths, in the order produced by monotone_paths.
std::vector<std::vector<int>> coherent_paths_of_general_polytope(const GeneralPolytope& p, int direction);

/// Reads whitespace-separated rationals, one matrix row per line; blank lines and '#' comments skipped.
RationalMatrix parse_matrix(std::string_view text);

}  // namespace cyclic
