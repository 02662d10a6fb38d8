#pragma once

#include "cyclic/linalg.hpp"
#include "cyclic/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyclic {

/// Largest vertex count representable by a FaceSet.
inline constexpr int kMaxVertices = 31;

/// Sorted set of 1-based vertex indices, stored as a bitmask (bit i-1 <-> vertex i).
class FaceSet {
 public:
  constexpr FaceSet() = default;
  FaceSet(std::initializer_list<int> indices);

  static FaceSet from_indices(std::span<const int> indices);
  static constexpr FaceSet from_mask(std::uint32_t mask) {
    FaceSet f;
    f.mask_ = mask;
    return f;
  }
  /// {1, ..., n}
  static constexpr FaceSet full(int n) { return from_mask(n >= 32 ? ~0u : ((1u << n) - 1u)); }

  constexpr std::uint32_t mask() const { return mask_; }
  int size() const { return __builtin_popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int vertex) const { return vertex >= 1 && vertex <= 32 && (mask_ >> (vertex - 1)) & 1u; }
  /// Smallest and largest member; 0 for the empty set.
  int min() const { return mask_ ? __builtin_ctz(mask_) + 1 : 0; }
  int max() const { return mask_ ? 32 - __builtin_clz(mask_) : 0; }

  std::vector<int> indices() const;

  constexpr FaceSet with(int vertex) const { return from_mask(mask_ | (1u << (vertex - 1))); }
  constexpr FaceSet without(int vertex) const { return from_mask(mask_ & ~(1u << (vertex - 1))); }
  constexpr bool is_subset_of(FaceSet other) const { return (mask_ & ~other.mask_) == 0; }

  friend constexpr FaceSet operator|(FaceSet a, FaceSet b) { return from_mask(a.mask_ | b.mask_); }
  friend constexpr FaceSet operator&(FaceSet a, FaceSet b) { return from_mask(a.mask_ & b.mask_); }
  friend constexpr FaceSet operator-(FaceSet a, FaceSet b) { return from_mask(a.mask_ & ~b.mask_); }

  /// Bitmask order; used for canonical storage and hashing, not for display.
  friend constexpr auto operator<=>(FaceSet, FaceSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Lexicographic order on sorted index lists (display order).
bool lex_less(FaceSet a, FaceSet b);

/// Paper-style digit string (`1456`) when n <= 9, comma-separated indices otherwise.
std::string format_face(FaceSet face, int n);
/// Accepts both the digit-string and the comma-separated form.
FaceSet parse_face(std::string_view text);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<FaceSet> k_subsets(int n, int k);

/// Strictly increasing exact parameters t_1 < ... < t_n realizing C(n,d).
class ParamVector {
 public:
  ParamVector(RationalVector t, int d);

  /// t_i = i.
  static ParamVector standard(int n, int d);

  int n() const { return static_cast<int>(t_.size()); }
  int d() const { return d_; }
  /// 1-based parameter of vertex i.
  const Rational& at(int vertex) const { return t_[static_cast<std::size_t>(vertex - 1)]; }
  const RationalVector& values() const { return t_; }

  /// Same parameters viewed as a realization of C(n, other_d).
  ParamVector with_dimension(int other_d) const { return ParamVector(t_, other_d); }

  std::string to_string() const;

 private:
  RationalVector t_;
  int d_;
};

enum class FaceClass { Upper, Lower, Contour };
std::string_view to_string(FaceClass c);

/// d x n matrix whose column i is (t_i, t_i^2, ..., t_i^d).
RationalMatrix moment_points(const ParamVector& params);
/// (d+1) x n matrix: moment points with a row of ones on top.
RationalMatrix homogenized_points(const ParamVector& params);

/// Gale's evenness test: S spans a boundary face of C(n,d). The empty set is the empty face;
/// sets with more than d elements are never proper boundary faces.
bool gale_evenness_is_face(FaceSet s, int n, int d);

/// Same test with S read relative to an ordered ground set (S must be a subset of it).
bool gale_evenness_is_face_within(FaceSet s, FaceSet ground, int d);

/// Facets of C(n,d) in lexicographic order.
std::vector<FaceSet> enumerate_facets(int n, int d);

/// Facets of the cyclic polytope spanned by a vertex subset (|cell| >= d+1) in dimension d.
std::vector<FaceSet> cell_facets(FaceSet cell, int d);

/// Upper/Lower for a facet of C(n,d), decided from the exact facet normal at t_i = i.
/// Upper means the functionals minimized on the facet have positive last coordinate.
FaceClass classify_facet(FaceSet s, int n, int d);

/// Same classification computed at arbitrary parameters.
FaceClass classify_facet_at(FaceSet s, const ParamVector& params);

/// Combinatorial form of the classification: Upper iff the trailing block ending at n
/// (possibly empty) has even length.
FaceClass classify_facet_by_parity(FaceSet s, int n, int d);

/// Upper / Lower if every facet containing S is Upper / Lower, Contour otherwise.
FaceClass classify_face(FaceSet s, int n, int d);

/// d!-scaled volume of the simplex on S: prod_{i<j in S} (t_j - t_i).
Rational vandermonde_volume(FaceSet s, const ParamVector& params);

}  // namespace cyclic

template <>
struct std::hash<cyclic::FaceSet> {
  std::size_t operator()(cyclic::FaceSet f) const noexcept { return std::hash<std::uint32_t>{}(f.mask()); }
};
