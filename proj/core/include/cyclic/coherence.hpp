#pragma once

#include "cyclic/cyclic_core.hpp"
#include "cyclic/lp.hpp"
#include "cyclic/subdiv.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cyclic {

enum class Formulation {
  /// One folding inequality per interior wall.
  Walls,
  /// One inequality per (cell, point outside the cell) pair.
  BMatrix,
};

/// Heights w ∈ ℚⁿ inducing `sub`: coplanarity equalities for non-simplex cells plus the strict
/// rows of the chosen formulation. Throws std::invalid_argument for an invalid subdivision.
StrictSystem regularity_system(const Subdivision& sub, const ParamVector& params,
                               Formulation formulation = Formulation::Walls);

FeasibilityResult is_regular(const Subdivision& sub, const ParamVector& params,
                             Formulation formulation = Formulation::Walls);

/// regularity_system plus Σ c_i w_i = 0 for each affine dependence c of C(n,d').
/// Throws std::invalid_argument naming the first cell that is not a face of C(n,d').
StrictSystem pi_coherence_system(const Subdivision& sub, const ParamVector& params, int d_prime);

FeasibilityResult is_pi_coherent(const Subdivision& sub, const ParamVector& params, int d_prime);

/// Some cell spans an Upper face and some cell spans a Lower face of C(n,d'). Cells equal to the
/// whole vertex set are not boundary faces and are ignored.
bool has_upper_and_lower_cells(const Subdivision& sub, int n, int d_prime);

/// Lower faces of the lifted configuration {(q_i, w_i)}.
Subdivision regular_subdivision_from_heights(const ParamVector& params, const RationalVector& w);

/// Flags every element of the poset by the π-coherence LP at `params`.
void flag_coherence(BauesPoset& poset, const ParamVector& params, unsigned workers = 1);

struct FiberReport {
  BauesPoset poset;
  /// Per element: the parameter-free upper/lower incoherence witness applies.
  std::vector<bool> upper_lower;
  /// Number of coherent proper elements by rank inside the coherent subposet.
  std::vector<std::size_t> coherent_f_vector;
  /// k when the coherent proper part is the face poset of a k-gon.
  std::optional<std::size_t> polygon;
  EulerCharacteristic proper_euler;
};

/// Baues poset of π: C(n,d') → C(n,d) with coherence flags at `params`.
FiberReport fiber_face_poset(int n, int d, int d_prime, const ParamVector& params, unsigned workers = 1);

/// Subdivision {2345, 1256…n} of C(n,2).
Subdivision step1_subdivision(int n);

/// |c₄|/|c₃| for the unique dependence of C(n,n−2) at these parameters.
Rational step1_ratio(const ParamVector& params);

struct ScanSample {
  RationalVector t;
  bool coherent = false;
  /// |c₄|/|c₃| when n = d'+2.
  std::optional<Rational> ratio;
};

struct ScanReport {
  std::vector<ScanSample> samples;
  /// Indices i where the verdict changes between sample i and i+1.
  std::vector<std::size_t> verdict_changes;
  /// Indices i where the ratio crosses or touches 1 between sample i and i+1.
  std::vector<std::size_t> ratio_crossings;
};

/// Coherence of `sub` for π: C(n,d') → C(n,d) at each parameter vector of the family.
/// Throws std::invalid_argument for non-increasing samples.
ScanReport parameter_scan(const Subdivision& sub, int d_prime, const std::vector<RationalVector>& family);

/// Samples (1−s)·a + s·b for s = 0, 1/steps, …, 1.
std::vector<RationalVector> rational_path(const RationalVector& a, const RationalVector& b, int steps);

/// Exact point with |c₄| = |c₃| near the straight path from a to b (n = d'+2, ratio above 1 at one
/// end and below 1 at the other): bisection on the path, then t₁ solved exactly with the other
/// parameters fixed. Empty when no valid point is found.
std::optional<RationalVector> locate_ratio_crossing(const RationalVector& a, const RationalVector& b, int d_prime,
                                                    int iterations = 40);

}  // namespace cyclic
