#pragma once

#include "cyclic/cyclic_core.hpp"
#include "cyclic/linalg.hpp"
#include "cyclic/rational.hpp"

#include <vector>

namespace cyclic {

/// Basis of the affine dependences ker(φ_Q) of a point configuration.
struct DependenceBasis {
  std::vector<RationalVector> vectors;

  /// Gale transform: one column q*_i per point, i.e. the basis vectors stacked as rows.
  RationalMatrix gale_matrix(std::size_t points) const;
};

/// Null space of the homogenized point matrix, read off its reduced echelon form.
/// Throws std::invalid_argument if the matrix does not have full row rank.
DependenceBasis kernel_basis(const RationalMatrix& homogenized);

/// Convenience: kernel_basis(homogenized_points(params)).
DependenceBasis dependence_basis(const ParamVector& params);

/// Closed form c_i = ∏_{j≠i} 1/(t_j − t_i) of the unique dependence when n = d+2.
RationalVector unique_dependence_coeffs(const ParamVector& params);

/// Dependence on the points indexed by `support` (|support| = d+2), in the same closed form,
/// returned as a full n-vector that vanishes off the support.
RationalVector circuit_dependence(FaceSet support, const ParamVector& params);

/// True iff f = Σ λ_i g_i with every λ_i > 0, i.e. f lies in the relative interior
/// of the cone spanned by the generators. Decided by the strict feasibility kernel.
bool in_relint_pos_cone(const RationalVector& f, const std::vector<RationalVector>& generators);

/// Multipliers c_i = −t_i of the single-element lifting with t_{n+1} = 0.
struct LiftingMap {
  RationalVector c;
};
LiftingMap lifting_map(const ParamVector& params);

/// Appends t_{n+1} = 0 and raises the dimension by one. Requires t_n < 0.
ParamVector lift_params(const ParamVector& params);

/// τ*-image of heights: w'_i = −t_i·w_i for i ≤ n and w'_{n+1} = 0. Requires t_n < 0.
RationalVector tau_star_heights(const RationalVector& w, const ParamVector& params);

}  // namespace cyclic
