#include "cyclic/gale.hpp"

#include "cyclic/lp.hpp"

#include <stdexcept>

namespace cyclic {

RationalMatrix DependenceBasis::gale_matrix(std::size_t points) const {
  RationalMatrix g(vectors.size(), points);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != points) throw std::invalid_argument("gale_matrix: dimension mismatch");
    for (std::size_t c = 0; c < points; ++c) g(r, c) = vectors[r][c];
  }
  return g;
}

DependenceBasis kernel_basis(const RationalMatrix& homogenized) {
  if (rank(homogenized) != homogenized.rows()) {
    throw std::invalid_argument("kernel_basis: point matrix is rank deficient");
  }
  return DependenceBasis{null_space(homogenized)};
}

DependenceBasis dependence_basis(const ParamVector& params) { return kernel_basis(homogenized_points(params)); }

RationalVector unique_dependence_coeffs(const ParamVector& params) {
  if (params.n() != params.d() + 2) throw std::invalid_argument("unique_dependence_coeffs: need n = d+2");
  return circuit_dependence(FaceSet::full(params.n()), params);
}

RationalVector circuit_dependence(FaceSet support, const ParamVector& params) {
  if (support.size() != params.d() + 2 || !support.is_subset_of(FaceSet::full(params.n()))) {
    throw std::invalid_argument("circuit_dependence: support must be d+2 points of the configuration");
  }
  RationalVector c(static_cast<std::size_t>(params.n()), Rational(0));
  const auto idx = support.indices();
  for (int i : idx) {
    Rational prod = 1;
    for (int j : idx) {
      if (j != i) prod *= params.at(j) - params.at(i);
    }
    c[static_cast<std::size_t>(i - 1)] = 1 / prod;
  }
  return c;
}

bool in_relint_pos_cone(const RationalVector& f, const std::vector<RationalVector>& generators) {
  const std::size_t dim = f.size();
  for (const auto& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("in_relint_pos_cone: dimension mismatch");
  }
  // Unknowns (λ_1..λ_k, μ): λ > 0, μ > 0, Σ λ_i g_i − μ f = 0.
  const std::size_t k = generators.size();
  StrictSystem sys(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    RationalVector row(k + 1, Rational(0));
    row[i] = 1;
    sys.add_strict(std::move(row));
  }
  for (std::size_t coord = 0; coord < dim; ++coord) {
    RationalVector row(k + 1, Rational(0));
    for (std::size_t i = 0; i < k; ++i) row[i] = generators[i][coord];
    row[k] = -f[coord];
    sys.add_equality(std::move(row));
  }
  return solve_strict(sys).feasible();
}

namespace {

void require_negative(const ParamVector& params) {
  if (!(params.values().back() < 0)) throw std::invalid_argument("lifting requires all parameters negative");
}

}  // namespace

LiftingMap lifting_map(const ParamVector& params) {
  require_negative(params);
  LiftingMap map;
  for (const auto& t : params.values()) map.c.push_back(-t);
  return map;
}

ParamVector lift_params(const ParamVector& params) {
  require_negative(params);
  RationalVector t = params.values();
  t.emplace_back(0);
  return ParamVector(std::move(t), params.d() + 1);
}

RationalVector tau_star_heights(const RationalVector& w, const ParamVector& params) {
  require_negative(params);
  if (w.size() != static_cast<std::size_t>(params.n())) throw std::invalid_argument("tau_star_heights: wrong length");
  RationalVector out(w.size() + 1, Rational(0));
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = -params.values()[i] * w[i];
  return out;
}

}  // namespace cyclic
