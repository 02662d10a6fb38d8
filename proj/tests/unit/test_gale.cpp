#include "cyclic/coherence.hpp"
#include "cyclic/gale.hpp"
#include "cyclic/presets.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cyclic;

namespace {

RationalVector scaled_to(const RationalVector& v, const Rational& first) {
  RationalVector out = v;
  const Rational s = first / v[0];
  for (auto& x : out) x *= s;
  return out;
}

std::size_t stacked_rank(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b) {
  std::vector<RationalVector> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return rank(RationalMatrix::from_rows(all));
}

}  // namespace

TEST(Gale, KernelBasisSmallCases) {
  const auto b = dependence_basis(ParamVector::standard(4, 2));
  ASSERT_EQ(b.vectors.size(), 1u);
  EXPECT_EQ(scaled_to(b.vectors[0], 1), (RationalVector{1, -3, 3, -1}));
  EXPECT_TRUE(dependence_basis(ParamVector::standard(3, 2)).vectors.empty());
  const auto c64 = dependence_basis(ParamVector::standard(6, 4));
  ASSERT_EQ(c64.vectors.size(), 1u);
  const RationalVector v = scaled_to(c64.vectors[0], 1);
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(sgn(v[i]), i % 2 == 0 ? 1 : -1);
}

TEST(Gale, KernelAnnihilatesPoints) {
  std::mt19937_64 rng(2);
  for (int d = 1; d <= 6; ++d) {
    for (int n = d + 1; n <= 10; ++n) {
      const ParamVector p(random_increasing(n, rng), d);
      const RationalMatrix h = homogenized_points(p);
      const auto basis = dependence_basis(p);
      EXPECT_EQ(basis.vectors.size(), static_cast<std::size_t>(n - d - 1));
      for (const auto& c : basis.vectors) {
        for (std::size_t r = 0; r < h.rows(); ++r) EXPECT_EQ(dot(h.row(r), c), 0);
      }
      if (!basis.vectors.empty()) EXPECT_EQ(rank(RationalMatrix::from_rows(basis.vectors)), basis.vectors.size());
    }
  }
}

TEST(Gale, UniqueDependenceStandardC64) {
  const RationalVector c = unique_dependence_coeffs(ParamVector::standard(6, 4));
  EXPECT_EQ(c, (RationalVector{Rational(1, 120), Rational(-1, 24), Rational(1, 12), Rational(-1, 12), Rational(1, 24),
                               Rational(-1, 120)}));
  Rational sum = 0;
  for (const auto& x : c) sum += x;
  EXPECT_EQ(sum, 0);
  for (int k = 1; k <= 4; ++k) {
    Rational moment = 0;
    for (int i = 0; i < 6; ++i) {
      Rational power = 1;
      for (int e = 0; e < k; ++e) power *= i + 1;
      moment += c[static_cast<std::size_t>(i)] * power;
    }
    EXPECT_EQ(moment, 0);
  }
  EXPECT_THROW(unique_dependence_coeffs(ParamVector::standard(6, 3)), std::invalid_argument);
}

TEST(Gale, UniqueDependenceAlternatesAndMatchesKernel) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 8;
    const ParamVector p(random_increasing(d + 2, rng), d);
    const RationalVector c = unique_dependence_coeffs(p);
    for (std::size_t i = 0; i < c.size(); ++i) ASSERT_EQ(sgn(c[i]), i % 2 == 0 ? 1 : -1);
    const auto basis = dependence_basis(p);
    ASSERT_EQ(basis.vectors.size(), 1u);
    EXPECT_EQ(scaled_to(basis.vectors[0], c[0]), c);
  }
}

TEST(Gale, RelativeInteriorCone) {
  const RationalVector g1{1, 0};
  const RationalVector g2{0, 1};
  EXPECT_TRUE(in_relint_pos_cone({1, 1}, {g1, g2}));
  EXPECT_FALSE(in_relint_pos_cone(g1, {g1, g2}));
  EXPECT_FALSE(in_relint_pos_cone({-1, 1}, {g1, g2}));
  EXPECT_TRUE(in_relint_pos_cone({0, 0}, {}));
}

TEST(Gale, RegularCellsAreRelativeInteriorMembership) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> height(-6, 6);
  for (int n = 4; n <= 7; ++n) {
    const ParamVector p = ParamVector::standard(n, 2);
    const auto basis = dependence_basis(p);
    const RationalMatrix g = basis.gale_matrix(static_cast<std::size_t>(n));
    for (int trial = 0; trial < 50; ++trial) {
      RationalVector w(static_cast<std::size_t>(n));
      for (auto& x : w) x = height(rng);
      const Subdivision sub = regular_subdivision_from_heights(p, w);
      const RationalVector reduced = g.multiply(w);
      for (int k = 3; k <= n; ++k) {
        for (FaceSet s : k_subsets(n, k)) {
          std::vector<RationalVector> gens;
          for (int j = 1; j <= n; ++j)
            if (!s.contains(j)) gens.push_back(g.column(static_cast<std::size_t>(j - 1)));
          ASSERT_EQ(in_relint_pos_cone(reduced, gens), sub.contains(s)) << format_face(s, n) << " w=" << to_string(w);
        }
      }
    }
  }
}

TEST(Gale, LiftingExtendsTheTransform) {
  std::mt19937_64 rng(8);
  for (int d = 1; d <= 5; ++d) {
    for (int n = d + 2; n <= 8; ++n) {
      RationalVector t = random_increasing(n, rng);
      const Rational shift = t.back() + 1;
      for (auto& x : t) x -= shift;
      const ParamVector p(t, d);
      const ParamVector lifted = lift_params(p);
      EXPECT_EQ(lifted.n(), n + 1);
      EXPECT_EQ(lifted.d(), d + 1);
      const auto base = dependence_basis(p).vectors;
      std::vector<RationalVector> restricted;
      const LiftingMap tau = lifting_map(p);
      for (const auto& v : dependence_basis(lifted).vectors) {
        RationalVector r(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = tau.c[i] * v[i];
        restricted.push_back(r);
      }
      ASSERT_EQ(restricted.size(), base.size());
      EXPECT_EQ(stacked_rank(base, restricted), base.size()) << n << " " << d;
    }
  }
  EXPECT_THROW(lift_params(ParamVector::standard(3, 1)), std::invalid_argument);
  EXPECT_EQ(lift_params(ParamVector({-3, -2, -1}, 1)).values(), (RationalVector{-3, -2, -1, 0}));
  EXPECT_EQ(tau_star_heights({0, 0, 0}, ParamVector({-3, -2, -1}, 1)), (RationalVector{0, 0, 0, 0}));
}

TEST(Gale, AffineRenormalizationPreservesRegularity) {
  std::mt19937_64 rng(12);
  const FlipGraph g = enumerate_triangulations(8, 3);
  std::uniform_int_distribution<std::size_t> pick(0, g.triangulations.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const Triangulation& t = g.triangulations[pick(rng)];
    const RationalVector base = random_increasing(8, rng);
    RationalVector moved = base;
    const Rational a(1 + trial, 3);
    const Rational b(-7 * trial, 2);
    for (auto& x : moved) x = a * x + b;
    EXPECT_EQ(is_regular(t, ParamVector(base, 3)).feasible(), is_regular(t, ParamVector(moved, 3)).feasible());
  }
}
