#include "cyclic/coherence.hpp"
#include "cyclic/gale.hpp"
#include "cyclic/presets.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cyclic;

namespace {

Subdivision sub(const char* text, int n, int d) { return parse_subdivision(text, n, d); }

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

// Cells through the last vertex with that vertex removed, as a subdivision one dimension lower.
Subdivision link_of_last(const Subdivision& s) {
  std::vector<FaceSet> cells;
  for (FaceSet c : s.cells())
    if (c.contains(s.n())) cells.push_back(c.without(s.n()));
  return Subdivision(s.n() - 1, s.d() - 1, cells);
}

const char* const kIncoherent624[] = {"124,234,146,456", "123,136,345,356", "1234,146,456", "124,234,1456",
                                      "1234,1456",       "1236,345,356",    "123,136,3456", "1236,3456"};
const char* const kSometimesIncoherentTriangulations[] = {"125,156,235,345", "126,256,234,245", "124,234,146,456",
                                                           "123,136,345,356"};

std::vector<ParamVector> random_params(int n, int d, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ParamVector> out;
  for (int i = 0; i < count; ++i) out.emplace_back(random_increasing(n, rng), d);
  return out;
}

}  // namespace

TEST(Regularity, TrivialAndQuadrilateral) {
  const StrictSystem trivial = regularity_system(Subdivision::trivial(6, 3), ParamVector::standard(6, 3));
  EXPECT_TRUE(trivial.strict_rows().empty());
  EXPECT_FALSE(trivial.equality_rows().empty());
  EXPECT_TRUE(solve_strict(trivial).feasible());

  const StrictSystem quad = regularity_system(sub("123,134", 4, 2), ParamVector::standard(4, 2));
  ASSERT_EQ(quad.strict_rows().size(), 1u);
  const RationalVector& row = quad.strict_rows()[0];
  ASSERT_GT(row[3], 0);
  EXPECT_EQ(row, (RationalVector{-row[3], 3 * row[3], -3 * row[3], row[3]}));
  EXPECT_TRUE(verify_witness(quad, {0, 0, 0, 1}));
}

TEST(Regularity, HeightsOracle) {
  EXPECT_EQ(regular_subdivision_from_heights(ParamVector::standard(5, 2), {0, 0, 0, 0, 0}), Subdivision::trivial(5, 2));
  EXPECT_EQ(regular_subdivision_from_heights(ParamVector::standard(4, 2), {0, 0, 0, 1}), sub("123,134", 4, 2));
}

TEST(Regularity, AllSmallTriangulationsRegularWithRoundTrip) {
  for (auto [n, d] : {std::pair{8, 3}, std::pair{8, 4}, std::pair{7, 3}, std::pair{8, 5}, std::pair{7, 2}}) {
    const ParamVector p = ParamVector::standard(n, d);
    for (const auto& t : enumerate_triangulations(n, d).triangulations) {
      const StrictSystem sys = regularity_system(t, p);
      const FeasibilityResult r = solve_strict(sys);
      ASSERT_TRUE(r.feasible()) << t.to_string();
      EXPECT_TRUE(verify_witness(sys, r.witness().x));
      EXPECT_EQ(regular_subdivision_from_heights(p, r.witness().x), t);
    }
  }
}

TEST(Regularity, FormulationsAgree) {
  for (auto [n, d] : {std::pair{8, 3}, std::pair{8, 4}}) {
    const ParamVector p = ParamVector::standard(n, d);
    const auto g = enumerate_triangulations(n, d);
    for (const auto& t : g.triangulations) {
      const FeasibilityResult a = is_regular(t, p, Formulation::Walls);
      const FeasibilityResult b = is_regular(t, p, Formulation::BMatrix);
      EXPECT_EQ(a.feasible(), b.feasible());
      EXPECT_TRUE(verify(regularity_system(t, p, Formulation::BMatrix), b));
    }
    for (const auto& s : enumerate_all_subdivisions(g)) {
      EXPECT_TRUE(is_regular(s, p).feasible()) << s.to_string();
      EXPECT_EQ(is_regular(s, p, Formulation::BMatrix).feasible(), true);
    }
  }
}

TEST(Regularity, ParameterDependentTriangulations) {
  struct Case {
    const char* file;
    int n;
    int d;
    const char* preset;
  };
  for (const Case& c : {Case{"param_dependent_c95.txt", 9, 5, "lemma47-c95"}, Case{"param_dependent_c94.txt", 9, 4, "lemma47-c94"},
                        Case{"param_dependent_c93.txt", 9, 3, "lemma47-c93"}}) {
    const Triangulation t = read_subdivision_file(fixture(c.file), c.n, c.d).front();
    EXPECT_TRUE(is_valid_subdivision(t, ParamVector::standard(c.n, c.d)));
    const ParamVector standard = ParamVector::standard(c.n, c.d);
    const StrictSystem s1 = regularity_system(t, standard);
    const FeasibilityResult r1 = solve_strict(s1);
    ASSERT_FALSE(r1.feasible()) << c.file;
    EXPECT_TRUE(verify_certificate(s1, r1.certificate()));
    const ParamVector alt = resolve_params(c.preset, c.n, c.d);
    const StrictSystem s2 = regularity_system(t, alt);
    const FeasibilityResult r2 = solve_strict(s2);
    ASSERT_TRUE(r2.feasible()) << c.file;
    EXPECT_TRUE(verify_witness(s2, r2.witness().x));
    EXPECT_EQ(regular_subdivision_from_heights(alt, r2.witness().x), t);
    EXPECT_EQ(is_regular(t, standard, Formulation::BMatrix).feasible(), false);
    EXPECT_EQ(is_regular(t, alt, Formulation::BMatrix).feasible(), true);
  }
}

TEST(Regularity, FifthNonPlacingTriangulationAlwaysRegular) {
  const auto list = read_subdivision_file(fixture("nonplacing_c83.txt"), 8, 3);
  const Triangulation& fifth = list.at(4);
  EXPECT_TRUE(is_regular(fifth, ParamVector::standard(8, 3)).feasible());
  for (const auto& p : random_params(8, 3, 10, 77)) EXPECT_TRUE(is_regular(fifth, p).feasible()) << p.to_string();
}

TEST(PiCoherence, SimplexTargetReducesToRegularity) {
  const ParamVector p = ParamVector::standard(7, 3);
  for (const auto& t : enumerate_triangulations(7, 3).triangulations) {
    const StrictSystem a = pi_coherence_system(t, p, 6);
    const StrictSystem b = regularity_system(t, p);
    EXPECT_EQ(a.equality_rows().size(), b.equality_rows().size());
    EXPECT_EQ(a.strict_rows(), b.strict_rows());
  }
}

TEST(PiCoherence, StepOneCriterion) {
  const Subdivision s = sub("1256,2345", 6, 2);
  EXPECT_EQ(step1_subdivision(6), s);
  EXPECT_FALSE(has_upper_and_lower_cells(s, 6, 4));
  EXPECT_THROW(pi_coherence_system(sub("135,123,345,156", 6, 2), ParamVector::standard(6, 2), 4), std::invalid_argument);
  auto family = random_params(6, 2, 20, 3);
  family.emplace_back(RationalVector{-5, -3, -1, 1, 3, 5}, 2);
  family.emplace_back(RationalVector{-100, 2, 3, 4, 5, 6}, 2);
  family.push_back(ParamVector::standard(6, 2));
  for (const auto& p : family) {
    const RationalVector c = unique_dependence_coeffs(p.with_dimension(4));
    EXPECT_EQ(is_pi_coherent(s, p, 4).feasible(), c[2] + c[3] == 0) << p.to_string();
    EXPECT_EQ(c[2] + c[3] == 0, step1_ratio(p) == 1);
  }
}

TEST(PiCoherence, UpperLowerWitness) {
  EXPECT_TRUE(has_upper_and_lower_cells(sub("124,234,146,456", 6, 2), 6, 4));
  EXPECT_FALSE(has_upper_and_lower_cells(Subdivision::trivial(6, 2), 6, 4));
  for (const char* text : kIncoherent624) {
    const Subdivision s = sub(text, 6, 2);
    for (const auto& p : random_params(6, 2, 10, 101)) {
      const StrictSystem sys = pi_coherence_system(s, p, 4);
      const FeasibilityResult r = solve_strict(sys);
      EXPECT_FALSE(r.feasible()) << text << " at " << p.to_string();
      EXPECT_TRUE(verify(sys, r));
    }
  }
}

TEST(Fiber, PolygonsAcrossRegimes) {
  const FiberReport sym = fiber_face_poset(6, 2, 4, ParamVector({-5, -3, -1, 1, 3, 5}, 2));
  ASSERT_TRUE(sym.polygon);
  EXPECT_EQ(*sym.polygon, 8u);
  EXPECT_EQ(sym.proper_euler.chi, 0);
  for (const char* preset : {"step1-regime1", "step1-regime2"}) {
    const FiberReport rep = fiber_face_poset(6, 2, 4, resolve_params(preset, 6, 2));
    ASSERT_TRUE(rep.polygon) << preset;
    EXPECT_EQ(*rep.polygon, 9u) << preset;
  }
  const FiberReport regime = fiber_face_poset(6, 2, 4, ParamVector({-100, 2, 3, 4, 5, 6}, 2));
  ASSERT_TRUE(regime.polygon);
  EXPECT_EQ(*regime.polygon, 9u);
  EXPECT_EQ(regime.poset.size(), 31u);
}

TEST(Fiber, AlwaysCoherentTriangulations) {
  const BauesPoset poset = enumerate_baues_poset(6, 2, 4);
  std::vector<Subdivision> sometimes;
  for (const char* s : kSometimesIncoherentTriangulations) sometimes.push_back(sub(s, 6, 2));
  auto family = random_params(6, 2, 10, 55);
  family.push_back(resolve_params("step1-regime1", 6, 2));
  family.push_back(resolve_params("step1-regime2", 6, 2));
  family.emplace_back(RationalVector{-5, -3, -1, 1, 3, 5}, 2);
  std::size_t triangulations = 0;
  for (const auto& s : poset.elements) {
    if (!s.is_triangulation()) continue;
    ++triangulations;
    if (std::find(sometimes.begin(), sometimes.end(), s) != sometimes.end()) continue;
    for (const auto& p : family) EXPECT_TRUE(is_pi_coherent(s, p, 4).feasible()) << s.to_string() << " at " << p.to_string();
  }
  EXPECT_EQ(triangulations, 12u);
}

TEST(Fiber, CoherentCountStableWhenEverythingCoherent) {
  for (auto [n, d, dp] : {std::tuple{8, 4, 7}, std::tuple{8, 3, 7}, std::tuple{7, 3, 6}, std::tuple{6, 2, 5}}) {
    BauesPoset poset = enumerate_baues_poset(n, d, dp);
    flag_coherence(poset, ParamVector::standard(n, d));
    const auto count = [](const BauesPoset& b) { return std::count(b.coherent.begin(), b.coherent.end(), true); };
    ASSERT_EQ(static_cast<std::size_t>(count(poset)), poset.size()) << n << d << dp;
    for (const auto& p : random_params(n, d, 10, 1000 + static_cast<std::uint64_t>(n * 10 + d))) {
      flag_coherence(poset, p);
      EXPECT_EQ(static_cast<std::size_t>(count(poset)), poset.size());
    }
  }
}

TEST(StepOne, RegimeRatios) {
  for (int n = 6; n <= 9; ++n) {
    const ParamVector r1 = resolve_params("step1-regime1", n, 2);
    const ParamVector r2 = resolve_params("step1-regime2", n, 2);
    const Rational q1 = step1_ratio(r1);
    const Rational q2 = step1_ratio(r2);
    const Rational power(1 << (n - 5));
    EXPECT_LT(abs(q1 / power - 1), Rational(1, 100)) << n << " " << q1.get_d();
    EXPECT_LT(abs(q2 * 2 - 1), Rational(1, 100)) << n << " " << q2.get_d();
    const Subdivision s = step1_subdivision(n);
    EXPECT_TRUE(is_pi_induced(s, n - 2));
    EXPECT_FALSE(is_pi_coherent(s, r1, n - 2).feasible());
    EXPECT_FALSE(is_pi_coherent(s, r2, n - 2).feasible());
  }
}

TEST(StepOne, PathBetweenRegimesCrossesCoherence) {
  for (int n = 6; n <= 8; ++n) {
    const RationalVector a = preset_values("step1-regime1", n);
    const RationalVector b = preset_values("step1-regime2", n);
    const ScanReport rep = parameter_scan(step1_subdivision(n), n - 2, rational_path(a, b, 16));
    EXPECT_FALSE(rep.ratio_crossings.empty());
    const auto point = locate_ratio_crossing(a, b, n - 2);
    ASSERT_TRUE(point) << n;
    const ParamVector p(*point, 2);
    EXPECT_EQ(step1_ratio(p), 1);
    EXPECT_TRUE(is_pi_coherent(step1_subdivision(n), p, n - 2).feasible());
    const ScanReport at = parameter_scan(step1_subdivision(n), n - 2, {a, *point, b});
    EXPECT_EQ(at.verdict_changes, (std::vector<std::size_t>{0, 1}));
  }
}

TEST(Lifting, CoherentSubdivisionsRoundTrip) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    std::mt19937_64 rng(seed);
    RationalVector t = random_increasing(6, rng);
    const Rational shift = t.back() + 1;
    for (auto& x : t) x -= shift;
    const ParamVector p(t, 2);
    const ParamVector lifted = lift_params(p);
    BauesPoset small = enumerate_baues_poset(6, 2, 4);
    flag_coherence(small, p);
    BauesPoset big = enumerate_baues_poset(7, 3, 5);
    flag_coherence(big, lifted);
    std::vector<Subdivision> coherent_links;
    for (std::size_t i = 0; i < big.size(); ++i)
      if (big.coherent[i]) coherent_links.push_back(link_of_last(big.elements[i]));
    for (std::size_t i = 0; i < small.size(); ++i) {
      const Subdivision& s = small.elements[i];
      const bool reachable = std::find(coherent_links.begin(), coherent_links.end(), s) != coherent_links.end();
      EXPECT_EQ(reachable, static_cast<bool>(small.coherent[i])) << s.to_string();
      if (!small.coherent[i]) continue;
      const FeasibilityResult r = is_pi_coherent(s, p, 4);
      ASSERT_TRUE(r.feasible());
      EXPECT_EQ(regular_subdivision_from_heights(p, r.witness().x), s);
      const RationalVector w = tau_star_heights(r.witness().x, p);
      const Subdivision extended = regular_subdivision_from_heights(lifted, w);
      EXPECT_EQ(link_of_last(extended), s);
      EXPECT_TRUE(is_pi_induced(extended, 5));
      EXPECT_TRUE(is_pi_coherent(extended, lifted, 5).feasible());
    }
  }
}
