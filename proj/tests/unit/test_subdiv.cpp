#include "cyclic/coherence.hpp"
#include "cyclic/presets.hpp"
#include "cyclic/subdiv.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace cyclic;

namespace {

Subdivision sub(const char* text, int n, int d) { return parse_subdivision(text, n, d); }

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST(Subdivision, ParseFormatRoundTrip) {
  const Subdivision s = sub("2578,1345,1256", 9, 3);
  EXPECT_EQ(s.cells().size(), 3u);
  EXPECT_EQ(format_subdivision(s), "1256,1345,2578");
  const Subdivision wide = sub("1,2,3,10;1,3,4,10", 10, 3);
  EXPECT_EQ(format_subdivision(wide), "1,2,3,10;1,3,4,10");
  EXPECT_THROW(sub("12", 4, 2), std::invalid_argument);
  EXPECT_THROW(sub("125", 4, 2), std::invalid_argument);
  EXPECT_EQ(sub("123,134  # comment", 4, 2), sub("134,123", 4, 2));
}

TEST(Subdivision, FileReaderReportsLineNumbers) {
  try {
    read_subdivisions("123,134\n\n12x\n", 4, 2);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_EQ(infer_shape("125689,126789,345679"), (std::pair<int, int>{9, 5}));
  EXPECT_EQ(read_subdivision_file(fixture("param_dependent_c93.txt"), 9, 3).size(), 1u);
}

TEST(Subdivision, Validity) {
  const ParamVector p6 = ParamVector::standard(6, 2);
  EXPECT_TRUE(is_valid_subdivision(Subdivision::trivial(6, 2), p6));
  EXPECT_TRUE(is_valid_subdivision(sub("1256,2345", 6, 2), p6));
  EXPECT_FALSE(is_valid_subdivision(sub("123,456", 6, 2), p6));
  EXPECT_FALSE(is_valid_subdivision(sub("123,134,124", 4, 2), ParamVector::standard(4, 2)));
  EXPECT_FALSE(is_valid_subdivision(sub("123,234", 4, 2), ParamVector::standard(4, 2)));
  EXPECT_TRUE(is_valid_subdivision(sub("135,123,345,156", 6, 2), p6));
}

TEST(Subdivision, PiInduced) {
  EXPECT_TRUE(is_pi_induced(sub("1256,2345", 6, 2), 4));
  EXPECT_FALSE(is_pi_induced(sub("135,123,345,156", 6, 2), 4));
  EXPECT_TRUE(is_pi_induced(sub("135,123,345,156", 6, 2), 5));
  EXPECT_TRUE(is_pi_induced(Subdivision::trivial(6, 2), 4));
}

TEST(Subdivision, ConditionTwoAgreesWithFaceTest) {
  for (auto [n, d, dp] : {std::tuple{6, 2, 4}, std::tuple{6, 2, 3}, std::tuple{7, 2, 4}, std::tuple{7, 3, 5}, std::tuple{7, 2, 5}}) {
    const BauesPoset poset = enumerate_baues_poset(n, d, dp);
    const ParamVector p = ParamVector::standard(n, d);
    for (const auto& s : poset.elements) {
      EXPECT_TRUE(satisfies_condition_ii(s, p)) << s.to_string();
      EXPECT_TRUE(is_pi_induced(s, dp, p, true));
    }
  }
}

TEST(Placing, SmallCases) {
  const ParamVector p4 = ParamVector::standard(4, 2);
  const std::vector<int> order{1, 2, 3, 4};
  EXPECT_EQ(placing_triangulation(p4, order), sub("123,134", 4, 2));
  for (int d = 2; d <= 6; ++d) {
    std::vector<int> nat;
    for (int i = 1; i <= d + 2; ++i) nat.push_back(i);
    const Triangulation t = placing_triangulation(ParamVector::standard(d + 2, d), nat);
    const auto all = enumerate_triangulations(d + 2, d).triangulations;
    EXPECT_EQ(all.size(), 2u);
    EXPECT_NE(std::find(all.begin(), all.end(), t), all.end());
  }
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const ParamVector p(random_increasing(7, rng), 3);
    std::vector<int> perm{1, 2, 3, 4, 5, 6, 7};
    std::shuffle(perm.begin(), perm.end(), rng);
    const Triangulation t = placing_triangulation(p, perm);
    EXPECT_TRUE(is_valid_subdivision(t, p));
    EXPECT_TRUE(is_regular(t, p).feasible());
  }
}

TEST(Placing, ExtensionAddsVisibleCones) {
  EXPECT_EQ(extend_by_placing(sub("123,134", 4, 2), ParamVector::standard(5, 2)), sub("123,134,145", 5, 2));
}

TEST(Placing, ExtensionPreservesRegularity) {
  std::mt19937_64 rng(21);
  int nonregular = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 6 + trial % 3;
    const int d = 2 + trial % 3;
    if (n - d < 3) continue;
    const auto all = enumerate_triangulations(n, d).triangulations;
    const Triangulation& t = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    const RationalVector values = random_increasing(n + 1, rng);
    const ParamVector small(RationalVector(values.begin(), values.end() - 1), d);
    const ParamVector big(values, d);
    const Triangulation ext = extend_by_placing(t, big);
    EXPECT_TRUE(is_valid_subdivision(ext, big));
    const bool r = is_regular(t, small).feasible();
    nonregular += !r;
    EXPECT_EQ(r, is_regular(ext, big).feasible());
  }
  const Triangulation c93 = read_subdivision_file(fixture("param_dependent_c93.txt"), 9, 3).front();
  ASSERT_FALSE(is_regular(c93, ParamVector::standard(9, 3)).feasible());
  const Triangulation c103 = extend_by_placing(c93, ParamVector::standard(10, 3));
  EXPECT_TRUE(is_valid_subdivision(c103, ParamVector::standard(10, 3)));
  EXPECT_FALSE(is_regular(c103, ParamVector::standard(10, 3)).feasible());
}

TEST(Flips, Quadrilateral) {
  const auto flips = bistellar_flips(sub("123,134", 4, 2));
  ASSERT_EQ(flips.size(), 1u);
  EXPECT_EQ(flips[0], sub("124,234", 4, 2));
}

TEST(Flips, GraphStatistics) {
  const FlipGraph g84 = enumerate_triangulations(8, 4);
  EXPECT_EQ(g84.triangulations.size(), 40u);
  EXPECT_EQ(g84.edges.size(), 64u);
  const FlipGraph g83 = enumerate_triangulations(8, 3);
  EXPECT_EQ(g83.triangulations.size(), 138u);
  EXPECT_EQ(g83.edges.size(), 302u);
  for (const auto& t : g83.triangulations) {
    for (const auto& u : bistellar_flips(t)) {
      const auto back = bistellar_flips(u);
      EXPECT_NE(std::find(back.begin(), back.end(), t), back.end());
    }
  }
}

TEST(Flips, CountsMatchCatalanAndTable) {
  for (int n = 3; n <= 10; ++n) EXPECT_EQ(enumerate_triangulations(n, 2).triangulations.size(), oracle::catalan(n - 2));
  EXPECT_EQ(enumerate_triangulations(7, 3).triangulations.size(), 25u);
  EXPECT_EQ(enumerate_triangulations(9, 5).triangulations.size(), 67u);
  EXPECT_EQ(enumerate_triangulations(10, 4).triangulations.size(), 4824u);
}

TEST(Flips, CountsMatchExactCoverOracle) {
  for (auto [n, d] : {std::pair{5, 2}, std::pair{6, 2}, std::pair{7, 2}, std::pair{6, 3}, std::pair{7, 3}, std::pair{7, 4}, std::pair{8, 3}, std::pair{8, 5}}) {
    EXPECT_EQ(enumerate_triangulations(n, d).triangulations.size(), oracle::count_triangulations_by_cover(n, d)) << n << " " << d;
  }
}

TEST(Flips, EveryTriangulationIsValid) {
  for (auto [n, d] : {std::pair{8, 3}, std::pair{8, 4}, std::pair{8, 5}}) {
    const ParamVector p = ParamVector::standard(n, d);
    const Rational total = total_volume(p);
    for (const auto& t : enumerate_triangulations(n, d).triangulations) {
      Rational sum = 0;
      for (FaceSet c : t.cells()) sum += vandermonde_volume(c, p);
      EXPECT_EQ(sum, total);
      EXPECT_TRUE(is_valid_subdivision(t, p));
    }
  }
}

TEST(Flips, ParallelEnumerationIsDeterministic) {
  const FlipGraph a = enumerate_triangulations(9, 4, 1);
  const FlipGraph b = enumerate_triangulations(9, 4, 3);
  EXPECT_EQ(a.triangulations, b.triangulations);
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_EQ(a.triangulations.size(), 357u);
}

TEST(Ranking, Examples) {
  EXPECT_EQ(ranking(sub("123,134", 4, 2)), 0);
  EXPECT_EQ(ranking(sub("1256,2345", 6, 2)), 2);
  EXPECT_TRUE(subdivision_type(sub("123,134", 4, 2)).sizes.empty());
  const FlipGraph g = enumerate_triangulations(8, 4);
  for (const auto& ty : types_of_ranking(8, 4, 2)) {
    if (ty.to_string() != "[2C(6,4)]") continue;
    for (const auto& s : enumerate_subdivisions_by_type(g, ty)) {
      EXPECT_EQ(ranking(s), 2);
      EXPECT_EQ(subdivision_type(s).to_string(), "[2C(6,4)]");
    }
  }
  EXPECT_EQ(subdivision_type(Subdivision(8, 3, {FaceSet{1, 2, 3, 4, 5, 6, 7}, FaceSet{1, 7, 8, 2}})).to_string(), "[C(7,3)]");
}

TEST(Census, TypeCounts) {
  const auto count = [](const FlipGraph& g, int n, int d, const std::string& name) -> std::size_t {
    for (int r = 1; r < n - d; ++r)
      for (const auto& ty : types_of_ranking(n, d, r))
        if (ty.to_string() == name) return enumerate_subdivisions_by_type(g, ty).size();
    ADD_FAILURE() << "no type " << name;
    return 0;
  };
  const FlipGraph g84 = enumerate_triangulations(8, 4);
  EXPECT_EQ(count(g84, 8, 4, "[C(7,4)]"), 8u);
  EXPECT_EQ(count(g84, 8, 4, "[2C(6,4)]"), 18u);
  EXPECT_EQ(count(g84, 8, 4, "[3C(6,4)]"), 0u);
  const FlipGraph g83 = enumerate_triangulations(8, 3);
  EXPECT_EQ(count(g83, 8, 3, "[2C(5,3)]"), 162u);
  EXPECT_EQ(count(g83, 8, 3, "[4C(5,3)]"), 0u);
  const auto all = enumerate_all_subdivisions(g84);
  EXPECT_EQ(all.size(), 40u + 64u + 26u + 1u);
  const ParamVector p = ParamVector::standard(8, 4);
  for (const auto& s : all) EXPECT_TRUE(is_valid_subdivision(s, p)) << s.to_string();
}

TEST(Baues, SmallPolygonCase) {
  const BauesPoset poset = enumerate_baues_poset(6, 2, 4);
  EXPECT_EQ(poset.size(), 31u);
  EXPECT_TRUE(poset.is_partial_order());
  EXPECT_LT(poset.top(), poset.size());
  const BauesPoset proper = poset.proper_part();
  EXPECT_EQ(proper.size(), 30u);
  EXPECT_EQ(proper.minimal_elements().size(), 12u);
  // Rank by longest chain, relaxed until stable.
  std::vector<std::size_t> rank(proper.size(), 0);
  for (int pass = 0; pass < 3; ++pass)
    for (std::size_t i = 0; i < proper.size(); ++i)
      for (std::size_t j = 0; j < proper.size(); ++j)
        if (i != j && proper.leq[j][i]) rank[i] = std::max(rank[i], rank[j] + 1);
  std::vector<std::size_t> counts(3, 0);
  for (std::size_t r : rank) ++counts.at(r);
  EXPECT_EQ(counts, (std::vector<std::size_t>{12, 15, 3}));
  EXPECT_EQ(order_complex_euler(proper).chi, 0);
}

TEST(Baues, AllDissectionsWhenTargetIsSimplexLike) {
  for (int n = 4; n <= 8; ++n) {
    EXPECT_EQ(enumerate_baues_poset(n, 2, n - 1).size(), oracle::polygon_dissections(n)) << n;
  }
  EXPECT_EQ(enumerate_baues_poset(6, 2, 5).size(), 45u);
}

TEST(Baues, PartialOrders) {
  for (auto [n, d, dp] : {std::tuple{7, 3, 5}, std::tuple{7, 2, 4}, std::tuple{8, 4, 6}}) {
    EXPECT_TRUE(enumerate_baues_poset(n, d, dp).is_partial_order());
  }
}

TEST(Euler, SmallPosets) {
  EXPECT_EQ(order_complex_euler(std::vector<std::vector<bool>>{{false}}).chi, 1);
  // Boundary of a triangle: three vertices below three edges.
  std::vector<std::vector<bool>> less(6, std::vector<bool>(6, false));
  for (int e = 0; e < 3; ++e) {
    less[static_cast<std::size_t>(e)][static_cast<std::size_t>(3 + e)] = true;
    less[static_cast<std::size_t>((e + 1) % 3)][static_cast<std::size_t>(3 + e)] = true;
  }
  EXPECT_EQ(order_complex_euler(less).chi, 0);
}

TEST(Symmetry, OrbitCounts) {
  EXPECT_EQ(symmetry_orbit_count(enumerate_triangulations(7, 3).triangulations), 16u);
  EXPECT_EQ(symmetry_orbit_count(enumerate_triangulations(8, 4).triangulations), 4u);
}

TEST(GoodLinks, PlacingTables) {
  for (auto [file, n, d] : {std::tuple{"placing_c73.txt", 7, 3}, std::tuple{"placing_c84.txt", 8, 4}}) {
    const std::string text = read_text_file(fixture(file));
    std::istringstream in(text);
    std::string line;
    std::set<std::size_t> orbits_seen;
    const auto all = enumerate_triangulations(n, d).triangulations;
    const auto orbit = symmetry_orbits(all);
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      const auto hash = line.find('#');
      const Triangulation t = parse_subdivision(line.substr(0, hash), n, d);
      std::vector<int> listed;
      for (const auto& v : parse_rational_list(line.substr(hash + 1))) listed.push_back(static_cast<int>(v.get_num().get_si()));
      EXPECT_EQ(good_link_vertices(t), listed) << line;
      const auto it = std::find(all.begin(), all.end(), t);
      ASSERT_NE(it, all.end());
      orbits_seen.insert(orbit[static_cast<std::size_t>(it - all.begin())]);
    }
    EXPECT_EQ(orbits_seen.size(), symmetry_orbit_count(all));
  }
}

TEST(GoodLinks, NonPlacingC83) {
  const auto all = enumerate_triangulations(8, 3).triangulations;
  std::vector<Triangulation> nonplacing;
  for (const auto& t : all)
    if (good_link_vertices(t).empty()) nonplacing.push_back(t);
  EXPECT_EQ(nonplacing.size(), 8u);
  EXPECT_EQ(symmetry_orbit_count(nonplacing), 5u);
  for (const auto& t : read_subdivision_file(fixture("nonplacing_c83.txt"), 8, 3)) {
    EXPECT_NE(std::find(nonplacing.begin(), nonplacing.end(), t), nonplacing.end()) << t.to_string();
  }
}
