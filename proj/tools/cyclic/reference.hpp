#pragma once

#include <string>
#include <vector>

namespace cyclic::reference {

struct PlacingRow {
  const char* triangulation;
  std::vector<int> good_links;
};

inline const std::vector<PlacingRow> kPlacingC73 = {
    {"2356,1234,4567,3467,2345,2367,1256,3456,1267,1245", {1, 7}},
    {"2456,2346,1234,4567,3467,2367,1256,1267,1245", {1, 7}},
    {"2356,1234,2345,2367,1256,1267,1245,3457,3567", {1}},
    {"2346,1234,4567,3467,2367,1267,1456,1246", {5, 7}},
    {"2356,2367,1256,1267,1235,1345,3457,3567", {4}},
    {"1234,2345,1256,1267,1245,3457,2567,2357", {1}},
    {"2367,1267,1345,3457,3567,1236,1356", {4}},
    {"4567,3467,3456,1345,1356,1237,1367", {2}},
    {"4567,3467,2367,1267,1456,1236,1346", {5, 6, 7}},
    {"4567,3467,1456,1237,1367,1346", {2, 5}},
    {"1345,3457,3567,1356,1237,1367", {2, 3, 4}},
    {"1345,3457,1237,1357,1567", {2, 4, 6}},
    {"1237,1567,1457,1347", {1, 2, 6, 7}},
    {"1234,2347,1567,1457,1247", {3, 6}},
    {"1234,4567,1456,2347,1247,1467", {3, 4, 5}},
    {"1234,4567,1267,1456,1246,2347,2467", {3, 5}},
};

inline const std::vector<PlacingRow> kPlacingC84 = {
    {"23678,23458,12568,12458,45678,23568,12678,12348,34568,34678", {1, 7, 8}},
    {"24568,23456,23678,12568,12458,45678,12678,12348,34678,23468", {1, 7}},
    {"23678,12568,45678,23568,12678,34568,34678,13458,12358,12345", {7}},
    {"23678,45678,12678,34568,34678,13458,12345,12368,12356,13568", {7}},
};

inline const std::vector<const char*> kNonPlacingC83 = {
    "2378,2356,2367,1267,3456,3478,3467,1256,1278,1345,1235,4568,4678",
    "2378,2367,1267,3456,3478,3467,1278,1345,4568,4678,1236,1356",
    "2356,1267,3456,1256,1278,1345,1235,4568,3468,2678,2368",
    "1267,3456,1278,1345,4568,1236,1356,3468,2678,2368",
    "2378,2367,1267,3456,1278,1345,4568,1236,1356,3678,3468",
};

struct TypeCount {
  int n;
  int d;
  const char* type;
  std::size_t count;
};

inline const std::vector<TypeCount> kTypeCounts = {
    {8, 4, "[C(7,4)]", 8},         {8, 4, "[2C(6,4)]", 18},        {8, 4, "[3C(6,4)]", 0},
    {8, 3, "[2C(5,3)]", 162},      {8, 3, "[C(6,3)]", 52},         {8, 3, "[3C(5,3)]", 18},
    {8, 3, "[C(6,3),C(5,3)]", 24}, {8, 3, "[C(7,3)]", 8},          {8, 3, "[2C(6,3)]", 0},
    {8, 3, "[C(6,3),2C(5,3)]", 0}, {8, 3, "[4C(5,3)]", 0},
};

struct TriangulationCount {
  int n;
  int d;
  std::size_t count;
};

inline std::vector<TriangulationCount> triangulation_counts(int max_n) {
  const std::vector<std::vector<std::size_t>> rows = {
      {1, 2, 5, 14, 42, 132, 429, 1430},  // d = 2, n = 3..10
      {1, 2, 6, 25, 138, 972, 8477},      // d = 3, n = 4..10
      {1, 2, 7, 40, 357, 4824},           // d = 4
      {1, 2, 8, 67, 1233},                // d = 5
      {1, 2, 9, 102},                     // d = 6
      {1, 2, 10},                         // d = 7
      {1, 2},                             // d = 8
      {1},                                // d = 9
  };
  std::vector<TriangulationCount> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int d = static_cast<int>(i) + 2;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const int n = d + 1 + static_cast<int>(j);
      if (n <= max_n) out.push_back({n, d, rows[i][j]});
    }
  }
  return out;
}

}  // namespace cyclic::reference
