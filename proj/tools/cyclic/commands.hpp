#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace cyclic::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

struct Common {
  bool json = false;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

struct TriangulationsOptions {
  int n = 0;
  int d = 0;
  std::string out;
  bool stretch = false;
};

struct RegularityOptions {
  std::string file;
  int n = 0;
  int d = 0;
  std::string params = "standard";
  int random = 0;
  bool certify = false;
  bool cross_check = false;
  bool links = false;
  bool bmatrix = false;
};

struct FiberOptions {
  int n = 0;
  int d = 0;
  int d_prime = 0;
  std::string params = "standard";
};

struct PathsOptions {
  int n = 0;
  int d = 0;
  std::string params = "standard";
  bool compare_zonotope = false;
  bool cross_check = false;
  bool list = false;
};

struct PathsGeneralOptions {
  std::string file;
  int direction = 1;
  bool list = false;
};

struct TablesOptions {
  int max_n = 10;
};

struct GaleOptions {
  int n = 0;
  int d = 0;
  std::string params = "standard";
};

int run_triangulations(const Common& c, const TriangulationsOptions& o);
int run_regularity(const Common& c, const RegularityOptions& o);
int run_fiber(const Common& c, const FiberOptions& o);
int run_paths(const Common& c, const PathsOptions& o);
int run_paths_general(const Common& c, const PathsGeneralOptions& o);
int run_tables(const Common& c, const TablesOptions& o);
int run_gale(const Common& c, const GaleOptions& o);

}  // namespace cyclic::cli
