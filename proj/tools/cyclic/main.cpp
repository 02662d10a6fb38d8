#include "commands.hpp"

#include "cyclic/parallel.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>

using namespace cyclic::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on triangulations, subdivisions and monotone paths of cyclic polytopes"};
  app.require_subcommand(1);
  Common common;
  common.workers = cyclic::default_workers();
  app.add_flag("--json", common.json, "Machine-readable output");
  app.add_option("--seed", common.seed, "Seed for randomized parameter vectors");

  TriangulationsOptions tri;
  auto* t = app.add_subcommand("triangulations", "Enumerate all triangulations of C(n,d) by bistellar flips");
  t->add_option("-n", tri.n, "Number of points")->required();
  t->add_option("-d", tri.d, "Dimension")->required();
  t->add_option("--out", tri.out, "Write every triangulation to this file (JSON with --json)");
  t->add_flag("--stretch", tri.stretch, "Allow n = 11");

  RegularityOptions reg;
  auto* r = app.add_subcommand("regularity", "Decide regularity of each subdivision in a file");
  r->add_option("file", reg.file, "Subdivision file, one per line")->required()->check(CLI::ExistingFile);
  r->add_option("-n", reg.n, "Number of points (default: largest vertex)");
  r->add_option("-d", reg.d, "Dimension (default: smallest cell size minus one)");
  r->add_option("--params", reg.params, "Preset name, file or comma-separated list");
  r->add_option("--random", reg.random, "Check at this many random parameter vectors instead");
  r->add_flag("--certify", reg.certify, "Print the full witness or Farkas certificate");
  r->add_flag("--cross-check", reg.cross_check, "Also decide with the alternate formulation");
  r->add_flag("--links", reg.links, "Report vertices with a good link");
  r->add_flag("--bmatrix", reg.bmatrix, "Use the cell/point formulation as primary");

  FiberOptions fib;
  auto* f = app.add_subcommand("fiber", "Baues poset of C(n,d') -> C(n,d) with coherence flags");
  f->add_option("-n", fib.n, "Number of points")->required();
  f->add_option("-d", fib.d, "Target dimension")->required();
  f->add_option("--dprime", fib.d_prime, "Source dimension")->required();
  f->add_option("--params", fib.params, "Preset name, file or comma-separated list");

  PathsOptions pth;
  auto* p = app.add_subcommand("paths", "Monotone paths and cellular strings of C(n,d)");
  p->add_option("-n", pth.n, "Number of points")->required();
  p->add_option("-d", pth.d, "Dimension")->required();
  p->add_option("--params", pth.params, "Preset name, file or comma-separated list");
  p->add_flag("--compare-zonotope", pth.compare_zonotope, "Compare coherent strings with Z(n-2,d-1)");
  p->add_flag("--cross-check", pth.cross_check, "Compare the m criterion with the LP on every cellular string");
  p->add_flag("--list", pth.list, "List every path with its sign vector");

  PathsGeneralOptions gen;
  auto* g = app.add_subcommand("paths-general", "Coherent monotone paths of a polytope given by vertex columns");
  g->add_option("file", gen.file, "Matrix file, one coordinate row per line")->required()->check(CLI::ExistingFile);
  g->add_option("--dir", gen.direction, "Coordinate used as the linear functional (1-based)");
  g->add_flag("--list", gen.list, "List the coherent paths");

  TablesOptions tab;
  auto* tb = app.add_subcommand("tables", "Recompute the reference tables and report mismatches");
  tb->add_option("--max-n", tab.max_n, "Largest n for triangulation counts")->check(CLI::Range(3, 11));

  GaleOptions gal;
  auto* gale = app.add_subcommand("gale", "Gale transform tools");
  gale->require_subcommand(1);
  auto* ga = gale->add_subcommand("dump", "Affine dependences and Gale vectors of C(n,d)");
  ga->add_option("-n", gal.n, "Number of points")->required();
  ga->add_option("-d", gal.d, "Dimension")->required();
  ga->add_option("--params", gal.params, "Preset name, file or comma-separated list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*t) return run_triangulations(common, tri);
    if (*r) return run_regularity(common, reg);
    if (*f) return run_fiber(common, fib);
    if (*p) return run_paths(common, pth);
    if (*g) return run_paths_general(common, gen);
    if (*tb) return run_tables(common, tab);
    if (*ga) return run_gale(common, gal);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
