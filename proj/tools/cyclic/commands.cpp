#include "commands.hpp"

#include "reference.hpp"

#include "cyclic/coherence.hpp"
#include "cyclic/gale.hpp"
#include "cyclic/paths.hpp"
#include "cyclic/presets.hpp"
#include "cyclic/subdiv.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <stdexcept>

namespace cyclic::cli {

using nlohmann::json;

namespace {

std::string join(const std::vector<int>& values, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string shape(int n, int d) { return "C(" + std::to_string(n) + "," + std::to_string(d) + ")"; }

std::vector<std::string> certificate_support(const StrictSystem& sys, const Certificate& c) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < c.y.size(); ++i) {
    if (c.y[i] != 0) out.push_back(sys.strict_labels()[i].empty() ? "row " + std::to_string(i + 1) : sys.strict_labels()[i]);
  }
  return out;
}

std::string polygon_name(std::size_t k) {
  switch (k) {
    case 3: return "triangle";
    case 4: return "quadrilateral";
    case 5: return "pentagon";
    case 6: return "hexagon";
    case 8: return "octagon";
    default: return std::to_string(k) + "-gon";
  }
}

void emit(const Common& c, const json& j) {
  if (c.json) std::cout << j.dump(2) << "\n";
}

}  // namespace

int run_triangulations(const Common& c, const TriangulationsOptions& o) {
  const int limit = o.stretch ? 11 : 10;
  if (o.n > limit) {
    std::cerr << "error: n = " << o.n << " exceeds the limit " << limit << (o.stretch ? "" : " (use --stretch for 11)") << "\n";
    return kUsage;
  }
  if (!(o.d >= 1 && o.n > o.d)) {
    std::cerr << "error: need n > d >= 1\n";
    return kUsage;
  }
  const FlipGraph g = enumerate_triangulations(o.n, o.d, c.workers);
  if (!o.out.empty()) {
    std::ofstream out(o.out);
    if (!out) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return kUsage;
    }
    if (c.json) {
      json all = json::array();
      for (const auto& t : g.triangulations) {
        json cells = json::array();
        for (FaceSet cell : t.cells()) cells.push_back(cell.indices());
        all.push_back({{"n", o.n}, {"d", o.d}, {"cells", cells}});
      }
      out << all.dump() << "\n";
    } else {
      for (const auto& t : g.triangulations) out << format_subdivision(t) << "\n";
    }
  }
  if (c.json) {
    emit(c, {{"n", o.n}, {"d", o.d}, {"triangulations", g.triangulations.size()}, {"flips", g.edges.size()}});
  } else {
    std::cout << shape(o.n, o.d) << ": " << g.triangulations.size() << " triangulations, " << g.edges.size() << " flips\n";
  }
  return kOk;
}

int run_regularity(const Common& c, const RegularityOptions& o) {
  const std::string text = read_text_file(o.file);
  auto [n, d] = infer_shape(text);
  if (o.n) n = o.n;
  if (o.d) d = o.d;
  const auto subs = read_subdivisions(text, n, d);

  std::vector<ParamVector> params;
  if (o.random > 0) {
    std::mt19937_64 rng(c.seed);
    for (int k = 0; k < o.random; ++k) params.emplace_back(random_increasing(n, rng), d);
  } else {
    params.push_back(resolve_params(o.params, n, d));
  }
  const Formulation primary = o.bmatrix ? Formulation::BMatrix : Formulation::Walls;
  const Formulation alternate = o.bmatrix ? Formulation::Walls : Formulation::BMatrix;

  bool all_regular = true;
  bool diverged = false;
  json rows = json::array();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Subdivision& s = subs[i];
    json row{{"index", i + 1}, {"subdivision", format_subdivision(s)}};
    std::string line = std::to_string(i + 1) + " ";
    std::string detail;
    bool regular = true;
    for (const auto& p : params) {
      const StrictSystem sys = regularity_system(s, p, primary);
      const FeasibilityResult r = solve_strict(sys);
      if (!verify(sys, r)) throw std::logic_error("verdict failed re-verification");
      if (o.cross_check) {
        const bool other = solve_strict(regularity_system(s, p, alternate)).feasible();
        if (other != r.feasible()) {
          diverged = true;
          std::cerr << "divergence: subdivision " << i + 1 << " at t=" << p.to_string() << "\n";
        }
      }
      if (o.certify) detail += certificate_text(sys, r);
      if (!r.feasible()) {
        regular = false;
        const auto support = certificate_support(sys, r.certificate());
        std::string joined;
        for (const auto& s2 : support) joined += (joined.empty() ? "" : "; ") + s2;
        line += "NONREGULAR support=" + joined;
        if (params.size() > 1) line += " t=" + p.to_string();
        row["regular"] = false;
        row["support"] = support;
        row["params"] = p.to_string();
        break;
      }
      if (params.size() == 1) {
        line += "REGULAR heights=" + to_string(r.witness().x);
        row["heights"] = to_string(r.witness().x);
      }
    }
    if (regular) {
      if (params.size() > 1) line += "REGULAR at " + std::to_string(params.size()) + " parameter vectors";
      row["regular"] = true;
    }
    all_regular = all_regular && regular;
    if (o.links) {
      if (!s.is_triangulation()) throw std::invalid_argument("--links needs triangulations");
      const auto links = good_link_vertices(s);
      line += " links=" + (links.empty() ? std::string("none") : join(links));
      row["good_links"] = links;
    }
    rows.push_back(row);
    if (!c.json) {
      std::cout << line << "\n";
      if (!detail.empty()) std::cout << detail;
    }
  }
  if (c.json) {
    emit(c, {{"n", n}, {"d", d}, {"results", rows}, {"all_regular", all_regular}, {"cross_check_ok", !diverged}});
  } else {
    std::cout << (all_regular ? "all regular" : "some non-regular") << "\n";
  }
  return (all_regular && !diverged) ? kOk : kMismatch;
}

int run_fiber(const Common& c, const FiberOptions& o) {
  if (!(o.d < o.d_prime && o.d_prime < o.n)) {
    std::cerr << "error: need d < d' < n\n";
    return kUsage;
  }
  if (!(o.d == 2 || o.n <= 8)) {
    std::cerr << "error: supported scale is d = 2 or n <= 8\n";
    return kUsage;
  }
  const ParamVector params = resolve_params(o.params, o.n, o.d);
  const FiberReport rep = fiber_face_poset(o.n, o.d, o.d_prime, params, c.workers);
  const BauesPoset& poset = rep.poset;
  const std::size_t top = poset.top();

  // Rank in the whole poset: longest chain from a minimal element.
  std::vector<std::size_t> order(poset.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::size_t> below(poset.size(), 0);
  for (std::size_t i = 0; i < poset.size(); ++i)
    for (std::size_t j = 0; j < poset.size(); ++j)
      if (i != j && poset.leq[j][i]) ++below[i];
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  std::vector<std::size_t> rank(poset.size(), 0);
  for (std::size_t i : order)
    for (std::size_t j = 0; j < poset.size(); ++j)
      if (i != j && poset.leq[j][i]) rank[i] = std::max(rank[i], rank[j] + 1);
  std::map<std::size_t, std::size_t> by_rank;
  for (std::size_t i = 0; i < poset.size(); ++i)
    if (i != top) ++by_rank[rank[i]];

  const std::string polygon = rep.polygon ? polygon_name(*rep.polygon) : "not a polygon";
  if (c.json) {
    json elements = json::array();
    for (std::size_t i = 0; i < poset.size(); ++i) {
      if (i == top) continue;
      elements.push_back({{"subdivision", format_subdivision(poset.elements[i])},
                          {"rank", rank[i]},
                          {"coherent", static_cast<bool>(poset.coherent[i])},
                          {"upper_lower", static_cast<bool>(rep.upper_lower[i])}});
    }
    json ranks = json::object();
    for (auto [r, k] : by_rank) ranks[std::to_string(r)] = k;
    emit(c, {{"n", o.n},
             {"d", o.d},
             {"d_prime", o.d_prime},
             {"params", params.to_string()},
             {"proper_elements", poset.size() - (top < poset.size() ? 1 : 0)},
             {"elements_by_rank", ranks},
             {"elements", elements},
             {"coherent_f_vector", rep.coherent_f_vector},
             {"coherent_subposet", polygon},
             {"euler_characteristic", rep.proper_euler.chi}});
    return kOk;
  }
  std::cout << "Baues poset of " << shape(o.n, o.d_prime) << " -> " << shape(o.n, o.d) << " at t=" << params.to_string()
            << "\n";
  std::cout << "proper elements: " << poset.size() - (top < poset.size() ? 1 : 0) << "\n";
  for (auto [r, k] : by_rank) std::cout << "  rank " << r << ": " << k << "\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (i == top) continue;
    std::cout << "  " << format_subdivision(poset.elements[i]) << "  " << (poset.coherent[i] ? "coherent" : "incoherent")
              << (rep.upper_lower[i] ? "  upper/lower" : "") << "\n";
  }
  std::cout << "coherent f-vector:";
  for (auto k : rep.coherent_f_vector) std::cout << " " << k;
  std::cout << "\ncoherent subposet: " << polygon << "\n";
  std::cout << "Euler characteristic of proper part: " << rep.proper_euler.chi << "\n";
  return kOk;
}

int run_paths(const Common& c, const PathsOptions& o) {
  if (!(o.d >= 2 && o.n > o.d)) {
    std::cerr << "error: need n > d >= 2\n";
    return kUsage;
  }
  const ParamVector params = resolve_params(o.params, o.n, o.d);
  const auto paths = enumerate_monotone_paths(o.n, o.d);
  json listing = json::array();
  std::size_t coherent = 0;
  std::vector<std::string> lines;
  for (const auto& p : paths) {
    const bool lp = is_coherent_string_lp(p, params);
    coherent += lp;
    const SignVector lambda = lambda_of_string(p, o.n);
    if (o.list) {
      lines.push_back(p.to_string(o.n) + "  lambda=" + lambda.to_string() + "  m=" + std::to_string(m_of_lambda(lambda)) +
                      "  " + (lp ? "coherent" : "incoherent"));
      listing.push_back({{"path", p.to_string(o.n)},
                         {"lambda", lambda.to_string()},
                         {"m", m_of_lambda(lambda)},
                         {"coherent", lp}});
    }
  }
  const std::uint64_t formula = count_coherent_paths(o.n, o.d);
  int status = coherent == formula ? kOk : kMismatch;

  std::optional<bool> iso;
  if (o.compare_zonotope) {
    iso = coherent_strings_match_zonotope(o.n, o.d);
    if (!*iso) status = kMismatch;
  }
  std::optional<std::size_t> checked;
  std::vector<std::string> divergent;
  if (o.cross_check) {
    const auto strings = enumerate_cellular_strings(o.n, o.d);
    for (const auto& s : strings) {
      const bool criterion = is_coherent_string(lambda_of_string(s, o.n), o.d);
      if (criterion != is_coherent_string_lp(s, params)) divergent.push_back(s.to_string(o.n));
    }
    checked = strings.size();
    if (!divergent.empty()) status = kMismatch;
  }

  if (c.json) {
    json j{{"n", o.n},
           {"d", o.d},
           {"params", params.to_string()},
           {"paths", paths.size()},
           {"coherent", coherent},
           {"formula", formula},
           {"upper_bound", path_count_upper_bound(o.n, o.d)}};
    if (o.list) j["listing"] = listing;
    if (iso) j["zonotope_isomorphic"] = *iso;
    if (checked) {
      j["cross_checked_strings"] = *checked;
      j["divergent"] = divergent;
    }
    emit(c, j);
    return status;
  }
  for (const auto& l : lines) std::cout << l << "\n";
  std::cout << shape(o.n, o.d) << ": " << coherent << " coherent of " << paths.size() << " monotone paths (formula "
            << formula << ")\n";
  if (iso) {
    std::cout << "coherent strings vs Z(" << o.n - 2 << "," << o.d - 1 << "): " << (*iso ? "ISOMORPHIC" : "NOT ISOMORPHIC")
              << "\n";
  }
  if (checked) {
    std::cout << "cross-check: " << *checked - divergent.size() << " of " << *checked << " strings agree\n";
    for (const auto& s : divergent) std::cout << "  divergent: " << s << "\n";
  }
  return status;
}

int run_paths_general(const Common& c, const PathsGeneralOptions& o) {
  const GeneralPolytope p(parse_matrix(read_text_file(o.file)));
  if (o.direction < 1 || o.direction > p.dimension()) {
    std::cerr << "error: --dir must be between 1 and " << p.dimension() << "\n";
    return kUsage;
  }
  const auto paths = monotone_paths(p, o.direction - 1);
  std::vector<std::vector<int>> coherent;
  for (const auto& path : paths)
    if (is_coherent_path(p, o.direction - 1, path)) coherent.push_back(path);
  const auto one_based = [](std::vector<int> v) {
    for (int& x : v) ++x;
    return v;
  };
  if (c.json) {
    json list = json::array();
    for (const auto& path : coherent) list.push_back(join(one_based(path), "-"));
    json j{{"vertices", p.vertex_count()},
           {"dimension", p.dimension()},
           {"edges", p.edges().size()},
           {"monotone_paths", paths.size()},
           {"coherent", coherent.size()}};
    if (o.list) j["coherent_paths"] = list;
    emit(c, j);
    return kOk;
  }
  if (o.list)
    for (const auto& path : coherent) std::cout << join(one_based(path), "-") << "\n";
  std::cout << p.vertex_count() << " vertices, " << p.edges().size() << " edges, " << paths.size()
            << " monotone paths, " << coherent.size() << " coherent\n";
  return kOk;
}

namespace {

struct Check {
  std::string section;
  std::string label;
  std::string expected;
  std::string got;
  bool pass() const { return expected == got; }
};

}  // namespace

int run_tables(const Common& c, const TablesOptions& o) {
  std::vector<Check> checks;
  const auto add = [&](std::string section, std::string label, auto expected, auto got) {
    checks.push_back({std::move(section), std::move(label), std::to_string(expected), std::to_string(got)});
  };
  const auto placing = [&](int n, int d, const std::vector<reference::PlacingRow>& rows) {
    const FlipGraph g = enumerate_triangulations(n, d, c.workers);
    const auto orbits = symmetry_orbits(g.triangulations);
    const std::string section = "placing " + shape(n, d);
    add(section, "symmetry classes", rows.size(), symmetry_orbit_count(g.triangulations));
    std::vector<std::size_t> seen;
    for (const auto& row : rows) {
      const Subdivision t = parse_subdivision(row.triangulation, n, d);
      const auto it = std::find(g.triangulations.begin(), g.triangulations.end(), t);
      const bool found = it != g.triangulations.end();
      if (found) seen.push_back(orbits[static_cast<std::size_t>(it - g.triangulations.begin())]);
      checks.push_back({section, std::string(row.triangulation) + " good links", join(row.good_links),
                        found ? join(good_link_vertices(t)) : "not a triangulation"});
    }
    std::sort(seen.begin(), seen.end());
    add(section, "distinct classes listed", rows.size(),
        static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin()));
  };
  placing(7, 3, reference::kPlacingC73);
  placing(8, 4, reference::kPlacingC84);

  {
    const FlipGraph g = enumerate_triangulations(8, 3, c.workers);
    std::vector<Triangulation> nonplacing;
    for (const auto& t : g.triangulations)
      if (good_link_vertices(t).empty()) nonplacing.push_back(t);
    add("non-placing C(8,3)", "count", std::size_t{8}, nonplacing.size());
    add("non-placing C(8,3)", "symmetry classes", reference::kNonPlacingC83.size(), symmetry_orbit_count(nonplacing));
    for (const char* row : reference::kNonPlacingC83) {
      const Subdivision t = parse_subdivision(row, 8, 3);
      const bool listed = std::find(nonplacing.begin(), nonplacing.end(), t) != nonplacing.end();
      checks.push_back({"non-placing C(8,3)", row, "non-placing", listed ? "non-placing" : "other"});
    }
  }

  std::map<std::pair<int, int>, FlipGraph> graphs;
  for (auto [n, d] : {std::pair{8, 4}, std::pair{8, 3}}) graphs[{n, d}] = enumerate_triangulations(n, d, c.workers);
  for (const auto& tc : reference::kTypeCounts) {
    const FlipGraph& g = graphs.at({tc.n, tc.d});
    std::size_t got = 0;
    bool found = false;
    for (int r = 1; r < tc.n - tc.d && !found; ++r) {
      for (const auto& ty : types_of_ranking(tc.n, tc.d, r)) {
        if (ty.to_string() == tc.type) {
          got = enumerate_subdivisions_by_type(g, ty).size();
          found = true;
        }
      }
    }
    checks.push_back({"types " + shape(tc.n, tc.d), tc.type, std::to_string(tc.count), found ? std::to_string(got) : "unknown type"});
  }
  {
    const auto& g84 = graphs.at({8, 4});
    const auto& g83 = graphs.at({8, 3});
    add("secondary polytope", "flips C(8,4)", std::size_t{64}, g84.edges.size());
    add("secondary polytope", "flips C(8,3)", std::size_t{302}, g83.edges.size());
    // 3-polytope: f2 = 2 - f0 + f1; 4-polytope: f3 = f0 - f1 + f2.
    std::size_t r2_84 = 0;
    for (const auto& ty : types_of_ranking(8, 4, 2)) r2_84 += enumerate_subdivisions_by_type(g84, ty).size();
    add("secondary polytope", "facets C(8,4)", 2 - static_cast<long>(g84.triangulations.size()) + static_cast<long>(g84.edges.size()),
        static_cast<long>(r2_84));
    std::size_t r2_83 = 0;
    std::size_t r3_83 = 0;
    for (const auto& ty : types_of_ranking(8, 3, 2)) r2_83 += enumerate_subdivisions_by_type(g83, ty).size();
    for (const auto& ty : types_of_ranking(8, 3, 3)) r3_83 += enumerate_subdivisions_by_type(g83, ty).size();
    add("secondary polytope", "facets C(8,3)", std::size_t{50}, r3_83);
    add("secondary polytope", "two-faces C(8,3)",
        static_cast<long>(r3_83) - static_cast<long>(g83.triangulations.size()) + static_cast<long>(g83.edges.size()),
        static_cast<long>(r2_83));
    const ParamVector p84 = ParamVector::standard(8, 4);
    const ParamVector p83 = ParamVector::standard(8, 3);
    std::size_t reg84 = 0;
    std::size_t reg83 = 0;
    for (const auto& t : g84.triangulations) reg84 += is_regular(t, p84).feasible();
    for (const auto& t : g83.triangulations) reg83 += is_regular(t, p83).feasible();
    add("secondary polytope", "regular triangulations C(8,4)", g84.triangulations.size(), reg84);
    add("secondary polytope", "regular triangulations C(8,3)", g83.triangulations.size(), reg83);
  }

  for (const auto& tc : reference::triangulation_counts(o.max_n)) {
    add("triangulation counts", shape(tc.n, tc.d), tc.count, enumerate_triangulations(tc.n, tc.d, c.workers).triangulations.size());
  }

  const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& k) { return k.pass(); });
  if (c.json) {
    json arr = json::array();
    for (const auto& k : checks)
      arr.push_back({{"section", k.section}, {"cell", k.label}, {"expected", k.expected}, {"got", k.got}, {"pass", k.pass()}});
    emit(c, {{"checks", arr}, {"all_pass", ok}});
  } else {
    for (const auto& k : checks) {
      std::cout << (k.pass() ? "PASS " : "FAIL ") << k.section << ": " << k.label << " expected " << k.expected;
      if (!k.pass()) std::cout << " got " << k.got;
      std::cout << "\n";
    }
    std::cout << (ok ? "all cells match" : "mismatches found") << "\n";
  }
  return ok ? kOk : kMismatch;
}

int run_gale(const Common& c, const GaleOptions& o) {
  const ParamVector params = resolve_params(o.params, o.n, o.d);
  const DependenceBasis basis = dependence_basis(params);
  std::optional<RationalVector> unique;
  if (o.n == o.d + 2) unique = unique_dependence_coeffs(params);
  if (c.json) {
    json rows = json::array();
    for (const auto& v : basis.vectors) rows.push_back(to_string(v));
    json j{{"n", o.n}, {"d", o.d}, {"params", params.to_string()}, {"dependences", rows}};
    if (unique) j["unique_dependence"] = to_string(*unique);
    emit(c, j);
    return kOk;
  }
  std::cout << "affine dependences of " << shape(o.n, o.d) << " at t=" << params.to_string() << "\n";
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) std::cout << "  g" << i + 1 << ": " << to_string(basis.vectors[i]) << "\n";
  const RationalMatrix gm = basis.gale_matrix(static_cast<std::size_t>(o.n));
  std::cout << "Gale vectors:\n";
  for (int j = 0; j < o.n; ++j) std::cout << "  " << j + 1 << ": " << to_string(gm.column(static_cast<std::size_t>(j))) << "\n";
  if (unique) std::cout << "unique dependence: " << to_string(*unique) << "\n";
  return kOk;
}

}  // namespace cyclic::cli
