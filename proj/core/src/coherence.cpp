#include "cyclic/coherence.hpp"

#include "cyclic/gale.hpp"
#include "cyclic/parallel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace cyclic {

namespace {

// Dependence on `base ∪ {p}` scaled so that the coefficient of p is positive: the row is
// positive exactly when the lifted p lies above the hyperplane through the lifted base.
RationalVector above_row(FaceSet base, int p, const ParamVector& params) {
  RationalVector row = circuit_dependence(base.with(p), params);
  if (row[static_cast<std::size_t>(p - 1)] < 0) {
    for (auto& x : row) x = -x;
  }
  return row;
}

FaceSet first_simplex(FaceSet cell, int d) {
  const auto idx = cell.indices();
  return FaceSet::from_indices(std::span<const int>(idx).subspan(0, static_cast<std::size_t>(d + 1)));
}

std::string label_of(FaceSet f, int n) { return format_face(f, n); }

}  // namespace

StrictSystem regularity_system(const Subdivision& sub, const ParamVector& params, Formulation formulation) {
  if (!is_valid_subdivision(sub, params)) throw std::invalid_argument("regularity_system: invalid subdivision");
  const int n = params.n();
  const int d = params.d();
  StrictSystem sys(static_cast<std::size_t>(n));

  for (FaceSet cell : sub.cells()) {
    if (cell.size() == d + 1) continue;
    const FaceSet base = first_simplex(cell, d);
    for (int v : (cell - base).indices()) {
      sys.add_equality(circuit_dependence(base.with(v), params),
                       "coplanar " + label_of(base, n) + "+" + std::to_string(v));
    }
  }

  if (formulation == Formulation::Walls) {
    std::unordered_map<FaceSet, std::vector<FaceSet>> walls;
    for (FaceSet cell : sub.cells()) {
      for (FaceSet f : cell_facets(cell, d)) walls[f].push_back(cell);
    }
    std::vector<std::pair<FaceSet, std::vector<FaceSet>>> ordered(walls.begin(), walls.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    for (const auto& [wall, cells] : ordered) {
      if (cells.size() != 2) continue;
      const FaceSet a_cell = std::min(cells[0], cells[1], lex_less);
      const FaceSet b_cell = std::max(cells[0], cells[1], lex_less);
      const int a = (a_cell - wall).min();
      const int b = (b_cell - wall).min();
      sys.add_strict(above_row(wall.with(a), b, params),
                     "wall " + label_of(wall, n) + ": " + std::to_string(b) + " above " + label_of(wall.with(a), n));
    }
  } else {
    for (FaceSet cell : sub.cells()) {
      const FaceSet base = first_simplex(cell, d);
      for (int p = 1; p <= n; ++p) {
        if (cell.contains(p)) continue;
        sys.add_strict(above_row(base, p, params), std::to_string(p) + " above " + label_of(base, n));
      }
    }
  }
  return sys;
}

FeasibilityResult is_regular(const Subdivision& sub, const ParamVector& params, Formulation formulation) {
  return solve_strict(regularity_system(sub, params, formulation));
}

StrictSystem pi_coherence_system(const Subdivision& sub, const ParamVector& params, int d_prime) {
  const FaceSet all = FaceSet::full(sub.n());
  if (!(sub.d() < d_prime && d_prime < sub.n())) throw std::invalid_argument("pi_coherence_system: need d < d' < n");
  for (FaceSet c : sub.cells()) {
    if (c != all && !gale_evenness_is_face(c, sub.n(), d_prime)) {
      throw std::invalid_argument("not pi-induced: cell " + format_face(c, sub.n()) + " is not a face of C(" +
                                  std::to_string(sub.n()) + "," + std::to_string(d_prime) + ")");
    }
  }
  StrictSystem sys = regularity_system(sub, params);
  const DependenceBasis basis = dependence_basis(params.with_dimension(d_prime));
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
    sys.add_equality(basis.vectors[i], "dependence " + std::to_string(i) + " of C(n,d')");
  }
  return sys;
}

FeasibilityResult is_pi_coherent(const Subdivision& sub, const ParamVector& params, int d_prime) {
  return solve_strict(pi_coherence_system(sub, params, d_prime));
}

bool has_upper_and_lower_cells(const Subdivision& sub, int n, int d_prime) {
  bool upper = false;
  bool lower = false;
  for (FaceSet c : sub.cells()) {
    if (c == FaceSet::full(n) || !gale_evenness_is_face(c, n, d_prime)) continue;
    const FaceClass k = classify_face(c, n, d_prime);
    upper = upper || k == FaceClass::Upper;
    lower = lower || k == FaceClass::Lower;
  }
  return upper && lower;
}

Subdivision regular_subdivision_from_heights(const ParamVector& params, const RationalVector& w) {
  const int n = params.n();
  const int d = params.d();
  if (w.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("regular_subdivision_from_heights: wrong length");
  const RationalMatrix h = homogenized_points(params);
  std::set<FaceSet> cells;
  for (FaceSet s : k_subsets(n, d + 1)) {
    const auto idx = s.indices();
    RationalMatrix m(idx.size(), idx.size());
    RationalVector rhs(idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (std::size_t c = 0; c <= static_cast<std::size_t>(d); ++c) m(r, c) = h(c, static_cast<std::size_t>(idx[r] - 1));
      rhs[r] = w[static_cast<std::size_t>(idx[r] - 1)];
    }
    const auto coeffs = solve_square(m, rhs);
    if (!coeffs) throw std::logic_error("regular_subdivision_from_heights: degenerate simplex");
    FaceSet cell;
    bool lower = true;
    for (int j = 1; j <= n && lower; ++j) {
      const Rational slack = w[static_cast<std::size_t>(j - 1)] - dot(*coeffs, h.column(static_cast<std::size_t>(j - 1)));
      if (slack < 0) lower = false;
      if (slack == 0) cell = cell.with(j);
    }
    if (lower) cells.insert(cell);
  }
  return Subdivision(n, d, std::vector<FaceSet>(cells.begin(), cells.end()));
}

void flag_coherence(BauesPoset& poset, const ParamVector& params, unsigned workers) {
  std::vector<char> flags(poset.size(), 0);
  parallel_for(poset.size(), workers, [&](std::size_t i) {
    flags[i] = is_pi_coherent(poset.elements[i], params, poset.d_prime).feasible() ? 1 : 0;
  });
  poset.coherent.assign(flags.begin(), flags.end());
}

FiberReport fiber_face_poset(int n, int d, int d_prime, const ParamVector& params, unsigned workers) {
  if (params.n() != n || params.d() != d) throw std::invalid_argument("fiber_face_poset: parameters do not match C(n,d)");
  FiberReport report;
  report.poset = enumerate_baues_poset(n, d, d_prime);
  flag_coherence(report.poset, params, workers);
  for (const auto& s : report.poset.elements) report.upper_lower.push_back(has_upper_and_lower_cells(s, n, d_prime));

  const BauesPoset proper = report.poset.proper_part();
  report.proper_euler = order_complex_euler(proper);

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    if (proper.coherent[i]) keep.push_back(i);
  }
  const BauesPoset coh = proper.restricted(keep);
  const std::size_t m = coh.size();
  // Rank inside the coherent subposet: length of the longest chain below.
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::vector<std::size_t> below(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && coh.leq[j][i]) ++below[i];
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  std::vector<std::size_t> rank(m, 0);
  for (std::size_t i : order)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && coh.leq[j][i]) rank[i] = std::max(rank[i], rank[j] + 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (report.coherent_f_vector.size() <= rank[i]) report.coherent_f_vector.resize(rank[i] + 1, 0);
    ++report.coherent_f_vector[rank[i]];
  }

  if (report.coherent_f_vector.size() == 2 && report.coherent_f_vector[0] == report.coherent_f_vector[1] &&
      report.coherent_f_vector[0] >= 3) {
    // Polygon test: each edge above exactly two vertices, each vertex below exactly two edges,
    // and the vertex-edge graph is a single cycle.
    std::vector<std::vector<std::size_t>> adjacent(m);
    bool ok = true;
    for (std::size_t e = 0; e < m && ok; ++e) {
      if (rank[e] != 1) continue;
      std::vector<std::size_t> ends;
      for (std::size_t v = 0; v < m; ++v)
        if (rank[v] == 0 && coh.leq[v][e]) ends.push_back(v);
      if (ends.size() != 2) {
        ok = false;
        break;
      }
      adjacent[ends[0]].push_back(ends[1]);
      adjacent[ends[1]].push_back(ends[0]);
    }
    std::size_t start = m;
    for (std::size_t v = 0; v < m && ok; ++v) {
      if (rank[v] != 0) continue;
      if (adjacent[v].size() != 2) ok = false;
      start = v;
    }
    if (ok && start < m) {
      std::size_t prev = m;
      std::size_t cur = start;
      std::size_t steps = 0;
      do {
        const std::size_t next = adjacent[cur][0] != prev ? adjacent[cur][0] : adjacent[cur][1];
        prev = cur;
        cur = next;
        ++steps;
      } while (cur != start && steps <= m);
      if (steps == report.coherent_f_vector[0]) report.polygon = steps;
    }
  }
  return report;
}

Subdivision step1_subdivision(int n) {
  if (n < 6) throw std::invalid_argument("step1_subdivision: need n >= 6");
  FaceSet big = FaceSet{1, 2, 5};
  for (int i = 6; i <= n; ++i) big = big.with(i);
  return Subdivision(n, 2, {FaceSet{2, 3, 4, 5}, big});
}

Rational step1_ratio(const ParamVector& params) {
  if (params.n() < 4) throw std::invalid_argument("step1_ratio: need n >= 4");
  const RationalVector c = unique_dependence_coeffs(params.with_dimension(params.n() - 2));
  return abs(c[3]) / abs(c[2]);
}

ScanReport parameter_scan(const Subdivision& sub, int d_prime, const std::vector<RationalVector>& family) {
  ScanReport report;
  for (const auto& t : family) {
    if (t.size() != static_cast<std::size_t>(sub.n())) throw std::invalid_argument("parameter_scan: sample has wrong length");
    const ParamVector params(t, sub.d());
    ScanSample sample;
    sample.t = t;
    sample.coherent = is_pi_coherent(sub, params, d_prime).feasible();
    if (sub.n() == d_prime + 2) sample.ratio = step1_ratio(params);
    report.samples.push_back(std::move(sample));
  }
  for (std::size_t i = 0; i + 1 < report.samples.size(); ++i) {
    const auto& a = report.samples[i];
    const auto& b = report.samples[i + 1];
    if (a.coherent != b.coherent) report.verdict_changes.push_back(i);
    if (a.ratio && b.ratio && sgn(*a.ratio - 1) * sgn(*b.ratio - 1) <= 0) report.ratio_crossings.push_back(i);
  }
  return report;
}

std::vector<RationalVector> rational_path(const RationalVector& a, const RationalVector& b, int steps) {
  if (a.size() != b.size() || steps < 1) throw std::invalid_argument("rational_path: bad arguments");
  std::vector<RationalVector> out;
  for (int i = 0; i <= steps; ++i) {
    const Rational s(i, steps);
    RationalVector t(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) t[k] = (1 - s) * a[k] + s * b[k];
    out.push_back(std::move(t));
  }
  return out;
}

std::optional<RationalVector> locate_ratio_crossing(const RationalVector& a, const RationalVector& b, int d_prime,
                                                    int iterations) {
  const std::size_t n = a.size();
  if (n != static_cast<std::size_t>(d_prime + 2) || b.size() != n || n < 5) {
    throw std::invalid_argument("locate_ratio_crossing: need n = d'+2 >= 5");
  }
  const auto at = [&](const Rational& s) {
    RationalVector t(n);
    for (std::size_t k = 0; k < n; ++k) t[k] = (1 - s) * a[k] + s * b[k];
    return t;
  };
  const auto excess = [&](const RationalVector& t) { return sgn(step1_ratio(ParamVector(t, d_prime)) - 1); };
  Rational lo = 0;
  Rational hi = 1;
  const int s_lo = excess(at(lo));
  const int s_hi = excess(at(hi));
  if (s_lo == 0) return at(lo);
  if (s_hi == 0) return at(hi);
  if (s_lo == s_hi) return std::nullopt;
  for (int it = 0; it < iterations; ++it) {
    const Rational mid = (lo + hi) / 2;
    const int s = excess(at(mid));
    if (s == 0) return at(mid);
    (s == s_lo ? lo : hi) = mid;
  }
  // Solve |t₃ − t₁|/|t₄ − t₁| · R = 1 for t₁, where R collects the factors of the other points.
  RationalVector t = at((lo + hi) / 2);
  Rational r = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == 0 || j == 2 || j == 3) continue;
    r *= abs(t[j] - t[2]) / abs(t[j] - t[3]);
  }
  if (r == 1) return std::nullopt;
  t[0] = (t[3] - r * t[2]) / (1 - r);
  if (!(t[0] < t[1])) return std::nullopt;
  if (step1_ratio(ParamVector(t, d_prime)) != 1) return std::nullopt;
  return t;
}

}  // namespace cyclic
