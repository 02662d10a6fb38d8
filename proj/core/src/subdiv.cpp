#include "cyclic/subdiv.hpp"

#include "cyclic/lp.hpp"
#include "cyclic/parallel.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace cyclic {

namespace {

struct MaskVectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<std::uint32_t> masks_of(const Subdivision& s) {
  std::vector<std::uint32_t> out;
  out.reserve(s.cells().size());
  for (FaceSet c : s.cells()) out.push_back(c.mask());
  return out;
}

// Side of v relative to the hyperplane through the d-set F, oriented by the sorted order of F.
// On the moment curve the sorted determinant is a positive Vandermonde product, so the sign is
// the parity of moving v past the members of F that exceed it.
int side(FaceSet f, int v) {
  const int above = FaceSet::from_mask(f.mask() & ~((1u << v) - 1u)).size();
  return above % 2 == 0 ? 1 : -1;
}

}  // namespace

Subdivision::Subdivision(int n, int d, std::vector<FaceSet> cells) : n_(n), d_(d), cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
}

Subdivision Subdivision::trivial(int n, int d) { return Subdivision(n, d, {FaceSet::full(n)}); }

bool Subdivision::contains(FaceSet cell) const { return std::binary_search(cells_.begin(), cells_.end(), cell); }

bool Subdivision::is_triangulation() const {
  return std::all_of(cells_.begin(), cells_.end(), [&](FaceSet c) { return c.size() == d_ + 1; });
}

std::string Subdivision::to_string() const { return format_subdivision(*this); }

std::vector<FaceSet> pulling_triangulation(FaceSet cell, int d) {
  if (cell.size() < d + 1) throw std::invalid_argument("pulling_triangulation: cell too small");
  if (cell.size() == d + 1) return {cell};
  const int apex = cell.min();
  std::vector<FaceSet> out;
  for (FaceSet f : cell_facets(cell, d)) {
    if (!f.contains(apex)) out.push_back(f.with(apex));
  }
  return out;
}

Rational total_volume(const ParamVector& params) {
  Rational vol = 0;
  for (FaceSet s : pulling_triangulation(FaceSet::full(params.n()), params.d())) vol += vandermonde_volume(s, params);
  return vol;
}

bool is_valid_subdivision(const std::vector<FaceSet>& cells, const ParamVector& params) {
  const int n = params.n();
  const int d = params.d();
  if (cells.empty()) return false;
  std::unordered_set<FaceSet> seen;
  std::unordered_map<FaceSet, std::vector<int>> wall_sides;
  Rational volume = 0;
  for (FaceSet c : cells) {
    if (c.size() <= d) throw std::invalid_argument("is_valid_subdivision: cell with at most d vertices");
    if (!c.is_subset_of(FaceSet::full(n))) return false;
    if (!seen.insert(c).second) return false;
    for (FaceSet f : cell_facets(c, d)) {
      const int opposite = (c - f).min();
      wall_sides[f].push_back(side(f, opposite));
    }
    for (FaceSet s : pulling_triangulation(c, d)) volume += vandermonde_volume(s, params);
  }
  for (const auto& [f, sides] : wall_sides) {
    if (gale_evenness_is_face(f, n, d)) {
      if (sides.size() != 1) return false;
    } else {
      if (sides.size() != 2 || sides[0] == sides[1]) return false;
    }
  }
  return volume == total_volume(params);
}

bool is_valid_subdivision(const Subdivision& sub, const ParamVector& params) {
  if (sub.n() != params.n() || sub.d() != params.d()) return false;
  return is_valid_subdivision(sub.cells(), params);
}

namespace {

void check_projection(int n, int d, int d_prime) {
  if (!(d < d_prime && d_prime < n)) throw std::invalid_argument("need d < d' < n");
}

}  // namespace

bool is_pi_induced(const Subdivision& sub, int d_prime) {
  check_projection(sub.n(), sub.d(), d_prime);
  const FaceSet all = FaceSet::full(sub.n());
  return std::all_of(sub.cells().begin(), sub.cells().end(),
                     [&](FaceSet c) { return c == all || gale_evenness_is_face(c, sub.n(), d_prime); });
}

bool is_pi_induced(const Subdivision& sub, int d_prime, const ParamVector& params, bool verify_condition_ii) {
  const bool induced = is_pi_induced(sub, d_prime);
  if (induced && verify_condition_ii && !satisfies_condition_ii(sub, params)) {
    throw std::logic_error("condition (ii) fails for a subdivision whose cells are faces");
  }
  return induced;
}

bool satisfies_condition_ii(const Subdivision& sub, const ParamVector& params) {
  const int d = params.d();
  const RationalMatrix h = homogenized_points(params);
  for (FaceSet cell : sub.cells()) {
    const auto members = cell.indices();
    const int m = static_cast<int>(members.size());
    for (int k = 1; k <= std::min(d, m - 1); ++k) {
      for (FaceSet rel : k_subsets(m, k)) {
        FaceSet g;
        for (int p : rel.indices()) g = g.with(members[static_cast<std::size_t>(p - 1)]);
        // π(G) is a face of π(C) iff a linear functional vanishes on G and is positive on C \ G.
        StrictSystem sys(static_cast<std::size_t>(d + 1));
        for (int v : cell.indices()) {
          RationalVector row = h.column(static_cast<std::size_t>(v - 1));
          if (g.contains(v)) {
            sys.add_equality(std::move(row));
          } else {
            sys.add_strict(std::move(row));
          }
        }
        if (solve_strict(sys).feasible() != gale_evenness_is_face_within(g, cell, d)) return false;
      }
    }
  }
  return true;
}

int orientation(const ParamVector& params, std::span<const int> vertices) {
  const std::size_t k = vertices.size();
  if (k != static_cast<std::size_t>(params.d() + 1)) throw std::invalid_argument("orientation: need d+1 vertices");
  const RationalMatrix h = homogenized_points(params);
  RationalMatrix m(k, k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < k; ++r) m(r, c) = h(r, static_cast<std::size_t>(vertices[c] - 1));
  return sgn(determinant(std::move(m)));
}

namespace {

// Joins `p` to the boundary facets of the triangulated region that it sees.
void place_point(std::vector<FaceSet>& cells, int p, const ParamVector& params) {
  std::unordered_map<FaceSet, std::pair<int, int>> facets;  // facet -> (count, opposite vertex)
  for (FaceSet c : cells) {
    for (int v : c.indices()) {
      auto& entry = facets[c.without(v)];
      ++entry.first;
      entry.second = v;
    }
  }
  std::vector<FaceSet> added;
  for (const auto& [f, entry] : facets) {
    if (entry.first != 1) continue;
    std::vector<int> with_p = f.indices();
    std::vector<int> with_opp = with_p;
    with_p.push_back(p);
    with_opp.push_back(entry.second);
    const int sp = orientation(params, with_p);
    const int so = orientation(params, with_opp);
    if (sp == 0) throw std::logic_error("placing: degenerate point configuration");
    if (sp != so) added.push_back(f.with(p));
  }
  if (added.empty()) throw std::logic_error("placing: point sees no facet");
  cells.insert(cells.end(), added.begin(), added.end());
}

}  // namespace

Triangulation placing_triangulation(const ParamVector& params, std::span<const int> insertion_order) {
  const int n = params.n();
  const int d = params.d();
  std::vector<int> sorted(insertion_order.begin(), insertion_order.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(static_cast<std::size_t>(n));
  std::iota(expected.begin(), expected.end(), 1);
  if (sorted != expected) throw std::invalid_argument("placing_triangulation: order must be a permutation of 1..n");
  std::vector<FaceSet> cells{FaceSet::from_indices(insertion_order.subspan(0, static_cast<std::size_t>(d + 1)))};
  for (std::size_t i = static_cast<std::size_t>(d + 1); i < insertion_order.size(); ++i) {
    place_point(cells, insertion_order[i], params);
  }
  return Triangulation(n, d, std::move(cells));
}

Triangulation extend_by_placing(const Triangulation& t, const ParamVector& extended_params) {
  if (extended_params.n() != t.n() + 1 || extended_params.d() != t.d()) {
    throw std::invalid_argument("extend_by_placing: parameters must describe C(n+1,d)");
  }
  std::vector<FaceSet> cells = t.cells();
  place_point(cells, t.n() + 1, extended_params);
  return Triangulation(t.n() + 1, t.d(), std::move(cells));
}

std::vector<Triangulation> bistellar_flips(const Triangulation& t) {
  const int d = t.d();
  if (d < 2) throw std::invalid_argument("bistellar_flips: need d >= 2");
  std::unordered_map<FaceSet, std::vector<FaceSet>> walls;
  for (FaceSet c : t.cells()) {
    if (c.size() != d + 1) throw std::invalid_argument("bistellar_flips: not a triangulation");
    for (int v : c.indices()) walls[c.without(v)].push_back(c);
  }
  std::vector<FaceSet> circuits;
  for (const auto& [w, cs] : walls) {
    if (cs.size() == 2) circuits.push_back(cs[0] | cs[1]);
  }
  std::sort(circuits.begin(), circuits.end());
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());

  std::vector<Triangulation> out;
  for (FaceSet z : circuits) {
    const auto idx = z.indices();
    std::vector<FaceSet> odd;
    std::vector<FaceSet> even;
    for (std::size_t i = 0; i < idx.size(); ++i) (i % 2 == 0 ? odd : even).push_back(z.without(idx[i]));
    const auto present = [&](const std::vector<FaceSet>& side_cells) {
      return std::all_of(side_cells.begin(), side_cells.end(), [&](FaceSet c) { return t.contains(c); });
    };
    const std::vector<FaceSet>* from = nullptr;
    const std::vector<FaceSet>* to = nullptr;
    if (present(odd)) {
      from = &odd;
      to = &even;
    } else if (present(even)) {
      from = &even;
      to = &odd;
    } else {
      continue;
    }
    std::vector<FaceSet> cells;
    for (FaceSet c : t.cells()) {
      if (std::find(from->begin(), from->end(), c) == from->end()) cells.push_back(c);
    }
    cells.insert(cells.end(), to->begin(), to->end());
    out.emplace_back(t.n(), d, std::move(cells));
  }
  return out;
}

FlipGraph enumerate_triangulations(int n, int d, unsigned workers) {
  if (d < 2 || n < d + 1) throw std::invalid_argument("enumerate_triangulations: need n > d >= 2");
  const ParamVector params = ParamVector::standard(n, d);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);

  FlipGraph graph;
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, MaskVectorHash> index;
  graph.triangulations.push_back(placing_triangulation(params, order));
  index.emplace(masks_of(graph.triangulations.front()), 0);

  std::size_t level_begin = 0;
  while (level_begin < graph.triangulations.size()) {
    const std::size_t level_end = graph.triangulations.size();
    std::vector<std::vector<Triangulation>> neighbours(level_end - level_begin);
    parallel_for(neighbours.size(), workers,
                 [&](std::size_t i) { neighbours[i] = bistellar_flips(graph.triangulations[level_begin + i]); });
    for (std::size_t i = 0; i < neighbours.size(); ++i) {
      const std::size_t from = level_begin + i;
      for (auto& nb : neighbours[i]) {
        auto key = masks_of(nb);
        auto it = index.find(key);
        std::size_t to;
        if (it == index.end()) {
          to = graph.triangulations.size();
          index.emplace(std::move(key), to);
          graph.triangulations.push_back(std::move(nb));
        } else {
          to = it->second;
        }
        if (from < to) graph.edges.emplace_back(from, to);
      }
    }
    level_begin = level_end;
  }
  return graph;
}

int ranking(const Subdivision& sub) {
  int r = 0;
  for (FaceSet c : sub.cells()) r += c.size() - sub.d() - 1;
  return r;
}

std::string SubdivisionType::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < sizes.size();) {
    std::size_t j = i;
    while (j < sizes.size() && sizes[j] == sizes[i]) ++j;
    if (i > 0) out += ",";
    if (j - i > 1) out += std::to_string(j - i);
    out += "C(" + std::to_string(sizes[i]) + "," + std::to_string(d) + ")";
    i = j;
  }
  return out + "]";
}

int SubdivisionType::ranking() const {
  int r = 0;
  for (int s : sizes) r += s - d - 1;
  return r;
}

SubdivisionType subdivision_type(const Subdivision& sub) {
  SubdivisionType type{sub.d(), {}};
  for (FaceSet c : sub.cells()) {
    if (c.size() > sub.d() + 1) type.sizes.push_back(c.size());
  }
  std::sort(type.sizes.rbegin(), type.sizes.rend());
  return type;
}

std::vector<SubdivisionType> types_of_ranking(int n, int d, int r) {
  std::vector<SubdivisionType> out;
  const int max_part = n - d - 2;
  std::vector<int> parts;
  // Partitions of r into non-increasing parts, each part p giving a cell of d+1+p vertices.
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      SubdivisionType t{d, {}};
      for (int p : parts) t.sizes.push_back(d + 1 + p);
      out.push_back(std::move(t));
      return;
    }
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  if (r >= 1 && max_part >= 1) rec(rec, r, max_part);
  return out;
}

std::vector<Subdivision> enumerate_subdivisions_by_type(const FlipGraph& graph, const SubdivisionType& type) {
  if (graph.triangulations.empty()) return {};
  const int n = graph.triangulations.front().n();
  const int d = graph.triangulations.front().d();
  if (type.d != d) throw std::invalid_argument("enumerate_subdivisions_by_type: dimension mismatch");
  for (int s : type.sizes) {
    if (s < d + 2 || s > n - 1) throw std::invalid_argument("enumerate_subdivisions_by_type: cell size out of range");
  }
  if (type.sizes.empty()) return graph.triangulations;

  const std::size_t count = graph.triangulations.size();
  const std::size_t words = (count + 63) / 64;

  struct Candidate {
    FaceSet cell;
    std::vector<FaceSet> pieces;
    std::vector<std::uint64_t> in;  // bitset over triangulations containing every piece
  };
  std::map<int, std::vector<Candidate>> candidates;
  for (int s : type.sizes) {
    if (candidates.count(s)) continue;
    auto& list = candidates[s];
    for (FaceSet cell : k_subsets(n, s)) {
      Candidate c{cell, pulling_triangulation(cell, d), std::vector<std::uint64_t>(words, 0)};
      bool any = false;
      for (std::size_t t = 0; t < count; ++t) {
        const auto& tri = graph.triangulations[t];
        if (std::all_of(c.pieces.begin(), c.pieces.end(), [&](FaceSet p) { return tri.contains(p); })) {
          c.in[t / 64] |= 1ull << (t % 64);
          any = true;
        }
      }
      if (any) list.push_back(std::move(c));
    }
  }

  std::set<Subdivision> found;
  std::vector<const Candidate*> chosen;
  auto rec = [&](auto&& self, std::size_t slot, std::size_t start, const std::vector<std::uint64_t>& mask) -> void {
    if (slot == type.sizes.size()) {
      for (std::size_t t = 0; t < count; ++t) {
        if (!((mask[t / 64] >> (t % 64)) & 1u)) continue;
        std::vector<FaceSet> cells;
        for (FaceSet c : graph.triangulations[t].cells()) {
          const bool replaced = std::any_of(chosen.begin(), chosen.end(), [&](const Candidate* cand) {
            return std::find(cand->pieces.begin(), cand->pieces.end(), c) != cand->pieces.end();
          });
          if (!replaced) cells.push_back(c);
        }
        for (const Candidate* cand : chosen) cells.push_back(cand->cell);
        found.emplace(n, d, std::move(cells));
      }
      return;
    }
    const int s = type.sizes[slot];
    const auto& list = candidates[s];
    const bool same_as_previous = slot > 0 && type.sizes[slot - 1] == s;
    for (std::size_t i = same_as_previous ? start : 0; i < list.size(); ++i) {
      const Candidate& c = list[i];
      const bool overlaps = std::any_of(chosen.begin(), chosen.end(), [&](const Candidate* other) {
        return std::any_of(c.pieces.begin(), c.pieces.end(), [&](FaceSet p) {
          return std::find(other->pieces.begin(), other->pieces.end(), p) != other->pieces.end();
        });
      });
      if (overlaps) continue;
      std::vector<std::uint64_t> next(words);
      bool any = false;
      for (std::size_t w = 0; w < words; ++w) {
        next[w] = mask[w] & c.in[w];
        any = any || next[w] != 0;
      }
      if (!any) continue;
      chosen.push_back(&c);
      self(self, slot + 1, i + 1, next);
      chosen.pop_back();
    }
  };
  std::vector<std::uint64_t> all(words, ~0ull);
  if (count % 64 != 0) all.back() = (1ull << (count % 64)) - 1;
  rec(rec, 0, 0, all);

  // Keep only exact matches of the requested type (merging never produces other types, but the
  // check keeps the contract explicit).
  std::vector<Subdivision> out;
  for (const auto& s : found) {
    if (subdivision_type(s) == type) out.push_back(s);
  }
  return out;
}

std::vector<Subdivision> enumerate_all_subdivisions(const FlipGraph& graph) {
  if (graph.triangulations.empty()) return {};
  const int n = graph.triangulations.front().n();
  const int d = graph.triangulations.front().d();
  std::vector<Subdivision> out = graph.triangulations;
  for (int r = 1; r <= n - d - 1; ++r) {
    std::size_t produced = 0;
    for (const auto& type : types_of_ranking(n, d, r)) {
      auto subs = enumerate_subdivisions_by_type(graph, type);
      produced += subs.size();
      out.insert(out.end(), subs.begin(), subs.end());
    }
    if (produced == 0) break;
  }
  if (n > d + 1) out.push_back(Subdivision::trivial(n, d));
  return out;
}

std::vector<Subdivision> polygon_dissections(int n) {
  if (n < 3) throw std::invalid_argument("polygon_dissections: need n >= 3");
  std::vector<std::pair<int, int>> diagonals;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      if (!(i == 1 && j == n)) diagonals.emplace_back(i, j);
  const auto crosses = [](std::pair<int, int> a, std::pair<int, int> b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
  };

  std::vector<Subdivision> out;
  std::vector<std::pair<int, int>> chosen;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (next == diagonals.size()) {
      std::vector<FaceSet> cells{FaceSet::full(n)};
      for (auto [i, j] : chosen) {
        auto it = std::find_if(cells.begin(), cells.end(), [&](FaceSet c) { return c.contains(i) && c.contains(j); });
        FaceSet inner;
        FaceSet outer;
        for (int v : it->indices()) {
          if (v >= i && v <= j) inner = inner.with(v);
          if (v <= i || v >= j) outer = outer.with(v);
        }
        *it = inner;
        cells.push_back(outer);
      }
      out.emplace_back(n, 2, std::move(cells));
      return;
    }
    self(self, next + 1);
    const auto diag = diagonals[next];
    if (std::none_of(chosen.begin(), chosen.end(), [&](auto other) { return crosses(diag, other); })) {
      chosen.push_back(diag);
      self(self, next + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool refines(const Subdivision& a, const Subdivision& b) {
  return std::all_of(a.cells().begin(), a.cells().end(), [&](FaceSet c) {
    return std::any_of(b.cells().begin(), b.cells().end(), [&](FaceSet big) { return c.is_subset_of(big); });
  });
}

std::size_t BauesPoset::top() const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].cells().size() == 1 && elements[i].cells().front() == FaceSet::full(n)) return i;
  }
  return elements.size();
}

std::vector<std::size_t> BauesPoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < size() && minimal; ++j) minimal = !(j != i && leq[j][i]);
    if (minimal) out.push_back(i);
  }
  return out;
}

bool BauesPoset::is_partial_order() const {
  const std::size_t m = size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!leq[i][i]) return false;
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) return false;
      if (!leq[i][j]) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (leq[j][k] && !leq[i][k]) return false;
      }
    }
  }
  return true;
}

BauesPoset BauesPoset::restricted(const std::vector<std::size_t>& keep) const {
  BauesPoset out;
  out.n = n;
  out.d = d;
  out.d_prime = d_prime;
  for (std::size_t i : keep) {
    out.elements.push_back(elements[i]);
    if (!coherent.empty()) out.coherent.push_back(coherent[i]);
  }
  out.leq.assign(keep.size(), std::vector<bool>(keep.size(), false));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) out.leq[a][b] = leq[keep[a]][keep[b]];
  return out;
}

BauesPoset BauesPoset::proper_part() const {
  std::vector<std::size_t> keep;
  const std::size_t t = top();
  for (std::size_t i = 0; i < size(); ++i) {
    if (i != t) keep.push_back(i);
  }
  return restricted(keep);
}

BauesPoset enumerate_baues_poset(int n, int d, int d_prime) {
  check_projection(n, d, d_prime);
  std::vector<Subdivision> all;
  if (d == 2) {
    if (n > 12) throw std::invalid_argument("enumerate_baues_poset: n too large for dissection enumeration");
    all = polygon_dissections(n);
  } else {
    if (n > 9) throw std::invalid_argument("enumerate_baues_poset: n too large for the subdivision census");
    all = enumerate_all_subdivisions(enumerate_triangulations(n, d, default_workers()));
  }
  BauesPoset poset;
  poset.n = n;
  poset.d = d;
  poset.d_prime = d_prime;
  for (auto& s : all) {
    if (is_pi_induced(s, d_prime)) poset.elements.push_back(std::move(s));
  }
  std::sort(poset.elements.begin(), poset.elements.end(), [](const Subdivision& a, const Subdivision& b) {
    const int ra = ranking(a);
    const int rb = ranking(b);
    return ra != rb ? ra < rb : a < b;
  });
  const std::size_t m = poset.elements.size();
  poset.leq.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) poset.leq[i][j] = refines(poset.elements[i], poset.elements[j]);
  return poset;
}

EulerCharacteristic order_complex_euler(const std::vector<std::vector<bool>>& less) {
  const std::size_t m = less.size();
  // Process elements in a linear extension: fewer elements below comes first.
  std::vector<std::size_t> below(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (less[j][i]) ++below[i];
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  // g[i] = Σ_k (−1)^k (#chains with k+1 elements whose maximum is i) = 1 − Σ_{j<i} g[j].
  std::vector<long long> g(m, 0);
  long long chi = 0;
  for (std::size_t i : order) {
    long long value = 1;
    for (std::size_t j = 0; j < m; ++j)
      if (less[j][i]) value -= g[j];
    g[i] = value;
    chi += value;
  }
  return {chi, chi - 1};
}

EulerCharacteristic order_complex_euler(const BauesPoset& poset) {
  std::vector<std::vector<bool>> less = poset.leq;
  for (std::size_t i = 0; i < less.size(); ++i) less[i][i] = false;
  return order_complex_euler(less);
}

bool has_good_link(const Triangulation& t, int v) {
  const FaceSet ground = FaceSet::full(t.n()).without(v);
  for (FaceSet c : t.cells()) {
    if (!c.contains(v)) continue;
    if (!gale_evenness_is_face_within(c.without(v), ground, t.d())) return false;
  }
  return true;
}

std::vector<int> good_link_vertices(const Triangulation& t) {
  std::vector<int> out;
  for (int v = 1; v <= t.n(); ++v) {
    if (has_good_link(t, v)) out.push_back(v);
  }
  return out;
}

namespace {

Subdivision relabel(const Subdivision& s, const std::vector<int>& image) {
  std::vector<FaceSet> cells;
  for (FaceSet c : s.cells()) {
    FaceSet mapped;
    for (int v : c.indices()) mapped = mapped.with(image[static_cast<std::size_t>(v)]);
    cells.push_back(mapped);
  }
  return Subdivision(s.n(), s.d(), std::move(cells));
}

}  // namespace

std::vector<std::size_t> symmetry_orbits(const std::vector<Triangulation>& triangulations) {
  const std::size_t m = triangulations.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  if (m == 0) return parent;
  const int n = triangulations.front().n();
  const int d = triangulations.front().d();

  std::vector<std::vector<int>> generators;
  std::vector<int> reversal(static_cast<std::size_t>(n + 1));
  for (int i = 1; i <= n; ++i) reversal[static_cast<std::size_t>(i)] = n + 1 - i;
  generators.push_back(reversal);
  if (d % 2 == 0) {
    std::vector<int> shift(static_cast<std::size_t>(n + 1));
    for (int i = 1; i <= n; ++i) shift[static_cast<std::size_t>(i)] = i % n + 1;
    generators.push_back(shift);
  }

  std::map<Subdivision, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(triangulations[i], i);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& g : generators) {
      auto it = index.find(relabel(triangulations[i], g));
      if (it == index.end()) throw std::logic_error("symmetry_orbits: triangulation set not closed under symmetry");
      parent[find(i)] = find(it->second);
    }
  }
  std::map<std::size_t, std::size_t> ids;
  std::vector<std::size_t> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = ids.emplace(find(i), ids.size()).first->second;
  return out;
}

std::size_t symmetry_orbit_count(const std::vector<Triangulation>& triangulations) {
  const auto ids = symmetry_orbits(triangulations);
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

Subdivision parse_subdivision(std::string_view line, int n, int d) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  if (line.empty()) throw std::invalid_argument("empty triangulation line");
  const char sep = (n >= 10 || line.find(';') != std::string_view::npos) ? ';' : ',';
  std::vector<FaceSet> cells;
  std::size_t start = 0;
  while (start <= line.size()) {
    const auto end = line.find(sep, start);
    const auto piece = line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    const FaceSet cell = parse_face(piece);
    if (!cell.is_subset_of(FaceSet::full(n))) throw std::invalid_argument("cell has a vertex outside 1..n");
    if (cell.size() < d + 1) throw std::invalid_argument("cell has fewer than d+1 vertices");
    cells.push_back(cell);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return Subdivision(n, d, std::move(cells));
}

std::string format_subdivision(const Subdivision& sub) {
  std::vector<FaceSet> cells = sub.cells();
  std::sort(cells.begin(), cells.end(), lex_less);
  std::string out;
  for (FaceSet c : cells) {
    if (!out.empty()) out += sub.n() >= 10 ? ";" : ",";
    out += format_face(c, sub.n());
  }
  return out;
}

}  // namespace cyclic
