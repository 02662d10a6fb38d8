#include "cyclic/paths.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cyclic {

SignVector::SignVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < -1 || e > 1) throw std::invalid_argument("SignVector: entries must be -1, 0 or +1");
  }
}

SignVector SignVector::parse(std::string_view text) {
  std::vector<int> entries;
  for (char c : text) {
    switch (c) {
      case '+': entries.push_back(1); break;
      case '-': entries.push_back(-1); break;
      case '0': entries.push_back(0); break;
      case ' ':
      case ',': break;
      default: throw std::invalid_argument(std::string("SignVector: bad character '") + c + "'");
    }
  }
  return SignVector(std::move(entries));
}

std::string SignVector::to_string() const {
  std::string out;
  for (int e : entries_) out += e > 0 ? '+' : (e < 0 ? '-' : '0');
  return out;
}

bool SignVector::leq(const SignVector& other) const {
  if (size() != other.size()) throw std::invalid_argument("SignVector::leq: length mismatch");
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries_[i] != other.entries_[i] && other.entries_[i] != 0) return false;
  }
  return true;
}

int m_of_lambda(const SignVector& lambda) {
  int m = 0;
  int last = -1;  // position of the previous nonzero entry
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) {
      ++m;
      continue;
    }
    if (last >= 0) {
      const int zeros = static_cast<int>(i) - last - 1;
      const bool same = lambda[i] == lambda[static_cast<std::size_t>(last)];
      if (!same && zeros % 2 == 0) ++m;
      if (same && zeros % 2 == 1) ++m;
    }
    last = static_cast<int>(i);
  }
  return m;
}

int sign_blocks(const SignVector& lambda) {
  int blocks = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) throw std::invalid_argument("sign_blocks: vector has zero entries");
    if (i == 0 || lambda[i] != lambda[i - 1]) ++blocks;
  }
  return blocks;
}

bool CellularString::is_tight() const {
  return std::all_of(faces.begin(), faces.end(), [](FaceSet f) { return f.size() == 2; });
}

std::string CellularString::to_string(int n) const {
  std::string out;
  if (is_tight()) {
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (i == 0) out += std::to_string(faces[i].min());
      out += "-" + std::to_string(faces[i].max());
    }
    return out;
  }
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i) out += "|";
    out += format_face(faces[i], n);
  }
  return out;
}

bool is_valid_string(const CellularString& s, int n, int d) {
  if (s.faces.empty()) return false;
  if (s.faces.front().min() != 1 || s.faces.back().max() != n) return false;
  for (std::size_t i = 0; i < s.faces.size(); ++i) {
    const FaceSet f = s.faces[i];
    if (f.size() < 2 || !f.is_subset_of(FaceSet::full(n)) || !gale_evenness_is_face(f, n, d)) return false;
    if (i + 1 < s.faces.size() && f.max() != s.faces[i + 1].min()) return false;
  }
  return true;
}

SignVector lambda_of_string(const CellularString& s, int n) {
  if (n < 3) throw std::invalid_argument("lambda_of_string: need n >= 3");
  std::vector<int> entries(static_cast<std::size_t>(n - 2), 1);
  for (std::size_t k = 0; k < s.faces.size(); ++k) {
    const FaceSet f = s.faces[k];
    for (int v : f.indices()) {
      if (v == 1 || v == n) continue;
      const bool endpoint = v == f.min() || v == f.max();
      entries[static_cast<std::size_t>(v - 2)] = endpoint ? -1 : 0;
    }
  }
  return SignVector(std::move(entries));
}

namespace {

std::vector<CellularString> strings_from_faces(int n, const std::vector<FaceSet>& faces) {
  std::map<int, std::vector<FaceSet>> by_min;
  for (FaceSet f : faces) by_min[f.min()].push_back(f);
  for (auto& [k, list] : by_min) std::sort(list.begin(), list.end(), lex_less);
  std::vector<CellularString> out;
  CellularString current;
  auto rec = [&](auto&& self, int at) -> void {
    if (at == n) {
      out.push_back(current);
      return;
    }
    auto it = by_min.find(at);
    if (it == by_min.end()) return;
    for (FaceSet f : it->second) {
      current.faces.push_back(f);
      self(self, f.max());
      current.faces.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

std::vector<CellularString> enumerate_cellular_strings(int n, int d) {
  if (!(n > d && d >= 1)) throw std::invalid_argument("enumerate_cellular_strings: need n > d >= 1");
  std::vector<FaceSet> faces;
  for (int k = 2; k <= d; ++k) {
    for (FaceSet f : k_subsets(n, k)) {
      if (gale_evenness_is_face(f, n, d)) faces.push_back(f);
    }
  }
  return strings_from_faces(n, faces);
}

std::vector<CellularString> enumerate_monotone_paths(int n, int d) {
  if (!(n > d && d >= 1)) throw std::invalid_argument("enumerate_monotone_paths: need n > d >= 1");
  std::vector<FaceSet> edges;
  for (FaceSet f : k_subsets(n, 2)) {
    if (gale_evenness_is_face(f, n, d)) edges.push_back(f);
  }
  return strings_from_faces(n, edges);
}

bool string_refines(const CellularString& a, const CellularString& b) {
  return std::all_of(a.faces.begin(), a.faces.end(), [&](FaceSet f) {
    return std::any_of(b.faces.begin(), b.faces.end(), [&](FaceSet g) { return f.is_subset_of(g); });
  });
}

bool is_coherent_string(const SignVector& lambda, int d) { return m_of_lambda(lambda) <= d - 2; }

StrictSystem string_coherence_system(const CellularString& s, const ParamVector& params) {
  const int n = params.n();
  const int d = params.d();
  if (!is_valid_string(s, n, d)) throw std::invalid_argument("string_coherence_system: invalid cellular string");
  StrictSystem sys(static_cast<std::size_t>(d));
  const auto powers = [&](int v) {
    RationalVector p(static_cast<std::size_t>(d));
    Rational x = 1;
    for (int k = 0; k < d; ++k) {
      x *= params.at(v);
      p[static_cast<std::size_t>(k)] = x;
    }
    return p;
  };
  for (FaceSet f : s.faces) {
    const int p = f.min();
    const int q = f.max();
    const Rational& tp = params.at(p);
    const Rational& tq = params.at(q);
    const RationalVector pp = powers(p);
    const RationalVector pq = powers(q);
    for (int j = 1; j <= n; ++j) {
      if (j == p || j == q) continue;
      const Rational& tj = params.at(j);
      const RationalVector pj = powers(j);
      RationalVector row(static_cast<std::size_t>(d));
      for (std::size_t k = 0; k < row.size(); ++k) row[k] = (tq - tp) * pj[k] - (tq - tj) * pp[k] - (tj - tp) * pq[k];
      const std::string label = std::to_string(j) + " vs chord " + std::to_string(p) + "-" + std::to_string(q);
      if (f.contains(j)) {
        sys.add_equality(std::move(row), label);
      } else {
        sys.add_strict(std::move(row), label);
      }
    }
  }
  return sys;
}

bool is_coherent_string_lp(const CellularString& s, const ParamVector& params) {
  return solve_strict(string_coherence_system(s, params)).feasible();
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t twice_partial_sum(std::uint64_t top, int d) {
  unsigned __int128 sum = 0;
  for (int j = 0; j <= d - 2; ++j) sum += binomial(top, static_cast<std::uint64_t>(j));
  sum *= 2;
  if (sum > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("path count overflow");
  return static_cast<std::uint64_t>(sum);
}

}  // namespace

std::uint64_t count_coherent_paths(int n, int d) {
  if (n < 3 || d < 2) throw std::invalid_argument("count_coherent_paths: need n >= 3, d >= 2");
  return twice_partial_sum(static_cast<std::uint64_t>(n - 3), d);
}

std::uint64_t path_count_upper_bound(int n, int d) {
  if (n < 3 || d < 2) throw std::invalid_argument("path_count_upper_bound: need n >= 3, d >= 2");
  return twice_partial_sum(binomial(static_cast<std::uint64_t>(n), 3) - 1, d);
}

std::vector<SignVector> zonotope_face_poset(int n, int d) {
  if (n < 1 || n > 16) throw std::invalid_argument("zonotope_face_poset: need 1 <= n <= 16");
  std::vector<SignVector> out;
  std::vector<int> entries(static_cast<std::size_t>(n), 1);
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int i = 0; i < n; ++i) {
      entries[static_cast<std::size_t>(i)] = static_cast<int>(c % 3) == 0 ? 1 : (c % 3 == 1 ? -1 : 0);
      c /= 3;
    }
    SignVector v(entries);
    if (m_of_lambda(v) <= d - 1) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool coherent_strings_match_zonotope(int n, int d) {
  std::vector<CellularString> strings;
  std::vector<SignVector> lambdas;
  for (auto& s : enumerate_cellular_strings(n, d)) {
    SignVector l = lambda_of_string(s, n);
    if (!is_coherent_string(l, d)) continue;
    strings.push_back(std::move(s));
    lambdas.push_back(std::move(l));
  }
  std::vector<SignVector> sorted = lambdas;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted != zonotope_face_poset(n - 2, d - 1)) return false;
  for (std::size_t i = 0; i < strings.size(); ++i)
    for (std::size_t j = 0; j < strings.size(); ++j)
      if (string_refines(strings[i], strings[j]) != lambdas[i].leq(lambdas[j])) return false;
  return true;
}

namespace {

RationalVector homogenized_vertex(const RationalMatrix& v, int i) {
  RationalVector out{Rational(1)};
  for (std::size_t r = 0; r < v.rows(); ++r) out.push_back(v(r, static_cast<std::size_t>(i)));
  return out;
}

}  // namespace

bool is_extreme_vertex(const RationalMatrix& vertices, int index) {
  StrictSystem sys(vertices.rows());
  const RationalVector x = vertices.column(static_cast<std::size_t>(index));
  for (std::size_t j = 0; j < vertices.cols(); ++j) {
    if (static_cast<int>(j) == index) continue;
    RationalVector row = vertices.column(j);
    for (std::size_t k = 0; k < row.size(); ++k) row[k] -= x[k];
    sys.add_strict(std::move(row));
  }
  return solve_strict(sys).feasible();
}

GeneralPolytope::GeneralPolytope(RationalMatrix vertices) : vertices_(std::move(vertices)) {
  const int d = dimension();
  const int nv = vertex_count();
  if (d < 1 || nv < d + 1) throw std::invalid_argument("GeneralPolytope: need at least d+1 vertices");
  RationalMatrix h(static_cast<std::size_t>(d + 1), static_cast<std::size_t>(nv));
  for (int j = 0; j < nv; ++j) {
    const auto col = homogenized_vertex(vertices_, j);
    for (int r = 0; r <= d; ++r) h(static_cast<std::size_t>(r), static_cast<std::size_t>(j)) = col[static_cast<std::size_t>(r)];
  }
  if (rank(h) != static_cast<std::size_t>(d + 1)) throw std::invalid_argument("GeneralPolytope: not full-dimensional");
  for (int j = 0; j < nv; ++j) {
    if (!is_extreme_vertex(vertices_, j)) throw std::invalid_argument("GeneralPolytope: vertex " + std::to_string(j + 1) + " is not extreme");
  }

  std::set<std::vector<int>> facets;
  for (FaceSet s : k_subsets(nv, d)) {
    RationalMatrix sys(static_cast<std::size_t>(d), static_cast<std::size_t>(d + 1));
    std::size_t r = 0;
    for (int i : s.indices()) {
      for (int c = 0; c <= d; ++c) sys(r, static_cast<std::size_t>(c)) = h(static_cast<std::size_t>(c), static_cast<std::size_t>(i - 1));
      ++r;
    }
    const auto ns = null_space(sys);
    if (ns.size() != 1) continue;
    bool pos = false;
    bool neg = false;
    std::vector<int> on;
    for (int j = 0; j < nv; ++j) {
      Rational value = 0;
      for (int c = 0; c <= d; ++c) value += ns[0][static_cast<std::size_t>(c)] * h(static_cast<std::size_t>(c), static_cast<std::size_t>(j));
      if (value > 0) pos = true;
      if (value < 0) neg = true;
      if (value == 0) on.push_back(j);
    }
    if (!(pos && neg)) facets.insert(std::move(on));
  }
  facets_.assign(facets.begin(), facets.end());

  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) {
      // An empty intersection of facets is the whole polytope.
      std::vector<int> common(static_cast<std::size_t>(nv));
      std::iota(common.begin(), common.end(), 0);
      bool first = true;
      for (const auto& f : facets_) {
        if (!std::binary_search(f.begin(), f.end(), u) || !std::binary_search(f.begin(), f.end(), v)) continue;
        if (first) {
          common = f;
          first = false;
        } else {
          std::vector<int> next;
          std::set_intersection(common.begin(), common.end(), f.begin(), f.end(), std::back_inserter(next));
          common = std::move(next);
        }
      }
      if (common == std::vector<int>{u, v}) edges_.emplace_back(u, v);
    }
  }
}

std::vector<std::vector<int>> monotone_paths(const GeneralPolytope& p, int direction) {
  if (direction < 0 || direction >= p.dimension()) throw std::invalid_argument("monotone_paths: bad direction");
  const int nv = p.vertex_count();
  const auto coord = [&](int v) { return p.vertices()(static_cast<std::size_t>(direction), static_cast<std::size_t>(v)); };
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v)
      if (coord(u) == coord(v)) throw std::invalid_argument("monotone_paths: direction is not generic");
  std::vector<std::vector<int>> up(static_cast<std::size_t>(nv));
  for (auto [u, v] : p.edges()) {
    if (coord(u) < coord(v)) {
      up[static_cast<std::size_t>(u)].push_back(v);
    } else {
      up[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  int lo = 0;
  int hi = 0;
  for (int v = 1; v < nv; ++v) {
    if (coord(v) < coord(lo)) lo = v;
    if (coord(v) > coord(hi)) hi = v;
  }
  for (auto& list : up) std::sort(list.begin(), list.end());
  std::vector<std::vector<int>> out;
  std::vector<int> current{lo};
  auto rec = [&](auto&& self, int at) -> void {
    if (at == hi) {
      out.push_back(current);
      return;
    }
    for (int next : up[static_cast<std::size_t>(at)]) {
      current.push_back(next);
      self(self, next);
      current.pop_back();
    }
  };
  rec(rec, lo);
  return out;
}

bool is_coherent_path(const GeneralPolytope& p, int direction, const std::vector<int>& path) {
  const int d = p.dimension();
  const int nv = p.vertex_count();
  const auto& x = p.vertices();
  const auto coord = [&](int v) { return x(static_cast<std::size_t>(direction), static_cast<std::size_t>(v)); };
  StrictSystem sys(static_cast<std::size_t>(d));
  for (std::size_t e = 0; e + 1 < path.size(); ++e) {
    const int u = path[e];
    const int v = path[e + 1];
    for (int w = 0; w < nv; ++w) {
      if (w == u || w == v) continue;
      RationalVector row(static_cast<std::size_t>(d));
      for (int k = 0; k < d; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        row[kk] = (coord(v) - coord(u)) * x(kk, static_cast<std::size_t>(w)) -
                  (coord(v) - coord(w)) * x(kk, static_cast<std::size_t>(u)) -
                  (coord(w) - coord(u)) * x(kk, static_cast<std::size_t>(v));
      }
      sys.add_strict(std::move(row));
    }
  }
  return solve_strict(sys).feasible();
}

std::vector<std::vector<int>> coherent_paths_of_general_polytope(const GeneralPolytope& p, int direction) {
  std::vector<std::vector<int>> out;
  for (auto& path : monotone_paths(p, direction)) {
    if (is_coherent_path(p, direction, path)) out.push_back(std::move(path));
  }
  return out;
}

RationalMatrix parse_matrix(std::string_view text) {
  std::vector<RationalVector> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    RationalVector row;
    std::string tok;
    while (fields >> tok) {
      try {
        row.push_back(parse_rational(tok));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": row length differs");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix file has no rows");
  return RationalMatrix::from_rows(rows);
}

}  // namespace cyclic
