#include "cyclic/cyclic_core.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cyclic {

FaceSet::FaceSet(std::initializer_list<int> indices) {
  for (int i : indices) {
    if (i < 1 || i > kMaxVertices) throw std::out_of_range("FaceSet: vertex index out of range");
    mask_ |= 1u << (i - 1);
  }
}

FaceSet FaceSet::from_indices(std::span<const int> indices) {
  FaceSet f;
  for (int i : indices) {
    if (i < 1 || i > kMaxVertices) throw std::out_of_range("FaceSet: vertex index out of range");
    f = f.with(i);
  }
  return f;
}

std::vector<int> FaceSet::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(__builtin_ctz(m) + 1);
  return out;
}

bool lex_less(FaceSet a, FaceSet b) {
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

std::string format_face(FaceSet face, int n) {
  std::string out;
  for (int i : face.indices()) {
    if (n <= 9) {
      out += static_cast<char>('0' + i);
    } else {
      if (!out.empty()) out += ',';
      out += std::to_string(i);
    }
  }
  return out;
}

FaceSet parse_face(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return FaceSet{};

  std::vector<int> idx;
  if (text.find(',') != std::string_view::npos || text.find(' ') != std::string_view::npos) {
    int value = -1;
    for (char c : text) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        value = (value < 0 ? 0 : value * 10) + (c - '0');
      } else if (c == ',' || c == ' ') {
        if (value >= 0) idx.push_back(value);
        value = -1;
      } else {
        throw std::invalid_argument("bad character in face '" + std::string(text) + "'");
      }
    }
    if (value >= 0) idx.push_back(value);
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') {
        throw std::invalid_argument("bad character in face '" + std::string(text) + "'");
      }
      idx.push_back(c - '0');
    }
  }
  FaceSet f = FaceSet::from_indices(idx);
  if (f.size() != static_cast<int>(idx.size())) {
    throw std::invalid_argument("repeated vertex in face '" + std::string(text) + "'");
  }
  return f;
}

std::vector<FaceSet> k_subsets(int n, int k) {
  std::vector<FaceSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(FaceSet::from_indices(pick));
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

ParamVector::ParamVector(RationalVector t, int d) : t_(std::move(t)), d_(d) {
  const int n = static_cast<int>(t_.size());
  if (d_ < 1) throw std::invalid_argument("ParamVector: dimension must be positive");
  if (n < d_ + 1) throw std::invalid_argument("ParamVector: need n >= d+1");
  if (n > kMaxVertices) throw std::invalid_argument("ParamVector: too many points");
  for (std::size_t i = 1; i < t_.size(); ++i) {
    if (!(t_[i - 1] < t_[i])) throw std::invalid_argument("ParamVector: parameters must be strictly increasing");
  }
}

ParamVector ParamVector::standard(int n, int d) {
  RationalVector t;
  for (int i = 1; i <= n; ++i) t.emplace_back(i);
  return ParamVector(std::move(t), d);
}

std::string ParamVector::to_string() const { return cyclic::to_string(t_); }

std::string_view to_string(FaceClass c) {
  switch (c) {
    case FaceClass::Upper: return "upper";
    case FaceClass::Lower: return "lower";
    case FaceClass::Contour: return "contour";
  }
  return "?";
}

RationalMatrix moment_points(const ParamVector& params) {
  RationalMatrix m(static_cast<std::size_t>(params.d()), static_cast<std::size_t>(params.n()));
  for (int i = 1; i <= params.n(); ++i) {
    Rational power = 1;
    for (int k = 0; k < params.d(); ++k) {
      power *= params.at(i);
      m(static_cast<std::size_t>(k), static_cast<std::size_t>(i - 1)) = power;
    }
  }
  return m;
}

RationalMatrix homogenized_points(const ParamVector& params) {
  const RationalMatrix pts = moment_points(params);
  RationalMatrix h(pts.rows() + 1, pts.cols());
  for (std::size_t c = 0; c < pts.cols(); ++c) {
    h(0, c) = 1;
    for (std::size_t r = 0; r < pts.rows(); ++r) h(r + 1, c) = pts(r, c);
  }
  return h;
}

namespace {

void check_within(FaceSet s, int n) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
  if (!s.is_subset_of(FaceSet::full(n))) throw std::out_of_range("face has vertices outside 1..n");
}

// Splits a subset of an ordered ground set into contiguous blocks (by ground-set position)
// and reports the number of odd-length interior blocks and the length of the trailing block.
struct BlockStructure {
  int odd_interior = 0;
  int trailing = 0;
};

BlockStructure blocks_within(FaceSet s, FaceSet ground) {
  const auto order = ground.indices();
  BlockStructure b;
  int run = 0;
  bool run_started_at_first = false;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (s.contains(order[pos])) {
      if (run == 0) run_started_at_first = (pos == 0);
      ++run;
    } else {
      if (run > 0 && !run_started_at_first && run % 2 == 1) ++b.odd_interior;
      run = 0;
    }
  }
  if (run > 0) b.trailing = run;
  return b;
}

}  // namespace

bool gale_evenness_is_face_within(FaceSet s, FaceSet ground, int d) {
  if (!s.is_subset_of(ground)) throw std::out_of_range("face is not inside the ground set");
  if (s.empty()) return true;
  if (s.size() > d) return false;
  return blocks_within(s, ground).odd_interior <= d - s.size();
}

bool gale_evenness_is_face(FaceSet s, int n, int d) {
  check_within(s, n);
  return gale_evenness_is_face_within(s, FaceSet::full(n), d);
}

std::vector<FaceSet> enumerate_facets(int n, int d) {
  if (!(n > d && d >= 1)) throw std::invalid_argument("enumerate_facets: need n > d >= 1");
  std::vector<FaceSet> out;
  for (FaceSet s : k_subsets(n, d)) {
    if (gale_evenness_is_face(s, n, d)) out.push_back(s);
  }
  return out;
}

std::vector<FaceSet> cell_facets(FaceSet cell, int d) {
  std::vector<FaceSet> out;
  const auto members = cell.indices();
  const int m = static_cast<int>(members.size());
  for (FaceSet rel : k_subsets(m, d)) {
    FaceSet s;
    for (int p : rel.indices()) s = s.with(members[static_cast<std::size_t>(p - 1)]);
    if (gale_evenness_is_face_within(s, cell, d)) out.push_back(s);
  }
  return out;
}

FaceClass classify_facet_at(FaceSet s, const ParamVector& params) {
  const int n = params.n();
  const int d = params.d();
  check_within(s, n);
  if (s.size() != d || !gale_evenness_is_face(s, n, d)) {
    throw std::invalid_argument("classify_facet: not a facet");
  }
  // Affine functional a.x + b vanishing on the facet: null space of rows (v_i, 1).
  const RationalMatrix pts = moment_points(params);
  RationalMatrix sys(static_cast<std::size_t>(d), static_cast<std::size_t>(d + 1));
  std::size_t r = 0;
  for (int i : s.indices()) {
    for (int k = 0; k < d; ++k) sys(r, static_cast<std::size_t>(k)) = pts(static_cast<std::size_t>(k), static_cast<std::size_t>(i - 1));
    sys(r, static_cast<std::size_t>(d)) = 1;
    ++r;
  }
  const auto ns = null_space(sys);
  if (ns.size() != 1) throw std::logic_error("classify_facet: degenerate facet");
  const RationalVector& normal = ns.front();

  int outside = 1;
  while (s.contains(outside)) ++outside;
  Rational value = normal[static_cast<std::size_t>(d)];
  for (int k = 0; k < d; ++k) value += normal[static_cast<std::size_t>(k)] * pts(static_cast<std::size_t>(k), static_cast<std::size_t>(outside - 1));
  // The polytope sits on the side where the functional is positive after this sign flip,
  // so the flipped normal is minimized on the facet.
  const int inner_last = sgn(value) * sgn(normal[static_cast<std::size_t>(d - 1)]);
  if (inner_last == 0) throw std::logic_error("classify_facet: vertical facet");
  return inner_last > 0 ? FaceClass::Upper : FaceClass::Lower;
}

FaceClass classify_facet(FaceSet s, int n, int d) { return classify_facet_at(s, ParamVector::standard(n, d)); }

FaceClass classify_facet_by_parity(FaceSet s, int n, int d) {
  check_within(s, n);
  if (s.size() != d || !gale_evenness_is_face(s, n, d)) {
    throw std::invalid_argument("classify_facet: not a facet");
  }
  int trailing = 0;
  for (int v = n; v >= 1 && s.contains(v); --v) ++trailing;
  return trailing % 2 == 0 ? FaceClass::Upper : FaceClass::Lower;
}

FaceClass classify_face(FaceSet s, int n, int d) {
  check_within(s, n);
  if (!gale_evenness_is_face(s, n, d)) throw std::invalid_argument("classify_face: not a face");
  bool upper = false;
  bool lower = false;
  for (FaceSet f : enumerate_facets(n, d)) {
    if (!s.is_subset_of(f)) continue;
    (classify_facet(f, n, d) == FaceClass::Upper ? upper : lower) = true;
  }
  if (upper && !lower) return FaceClass::Upper;
  if (lower && !upper) return FaceClass::Lower;
  return FaceClass::Contour;
}

Rational vandermonde_volume(FaceSet s, const ParamVector& params) {
  check_within(s, params.n());
  if (s.size() != params.d() + 1) throw std::invalid_argument("vandermonde_volume: need d+1 vertices");
  const auto idx = s.indices();
  Rational vol = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) vol *= params.at(idx[j]) - params.at(idx[i]);
  return vol;
}

}  // namespace cyclic
