#include "cyclic/presets.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cyclic {

namespace {

const Rational kBig(1000000);
const Rational kEps(1, 1000000);

RationalVector fixed(std::string_view name, int n, std::initializer_list<const char*> values) {
  if (static_cast<std::size_t>(n) != values.size()) {
    throw std::invalid_argument("preset " + std::string(name) + " needs n = " + std::to_string(values.size()));
  }
  RationalVector out;
  for (const char* v : values) out.push_back(parse_rational(v));
  return out;
}

RationalVector step1(int regime, int n) {
  if (n < 6) throw std::invalid_argument("step1 presets need n >= 6");
  RationalVector t(static_cast<std::size_t>(n));
  for (int i = 2; i <= 5; ++i) t[static_cast<std::size_t>(i - 1)] = i;
  if (regime == 1) {
    t[0] = -kBig;
    for (int i = 6; i <= n; ++i) t[static_cast<std::size_t>(i - 1)] = 5 + (i - 5) * kEps;
  } else {
    t[0] = 2 - kEps;
    for (int i = 6; i <= n; ++i) t[static_cast<std::size_t>(i - 1)] = kBig + (i - 6);
  }
  return t;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"standard", "lemma47-c95", "lemma47-c94", "lemma47-c93", "step1-regime1", "step1-regime2"};
}

RationalVector preset_values(std::string_view name, int n) {
  if (name == "standard") {
    RationalVector t;
    for (int i = 1; i <= n; ++i) t.emplace_back(i);
    return t;
  }
  if (name == "lemma47-c95") return fixed(name, n, {"0", "6", "7", "8", "9", "10", "11", "12", "30"});
  if (name == "lemma47-c94") return fixed(name, n, {"0", "1/20", "1/3", "4", "50", "60", "67", "68", "69"});
  if (name == "lemma47-c93") return fixed(name, n, {"1", "2", "3", "10/3", "23/6", "13/3", "14/3", "5", "6"});
  if (name == "step1-regime1") return step1(1, n);
  if (name == "step1-regime2") return step1(2, n);
  throw std::invalid_argument("unknown parameter preset: " + std::string(name));
}

RationalVector random_increasing(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> start(-20, 20);
  std::uniform_int_distribution<int> gap(1, 30);
  std::uniform_int_distribution<int> den(1, 6);
  const auto fraction = [&](int num) {
    Rational q(num, den(rng));
    q.canonicalize();
    return q;
  };
  RationalVector t;
  Rational x = fraction(start(rng));
  for (int i = 0; i < n; ++i) {
    t.push_back(x);
    x += fraction(gap(rng));
  }
  return t;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ParamVector resolve_params(std::string_view source, int n, int d) {
  const auto names = preset_names();
  if (std::find(names.begin(), names.end(), source) != names.end()) return ParamVector(preset_values(source, n), d);
  RationalVector t;
  if (std::ifstream probe{std::string(source)}; probe) {
    std::string text = read_text_file(std::string(source));
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) t.push_back(parse_rational(tok));
  } else {
    t = parse_rational_list(source);
  }
  if (static_cast<int>(t.size()) != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " parameters, got " + std::to_string(t.size()));
  }
  return ParamVector(std::move(t), d);
}

namespace {

bool blank_line(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

std::vector<Subdivision> read_subdivisions(std::string_view text, int n, int d) {
  std::vector<Subdivision> out;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank_line(lines[i])) continue;
    try {
      out.push_back(parse_subdivision(lines[i], n, d));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Subdivision> read_subdivision_file(const std::string& path, int n, int d) {
  return read_subdivisions(read_text_file(path), n, d);
}

std::pair<int, int> infer_shape(std::string_view text) {
  int n = 0;
  int smallest = kMaxVertices + 1;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank_line(lines[i])) continue;
    try {
      const bool wide = lines[i].find(';') != std::string::npos;
      const Subdivision s = parse_subdivision(lines[i], wide ? kMaxVertices : 9, 0);
      for (FaceSet c : s.cells()) {
        n = std::max(n, c.max());
        smallest = std::min(smallest, c.size());
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  if (n == 0) throw std::invalid_argument("no subdivisions in input");
  return {n, smallest - 1};
}

}  // namespace cyclic
