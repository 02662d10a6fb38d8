#include "cyclic/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cyclic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational");

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = trim(s.substr(0, slash));
    const auto den = trim(s.substr(slash + 1));
    if (!is_integer_text(num) || !is_integer_text(den)) {
      throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
  }

  if (const auto dot_pos = s.find('.'); dot_pos != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot_pos);
    std::string_view frac_part = s.substr(dot_pos + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if (int_part.empty()) int_part = "0";
    if (!is_integer_text(int_part) || (!frac_part.empty() && !is_integer_text(frac_part)) ||
        (!frac_part.empty() && (frac_part.front() == '-' || frac_part.front() == '+'))) {
      throw std::invalid_argument("malformed decimal '" + std::string(s) + "'");
    }
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    mpz_class numerator = parse_integer(int_part) * scale;
    if (!frac_part.empty()) numerator += parse_integer(frac_part);
    if (negative) numerator = -numerator;
    Rational r(numerator, scale);
    r.canonicalize();
    return r;
  }

  if (!is_integer_text(s)) throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
  return Rational(parse_integer(s));
}

std::string to_string(const Rational& value) { return value.get_str(); }

RationalVector parse_rational_list(std::string_view text, char separator) {
  RationalVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(separator, start);
    const auto piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    out.push_back(parse_rational(piece));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string to_string(const RationalVector& values, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += separator;
    out += values[i].get_str();
  }
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace cyclic
