#include "cyclic/lp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyclic {

void StrictSystem::add_strict(RationalVector row, std::string label) {
  if (row.size() != dimension_) throw std::invalid_argument("add_strict: row has wrong dimension");
  strict_.push_back(std::move(row));
  strict_labels_.push_back(std::move(label));
}

void StrictSystem::add_equality(RationalVector row, std::string label) {
  if (row.size() != dimension_) throw std::invalid_argument("add_equality: row has wrong dimension");
  equality_.push_back(std::move(row));
  equality_labels_.push_back(std::move(label));
}

namespace {

// Scales a nonzero vector to the primitive integer vector on the same ray.
RationalVector primitive(RationalVector v) {
  mpz_class den_lcm = 1;
  for (const auto& x : v) {
    if (x != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    const mpz_class scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) return v;
  const Rational factor(den_lcm, num_gcd);
  for (auto& x : v) x *= factor;
  return v;
}

// Full-tableau simplex for: min cᵀv subject to Av = b, v ≥ 0, starting from an identity basis
// formed by the last `rows` columns. Bland's rule guarantees termination.
struct Tableau {
  std::size_t rows;
  std::size_t cols;  // structural columns, rhs stored at index cols
  std::vector<RationalVector> t;
  RationalVector obj;  // reduced costs, obj[cols] = −objective
  std::vector<std::size_t> basis;

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = 1 / t[pr][pc];
    for (auto& x : t[pr]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || t[r][pc] == 0) continue;
      const Rational f = t[r][pc];
      for (std::size_t c = 0; c <= cols; ++c) {
        if (t[pr][c] != 0) t[r][c] -= f * t[pr][c];
      }
    }
    if (obj[pc] != 0) {
      const Rational f = obj[pc];
      for (std::size_t c = 0; c <= cols; ++c) {
        if (t[pr][c] != 0) obj[c] -= f * t[pr][c];
      }
    }
    basis[pr] = pc;
  }

  void optimize() {
    while (true) {
      std::size_t enter = cols;
      for (std::size_t c = 0; c < cols; ++c) {
        if (obj[c] < 0) {
          enter = c;
          break;
        }
      }
      if (enter == cols) return;
      std::size_t leave = rows;
      Rational best;
      for (std::size_t r = 0; r < rows; ++r) {
        if (t[r][enter] <= 0) continue;
        const Rational ratio = t[r][cols] / t[r][enter];
        if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows) throw std::logic_error("simplex: unbounded phase-one problem");
      pivot(leave, enter);
    }
  }
};

}  // namespace

FeasibilityResult solve_strict(const StrictSystem& system) {
  const std::size_t m = system.dimension();
  const auto& strict = system.strict_rows();
  const auto& eq = system.equality_rows();
  const std::size_t k = strict.size();
  const std::size_t e = eq.size();
  if (k == 0) return Witness{RationalVector(m, Rational(0))};

  // Columns: y (k), z+ (e), z- (e), artificials (m+1).
  const std::size_t art0 = k + 2 * e;
  Tableau tab;
  tab.rows = m + 1;
  tab.cols = art0 + m + 1;
  tab.t.assign(tab.rows, RationalVector(tab.cols + 1, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) tab.t[j][i] = strict[i][j];
    tab.t[m][i] = 1;
  }
  for (std::size_t l = 0; l < e; ++l) {
    for (std::size_t j = 0; j < m; ++j) {
      tab.t[j][k + l] = eq[l][j];
      tab.t[j][k + e + l] = -eq[l][j];
    }
  }
  for (std::size_t r = 0; r <= m; ++r) tab.t[r][art0 + r] = 1;
  tab.t[m][tab.cols] = 1;
  tab.basis.resize(tab.rows);
  for (std::size_t r = 0; r <= m; ++r) tab.basis[r] = art0 + r;

  tab.obj.assign(tab.cols + 1, Rational(0));
  for (std::size_t c = 0; c <= tab.cols; ++c) {
    Rational sum = 0;
    for (std::size_t r = 0; r < tab.rows; ++r) sum += tab.t[r][c];
    tab.obj[c] = (c >= art0 && c < tab.cols ? Rational(1) : Rational(0)) - sum;
  }
  tab.optimize();

  const Rational optimum = -tab.obj[tab.cols];
  if (optimum == 0) {
    RationalVector value(tab.cols, Rational(0));
    for (std::size_t r = 0; r < tab.rows; ++r) value[tab.basis[r]] = tab.t[r][tab.cols];
    Certificate cert;
    cert.y.assign(value.begin(), value.begin() + static_cast<std::ptrdiff_t>(k));
    cert.z.resize(e);
    for (std::size_t l = 0; l < e; ++l) cert.z[l] = value[k + l] - value[k + e + l];
    RationalVector joined = cert.y;
    joined.insert(joined.end(), cert.z.begin(), cert.z.end());
    joined = primitive(std::move(joined));
    std::copy(joined.begin(), joined.begin() + static_cast<std::ptrdiff_t>(k), cert.y.begin());
    std::copy(joined.begin() + static_cast<std::ptrdiff_t>(k), joined.end(), cert.z.begin());
    if (!verify_certificate(system, cert)) throw std::logic_error("solve_strict: certificate failed verification");
    return cert;
  }

  // Dual values u = c_B B^{-1}; the artificial columns of the tableau hold B^{-1}.
  RationalVector x(m, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    Rational u = 0;
    for (std::size_t r = 0; r < tab.rows; ++r) {
      if (tab.basis[r] >= art0) u += tab.t[r][art0 + j];
    }
    x[j] = -u;
  }
  x = primitive(std::move(x));
  if (!verify_witness(system, x)) throw std::logic_error("solve_strict: witness failed verification");
  return Witness{std::move(x)};
}

bool verify_witness(const StrictSystem& system, const RationalVector& x) {
  if (x.size() != system.dimension()) return false;
  for (const auto& row : system.strict_rows()) {
    if (!(dot(row, x) > 0)) return false;
  }
  for (const auto& row : system.equality_rows()) {
    if (dot(row, x) != 0) return false;
  }
  return true;
}

bool verify_certificate(const StrictSystem& system, const Certificate& c) {
  const auto& strict = system.strict_rows();
  const auto& eq = system.equality_rows();
  if (c.y.size() != strict.size() || c.z.size() != eq.size()) return false;
  Rational total = 0;
  for (const auto& y : c.y) {
    if (y < 0) return false;
    total += y;
  }
  if (!(total > 0)) return false;
  for (std::size_t j = 0; j < system.dimension(); ++j) {
    Rational sum = 0;
    for (std::size_t i = 0; i < strict.size(); ++i) sum += c.y[i] * strict[i][j];
    for (std::size_t l = 0; l < eq.size(); ++l) sum += c.z[l] * eq[l][j];
    if (sum != 0) return false;
  }
  return true;
}

bool verify(const StrictSystem& system, const FeasibilityResult& result) {
  return result.feasible() ? verify_witness(system, result.witness().x)
                           : verify_certificate(system, result.certificate());
}

std::string certificate_text(const StrictSystem& system, const FeasibilityResult& result) {
  std::ostringstream out;
  out << "unknowns " << system.dimension() << "\n";
  const auto& strict = system.strict_rows();
  const auto& eq = system.equality_rows();
  for (std::size_t i = 0; i < strict.size(); ++i) {
    out << "strict " << i << ": " << to_string(strict[i]) << " > 0";
    if (!system.strict_labels()[i].empty()) out << "  # " << system.strict_labels()[i];
    out << "\n";
  }
  for (std::size_t l = 0; l < eq.size(); ++l) {
    out << "equality " << l << ": " << to_string(eq[l]) << " = 0";
    if (!system.equality_labels()[l].empty()) out << "  # " << system.equality_labels()[l];
    out << "\n";
  }
  if (result.feasible()) {
    out << "witness x = " << to_string(result.witness().x) << "\n";
  } else {
    const auto& c = result.certificate();
    out << "certificate y = " << to_string(c.y) << "\n";
    if (!c.z.empty()) out << "equality multipliers z = " << to_string(c.z) << "\n";
    out << "support:";
    for (std::size_t i = 0; i < c.y.size(); ++i) {
      if (c.y[i] != 0) out << " " << i;
    }
    out << "\n";
  }
  out << (verify(system, result) ? "verified\n" : "NOT VERIFIED\n");
  return out.str();
}

}  // namespace cyclic
