#pragma once

#include "cyclic/rational.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace cyclic {

/// Homogeneous system: strict_rows·x > 0 and equality_rows·x = 0 over x ∈ ℚ^dimension.
class StrictSystem {
 public:
  explicit StrictSystem(std::size_t dimension = 0) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }

  void add_strict(RationalVector row, std::string label = {});
  void add_equality(RationalVector row, std::string label = {});

  const std::vector<RationalVector>& strict_rows() const { return strict_; }
  const std::vector<RationalVector>& equality_rows() const { return equality_; }
  const std::vector<std::string>& strict_labels() const { return strict_labels_; }
  const std::vector<std::string>& equality_labels() const { return equality_labels_; }

 private:
  std::size_t dimension_;
  std::vector<RationalVector> strict_;
  std::vector<RationalVector> equality_;
  std::vector<std::string> strict_labels_;
  std::vector<std::string> equality_labels_;
};

/// Point satisfying every row of the system.
struct Witness {
  RationalVector x;
};

/// Farkas alternative: y ≥ 0 on the strict rows with Σy > 0, multipliers z on the
/// equality rows, and yᵀR + zᵀE = 0.
struct Certificate {
  RationalVector y;
  RationalVector z;
};

class FeasibilityResult {
 public:
  FeasibilityResult(Witness w) : value_(std::move(w)) {}
  FeasibilityResult(Certificate c) : value_(std::move(c)) {}

  bool feasible() const { return std::holds_alternative<Witness>(value_); }
  const Witness& witness() const { return std::get<Witness>(value_); }
  const Certificate& certificate() const { return std::get<Certificate>(value_); }

 private:
  std::variant<Witness, Certificate> value_;
};

/// Exact decision by a rational simplex method with Bland's rule. Witnesses and
/// certificates are scaled to primitive integer vectors.
FeasibilityResult solve_strict(const StrictSystem& system);

bool verify_witness(const StrictSystem& system, const RationalVector& x);
bool verify_certificate(const StrictSystem& system, const Certificate& c);
/// Re-checks whichever alternative the result carries.
bool verify(const StrictSystem& system, const FeasibilityResult& result);

/// Human-readable listing of the rows followed by the witness or certificate entries.
std::string certificate_text(const StrictSystem& system, const FeasibilityResult& result);

}  // namespace cyclic
