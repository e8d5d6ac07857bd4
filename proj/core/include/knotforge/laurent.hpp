#pragma once

#include <map>
#include <string>
#include <vector>

namespace knotforge {

/// Integer-coefficient polynomial in t and 1/t. Zero coefficients are never
/// stored; the zero polynomial has an empty coefficient map.
class Laurent {
public:
  Laurent() = default;

  static Laurent zero() { return Laurent{}; }
  static Laurent one() { return term(0, 1); }
  static Laurent term(int exponent, long long coefficient = 1);
  static Laurent from_coeffs(std::map<int, long long> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  long long coeff(int exponent) const;
  int min_exponent() const;  // requires a nonzero polynomial
  int max_exponent() const;
  const std::map<int, long long>& coeffs() const { return coeffs_; }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& rhs);
  Laurent& operator-=(const Laurent& rhs);
  friend Laurent operator+(Laurent lhs, const Laurent& rhs) { return lhs += rhs; }
  friend Laurent operator-(Laurent lhs, const Laurent& rhs) { return lhs -= rhs; }
  friend Laurent operator*(const Laurent& lhs, const Laurent& rhs);
  bool operator==(const Laurent&) const = default;

  /// Multiply by t^shift.
  Laurent shifted(int shift) const;
  /// Substitute t -> 1/t.
  Laurent reflected() const;
  /// Unit-normal form: minimum exponent 0 and positive top coefficient.
  Laurent canonical() const;
  /// Exact evaluation at an integer point; requires min_exponent() >= 0.
  long long eval_at(long long t) const;

  std::string str() const;

private:
  std::map<int, long long> coeffs_;
};

/// Equality up to multiplication by units +-t^k, including the t -> 1/t
/// reflection; mirror images compare equal.
bool poly_equal_up_to_units(const Laurent& p, const Laurent& q);

/// Exact quotient in the Laurent ring; throws std::domain_error when the
/// division is not exact.
Laurent laurent_div_exact(const Laurent& p, const Laurent& q);

/// Determinant by fraction-free (Bareiss) elimination. Exact; sign is the
/// honest determinant sign, not a unit-normal form.
Laurent laurent_det(std::vector<std::vector<Laurent>> m);

}  // namespace knotforge
