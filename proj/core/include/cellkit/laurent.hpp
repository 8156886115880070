#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cellkit {

using Coefficient = std::int64_t;

/// Degree of a Laurent polynomial; std::nullopt stands for -infinity
/// (the degree of the zero polynomial).
using Degree = std::optional<int>;

/// Sparse Laurent polynomial in one variable v with exact integer
/// coefficients. Terms are kept sorted by exponent and zero coefficients
/// are never stored, so the empty term list is the zero polynomial.
///
/// Arithmetic is exact: any overflow of the 64-bit coefficient range throws
/// std::overflow_error instead of wrapping.
class LaurentPoly {
 public:
  struct Term {
    int exponent;
    Coefficient coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  /// The constant polynomial c.
  explicit LaurentPoly(Coefficient c);

  static LaurentPoly monomial(int exponent, Coefficient coeff = 1);
  /// v + v^-1
  static LaurentPoly v_plus_v_inverse();
  /// Builds from arbitrary (exponent, coefficient) pairs; duplicates are
  /// summed and zeros dropped.
  static LaurentPoly from_terms(std::vector<Term> terms);
  /// Builds from a dense coefficient run starting at exponent `low`.
  static LaurentPoly from_dense(int low, std::span<const Coefficient> coeffs);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Highest exponent with nonzero coefficient, nullopt for zero.
  Degree degree() const noexcept;
  /// Lowest exponent with nonzero coefficient, nullopt for zero.
  Degree min_degree() const noexcept;
  Coefficient coefficient(int exponent) const noexcept;

  /// Image under the ring involution v -> v^-1.
  LaurentPoly bar() const;
  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const;

  /// True when invariant under v -> v^-1.
  bool is_bar_invariant() const;
  bool has_nonnegative_coefficients() const noexcept;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(Coefficient c);
  /// this += c * v^shift * other, the workhorse of every basis conversion.
  LaurentPoly& add_scaled(const LaurentPoly& other, Coefficient c, int shift = 0);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, Coefficient c) { return a *= c; }
  friend LaurentPoly operator*(Coefficient c, LaurentPoly a) { return a *= c; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  /// Total order (by term list) so polynomials can key ordered containers.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  /// Human-readable form with ascending exponents, e.g. "v^-1 + v" or
  /// "1 - 2v^3"; the zero polynomial prints as "0".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

Coefficient checked_add(Coefficient a, Coefficient b);
Coefficient checked_mul(Coefficient a, Coefficient b);

}  // namespace cellkit
