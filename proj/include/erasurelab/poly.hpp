#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "erasurelab/field.hpp"

namespace erasurelab {

/// Polynomial over a finite field, coefficients lowest degree first, kept in
/// canonical form (no trailing zeros; the zero polynomial has no coefficients).
class Poly {
 public:
  Poly(Field field, std::vector<Element> coeffs);

  static Poly from_values(Field field, std::span<const std::uint32_t> values);
  static Poly zero(Field field) { return Poly(std::move(field), {}); }
  static Poly monomial(Field field, std::size_t degree, Element c);

  const Field& field() const noexcept { return field_; }
  const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
  std::vector<std::uint32_t> values() const;

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  Element coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Element{}; }
  Element leading() const noexcept { return coeffs_.empty() ? Element{} : coeffs_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void canonicalize();
  Field field_;
  std::vector<Element> coeffs_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Exact long division; throws DivisionByZero for a zero divisor and
/// FieldMismatch for operands over different fields.
PolyDivision divmod(const Poly& dividend, const Poly& divisor);

/// True iff `divisor` divides `dividend` exactly.
bool divides(const Poly& divisor, const Poly& dividend);

/// X^n - 1 over `field`.
Poly x_pow_minus_one(const Field& field, std::size_t n);

/// Longest run of zero coefficients strictly between nonzero ones. Requires
/// p_0 != 0 and degree > 0, else InvalidPolynomial.
std::size_t zero_run(const Poly& p);

}  // namespace erasurelab
