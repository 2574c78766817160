#include "erasurelab/poly.hpp"

#include <algorithm>

#include "erasurelab/errors.hpp"

namespace erasurelab {

namespace {

void check_same_field(const Poly& a, const Poly& b) {
  require(a.field() == b.field(), ErrorKind::FieldMismatch,
          a.field().name() + " vs " + b.field().name());
}

}  // namespace

Poly::Poly(Field field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_)
    require(field_.contains(c), ErrorKind::BadParameters, "coefficient outside " + field_.name());
  canonicalize();
}

Poly Poly::from_values(Field field, std::span<const std::uint32_t> values) {
  std::vector<Element> c;
  c.reserve(values.size());
  for (auto v : values) c.push_back(field.element(v));
  return Poly(std::move(field), std::move(c));
}

Poly Poly::monomial(Field field, std::size_t degree, Element c) {
  std::vector<Element> coeffs(degree + 1);
  coeffs[degree] = c;
  return Poly(std::move(field), std::move(coeffs));
}

std::vector<std::uint32_t> Poly::values() const {
  std::vector<std::uint32_t> out;
  out.reserve(coeffs_.size());
  for (auto c : coeffs_) out.push_back(c.value);
  return out;
}

void Poly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const Field& f = a.field_;
  std::vector<Element> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const Field& f = a.field_;
  std::vector<Element> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const Field& f = a.field_;
  if (a.is_zero() || b.is_zero()) return Poly::zero(f);
  std::vector<Element> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
  return Poly(f, std::move(c));
}

PolyDivision divmod(const Poly& dividend, const Poly& divisor) {
  check_same_field(dividend, divisor);
  require(!divisor.is_zero(), ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field& f = dividend.field();
  std::vector<Element> rem = dividend.coeffs();
  const auto& d = divisor.coeffs();
  if (rem.size() < d.size()) return {Poly::zero(f), dividend};

  std::vector<Element> quot(rem.size() - d.size() + 1);
  const Element lead_inv = f.inv(d.back());
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    const Element factor = f.mul(rem[shift + d.size() - 1], lead_inv);
    quot[shift] = factor;
    if (factor.value == 0) continue;
    for (std::size_t i = 0; i < d.size(); ++i)
      rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, d[i]));
  }
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

bool divides(const Poly& divisor, const Poly& dividend) {
  return divmod(dividend, divisor).remainder.is_zero();
}

Poly x_pow_minus_one(const Field& field, std::size_t n) {
  std::vector<Element> c(n + 1);
  c[0] = field.neg(field.one());
  c[n] = field.add(c[n], field.one());
  return Poly(field, std::move(c));
}

std::size_t zero_run(const Poly& p) {
  require(p.degree() > 0, ErrorKind::InvalidPolynomial, "degree must be positive");
  require(p.coeff(0).value != 0, ErrorKind::InvalidPolynomial, "constant coefficient must be nonzero");
  std::size_t best = 0, run = 0;
  for (const auto c : p.coeffs()) {
    if (c.value == 0) {
      ++run;
    } else {
      best = std::max(best, run);
      run = 0;
    }
  }
  return best;
}

}  // namespace erasurelab
