#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace erasurelab {

/// A field symbol in canonical integer encoding. For GF(p^m) the base-p digits
/// of `value` are the coefficients of the residue polynomial, lowest first.
struct Element {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

struct FieldSpec {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  // Monic irreducible of degree m over GF(p), lowest coefficient first and
  // including the leading 1. Empty for prime fields.
  std::vector<std::uint32_t> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// GF(q) for prime powers q <= 2^16. Copies share one immutable table set, so
/// a Field is cheap to pass by value and safe to use from many threads.
class Field {
 public:
  /// Throws NotPrimePower, BadParameters (q < 2) or TooLarge (q > 65536).
  static Field make(std::uint32_t q);

  const FieldSpec& spec() const noexcept;
  std::uint32_t q() const noexcept { return spec().q; }
  std::uint32_t characteristic() const noexcept { return spec().p; }
  std::uint32_t degree() const noexcept { return spec().m; }

  Element zero() const noexcept { return Element{0}; }
  Element one() const noexcept { return Element{1}; }

  /// Validating conversion from a canonical encoding.
  Element element(std::uint64_t value) const;
  bool contains(Element x) const noexcept { return x.value < q(); }

  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element mul(Element a, Element b) const noexcept;
  Element div(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const noexcept;

  /// Smallest-encoded element of multiplicative order q-1.
  Element primitive() const noexcept;
  /// Multiplicative order; throws ZeroElement for 0.
  std::uint64_t order(Element x) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.t_ == b.t_ || a.q() == b.q();
  }

 private:
  struct Tables;
  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Returns {p, m} with q = p^m, or {0, 0} when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q) noexcept;

/// Smallest prime power >= n (n >= 2 gives at least 2).
std::uint32_t smallest_prime_power_at_least(std::uint64_t n);

}  // namespace erasurelab
