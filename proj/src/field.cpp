#include "erasurelab/field.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "erasurelab/errors.hpp"

namespace erasurelab {

namespace {

using Digits = std::vector<std::uint32_t>;

constexpr std::uint32_t kMaxFieldSize = 1u << 16;
constexpr std::uint32_t kAddTableLimit = 256;

Digits to_digits(std::uint32_t v, std::uint32_t p, std::uint32_t m) {
  Digits d(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Polynomials over GF(p), lowest coefficient first, no trailing zeros.
void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits poly_mod(Digits a, const Digits& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inv_mod_prime(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint32_t factor = a.back() * static_cast<std::uint64_t>(lead_inv) % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = static_cast<std::uint64_t>(factor) * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool has_root(const Digits& f, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
    if (acc == 0) return true;
  }
  return false;
}

// Monic f of degree m is irreducible over GF(p) iff it has no monic factor of
// degree 1..m/2. Degrees <= 3 reduce to a root test.
bool is_irreducible(const Digits& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m <= 1) return m == 1;
  if (has_root(f, p)) return false;
  if (m <= 3) return true;
  for (std::size_t d = 2; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Digits g(d + 1, 0);
      std::uint64_t v = low;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Digits smallest_irreducible(std::uint32_t p, std::uint32_t m) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t low = 0; low < count; ++low) {
    Digits f(m + 1, 0);
    std::uint64_t v = low;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  fail(ErrorKind::BadParameters, "no irreducible polynomial found");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

struct Field::Tables {
  FieldSpec spec;
  std::vector<std::uint32_t> exp;  // length 2(q-1)
  std::vector<std::uint32_t> log;  // log[0] unused
  std::vector<std::uint32_t> negation;
  std::vector<std::uint16_t> addition;  // q*q when q <= kAddTableLimit
  std::uint32_t primitive = 1;

  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t p = spec.p;
    if (spec.m == 1) return (a + b) % p;
    if (p == 2) return a ^ b;
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < spec.m; ++i) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  }

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t p = spec.p;
    if (spec.m == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    const Digits da = to_digits(a, p, spec.m), db = to_digits(b, p, spec.m);
    Digits prod(2 * spec.m, 0);
    for (std::uint32_t i = 0; i < spec.m; ++i)
      for (std::uint32_t j = 0; j < spec.m; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
    Digits r = poly_mod(prod, spec.modulus, p);
    r.resize(spec.m, 0);
    return from_digits(r, p);
  }

  std::uint32_t pow_slow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  }
};

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q) noexcept {
  if (q < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {static_cast<std::uint32_t>(q), 1};
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), m};
}

std::uint32_t smallest_prime_power_at_least(std::uint64_t n) {
  for (std::uint64_t q = std::max<std::uint64_t>(n, 2); q <= kMaxFieldSize; ++q)
    if (prime_power_decompose(q).first != 0) return static_cast<std::uint32_t>(q);
  fail(ErrorKind::TooLarge, "no supported field of size >= " + std::to_string(n));
}

Field Field::make(std::uint32_t q) {
  require(q >= 2, ErrorKind::BadParameters, "field size must be >= 2");
  require(q <= kMaxFieldSize, ErrorKind::TooLarge, "field size above 2^16 is unsupported");
  const auto [p, m] = prime_power_decompose(q);
  require(p != 0, ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");

  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const Tables>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(q); it != cache.end()) return Field(it->second);

  auto t = std::make_shared<Tables>();
  t->spec = FieldSpec{q, p, m, {}};
  if (m > 1) t->spec.modulus = smallest_irreducible(p, m);

  // Primitive element: v is primitive iff v^((q-1)/r) != 1 for every prime r | q-1.
  const auto factors = prime_factors(q - 1);
  for (std::uint32_t v = 1; v < q; ++v) {
    bool primitive = true;
    for (auto r : factors) {
      if (t->pow_slow(v, (q - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      t->primitive = v;
      break;
    }
  }

  t->exp.assign(2 * (q - 1), 0);
  t->log.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    t->exp[i] = t->exp[i + q - 1] = x;
    t->log[x] = i;
    x = t->mul_slow(x, t->primitive);
  }

  t->negation.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    const Digits d = to_digits(a, p, m);
    Digits n(m);
    for (std::uint32_t i = 0; i < m; ++i) n[i] = (p - d[i]) % p;
    t->negation[a] = from_digits(n, p);
  }
  if (q <= kAddTableLimit) {
    t->addition.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        t->addition[a * q + b] = static_cast<std::uint16_t>(t->add_slow(a, b));
  }

  std::shared_ptr<const Tables> shared = std::move(t);
  cache.emplace(q, shared);
  return Field(shared);
}

const FieldSpec& Field::spec() const noexcept { return t_->spec; }

Element Field::element(std::uint64_t value) const {
  require(value < q(), ErrorKind::BadParameters,
          "value " + std::to_string(value) + " outside " + name());
  return Element{static_cast<std::uint32_t>(value)};
}

Element Field::add(Element a, Element b) const noexcept {
  if (!t_->addition.empty()) return Element{t_->addition[a.value * q() + b.value]};
  return Element{t_->add_slow(a.value, b.value)};
}

Element Field::neg(Element a) const noexcept { return Element{t_->negation[a.value]}; }

Element Field::sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const noexcept {
  if (a.value == 0 || b.value == 0) return zero();
  return Element{t_->exp[t_->log[a.value] + t_->log[b.value]]};
}

Element Field::inv(Element a) const {
  require(a.value != 0, ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t l = t_->log[a.value];
  return Element{t_->exp[l == 0 ? 0 : (q() - 1) - l]};
}

Element Field::div(Element a, Element b) const {
  require(b.value != 0, ErrorKind::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

Element Field::pow(Element a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.value == 0) return zero();
  const std::uint64_t l = (static_cast<std::uint64_t>(t_->log[a.value]) * (e % (q() - 1))) % (q() - 1);
  return Element{t_->exp[l]};
}

Element Field::primitive() const noexcept { return Element{t_->primitive}; }

std::uint64_t Field::order(Element x) const {
  require(x.value != 0, ErrorKind::ZeroElement, "order of zero");
  const std::uint64_t n = q() - 1;
  return n / std::gcd<std::uint64_t>(t_->log[x.value], n);
}

std::string Field::name() const { return "GF(" + std::to_string(q()) + ")"; }

}  // namespace erasurelab
