#include "erasurelab/codes.hpp"

#include <algorithm>
#include <map>

#include "erasurelab/errors.hpp"

namespace erasurelab {

std::size_t ceil_div(std::size_t a, std::size_t b) noexcept { return (a + b - 1) / b; }

LinearCode::LinearCode(Matrix parity_check, Provenance provenance)
    : h_(std::move(parity_check)), provenance_(std::move(provenance)) {
  require(h_.rows() < h_.cols(), ErrorKind::BadParameters, "need n - k < n");
  require(rank(h_) == h_.rows(), ErrorKind::BadParameters, "parity-check matrix is not full rank");
}

ConstructionOneParams construction_one_params(std::size_t n, std::size_t b1, std::size_t b2,
                                              std::optional<std::uint32_t> q_override) {
  require(b2 >= 1 && b2 <= b1, ErrorKind::BadParameters, "need 1 <= b2 <= b1");
  require(b1 % b2 == 0, ErrorKind::DivisibilityViolation,
          "b2 = " + std::to_string(b2) + " does not divide b1 = " + std::to_string(b1));
  require(n >= b1 + b2 + 1, ErrorKind::LengthTooSmall, "need n >= b1 + b2 + 1");

  ConstructionOneParams p;
  p.n = n;
  p.b1 = b1;
  p.b2 = b2;
  p.ell = ceil_div(n, b1);
  if (q_override) {
    require(prime_power_decompose(*q_override).first != 0 && *q_override >= p.ell && *q_override <= (1u << 16),
            ErrorKind::BadFieldOverride,
            "q = " + std::to_string(*q_override) + " is not a prime power >= " + std::to_string(p.ell));
    p.qprime = *q_override;
  } else {
    p.qprime = smallest_prime_power_at_least(p.ell);
  }
  p.alpha = Field::make(p.qprime).primitive();
  return p;
}

namespace {

// Steps 1-5 over GF(qprime); the full (b1+b2) x (b1*ell) matrix truncated to n columns.
Matrix construction_one_matrix(const ConstructionOneParams& p) {
  const Field f = Field::make(p.qprime);
  Matrix h(f, p.b1 + p.b2, p.n);
  for (std::size_t c = 0; c < p.n; ++c) {
    const std::size_t block = c / p.b1, offset = c % p.b1;
    h(offset, c) = f.one();
    if (block >= 1) h(p.b1 + offset % p.b2, c) = f.pow(p.alpha, block - 1);
  }
  return h;
}

}  // namespace

LinearCode construction_one(std::size_t n, std::size_t b1, std::size_t b2,
                            std::optional<std::uint32_t> q_override) {
  const auto p = construction_one_params(n, b1, b2, q_override);
  Provenance prov{"c1",
                  {{"n", n}, {"b1", b1}, {"b2", b2}, {"q", p.qprime}, {"alpha", p.alpha.value}, {"ell", p.ell}}};
  return LinearCode(construction_one_matrix(p), std::move(prov));
}

LinearCode construction_one_binary(std::size_t n, std::size_t b1, std::size_t b2) {
  const auto p = construction_one_params(n, b1, b2);
  const Matrix h = construction_one_matrix(p);
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < p.ell) ++bits;

  std::map<std::uint32_t, std::size_t> rank_of;
  for (std::size_t r = b1; r < b1 + b2; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (h(r, c).value != 0) rank_of.emplace(h(r, c).value, 0);
  std::size_t next = 1;
  for (auto& [value, rk] : rank_of) rk = next++;

  const Field gf2 = Field::make(2);
  Matrix full(gf2, b1 + b2 * bits, n);
  for (std::size_t r = 0; r < b1; ++r)
    for (std::size_t c = 0; c < n; ++c) full(r, c) = Element{h(r, c).value};
  for (std::size_t r = 0; r < b2; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const auto v = h(b1 + r, c).value;
      if (v == 0) continue;
      const std::size_t code = rank_of.at(v);
      for (std::size_t bit = 0; bit < bits; ++bit)
        full(b1 + r * bits + bit, c) = Element{static_cast<std::uint32_t>((code >> bit) & 1u)};
    }

  // A truncated last block can leave tuple rows that are zero or repeat earlier rows; drop them so H has full
  // rank. The null space is unchanged.
  std::vector<std::vector<std::uint32_t>> kept;
  for (std::size_t r = 0; r < full.rows(); ++r) {
    std::vector<std::uint32_t> row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = full(r, c).value;
    kept.push_back(std::move(row));
    if (rank(Matrix::from_rows(gf2, kept)) < kept.size()) kept.pop_back();
  }
  require(kept.size() < n, ErrorKind::BadParameters,
          "binary expansion needs " + std::to_string(kept.size()) + " independent rows, leaving no message symbols at n = " +
              std::to_string(n));
  Matrix out = Matrix::from_rows(gf2, kept);
  Provenance prov{"c1bin", {{"n", n}, {"b1", b1}, {"b2", b2}, {"q", 2}, {"bits", bits}, {"ell", p.ell}}};
  return LinearCode(std::move(out), std::move(prov));
}

LinearCode mds_code(std::size_t n, std::size_t r) {
  require(r >= 1 && r < n, ErrorKind::BadParameters, "need 1 <= r < n");
  const Field f = Field::make(smallest_prime_power_at_least(n));
  Matrix h(f, r, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < r; ++i) h(i, j) = f.pow(Element{static_cast<std::uint32_t>(j)}, i);
  return LinearCode(std::move(h), Provenance{"mds", {{"n", n}, {"r", r}, {"q", f.q()}}});
}

CyclicCode cyclic_from_h(std::size_t n, const Field& field, const Poly& h) {
  require(h.field() == field, ErrorKind::FieldMismatch, "h is over " + h.field().name());
  require(!h.is_zero() && h.coeff(0).value != 0, ErrorKind::BadReciprocal, "h_0 must be nonzero");
  require(h.degree() > 0 && static_cast<std::size_t>(h.degree()) < n, ErrorKind::BadParameters,
          "need 0 < deg h < n");
  require(divides(h, x_pow_minus_one(field, n)), ErrorKind::NotCyclic,
          "h does not divide X^" + std::to_string(n) + " - 1");
  const std::size_t k = static_cast<std::size_t>(h.degree());
  Matrix hm(field, n - k, n);
  for (std::size_t i = 0; i < n - k; ++i)
    for (std::size_t j = 0; j <= k; ++j) hm(i, i + j) = h.coeff(j);
  Provenance prov{"cyclic", {{"n", n}, {"q", field.q()}, {"h", h.values()}}};
  return CyclicCode{LinearCode(std::move(hm), std::move(prov)), h};
}

GeneratorMatrix generator_matrix(const LinearCode& code) {
  const Field& f = code.field();
  const std::size_t n = code.n(), k = code.k(), r = code.redundancy();
  try {
    const Matrix sys = systematic_form(code.parity_check(), Side::Right);
    Matrix g(f, k, n);
    for (std::size_t i = 0; i < k; ++i) {
      g(i, i) = f.one();
      for (std::size_t j = 0; j < r; ++j) g(i, k + j) = f.neg(sys(j, i));
    }
    return {std::move(g), true};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularBlock) throw;
  }
  const auto basis = null_space(code.parity_check());
  Matrix g(f, k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = basis[i][j];
  return {std::move(g), false};
}

Vector encode(const GeneratorMatrix& g, std::span<const Element> message) {
  return mat_vec(g.g.transpose(), message);
}

Vector syndrome(const LinearCode& code, std::span<const Element> word) {
  return mat_vec(code.parity_check(), word);
}

namespace {

std::size_t min_distance_by_codewords(const LinearCode& code) {
  const Field& f = code.field();
  const auto g = generator_matrix(code).g;
  const std::size_t n = code.n(), k = code.k(), q = f.q();
  std::vector<std::uint32_t> digits(k, 0);
  Vector word(n);
  std::size_t best = n;
  // Odometer over messages. Digit d stands for the field element with encoding d, so each step adds
  // (next - current) times row i; a carry steps back to zero.
  while (true) {
    std::size_t i = 0;
    for (; i < k; ++i) {
      const Element cur{digits[i]};
      const Element next{digits[i] + 1 < q ? digits[i] + 1 : 0u};
      const Element step = f.sub(next, cur);
      for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(step, g(i, j)));
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
    if (i == k) break;
    const auto w = static_cast<std::size_t>(
        std::count_if(word.begin(), word.end(), [](Element e) { return e.value != 0; }));
    best = std::min(best, w);
  }
  return best;
}

bool has_dependent_subset(const Matrix& h, std::size_t size) {
  const std::size_t n = h.cols();
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    if (!columns_independent(h, idx)) return true;
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::size_t min_distance(const LinearCode& code) {
  const std::uint64_t q = code.field().q();
  std::uint64_t space = 1;
  bool small = true;
  for (std::size_t i = 0; i < code.k(); ++i) {
    space *= q;
    if (space > (1u << 22)) {
      small = false;
      break;
    }
  }
  if (small) return min_distance_by_codewords(code);
  require(code.n() <= 24, ErrorKind::TooLarge, "minimum distance search needs q^k <= 2^22 or n <= 24");
  for (std::size_t d = 1; d <= code.redundancy() + 1; ++d)
    if (has_dependent_subset(code.parity_check(), d)) return d;
  return code.redundancy() + 1;
}

}  // namespace erasurelab
