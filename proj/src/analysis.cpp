#include "erasurelab/analysis.hpp"

#include <algorithm>
#include <random>

#include "erasurelab/errors.hpp"
#include "erasurelab/parallel.hpp"

namespace erasurelab {

RateReport rate_report(const ChannelParams& params) {
  params.validate();
  const auto a = static_cast<std::int64_t>(params.a), b = static_cast<std::int64_t>(params.b),
             e = static_cast<std::int64_t>(params.e), w = static_cast<std::int64_t>(params.w);
  RateReport r;
  r.r_opt = Rational(w - (b + e), w);
  r.m = (w - (b + e) + (b + e - a) - 1) / (b + e - a);
  r.prior_bound = Rational(w - a) / (Rational(w - a + b + e) + Rational(e, r.m));
  r.globally_optimal = e + 1 >= b;
  return r;
}

namespace {

// Visits all size-k subsets of [0, n) in lexicographic order until `visit`
// returns true. Returns the number of subsets visited.
template <class Visit>
std::size_t for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return 0;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::size_t count = 0;
  while (true) {
    ++count;
    if (visit(idx)) return count;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return count;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    v *= base;
    if (v > limit) return limit + 1;
  }
  return v;
}

}  // namespace

VerificationReport mds_subblock_check(const LinearCode& code, std::size_t b, std::size_t e) {
  require(b >= 1 && e >= 1 && code.redundancy() == b + e, ErrorKind::BadParameters, "need n - k = b + e");
  const Field& f = code.field();
  Matrix h = code.parity_check();
  const std::size_t rows = h.rows(), n = h.cols();

  for (std::size_t c = 0; c < b; ++c) {
    std::size_t p = c;
    while (p < rows && h(p, c).value == 0) ++p;
    require(p < rows, ErrorKind::StructureViolation, "first b columns of H are dependent");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(c, j));
    const Element inv = f.inv(h(c, c));
    for (std::size_t j = 0; j < n; ++j) h(c, j) = f.mul(h(c, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == c || h(i, c).value == 0) continue;
      const Element factor = h(i, c);
      for (std::size_t j = 0; j < n; ++j) h(i, j) = f.sub(h(i, j), f.mul(factor, h(c, j)));
    }
  }

  std::vector<std::size_t> bottom_rows(e), right_cols(n - b);
  for (std::size_t i = 0; i < e; ++i) bottom_rows[i] = b + i;
  for (std::size_t j = 0; j < n - b; ++j) right_cols[j] = b + j;
  const Matrix block = h.select_rows(bottom_rows).select_columns(right_cols);

  VerificationReport report;
  report.patterns_checked = for_each_subset(n - b, e, [&](const std::vector<std::size_t>& cols) {
    if (columns_independent(block, cols)) return false;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < b; ++i) support.push_back(i);
    for (auto c : cols) support.push_back(b + c);
    report.verdict = false;
    report.witness = ErasurePattern(n, std::move(support));
    return true;
  });
  return report;
}

std::size_t random_field_lower_bound(std::size_t n, std::size_t b, std::size_t e) {
  require(e > 1, ErrorKind::OutOfScope, "the bound covers e > 1 only");
  require(b >= 1 && n > b + e + 1, ErrorKind::BadParameters, "need n > b + e + 1");
  return n - b - 2;
}

std::optional<LinearCode> search_systematic(std::size_t n, std::size_t r, std::uint32_t q,
                                            const std::vector<ErasurePattern>& family, Provenance provenance) {
  require(r >= 1 && r < n, ErrorKind::BadParameters, "need 1 <= r < n");
  const Field f = Field::make(q);
  const std::size_t k = n - r;
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 24;
  require(checked_power(q, r * k, kLimit) <= kLimit, ErrorKind::TooLarge, "search space above 2^24 candidates");

  // Each pattern is checked as soon as its last free column is assigned.
  std::vector<std::vector<const ErasurePattern*>> due(k);
  for (const auto& p : family) {
    require(p.length() == n, ErrorKind::LengthMismatch, "pattern length differs from n");
    std::optional<std::size_t> last;
    for (auto i : p.support())
      if (i < k) last = i;
    if (last) due[*last].push_back(&p);
  }

  const std::size_t column_count = static_cast<std::size_t>(checked_power(q, r, kLimit));
  std::vector<Vector> columns(column_count, Vector(r));
  for (std::size_t v = 0; v < column_count; ++v) {
    std::size_t x = v;
    for (std::size_t i = r; i-- > 0;) {
      columns[v][i] = Element{static_cast<std::uint32_t>(x % q)};
      x /= q;
    }
  }

  Matrix base(f, r, n);
  for (std::size_t i = 0; i < r; ++i) base(i, k + i) = f.one();

  auto place = [&](Matrix& h, std::size_t col, std::size_t v) {
    for (std::size_t i = 0; i < r; ++i) h(i, col) = columns[v][i];
  };
  auto passes = [&](const Matrix& h, std::size_t col) {
    return std::all_of(due[col].begin(), due[col].end(),
                       [&](const ErasurePattern* p) { return columns_independent(h, p->support()); });
  };
  auto dfs = [&](auto&& self, Matrix& h, std::size_t col) -> bool {
    if (col == k) return true;
    for (std::size_t v = 0; v < column_count; ++v) {
      place(h, col, v);
      if (passes(h, col) && self(self, h, col + 1)) return true;
    }
    return false;
  };

  std::vector<std::optional<Matrix>> found(column_count);
  const auto first = find_first(column_count, [&](std::size_t v) {
    Matrix h = base;
    place(h, 0, v);
    if (!passes(h, 0) || !dfs(dfs, h, 1)) return false;
    found[v] = std::move(h);
    return true;
  });
  if (!first) return std::nullopt;
  return LinearCode(std::move(*found[*first]), std::move(provenance));
}

std::optional<LinearCode> exhaustive_code_search(std::size_t n, std::size_t b1, std::size_t b2, std::uint32_t q) {
  require(n <= 20, ErrorKind::TooLarge, "search limited to n <= 20");
  const auto family = enumerate_b1b2_patterns(n, b1, b2);
  Provenance prov{"search", {{"family", "b1b2"}, {"n", n}, {"b1", b1}, {"b2", b2}, {"q", q}}};
  return search_systematic(n, b1 + b2, q, family, std::move(prov));
}

std::optional<LinearCode> exhaustive_burst_random_search(std::size_t n, std::size_t b, std::size_t e,
                                                         std::uint32_t q) {
  require(n <= 20, ErrorKind::TooLarge, "search limited to n <= 20");
  const auto family = enumerate_burst_plus_random(n, b, e);
  Provenance prov{"search", {{"family", "burst_random"}, {"n", n}, {"b", b}, {"e", e}, {"q", q}}};
  return search_systematic(n, b + e, q, family, std::move(prov));
}

SparseForm sparsify_construction_one(const LinearCode& code) {
  const auto& prov = code.provenance();
  require(prov.scheme == "c1" && prov.params.value("b2", 0) == 1, ErrorKind::WrongProvenance,
          "expected a construction_one code with b2 = 1");
  const Field& f = code.field();
  const std::size_t b = prov.params.at("b1").get<std::size_t>(), n = code.n();
  Matrix reduced = code.parity_check();
  for (std::size_t j = 0; j < n; ++j) reduced(0, j) = f.sub(reduced(0, j), reduced(b, j));
  for (std::size_t i = 0; i <= b; ++i)
    for (std::size_t j = 0; j <= b; ++j)
      require(reduced(i, j).value == (i == j ? 1u : 0u), ErrorKind::StructureViolation,
              "row operation did not produce [I | P]");

  Matrix reversed(f, b + 1, n);
  for (std::size_t i = 0; i <= b; ++i)
    for (std::size_t j = 0; j < n; ++j) reversed(i, j) = reduced(b - i, n - 1 - j);
  Provenance sparse_prov{"c1-sparse", prov.params};
  sparse_prov.params["reversed"] = true;
  return SparseForm{std::move(reduced), LinearCode(std::move(reversed), std::move(sparse_prov))};
}

std::size_t sparsity_minimum(std::size_t n, std::size_t b) {
  require(b >= 1 && n > b + 1, ErrorKind::BadParameters, "need n > b + 1");
  const std::size_t ell = ceil_div(n, b);
  const std::size_t weight_two = ell >= 2 ? ell - 2 : 0;
  return (b + 1) + 2 * weight_two + 3 * (n - b - 1 - weight_two);
}

std::size_t sparse_field_lower_bound(std::size_t n, std::size_t b) {
  require(b >= 1 && n > b + 1, ErrorKind::BadParameters, "need n > b + 1");
  return ceil_div(n, b) - 1;
}

SparsityReport sparsity_report(std::size_t n, std::size_t b) {
  const LinearCode c1 = construction_one(n, b, 1);
  const SparseForm sparse = sparsify_construction_one(c1);
  SparsityReport r;
  r.nonzeros = sparse.code.parity_check().nonzeros();
  r.minimum_possible = sparsity_minimum(n, b);
  r.q_star_lower = sparse_field_lower_bound(n, b);
  r.q = c1.field().q();
  for (std::size_t j = b + 1; j < n; ++j) {
    std::size_t w = 0;
    for (std::size_t i = 0; i <= b; ++i) w += sparse.reduced(i, j).value != 0;
    if (w == 2) r.weight_two_columns.push_back(j);
  }
  return r;
}

SparsityScan scan_sparsity(std::size_t n, std::size_t b, std::uint32_t q, std::optional<std::size_t> samples,
                           std::uint64_t seed) {
  require(b >= 1 && n > b + 1 && n <= 20, ErrorKind::BadParameters, "need b + 1 < n <= 20");
  const Field f = Field::make(q);
  const std::size_t r = b + 1, k = n - r, cells = r * k;
  const auto family = enumerate_b1b2_patterns(n, b, 1);

  Matrix h(f, r, n);
  for (std::size_t i = 0; i < r; ++i) h(i, k + i) = f.one();

  SparsityScan scan;
  auto consider = [&] {
    ++scan.candidates;
    if (rank(h) != r) return;
    const bool member = std::all_of(family.begin(), family.end(),
                                    [&](const ErasurePattern& p) { return columns_independent(h, p.support()); });
    if (!member) return;
    ++scan.members;
    const std::size_t nz = h.nonzeros();
    if (!scan.min_nonzeros || nz < *scan.min_nonzeros) scan.min_nonzeros = nz;
  };

  if (samples) {
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < *samples; ++s) {
      for (std::size_t c = 0; c < cells; ++c) h(c / k, c % k) = Element{static_cast<std::uint32_t>(rng() % q)};
      consider();
    }
    return scan;
  }

  constexpr std::uint64_t kLimit = std::uint64_t{1} << 24;
  const std::uint64_t total = checked_power(q, cells, kLimit);
  require(total <= kLimit, ErrorKind::TooLarge, "exhaustive sparsity scan above 2^24 candidates");
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (std::size_t c = 0; c < cells; ++c) {
      h(c / k, c % k) = Element{static_cast<std::uint32_t>(x % q)};
      x /= q;
    }
    consider();
  }
  return scan;
}

CyclicReport cyclic_report(const CyclicCode& code) {
  const LinearCode& base = code.base;
  const std::size_t n = base.n(), k = base.k();
  require(n <= 20, ErrorKind::TooLarge, "cyclic analysis limited to n <= 20");
  CyclicReport r;
  r.z = zero_run(code.h);
  r.bound = (n - k + 1) - r.z;
  r.d = min_distance(base);
  r.meets = r.d == r.bound;

  // (d-1)-bursts plus one coordinate outside the burst, in lexicographic order.
  const std::size_t len = r.d - 1;
  std::vector<ErasurePattern> family;
  for (std::size_t s = 0; s + len <= n; ++s)
    for (std::size_t j = 0; j < n; ++j) {
      if (j >= s && j < s + len) continue;
      std::vector<std::size_t> support{j};
      for (std::size_t i = s; i < s + len; ++i) support.push_back(i);
      family.emplace_back(n, std::move(support));
    }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  for (const auto& p : family) {
    if (!can_recover(base, p)) {
      r.witness = p;
      break;
    }
  }
  r.consistent = r.meets == r.witness.has_value();
  return r;
}

bool cyclic_burst_capability(const CyclicCode& code) {
  const std::size_t n = code.base.n(), len = code.base.redundancy();
  require(n <= 20, ErrorKind::TooLarge, "cyclic analysis limited to n <= 20");
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < len; ++i) support.push_back((s + i) % n);
    if (!can_recover(code.base, ErasurePattern(n, std::move(support)))) return false;
  }
  return true;
}

std::vector<CyclicCode> enumerate_cyclic_codes(std::size_t n, const Field& field) {
  require(n >= 2, ErrorKind::BadParameters, "need n >= 2");
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 22;
  const std::uint64_t total = checked_power(field.q(), n, kLimit);
  require(total <= kLimit, ErrorKind::TooLarge, "q^n above 2^22");
  const Poly target = x_pow_minus_one(field, n);
  std::vector<CyclicCode> out;
  for (std::uint64_t v = 1; v < total; ++v) {
    std::vector<Element> coeffs(n);
    std::uint64_t x = v;
    for (std::size_t i = 0; i < n; ++i) {
      coeffs[i] = Element{static_cast<std::uint32_t>(x % field.q())};
      x /= field.q();
    }
    Poly h(field, std::move(coeffs));
    if (h.coeff(0).value == 0 || h.degree() < 1) continue;
    if (!divides(h, target)) continue;
    out.push_back(cyclic_from_h(n, field, h));
  }
  return out;
}

}  // namespace erasurelab
