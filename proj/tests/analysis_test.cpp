#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "erasurelab/analysis.hpp"
#include "erasurelab/errors.hpp"
#include "support.hpp"

using namespace erasurelab;
using Rows = std::vector<std::vector<std::uint32_t>>;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::BadParameters;
}

Poly poly(std::uint32_t q, std::vector<std::uint32_t> c) { return Poly::from_values(Field::make(q), c); }

ErasurePattern reversed(const ErasurePattern& p) {
  std::vector<std::size_t> s;
  for (auto i : p.support()) s.push_back(p.length() - 1 - i);
  return ErasurePattern(p.length(), s);
}

// Every [P | I_r] over GF(q), in no particular order.
template <class Fn>
void for_each_systematic(std::size_t n, std::size_t r, std::uint32_t q, Fn&& fn) {
  const auto f = Field::make(q);
  const std::size_t cells = r * (n - r);
  std::vector<std::uint32_t> digits(cells, 0);
  while (true) {
    Matrix h(f, r, n);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t c = 0; c < n - r; ++c) h(i, c) = Element{digits[i * (n - r) + c]};
      h(i, n - r + i) = f.one();
    }
    fn(LinearCode(h, {"brute", {}}));
    std::size_t i = 0;
    while (i < cells && ++digits[i] == q) digits[i++] = 0;
    if (i == cells) return;
  }
}

}  // namespace

TEST(Rate, Examples) {
  const auto a = rate_report({2, 3, 1, 5});
  EXPECT_EQ(a.r_opt, Rational(1, 5));

  const auto b = rate_report({2, 3, 1, 8});
  EXPECT_EQ(b.r_opt, Rational(1, 2));
  EXPECT_EQ(b.m, 2);
  EXPECT_EQ(b.prior_bound, Rational(4, 7));

  const auto c = rate_report({1, 2, 1, 4});
  EXPECT_EQ(c.r_opt, Rational(1, 4));
  EXPECT_TRUE(c.globally_optimal);
  EXPECT_FALSE(rate_report({1, 3, 1, 6}).globally_optimal);
  EXPECT_EQ(kind_of([] { rate_report({2, 3, 1, 4}); }), ErrorKind::BadParameters);
}

TEST(RateProperty, ExactAgainstIntegerOracle) {
  for (std::int64_t w = 3; w <= 30; ++w)
    for (std::int64_t b = 1; b < w; ++b)
      for (std::int64_t e = 1; b + e <= w - 1; ++e)
        for (std::int64_t a = 0; a < b + e; ++a) {
          const auto r = rate_report({std::size_t(a), std::size_t(b), std::size_t(e), std::size_t(w)});
          const std::int64_t m = (w - b - e + (b + e - a) - 1) / (b + e - a);
          ASSERT_EQ(r.m, m);
          ASSERT_GE(r.m, 1);
          const std::int64_t num = (w - a) * m, den = (w - a + b + e) * m + e;
          const std::int64_t g = std::gcd(num, den);
          ASSERT_EQ(r.prior_bound.numerator(), num / g);
          ASSERT_EQ(r.prior_bound.denominator(), den / g);
          const std::int64_t g2 = std::gcd(w - b - e, w);
          ASSERT_EQ(r.r_opt.numerator(), (w - b - e) / g2);
          ASSERT_EQ(r.r_opt.denominator(), w / g2);
          ASSERT_GT(r.r_opt, Rational(0));
          ASSERT_LT(r.r_opt, Rational(1));
          ASSERT_EQ(r.globally_optimal, e + 1 >= b);
        }
}

TEST(Subblock, Examples) {
  EXPECT_TRUE(mds_subblock_check(mds_code(8, 4), 2, 2).verdict);
  EXPECT_TRUE(mds_subblock_check(construction_one(8, 3, 1), 3, 1).verdict);
  EXPECT_EQ(kind_of([] { mds_subblock_check(mds_code(8, 4), 2, 1); }), ErrorKind::BadParameters);

  const auto f = Field::make(2);
  EXPECT_EQ(kind_of([&] { mds_subblock_check(LinearCode(Matrix::from_rows(f, {{1, 1, 0, 1, 0}, {1, 1, 1, 0, 1}, {0, 0, 0, 1, 1}}), {}), 2, 1); }),
            ErrorKind::StructureViolation);
}

TEST(Subblock, BinarySevenThreeAlwaysFails) {
  std::size_t checked = 0;
  for_each_systematic(7, 4, 2, [&](const LinearCode& code) {
    try {
      EXPECT_FALSE(mds_subblock_check(code, 2, 2).verdict);
      ++checked;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::StructureViolation);
    }
  });
  EXPECT_GT(checked, 0u);
}

TEST(SubblockProperty, NecessaryForBurstPlusRandom) {
  std::mt19937_64 rng(83);
  std::size_t recovered = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint32_t q = trial % 2 ? 4 : 5;
    const std::size_t b = 1 + trial % 2, e = 2, n = b + e + 2 + rng() % 2;
    const auto code = oracle::random_systematic_code(Field::make(q), n, b + e, rng);
    if (!verify_patterns(code, enumerate_burst_plus_random(n, b, e)).verdict) continue;
    ++recovered;
    ASSERT_TRUE(mds_subblock_check(code, b, e).verdict);
  }
  EXPECT_GT(recovered, 10u);
}

TEST(FieldBound, RandomErasures) {
  EXPECT_EQ(random_field_lower_bound(7, 2, 2), 3u);
  EXPECT_EQ(random_field_lower_bound(10, 3, 2), 5u);
  for (std::size_t b = 1; b < 5; ++b)
    for (std::size_t e = 2; e < 5; ++e) EXPECT_EQ(random_field_lower_bound(b + e + 2, b, e), e);
  EXPECT_EQ(kind_of([] { random_field_lower_bound(7, 2, 1); }), ErrorKind::OutOfScope);
  EXPECT_EQ(kind_of([] { random_field_lower_bound(5, 2, 2); }), ErrorKind::BadParameters);
}

TEST(FieldBoundProperty, SearchRespectsBound) {
  // Burst b plus two random erasures, n <= 8: found codes sit at or above n - b - 2.
  for (std::size_t n = 5; n <= 8; ++n)
    for (std::size_t b = 1; b + 3 < n; ++b)
      for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        std::optional<LinearCode> found;
        try {
          found = exhaustive_burst_random_search(n, b, 2, q);
        } catch (const Error& e) {
          ASSERT_EQ(e.kind(), ErrorKind::TooLarge);
          continue;
        }
        if (q < n - b - 2) {
          ASSERT_FALSE(found) << n << " " << b << " " << q;
        }
        if (found) {
          ASSERT_GE(q, n - b - 2);
          ASSERT_TRUE(verify_patterns(*found, enumerate_burst_plus_random(n, b, 2)).verdict);
          ASSERT_TRUE(mds_subblock_check(*found, b, 2).verdict);
        }
      }
}

TEST(Search, TwoBurstExamples) {
  EXPECT_FALSE(exhaustive_code_search(5, 2, 1, 2));
  const auto three = exhaustive_code_search(5, 2, 1, 3);
  ASSERT_TRUE(three);
  EXPECT_TRUE(is_b1b2_code(*three, 2, 1).verdict);
  const auto four = exhaustive_code_search(4, 2, 1, 2);
  ASSERT_TRUE(four);
  EXPECT_TRUE(is_b1b2_code(*four, 2, 1).verdict);
  EXPECT_EQ(kind_of([] { exhaustive_code_search(12, 2, 1, 5); }), ErrorKind::TooLarge);
}

TEST(SearchProperty, AgreesWithBruteForce) {
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t b1 = 1; b1 + 2 <= n; ++b1)
      for (std::size_t b2 = 1; b2 <= b1 && b1 + b2 < n; ++b2)
        for (std::uint32_t q : {2u, 3u}) {
          if ((b1 + b2) * (n - b1 - b2) * (q == 2 ? 1 : 2) > 12) continue;
          bool exists = false;
          for_each_systematic(n, b1 + b2, q, [&](const LinearCode& c) { exists = exists || is_b1b2_code(c, b1, b2).verdict; });
          const auto found = exhaustive_code_search(n, b1, b2, q);
          ASSERT_EQ(found.has_value(), exists) << n << b1 << b2 << q;
          if (found) {
            ASSERT_TRUE(is_b1b2_code(*found, b1, b2).verdict);
          }
        }
}

TEST(Search, DeterministicAcrossThreadCounts) {
  ::setenv("ERASURELAB_THREADS", "1", 1);
  const auto one = exhaustive_code_search(6, 2, 1, 3);
  ::setenv("ERASURELAB_THREADS", "4", 1);
  const auto four = exhaustive_code_search(6, 2, 1, 3);
  ::unsetenv("ERASURELAB_THREADS");
  ASSERT_TRUE(one && four);
  EXPECT_EQ(one->parity_check(), four->parity_check());
}

TEST(Sparsity, ConstructionOneEightThree) {
  const auto s = sparsify_construction_one(construction_one(8, 3, 1));
  EXPECT_EQ(s.reduced.values(), (Rows{{1, 0, 0, 0, 2, 2, 2, 1},
                                      {0, 1, 0, 0, 1, 0, 0, 1},
                                      {0, 0, 1, 0, 0, 1, 0, 0},
                                      {0, 0, 0, 1, 1, 1, 2, 2}}));
  EXPECT_EQ(s.reduced.nonzeros(), 15u);
  EXPECT_EQ(s.code.parity_check().nonzeros(), 15u);
  const auto& h = s.code.parity_check();
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(h(r, 4 + c).value, r == c ? 1u : 0u);

  const auto rep = sparsity_report(8, 3);
  EXPECT_EQ(rep.nonzeros, 15u);
  EXPECT_EQ(rep.minimum_possible, 15u);
  EXPECT_EQ(rep.q_star_lower, 2u);
  EXPECT_EQ(rep.q, 3u);
  EXPECT_EQ(rep.weight_two_columns, (std::vector<std::size_t>{6}));
}

TEST(Sparsity, SmallCaseAndGuard) {
  const auto s = sparsify_construction_one(construction_one(4, 2, 1));
  EXPECT_EQ(s.reduced.nonzeros(), 6u);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(s.reduced(r, c).value, r == c ? 1u : 0u);
  EXPECT_EQ(kind_of([] { sparsify_construction_one(mds_code(6, 4)); }), ErrorKind::WrongProvenance);
  EXPECT_EQ(kind_of([] { sparsify_construction_one(construction_one(8, 2, 2)); }), ErrorKind::WrongProvenance);
}

TEST(Sparsity, FloorsAndBounds) {
  EXPECT_EQ(sparsity_minimum(8, 3), 15u);
  EXPECT_EQ(sparsity_minimum(4, 2), 6u);
  EXPECT_EQ(sparsity_minimum(5, 2), 8u);
  EXPECT_EQ(sparse_field_lower_bound(8, 3), 2u);
  EXPECT_EQ(sparse_field_lower_bound(4, 2), 1u);
  EXPECT_EQ(sparse_field_lower_bound(13, 3), 4u);
  EXPECT_EQ(kind_of([] { sparsity_minimum(3, 2); }), ErrorKind::BadParameters);
  EXPECT_EQ(kind_of([] { sparse_field_lower_bound(3, 2); }), ErrorKind::BadParameters);
}

TEST(SparsityProperty, RecoverySetUnchanged) {
  for (std::size_t b = 1; b <= 4; ++b)
    for (std::size_t n = b + 2; n <= 12; ++n) {
      const auto code = construction_one(n, b, 1);
      const auto s = sparsify_construction_one(code);
      const LinearCode reduced(s.reduced, {"reduced", {}});
      ASSERT_EQ(s.code.parity_check().nonzeros(), s.reduced.nonzeros());
      ASSERT_GE(s.reduced.nonzeros(), sparsity_minimum(n, b));
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto p = ErasurePattern::from_mask(n, mask);
        const bool ok = can_recover(code, p);
        ASSERT_EQ(ok, can_recover(reduced, p));
        ASSERT_EQ(ok, can_recover(s.code, reversed(p)));
      }
    }
}

TEST(SparsityProperty, ExhaustiveFloorFiveTwo) {
  const auto scan = scan_sparsity(5, 2, 3, std::nullopt);
  EXPECT_EQ(scan.candidates, 729u);
  EXPECT_GT(scan.members, 0u);
  ASSERT_TRUE(scan.min_nonzeros);
  EXPECT_GE(*scan.min_nonzeros, sparsity_minimum(5, 2));
}

TEST(SparsityProperty, SampledFloorEightThree) {
  const auto scan = scan_sparsity(8, 3, 3, 100000, 2024);
  EXPECT_EQ(scan.candidates, 100000u);
  EXPECT_GT(scan.members, 0u);
  ASSERT_TRUE(scan.min_nonzeros);
  EXPECT_GE(*scan.min_nonzeros, sparsity_minimum(8, 3));
}

TEST(Cyclic, HammingReport) {
  const auto code = cyclic_from_h(7, Field::make(2), poly(2, {1, 0, 1, 1, 1}));
  const auto r = cyclic_report(code);
  EXPECT_EQ(r.z, 1u);
  EXPECT_EQ(r.bound, 3u);
  EXPECT_EQ(r.d, 3u);
  EXPECT_TRUE(r.meets);
  EXPECT_EQ(r.witness, ErasurePattern(7, {0, 1, 3}));
  EXPECT_TRUE(r.consistent);
  EXPECT_TRUE(cyclic_burst_capability(code));
}

TEST(Cyclic, BchReport) {
  const auto code = cyclic_from_h(15, Field::make(2), poly(2, {1, 1, 0, 1, 0, 0, 0, 1}));
  EXPECT_EQ(code.base.k(), 7u);
  const auto r = cyclic_report(code);
  EXPECT_EQ(r.z, 3u);
  EXPECT_EQ(r.bound, 6u);
  EXPECT_EQ(r.d, 5u);
  EXPECT_FALSE(r.meets);
  EXPECT_FALSE(r.witness);
  EXPECT_TRUE(r.consistent);
  EXPECT_TRUE(cyclic_burst_capability(code));
}

TEST(Cyclic, RepetitionReport) {
  const auto code = cyclic_from_h(2, Field::make(2), poly(2, {1, 1}));
  const auto r = cyclic_report(code);
  EXPECT_EQ(r.z, 0u);
  EXPECT_EQ(r.bound, 2u);
  EXPECT_EQ(r.d, 2u);
  EXPECT_TRUE(r.meets);
  EXPECT_TRUE(cyclic_burst_capability(code));
}

TEST(Cyclic, EnumerationCountsDivisors) {
  // X^7 - 1 = (1+X)(1+X+X^3)(1+X^2+X^3) over GF(2): 2^3 divisors, minus 1 and X^7 - 1.
  EXPECT_EQ(enumerate_cyclic_codes(7, Field::make(2)).size(), 6u);
  // X^4 - 1 = (1+X)^4 over GF(2): degrees 1..3.
  EXPECT_EQ(enumerate_cyclic_codes(4, Field::make(2)).size(), 3u);
}

TEST(CyclicProperty, BoundAndCharacterization) {
  for (std::uint32_t q : {2u, 3u}) {
    const auto f = Field::make(q);
    for (std::size_t n = 2; n <= (q == 2 ? 15u : 8u); ++n)
      for (const auto& code : enumerate_cyclic_codes(n, f)) {
        const auto r = cyclic_report(code);
        ASSERT_LE(r.d, r.bound) << n;
        ASSERT_EQ(r.d, oracle::min_dependent_columns(code.base.parity_check()));
        ASSERT_EQ(r.meets, r.witness.has_value());
        ASSERT_TRUE(r.consistent);
        ASSERT_TRUE(cyclic_burst_capability(code));
        if (r.witness) {
          ASSERT_EQ(r.witness->weight(), r.d);
          ASSERT_FALSE(can_recover(code.base, *r.witness));
        }
      }
  }
}
