#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "erasurelab/channel.hpp"
#include "erasurelab/codes.hpp"
#include "erasurelab/matrix.hpp"

namespace erasurelab::oracle {

inline Element random_element(const Field& f, std::mt19937_64& rng) {
  return Element{static_cast<std::uint32_t>(rng() % f.q())};
}

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_element(f, rng);
  return m;
}

// Random [P | I_r] parity check, i.e. a random systematic code.
inline LinearCode random_systematic_code(const Field& f, std::size_t n, std::size_t r, std::mt19937_64& rng) {
  Matrix h(f, r, n);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < n - r; ++c) h(i, c) = random_element(f, rng);
    h(i, n - r + i) = f.one();
  }
  return LinearCode(h, Provenance{"random", {}});
}

inline std::vector<Element> random_vector(const Field& f, std::size_t len, std::mt19937_64& rng) {
  std::vector<Element> v(len);
  for (auto& x : v) x = random_element(f, rng);
  return v;
}

// Brute-force decomposition oracle: is there an interval B of length <= b
// with |E \ B| <= e, or is |E| <= a?
inline bool decomposition_oracle(std::uint64_t mask, std::size_t w, std::size_t a, std::size_t b, std::size_t e) {
  const auto weight = static_cast<std::size_t>(__builtin_popcountll(mask));
  if (weight <= a) return true;
  for (std::size_t start = 0; start < w; ++start)
    for (std::size_t len = 0; len <= b && start + len <= w; ++len) {
      const std::uint64_t burst = len == 0 ? 0 : (((std::uint64_t{1} << len) - 1) << start);
      if (static_cast<std::size_t>(__builtin_popcountll(mask & ~burst)) <= e) return true;
    }
  return false;
}

// Smallest number of dependent columns of H, by subset enumeration.
inline std::size_t min_dependent_columns(const Matrix& h) {
  const std::size_t n = h.cols();
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<std::size_t> cols;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) cols.push_back(i);
      if (!columns_independent(h, cols)) return size;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return n + 1;
}

}  // namespace erasurelab::oracle
