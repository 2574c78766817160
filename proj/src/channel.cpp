#include "erasurelab/channel.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "erasurelab/errors.hpp"
#include "erasurelab/parallel.hpp"

namespace erasurelab {

void ChannelParams::validate() const {
  require(b >= 1, ErrorKind::BadParameters, "burst length b must be >= 1");
  require(e >= 1, ErrorKind::BadParameters, "random erasure count e must be >= 1");
  require(w >= 1 && w - 1 >= b + e, ErrorKind::BadParameters, "need w - 1 >= b + e");
  require(b + e > a, ErrorKind::BadParameters, "need b + e > a");
}

ErasurePattern::ErasurePattern(std::size_t n, std::vector<std::size_t> support) : n_(n), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  require(support_.empty() || support_.back() < n_, ErrorKind::BadParameters, "erasure index out of range");
}

ErasurePattern ErasurePattern::from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1u) s.push_back(i);
  return ErasurePattern(n, std::move(s));
}

bool ErasurePattern::contains(std::size_t i) const noexcept {
  return std::binary_search(support_.begin(), support_.end(), i);
}

std::uint64_t ErasurePattern::mask() const noexcept {
  std::uint64_t m = 0;
  for (auto i : support_) m |= std::uint64_t{1} << i;
  return m;
}

namespace {

constexpr std::size_t kMaxMaskLength = 64;

std::uint64_t interval_mask(std::size_t start, std::size_t len) noexcept {
  if (len == 0) return 0;
  const std::uint64_t ones = len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
  return ones << start;
}

std::uint64_t cyclic_interval_mask(std::size_t start, std::size_t len, std::size_t n) noexcept {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < len; ++i) m |= std::uint64_t{1} << ((start + i) % n);
  return m;
}

std::vector<ErasurePattern> to_sorted_patterns(std::size_t n, const std::unordered_set<std::uint64_t>& masks) {
  std::vector<ErasurePattern> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(ErasurePattern::from_mask(n, m));
  std::sort(out.begin(), out.end());
  return out;
}

// All intervals of length 1..max_len, as masks.
std::vector<std::uint64_t> intervals(std::size_t n, std::size_t max_len, bool cyclic) {
  std::vector<std::uint64_t> out;
  for (std::size_t len = 1; len <= std::min(max_len, n); ++len) {
    const std::size_t starts = cyclic ? n : n - len + 1;
    for (std::size_t s = 0; s < starts; ++s)
      out.push_back(cyclic ? cyclic_interval_mask(s, len, n) : interval_mask(s, len));
  }
  return out;
}

std::vector<ErasurePattern> two_burst_family(std::size_t n, std::size_t b1, std::size_t b2, bool cyclic) {
  require(b2 >= 1 && b2 <= b1 && b1 < n, ErrorKind::BadParameters, "need 1 <= b2 <= b1 < n");
  require(n <= kMaxMaskLength, ErrorKind::TooLarge, "pattern length above 64");
  const auto first = intervals(n, b1, cyclic), second = intervals(n, b2, cyclic);
  std::unordered_set<std::uint64_t> masks;
  for (auto i : first)
    for (auto j : second) masks.insert(i | j);
  return to_sorted_patterns(n, masks);
}

}  // namespace

bool is_window_admissible_mask(std::uint64_t mask, const ChannelParams& params) noexcept {
  const auto weight = static_cast<std::size_t>(std::popcount(mask));
  if (weight <= params.a) return true;
  const std::size_t w = params.w, b = std::min(params.b, params.w);
  for (std::size_t s = 0; s + b <= w; ++s)
    if (static_cast<std::size_t>(std::popcount(mask & ~interval_mask(s, b))) <= params.e) return true;
  return false;
}

bool is_window_admissible(const ErasurePattern& window, const ChannelParams& params) {
  require(window.length() == params.w, ErrorKind::LengthMismatch,
          "pattern length " + std::to_string(window.length()) + " != w = " + std::to_string(params.w));
  require(params.w <= kMaxMaskLength, ErrorKind::TooLarge, "window above 64 slots");
  return is_window_admissible_mask(window.mask(), params);
}

std::vector<ErasurePattern> enumerate_admissible_windows(const ChannelParams& params) {
  require(params.w <= 20, ErrorKind::TooLarge, "window enumeration limited to w <= 20");
  std::vector<ErasurePattern> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << params.w); ++m)
    if (is_window_admissible_mask(m, params)) out.push_back(ErasurePattern::from_mask(params.w, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ErasurePattern> enumerate_b1b2_patterns(std::size_t n, std::size_t b1, std::size_t b2) {
  return two_burst_family(n, b1, b2, false);
}

std::vector<ErasurePattern> enumerate_cyclic_b1b2_patterns(std::size_t n, std::size_t b1, std::size_t b2) {
  return two_burst_family(n, b1, b2, true);
}

std::vector<ErasurePattern> enumerate_burst_plus_random(std::size_t n, std::size_t b, std::size_t e) {
  require(b >= 1 && b + e < n, ErrorKind::BadParameters, "need b >= 1 and b + e < n");
  require(n <= kMaxMaskLength, ErrorKind::TooLarge, "pattern length above 64");
  std::unordered_set<std::uint64_t> masks;
  const auto bursts = intervals(n, b, false);
  // Extend every burst by each subset of at most e other coordinates.
  std::vector<std::uint64_t> frontier(bursts.begin(), bursts.end());
  masks.insert(frontier.begin(), frontier.end());
  for (std::size_t step = 0; step < e; ++step) {
    std::unordered_set<std::uint64_t> next;
    for (auto m : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t grown = m | (std::uint64_t{1} << i);
        if (grown != m && masks.insert(grown).second) next.insert(grown);
      }
    frontier.assign(next.begin(), next.end());
  }
  return to_sorted_patterns(n, masks);
}

bool can_recover(const LinearCode& code, const ErasurePattern& erased) {
  require(erased.length() == code.n(), ErrorKind::LengthMismatch,
          "pattern length " + std::to_string(erased.length()) + " != n = " + std::to_string(code.n()));
  return columns_independent(code.parity_check(), erased.support());
}

Vector decode_erasures(const LinearCode& code, const std::vector<std::optional<Element>>& received) {
  require(received.size() == code.n(), ErrorKind::LengthMismatch, "received word has wrong length");
  const Field& f = code.field();
  std::vector<std::size_t> erased;
  Vector word(code.n());
  for (std::size_t i = 0; i < received.size(); ++i) {
    if (received[i]) {
      require(f.contains(*received[i]), ErrorKind::BadParameters, "symbol outside " + f.name());
      word[i] = *received[i];
    } else {
      erased.push_back(i);
    }
  }
  require(columns_independent(code.parity_check(), erased), ErrorKind::Unrecoverable,
          "erased columns are linearly dependent");
  Vector target = syndrome(code, word);
  for (auto& s : target) s = f.neg(s);
  const Vector x = solve_for_columns(code.parity_check(), erased, target);
  for (std::size_t j = 0; j < erased.size(); ++j) word[erased[j]] = x[j];
  return word;
}

VerificationReport verify_patterns(const LinearCode& code, const std::vector<ErasurePattern>& patterns) {
  for (const auto& p : patterns)
    require(p.length() == code.n(), ErrorKind::LengthMismatch, "pattern length differs from n");
  const Matrix& h = code.parity_check();
  const auto failing = find_first(patterns.size(), [&](std::size_t i) {
    return !columns_independent(h, patterns[i].support());
  });
  VerificationReport report;
  if (failing) {
    report.verdict = false;
    report.witness = patterns[*failing];
    report.patterns_checked = *failing + 1;
  } else {
    report.patterns_checked = patterns.size();
  }
  return report;
}

VerificationReport is_b1b2_code(const LinearCode& code, std::size_t b1, std::size_t b2) {
  require(code.n() <= 20, ErrorKind::TooLarge, "(b1, b2) verification limited to n <= 20");
  return verify_patterns(code, enumerate_b1b2_patterns(code.n(), b1, b2));
}

VerificationReport check_wraparound(const LinearCode& code, std::size_t b1, std::size_t b2) {
  require(b1 >= 1 && code.n() % b1 == 0, ErrorKind::DivisibilityViolation,
          "b1 = " + std::to_string(b1) + " does not divide n = " + std::to_string(code.n()));
  require(code.n() <= 20, ErrorKind::TooLarge, "wrap-around verification limited to n <= 20");
  return verify_patterns(code, enumerate_cyclic_b1b2_patterns(code.n(), b1, b2));
}

}  // namespace erasurelab
