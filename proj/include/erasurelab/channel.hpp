#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "erasurelab/codes.hpp"

namespace erasurelab {

/// (a, (b, e), w) sliding-window model: every window of w slots holds either a
/// burst of <= b erasures together with <= e arbitrary erasures, or <= a
/// arbitrary erasures.
struct ChannelParams {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t e = 0;
  std::size_t w = 0;

  /// Throws BadParameters unless w-1 >= b+e > a, b >= 1 and e >= 1.
  void validate() const;

  friend bool operator==(const ChannelParams&, const ChannelParams&) = default;
};

/// Erased coordinates of a length-n word, strictly increasing.
class ErasurePattern {
 public:
  ErasurePattern() = default;
  /// Sorts and deduplicates; throws BadParameters for indices >= n.
  ErasurePattern(std::size_t n, std::vector<std::size_t> support);
  static ErasurePattern from_mask(std::size_t n, std::uint64_t mask);

  std::size_t length() const noexcept { return n_; }
  const std::vector<std::size_t>& support() const noexcept { return support_; }
  std::size_t weight() const noexcept { return support_.size(); }
  bool contains(std::size_t i) const noexcept;
  std::uint64_t mask() const noexcept;

  /// Lexicographic on the sorted support (then by length).
  friend bool operator<(const ErasurePattern& a, const ErasurePattern& b) noexcept {
    if (a.support_ != b.support_) return a.support_ < b.support_;
    return a.n_ < b.n_;
  }
  friend bool operator==(const ErasurePattern&, const ErasurePattern&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> support_;
};

/// Verdict of an exhaustive check. `witness` is the first failing pattern in
/// the family's order; `patterns_checked` counts evaluations up to and
/// including the witness (the whole family on a pass).
struct VerificationReport {
  bool verdict = true;
  std::optional<ErasurePattern> witness;
  std::size_t patterns_checked = 0;
};

/// |E| <= a, or some length-b interval [s, s+b-1] inside the window leaves at
/// most e erasures outside it. Throws LengthMismatch unless E.length() == w.
bool is_window_admissible(const ErasurePattern& window, const ChannelParams& params);

/// Same test on a bitmask of the w slots.
bool is_window_admissible_mask(std::uint64_t mask, const ChannelParams& params) noexcept;

/// All admissible subsets of [0, w-1] including the empty set, sorted
/// lexicographically. TooLarge when w > 20.
std::vector<ErasurePattern> enumerate_admissible_windows(const ChannelParams& params);

/// Unions I u J of intervals with 1 <= |I| <= b1 and 1 <= |J| <= b2, sorted and
/// deduplicated. BadParameters unless 1 <= b2 <= b1 < n.
std::vector<ErasurePattern> enumerate_b1b2_patterns(std::size_t n, std::size_t b1, std::size_t b2);

/// Unions of an interval of length 1..b with up to e further coordinates.
/// BadParameters unless 1 <= b and b + e < n.
std::vector<ErasurePattern> enumerate_burst_plus_random(std::size_t n, std::size_t b, std::size_t e);

/// Same families with intervals taken cyclically modulo n.
std::vector<ErasurePattern> enumerate_cyclic_b1b2_patterns(std::size_t n, std::size_t b1, std::size_t b2);

/// Recoverable iff the erased columns of H are linearly independent.
bool can_recover(const LinearCode& code, const ErasurePattern& erased);

/// Fills erased positions (nullopt) so the word has zero syndrome.
/// Errors: LengthMismatch, Unrecoverable, InconsistentSyndrome.
Vector decode_erasures(const LinearCode& code, const std::vector<std::optional<Element>>& received);

/// can_recover over a whole family; witness is the first failure in `patterns`
/// order. Runs across worker threads.
VerificationReport verify_patterns(const LinearCode& code, const std::vector<ErasurePattern>& patterns);

/// (b1, b2)-code check over enumerate_b1b2_patterns. TooLarge when n > 20.
VerificationReport is_b1b2_code(const LinearCode& code, std::size_t b1, std::size_t b2);

/// Check with either burst allowed to wrap around. Requires b1 | n
/// (DivisibilityViolation) and n <= 20 (TooLarge).
VerificationReport check_wraparound(const LinearCode& code, std::size_t b1, std::size_t b2);

}  // namespace erasurelab
