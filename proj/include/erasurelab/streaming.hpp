#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "erasurelab/channel.hpp"
#include "erasurelab/codes.hpp"

namespace erasurelab {

struct StreamingParams {
  ChannelParams channel;
  std::size_t tau = 0;

  /// Channel invariants plus tau >= w - 1.
  void validate() const;
};

/// Coded packets x(0), x(1), ... of a diagonally embedded block code.
/// Messages before slot 0 are zero; `message_slots` messages were encoded and
/// the stream is long enough for every diagonal to complete.
struct PacketStream {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t message_slots = 0;
  std::vector<Vector> packets;
  std::vector<bool> erased;
};

/// Diagonal embedding: for every start slot s, the symbols
/// [x_1(s), x_2(s+1), ..., x_n(s+n-1)] form the codeword
/// [u_1(s), ..., u_k(s+k-1)] G with G = [I_k | P]. NotSystematic otherwise.
PacketStream de_encode(const LinearCode& code, const std::vector<Vector>& messages);

/// Marks the given slots as lost; indices past the stream end are ignored.
void apply_losses(PacketStream& stream, const std::vector<std::size_t>& losses);

struct MessageOutcome {
  std::size_t slot = 0;
  std::size_t deadline = 0;
  std::optional<std::size_t> decoded_at;  // nullopt: unrecoverable
  bool missed = false;                    // decoded after the deadline
  Vector value;
};

struct DecodeTrace {
  std::vector<MessageOutcome> messages;

  std::size_t failures() const noexcept;
  std::size_t deadline_misses() const noexcept;
};

/// Decodes each diagonal at its completion slot s+n-1. An unerased message
/// packet is read off at its own slot. Failures are recorded, never thrown.
DecodeTrace de_decode(const PacketStream& stream, const LinearCode& code, const StreamingParams& params);

/// Every length-w window of slots [0, length) passes is_window_admissible
/// (a stream shorter than w is one zero-padded window).
bool is_stream_admissible(const std::vector<std::size_t>& losses, std::size_t length, const ChannelParams& params);

/// Number of inadmissible windows, out of max(1, length - w + 1).
std::size_t count_inadmissible_windows(const std::vector<std::size_t>& losses, std::size_t length,
                                       const ChannelParams& params);

/// Erases slots t with t mod w < b + e over periods * w slots.
/// ParameterViolation when e < b - 1.
std::vector<std::size_t> periodic_pattern(const ChannelParams& params, std::size_t periods);

/// {0} u [w-(b+e)+1, w-1]: the window that defeats any DE code of rate above
/// (w-(b+e))/w.
ErasurePattern converse_pattern(const ChannelParams& params);

/// DE of `code` is an (a,(b,e),w,w-1) streaming code iff every admissible window
/// pattern is recoverable. The converse pattern is tried first and reported as
/// the witness when it fails; otherwise the witness is the lexicographically
/// smallest failing window. Errors: UnsupportedDelay, LengthMismatch, TooLarge,
/// NotSystematic.
VerificationReport verify_streaming_code(const LinearCode& code, const StreamingParams& params);

struct GilbertElliott {
  double good_to_bad = 0.0;
  double bad_to_good = 0.0;
  double erase_good = 0.0;
  double erase_bad = 0.0;
};

/// Algorithm tag recorded in simulation output.
inline constexpr const char* kRngAlgorithm = "mt19937_64/u53";

/// Two-state Markov loss sequence starting in the good state. Each slot is lost
/// with the current state's probability, then the state transitions. Uniforms
/// are (mt19937_64() >> 11) * 2^-53, so output is reproducible across
/// platforms. BadProbability for values outside [0, 1].
std::vector<std::size_t> ge_source(const GilbertElliott& model, std::size_t length, std::uint64_t seed);

struct LossSource {
  enum class Kind { Lossless, Periodic, GilbertElliott };
  Kind kind = Kind::Lossless;
  std::size_t periods = 0;  // Periodic
  std::size_t length = 0;   // Lossless, GilbertElliott
  GilbertElliott model;

  std::string name() const;
};

struct SimulationSummary {
  std::size_t slots = 0;
  bool admissible = true;
  std::size_t windows = 0;
  std::size_t windows_inadmissible = 0;
  std::size_t messages = 0;
  std::size_t messages_failed = 0;
  std::size_t deadline_misses = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> losses;

  double admissible_window_rate() const noexcept;
  double failure_rate() const noexcept;
  double miss_rate() const noexcept;
};

/// Source -> random messages -> DE encode -> erase -> decode. A message counts
/// as failed when it is unrecoverable or decodes to the wrong value.
SimulationSummary simulate(const LinearCode& code, const StreamingParams& params, const LossSource& source,
                           std::uint64_t seed);

}  // namespace erasurelab
