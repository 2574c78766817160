#include "erasurelab/streaming.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "erasurelab/errors.hpp"

namespace erasurelab {

void StreamingParams::validate() const {
  channel.validate();
  require(tau >= channel.w - 1, ErrorKind::BadParameters, "need tau >= w - 1");
}

PacketStream de_encode(const LinearCode& code, const std::vector<Vector>& messages) {
  const auto gen = generator_matrix(code);
  require(gen.systematic, ErrorKind::NotSystematic, "diagonal embedding needs a generator [I_k | P]");
  const Field& f = code.field();
  const std::size_t n = code.n(), k = code.k(), slots = messages.size();
  for (const auto& m : messages) {
    require(m.size() == k, ErrorKind::DimensionMismatch, "message packets must have k symbols");
    for (auto x : m) require(f.contains(x), ErrorKind::BadParameters, "message symbol outside " + f.name());
  }

  PacketStream stream;
  stream.n = n;
  stream.k = k;
  stream.message_slots = slots;
  stream.packets.assign(slots + n - 1, Vector(n));
  stream.erased.assign(slots + n - 1, false);

  const auto s_begin = -static_cast<std::ptrdiff_t>(k) + 1;
  Vector u(k);
  for (std::ptrdiff_t s = s_begin; s < static_cast<std::ptrdiff_t>(slots); ++s) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::ptrdiff_t t = s + static_cast<std::ptrdiff_t>(j);
      u[j] = (t >= 0 && t < static_cast<std::ptrdiff_t>(slots)) ? messages[static_cast<std::size_t>(t)][j] : Element{};
    }
    const Vector c = encode(gen, u);
    for (std::size_t j = 0; j < n; ++j) {
      const std::ptrdiff_t t = s + static_cast<std::ptrdiff_t>(j);
      if (t >= 0) stream.packets[static_cast<std::size_t>(t)][j] = c[j];
    }
  }
  return stream;
}

void apply_losses(PacketStream& stream, const std::vector<std::size_t>& losses) {
  for (auto t : losses)
    if (t < stream.erased.size()) stream.erased[t] = true;
}

std::size_t DecodeTrace::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(messages.begin(), messages.end(), [](const MessageOutcome& m) { return !m.decoded_at; }));
}

std::size_t DecodeTrace::deadline_misses() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(messages.begin(), messages.end(), [](const MessageOutcome& m) { return m.missed; }));
}

DecodeTrace de_decode(const PacketStream& stream, const LinearCode& code, const StreamingParams& params) {
  require(stream.n == code.n() && stream.k == code.k(), ErrorKind::DimensionMismatch, "stream/code shape mismatch");
  const std::size_t n = stream.n, k = stream.k, slots = stream.message_slots;

  // Decoded diagonals indexed by start slot s + (k - 1); empty when unrecoverable.
  std::vector<std::optional<Vector>> diagonals(slots + k - 1);
  for (std::size_t d = 0; d < diagonals.size(); ++d) {
    const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(d) - static_cast<std::ptrdiff_t>(k) + 1;
    std::vector<std::optional<Element>> received(n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::ptrdiff_t t = s + static_cast<std::ptrdiff_t>(j);
      if (t < 0) {
        received[j] = Element{};
      } else if (!stream.erased[static_cast<std::size_t>(t)]) {
        received[j] = stream.packets[static_cast<std::size_t>(t)][j];
      }
    }
    try {
      diagonals[d] = decode_erasures(code, received);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Unrecoverable && e.kind() != ErrorKind::InconsistentSyndrome) throw;
    }
  }

  DecodeTrace trace;
  trace.messages.resize(slots);
  for (std::size_t t = 0; t < slots; ++t) {
    auto& out = trace.messages[t];
    out.slot = t;
    out.deadline = t + params.tau;
    if (!stream.erased[t]) {
      out.decoded_at = t;
      out.value.assign(stream.packets[t].begin(), stream.packets[t].begin() + static_cast<std::ptrdiff_t>(k));
      continue;
    }
    out.value.resize(k);
    std::size_t latest = t;
    bool ok = true;
    for (std::size_t j = 0; j < k; ++j) {
      // u_j(t) sits at position j of the diagonal starting at t - j.
      const auto& diag = diagonals[t - j + k - 1];
      if (!diag) {
        ok = false;
        break;
      }
      out.value[j] = (*diag)[j];
      latest = std::max(latest, t - j + n - 1);
    }
    if (ok) {
      out.decoded_at = latest;
      out.missed = latest > out.deadline;
    } else {
      out.value.clear();
    }
  }
  return trace;
}

namespace {

std::uint64_t window_mask(const std::vector<bool>& lost, std::size_t start, std::size_t w) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < w && start + i < lost.size(); ++i)
    if (lost[start + i]) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace

std::size_t count_inadmissible_windows(const std::vector<std::size_t>& losses, std::size_t length,
                                       const ChannelParams& params) {
  require(params.w >= 1 && params.w <= 64, ErrorKind::TooLarge, "window must be 1..64 slots");
  std::vector<bool> lost(length, false);
  for (auto t : losses)
    if (t < length) lost[t] = true;
  const std::size_t windows = length > params.w ? length - params.w + 1 : 1;
  std::size_t bad = 0;
  for (std::size_t s = 0; s < windows; ++s)
    if (!is_window_admissible_mask(window_mask(lost, s, params.w), params)) ++bad;
  return bad;
}

bool is_stream_admissible(const std::vector<std::size_t>& losses, std::size_t length, const ChannelParams& params) {
  return count_inadmissible_windows(losses, length, params) == 0;
}

std::vector<std::size_t> periodic_pattern(const ChannelParams& params, std::size_t periods) {
  params.validate();
  require(params.e + 1 >= params.b, ErrorKind::ParameterViolation, "periodic pattern needs e >= b - 1");
  require(periods >= 1, ErrorKind::BadParameters, "need at least one period");
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < periods; ++p)
    for (std::size_t i = 0; i < params.b + params.e; ++i) out.push_back(p * params.w + i);
  return out;
}

ErasurePattern converse_pattern(const ChannelParams& params) {
  std::vector<std::size_t> s{0};
  for (std::size_t t = params.w - (params.b + params.e) + 1; t < params.w; ++t) s.push_back(t);
  return ErasurePattern(params.w, std::move(s));
}

VerificationReport verify_streaming_code(const LinearCode& code, const StreamingParams& params) {
  params.validate();
  const auto& ch = params.channel;
  require(params.tau == ch.w - 1, ErrorKind::UnsupportedDelay, "only tau = w - 1 is supported");
  require(code.n() == ch.w, ErrorKind::LengthMismatch,
          "code length " + std::to_string(code.n()) + " != w = " + std::to_string(ch.w));
  require(ch.w <= 20, ErrorKind::TooLarge, "streaming verification limited to w <= 20");
  require(generator_matrix(code).systematic, ErrorKind::NotSystematic, "code has no systematic generator");

  const ErasurePattern converse = converse_pattern(ch);
  if (is_window_admissible(converse, ch) && !can_recover(code, converse)) {
    return VerificationReport{false, converse, 1};
  }
  return verify_patterns(code, enumerate_admissible_windows(ch));
}

std::vector<std::size_t> ge_source(const GilbertElliott& model, std::size_t length, std::uint64_t seed) {
  for (double p : {model.good_to_bad, model.bad_to_good, model.erase_good, model.erase_bad})
    require(p >= 0.0 && p <= 1.0, ErrorKind::BadProbability, "probabilities must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<std::size_t> losses;
  bool bad = false;
  for (std::size_t t = 0; t < length; ++t) {
    if (uniform() < (bad ? model.erase_bad : model.erase_good)) losses.push_back(t);
    bad = bad ? !(uniform() < model.bad_to_good) : uniform() < model.good_to_bad;
  }
  return losses;
}

std::string LossSource::name() const {
  switch (kind) {
    case Kind::Lossless: return "none";
    case Kind::Periodic: return "periodic";
    case Kind::GilbertElliott: return "ge";
  }
  return "unknown";
}

double SimulationSummary::admissible_window_rate() const noexcept {
  return windows ? static_cast<double>(windows - windows_inadmissible) / static_cast<double>(windows) : 1.0;
}

double SimulationSummary::failure_rate() const noexcept {
  return messages ? static_cast<double>(messages_failed) / static_cast<double>(messages) : 0.0;
}

double SimulationSummary::miss_rate() const noexcept {
  return messages ? static_cast<double>(deadline_misses) / static_cast<double>(messages) : 0.0;
}

SimulationSummary simulate(const LinearCode& code, const StreamingParams& params, const LossSource& source,
                           std::uint64_t seed) {
  params.validate();
  const auto& ch = params.channel;

  SimulationSummary out;
  out.seed = seed;
  switch (source.kind) {
    case LossSource::Kind::Lossless:
      out.slots = source.length;
      break;
    case LossSource::Kind::Periodic:
      out.losses = periodic_pattern(ch, source.periods);
      out.slots = source.periods * ch.w;
      break;
    case LossSource::Kind::GilbertElliott:
      out.slots = source.length;
      out.losses = ge_source(source.model, source.length, seed);
      break;
  }
  require(out.slots >= 1, ErrorKind::BadParameters, "simulation needs at least one slot");

  out.windows = out.slots > ch.w ? out.slots - ch.w + 1 : 1;
  out.windows_inadmissible = count_inadmissible_windows(out.losses, out.slots, ch);
  out.admissible = out.windows_inadmissible == 0;

  const Field& f = code.field();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<Vector> messages(out.slots, Vector(code.k()));
  for (auto& m : messages)
    for (auto& x : m) x = Element{static_cast<std::uint32_t>(rng() % f.q())};

  PacketStream stream = de_encode(code, messages);
  apply_losses(stream, out.losses);
  const DecodeTrace trace = de_decode(stream, code, params);

  out.messages = messages.size();
  for (std::size_t t = 0; t < messages.size(); ++t) {
    const auto& m = trace.messages[t];
    if (!m.decoded_at || m.value != messages[t]) ++out.messages_failed;
    if (m.missed) ++out.deadline_misses;
  }
  return out;
}

}  // namespace erasurelab
