#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "erasurelab/channel.hpp"
#include "erasurelab/codes.hpp"

namespace erasurelab {

using Rational = boost::rational<std::int64_t>;

// ---------------------------------------------------------------------------
// Rate

struct RateReport {
  Rational r_opt;        // (w - (b+e)) / w, optimal for DE at tau = w - 1
  Rational prior_bound;  // (w-a) / (w-a+b+e+e/m), general streaming-code bound
  std::int64_t m = 0;    // ceil((w-(b+e)) / (b+e-a))
  bool globally_optimal = false;  // e >= b - 1
};

RateReport rate_report(const ChannelParams& params);

// ---------------------------------------------------------------------------
// Field-size bounds

/// With H row-reduced to [I_b *; 0 B], B (e x (n-b)) must have every e columns
/// independent. Witness: the burst [0, b-1] plus the offending columns.
/// BadParameters unless n-k = b+e; StructureViolation when the first b columns
/// of H are dependent.
VerificationReport mds_subblock_check(const LinearCode& code, std::size_t b, std::size_t e);

/// n - b - 2, valid under the MDS conjecture. OutOfScope for e <= 1,
/// BadParameters unless n > b + e + 1.
std::size_t random_field_lower_bound(std::size_t n, std::size_t b, std::size_t e);

/// First (in lexicographic candidate order) parity-check [P | I_r] over GF(q)
/// recovering every pattern of `family`. Candidates order P column by column,
/// each column by the integer whose base-q digits are its entries (top row
/// most significant). TooLarge when q^(r (n-r)) > 2^24.
std::optional<LinearCode> search_systematic(std::size_t n, std::size_t r, std::uint32_t q,
                                            const std::vector<ErasurePattern>& family, Provenance provenance);

/// [n, n-(b1+b2)] (b1, b2)-code over GF(q), or nullopt.
std::optional<LinearCode> exhaustive_code_search(std::size_t n, std::size_t b1, std::size_t b2, std::uint32_t q);

/// [n, n-(b+e)] code recovering a burst of <= b with <= e random erasures.
std::optional<LinearCode> exhaustive_burst_random_search(std::size_t n, std::size_t b, std::size_t e,
                                                         std::uint32_t q);

// ---------------------------------------------------------------------------
// Sparsity

struct SparseForm {
  Matrix reduced;    // row 0 <- row 0 - row b; shape [I_{b+1} | P^]
  LinearCode code;   // rows and columns of `reduced` reversed; shape [P' | I_{b+1}]
};

/// WrongProvenance unless `code` came from construction_one with b2 = 1.
SparseForm sparsify_construction_one(const LinearCode& code);

/// Fewest nonzeros of any systematic parity-check of an [n, n-(b+1)] (b, 1)-code.
std::size_t sparsity_minimum(std::size_t n, std::size_t b);

/// ceil(n/b) - 1.
std::size_t sparse_field_lower_bound(std::size_t n, std::size_t b);

struct SparsityReport {
  std::size_t nonzeros = 0;
  std::size_t minimum_possible = 0;
  std::size_t q_star_lower = 0;
  std::uint32_t q = 0;
  std::vector<std::size_t> weight_two_columns;  // indices in SparseForm::reduced
};

SparsityReport sparsity_report(std::size_t n, std::size_t b);

struct SparsityScan {
  std::size_t candidates = 0;
  std::size_t members = 0;  // candidates that are (b, 1)-codes
  std::optional<std::size_t> min_nonzeros;
};

/// Scans systematic [P' | I_{b+1}] over GF(q): every candidate when `samples`
/// is empty (TooLarge above 2^24), else `samples` uniform draws from `seed`.
SparsityScan scan_sparsity(std::size_t n, std::size_t b, std::uint32_t q, std::optional<std::size_t> samples,
                           std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Cyclic codes

struct CyclicReport {
  std::size_t z = 0;
  std::size_t bound = 0;  // (n - k + 1) - z
  std::size_t d = 0;
  bool meets = false;
  std::optional<ErasurePattern> witness;  // (d-1)-burst + 1 random, unrecoverable
  bool consistent = false;                // meets <=> witness present
};

/// TooLarge when n > 20.
CyclicReport cyclic_report(const CyclicCode& code);

/// Every cyclic burst of length n - k is recoverable. TooLarge when n > 20.
bool cyclic_burst_capability(const CyclicCode& code);

/// All cyclic codes of length n over `field` with 0 < deg h < n, h_0 != 0,
/// h | X^n - 1, ordered by h's integer encoding.
std::vector<CyclicCode> enumerate_cyclic_codes(std::size_t n, const Field& field);

}  // namespace erasurelab
