#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "erasurelab/field.hpp"
#include "erasurelab/matrix.hpp"
#include "erasurelab/poly.hpp"

namespace erasurelab {

/// Which builder produced a code and with what resolved parameters.
struct Provenance {
  std::string scheme;
  nlohmann::json params = nlohmann::json::object();

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// An [n, k] linear code given by a full-rank (n-k) x n parity-check matrix.
class LinearCode {
 public:
  /// Throws BadParameters unless rank(H) = rows(H) < cols(H).
  LinearCode(Matrix parity_check, Provenance provenance);

  const Field& field() const noexcept { return h_.field(); }
  std::size_t n() const noexcept { return h_.cols(); }
  std::size_t k() const noexcept { return h_.cols() - h_.rows(); }
  std::size_t redundancy() const noexcept { return h_.rows(); }
  const Matrix& parity_check() const noexcept { return h_; }
  const Provenance& provenance() const noexcept { return provenance_; }

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  Matrix h_;
  Provenance provenance_;
};

struct ConstructionOneParams {
  std::size_t n = 0;
  std::size_t b1 = 0;
  std::size_t b2 = 0;
  std::uint32_t qprime = 0;
  Element alpha;
  std::size_t ell = 0;  // ceil(n / b1)
};

/// Validates (n, b1, b2) and resolves the field and alpha. Errors:
/// BadParameters, DivisibilityViolation, LengthTooSmall, BadFieldOverride.
ConstructionOneParams construction_one_params(std::size_t n, std::size_t b1, std::size_t b2,
                                              std::optional<std::uint32_t> q_override = std::nullopt);

/// [n, n-(b1+b2)] (b1, b2)-code: identity blocks on the top b1 rows, scaled
/// [I_b2 | ... | I_b2] blocks (alpha^(j-1) on block j >= 1) on the bottom b2 rows,
/// truncated to n columns.
LinearCode construction_one(std::size_t n, std::size_t b1, std::size_t b2,
                            std::optional<std::uint32_t> q_override = std::nullopt);

/// Binary expansion of construction_one: each symbol of the bottom b2 rows is
/// replaced by a ceil(log2 ell)-bit column. 0 maps to the zero tuple; the i-th
/// distinct nonzero symbol (ascending encoding) maps to the bits of i, least
/// significant bit in the top row.
LinearCode construction_one_binary(std::size_t n, std::size_t b1, std::size_t b2);

/// r x n Vandermonde parity-check [x_j^i] over the smallest prime-power field
/// of size >= n, evaluation points x_j = j in canonical encoding.
LinearCode mds_code(std::size_t n, std::size_t r);

struct CyclicCode {
  LinearCode base;
  Poly h;
};

/// Cyclic [n, deg h] code with reciprocal polynomial h and the banded
/// parity-check whose row i is (h_0 .. h_k) shifted right by i.
/// Errors: BadReciprocal (h_0 = 0), BadParameters (degree), NotCyclic.
CyclicCode cyclic_from_h(std::size_t n, const Field& field, const Poly& h);

/// Exact minimum distance. Enumerates codewords when q^k <= 2^22, otherwise
/// searches for the smallest dependent column set (requires n <= 24).
std::size_t min_distance(const LinearCode& code);

struct GeneratorMatrix {
  Matrix g;
  bool systematic = false;  // g = [I_k | P]
};

/// Generator with G H^T = 0. Systematic [I_k | P] when the last n-k columns
/// of H are independent, otherwise a null-space basis.
GeneratorMatrix generator_matrix(const LinearCode& code);

/// message * G.
Vector encode(const GeneratorMatrix& g, std::span<const Element> message);

/// H * word.
Vector syndrome(const LinearCode& code, std::span<const Element> word);

std::size_t ceil_div(std::size_t a, std::size_t b) noexcept;

}  // namespace erasurelab
