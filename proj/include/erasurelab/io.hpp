#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "erasurelab/analysis.hpp"
#include "erasurelab/channel.hpp"
#include "erasurelab/codes.hpp"
#include "erasurelab/streaming.hpp"

namespace erasurelab::io {

using nlohmann::json;

// Field: {"q", "p", "m", "modulus"}.
json to_json(const FieldSpec& spec);
// Matrix: {"q", "modulus", "rows", "cols", "data"} with canonical encodings.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);
// Polynomial: {"q", "coeffs"} lowest degree first.
json to_json(const Poly& p);
Poly poly_from_json(const json& j);
// Code file: {"provenance", "field", "n", "k", "H"}.
json to_json(const LinearCode& code);
LinearCode code_from_json(const json& j);
// Pattern: {"n", "support"}.
json to_json(const ErasurePattern& p);
ErasurePattern pattern_from_json(const json& j);
// Report: {"verdict", "witness", "patterns_checked"}.
json to_json(const VerificationReport& r);

json to_json(const RateReport& r);
json to_json(const SparsityReport& r);
json to_json(const CyclicReport& r);
// {"slots", "admissible", "windows_inadmissible", "messages_failed", "deadline_misses", "seed"}.
json to_json(const SimulationSummary& s);

std::string rational_string(const Rational& r);

/// Canonical text for files: two-space indent, trailing newline.
std::string dump(const json& j);

LinearCode read_code_file(const std::filesystem::path& path);
void write_code_file(const std::filesystem::path& path, const LinearCode& code);

}  // namespace erasurelab::io
