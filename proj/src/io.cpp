#include "erasurelab/io.hpp"

#include <fstream>
#include <sstream>

#include "erasurelab/errors.hpp"

namespace erasurelab::io {

namespace {

Field field_for(const json& j) {
  require(j.is_object() && j.contains("q"), ErrorKind::BadFormat, "missing \"q\"");
  const Field f = Field::make(j.at("q").get<std::uint32_t>());
  if (j.contains("modulus"))
    require(j.at("modulus").get<std::vector<std::uint32_t>>() == f.spec().modulus, ErrorKind::BadFormat,
            "modulus differs from the canonical one for " + f.name());
  return f;
}

}  // namespace

json to_json(const FieldSpec& spec) {
  return {{"q", spec.q}, {"p", spec.p}, {"m", spec.m}, {"modulus", spec.modulus}};
}

json to_json(const Matrix& m) {
  return {{"q", m.field().q()},
          {"modulus", m.field().spec().modulus},
          {"rows", m.rows()},
          {"cols", m.cols()},
          {"data", m.values()}};
}

Matrix matrix_from_json(const json& j) {
  try {
    const Field f = field_for(j);
    const auto data = j.at("data").get<std::vector<std::vector<std::uint32_t>>>();
    Matrix m = Matrix::from_rows(f, data);
    require(m.rows() == j.at("rows").get<std::size_t>() && m.cols() == j.at("cols").get<std::size_t>(),
            ErrorKind::BadFormat, "rows/cols disagree with data");
    return m;
  } catch (const json::exception& e) {
    fail(ErrorKind::BadFormat, e.what());
  }
}

json to_json(const Poly& p) { return {{"q", p.field().q()}, {"coeffs", p.values()}}; }

Poly poly_from_json(const json& j) {
  try {
    const Field f = field_for(j);
    const auto c = j.at("coeffs").get<std::vector<std::uint32_t>>();
    return Poly::from_values(f, c);
  } catch (const json::exception& e) {
    fail(ErrorKind::BadFormat, e.what());
  }
}

json to_json(const LinearCode& code) {
  return {{"provenance", {{"scheme", code.provenance().scheme}, {"params", code.provenance().params}}},
          {"field", to_json(code.field().spec())},
          {"n", code.n()},
          {"k", code.k()},
          {"H", to_json(code.parity_check())}};
}

LinearCode code_from_json(const json& j) {
  try {
    Matrix h = matrix_from_json(j.at("H"));
    const Field f = field_for(j.at("field"));
    require(f == h.field(), ErrorKind::BadFormat, "field and H disagree");
    Provenance prov{j.at("provenance").at("scheme").get<std::string>(), j.at("provenance").value("params", json::object())};
    LinearCode code(std::move(h), std::move(prov));
    require(code.n() == j.at("n").get<std::size_t>() && code.k() == j.at("k").get<std::size_t>(),
            ErrorKind::BadFormat, "n/k disagree with H");
    return code;
  } catch (const json::exception& e) {
    fail(ErrorKind::BadFormat, e.what());
  }
}

json to_json(const ErasurePattern& p) { return {{"n", p.length()}, {"support", p.support()}}; }

ErasurePattern pattern_from_json(const json& j) {
  try {
    return ErasurePattern(j.at("n").get<std::size_t>(), j.at("support").get<std::vector<std::size_t>>());
  } catch (const json::exception& e) {
    fail(ErrorKind::BadFormat, e.what());
  }
}

json to_json(const VerificationReport& r) {
  return {{"verdict", r.verdict},
          {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
          {"patterns_checked", r.patterns_checked}};
}

std::string rational_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json to_json(const RateReport& r) {
  return {{"r_opt", rational_string(r.r_opt)},
          {"prior_bound", rational_string(r.prior_bound)},
          {"m", r.m},
          {"globally_optimal", r.globally_optimal}};
}

json to_json(const SparsityReport& r) {
  return {{"nonzeros", r.nonzeros},
          {"minimum_possible", r.minimum_possible},
          {"q_star_lower", r.q_star_lower},
          {"q", r.q},
          {"weight_two_columns", r.weight_two_columns}};
}

json to_json(const CyclicReport& r) {
  return {{"z", r.z},
          {"bound", r.bound},
          {"d", r.d},
          {"meets", r.meets},
          {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
          {"consistent", r.consistent}};
}

json to_json(const SimulationSummary& s) {
  return {{"slots", s.slots},
          {"admissible", s.admissible},
          {"windows_inadmissible", s.windows_inadmissible},
          {"messages_failed", s.messages_failed},
          {"deadline_misses", s.deadline_misses},
          {"seed", s.seed}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

LinearCode read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::BadFormat, "cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorKind::BadFormat, path.string() + ": " + e.what());
  }
  return code_from_json(j);
}

void write_code_file(const std::filesystem::path& path, const LinearCode& code) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorKind::BadFormat, "cannot write " + path.string());
  out << dump(to_json(code));
}

}  // namespace erasurelab::io
