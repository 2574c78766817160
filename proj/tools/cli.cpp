#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "erasurelab/analysis.hpp"
#include "erasurelab/errors.hpp"
#include "erasurelab/io.hpp"
#include "erasurelab/parallel.hpp"
#include "erasurelab/streaming.hpp"

namespace erasurelab::cli {

namespace {

using io::json;

enum class Format { Json, Csv, Table };

struct Outcome {
  json config;
  json result;
  int exit_code = 0;
};

// ---------------------------------------------------------------------------
// Rendering

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_matrix(const json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& r) { return r.is_array(); });
}

std::string inline_text(const json& v) {
  if (!v.is_array()) return scalar_text(v);
  if (v.empty()) return "[]";
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + inline_text(x);
  return s;
}

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, json>>& out) {
  if (v.is_object() && !v.empty()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  out.emplace_back(prefix, v);
}

void render_table(const json& config, const json& result, std::ostream& out) {
  std::vector<std::pair<std::string, json>> rows;
  flatten(json{{"config", config}, {"result", result}}, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) {
    if (!is_matrix(v)) {
      out << std::left << std::setw(static_cast<int>(width)) << k << "  " << inline_text(v) << "\n";
      continue;
    }
    out << k;
    std::size_t cell = 1;
    for (const auto& r : v)
      for (const auto& x : r) cell = std::max(cell, scalar_text(x).size());
    out << "\n";
    for (const auto& r : v) {
      out << std::string(width, ' ');
      for (const auto& x : r) out << "  " << std::right << std::setw(static_cast<int>(cell)) << scalar_text(x);
      out << "\n";
    }
  }
}

std::string csv_cell(const json& v) {
  std::string s = inline_text(v);
  if (s.find_first_of(",\"") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  return s;
}

void render_csv(const json& result, std::ostream& out) {
  std::vector<json> records;
  if (result.is_object() && result.contains("rows") && result.at("rows").is_array())
    records.assign(result.at("rows").begin(), result.at("rows").end());
  else
    records.push_back(result);
  bool header = true;
  for (const auto& r : records) {
    std::vector<std::pair<std::string, json>> cells;
    flatten(r, "", cells);
    if (header) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i].first;
      out << "\n";
      header = false;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i].second);
    out << "\n";
  }
}

void render(Format format, const std::string& command, const Outcome& o, std::ostream& out) {
  switch (format) {
    case Format::Json:
      out << io::dump(json{{"tool", {{"name", "erasurelab"}, {"version", kVersion}}},
                           {"command", command},
                           {"config", o.config},
                           {"result", o.result}});
      break;
    case Format::Table:
      out << "# erasurelab " << kVersion << " " << command << "\n";
      render_table(o.config, o.result, out);
      break;
    case Format::Csv:
      render_csv(o.result, out);
      break;
  }
}

// ---------------------------------------------------------------------------
// Flag helpers

template <class T>
T need(const std::optional<T>& v, const char* flag) {
  require(v.has_value(), ErrorKind::BadParameters, std::string("missing --") + flag);
  return *v;
}

std::vector<std::uint32_t> parse_coefficients(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      require(used == item.size(), ErrorKind::BadParameters, "bad coefficient '" + item + "'");
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::logic_error&) {
      fail(ErrorKind::BadParameters, "bad coefficient '" + item + "'");
    }
  }
  require(!out.empty(), ErrorKind::BadParameters, "empty coefficient list");
  return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  try {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
      const auto v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, colon)), std::stoul(text.substr(colon + 1))};
  } catch (const std::logic_error&) {
    fail(ErrorKind::BadParameters, "bad range '" + text + "'");
  }
}

struct ChannelFlags {
  std::optional<std::size_t> a, b, e, w, tau;

  void attach(CLI::App* app) {
    app->add_option("--a", a, "max random-only erasures per window");
    app->add_option("--b", b, "max burst length");
    app->add_option("--e", e, "max random erasures alongside the burst");
    app->add_option("--w", w, "window length");
    app->add_option("--tau", tau, "decoding delay");
  }

  ChannelParams channel() const {
    ChannelParams p{need(a, "a"), need(b, "b"), need(e, "e"), need(w, "w")};
    p.validate();
    return p;
  }

  StreamingParams streaming() const {
    StreamingParams s{channel(), need(tau, "tau")};
    return s;
  }

  json to_json() const {
    json j;
    for (auto [name, v] : {std::pair{"a", a}, {"b", b}, {"e", e}, {"w", w}, {"tau", tau}})
      if (v) j[name] = *v;
    return j;
  }
};

// ---------------------------------------------------------------------------
// Commands

struct ConstructFlags {
  std::string scheme;
  std::optional<std::size_t> n, b1, b2, r;
  std::optional<std::uint32_t> q;
  std::optional<std::string> h, out;
};

Outcome cmd_construct(const ConstructFlags& f) {
  Outcome o;
  o.config = {{"scheme", f.scheme}};
  std::optional<LinearCode> code;
  if (f.scheme == "c1" || f.scheme == "c1bin") {
    const auto n = need(f.n, "n"), b1 = need(f.b1, "b1"), b2 = need(f.b2, "b2");
    o.config.update({{"n", n}, {"b1", b1}, {"b2", b2}});
    if (f.scheme == "c1") {
      if (f.q) o.config["q"] = *f.q;
      code = construction_one(n, b1, b2, f.q);
    } else {
      require(!f.q, ErrorKind::BadParameters, "--q does not apply to c1bin");
      code = construction_one_binary(n, b1, b2);
    }
  } else if (f.scheme == "mds") {
    const auto n = need(f.n, "n"), r = need(f.r, "r");
    o.config.update({{"n", n}, {"r", r}});
    code = mds_code(n, r);
  } else {
    const auto n = need(f.n, "n");
    const auto q = need(f.q, "q");
    const auto coeffs = parse_coefficients(need(f.h, "h"));
    o.config.update({{"n", n}, {"q", q}, {"h", coeffs}});
    const Field field = Field::make(q);
    code = cyclic_from_h(n, field, Poly::from_values(field, coeffs)).base;
  }
  if (f.out) {
    io::write_code_file(*f.out, *code);
    o.config["out"] = *f.out;
  }
  o.result = {{"code", io::to_json(*code)}};
  return o;
}

struct VerifyFlags {
  std::string code_path;
  std::string check = "auto";
  std::optional<std::size_t> b1, b2;
  ChannelFlags channel;
};

Outcome cmd_verify(const VerifyFlags& f) {
  Outcome o;
  const LinearCode code = io::read_code_file(f.code_path);
  std::string check = f.check;
  if (check == "auto") check = f.channel.w ? "streaming" : "b1b2";
  o.config = {{"code", f.code_path}, {"check", check}, {"field", io::to_json(code.field().spec())}};

  VerificationReport report;
  if (check == "streaming") {
    const auto params = f.channel.streaming();
    o.config.update(f.channel.to_json());
    report = verify_streaming_code(code, params);
  } else if (check == "b1b2" || check == "wrap") {
    const auto b1 = need(f.b1, "b1"), b2 = need(f.b2, "b2");
    o.config.update({{"b1", b1}, {"b2", b2}});
    report = check == "b1b2" ? is_b1b2_code(code, b1, b2) : check_wraparound(code, b1, b2);
  } else {
    const auto b = need(f.channel.b, "b"), e = need(f.channel.e, "e");
    o.config.update({{"b", b}, {"e", e}});
    report = mds_subblock_check(code, b, e);
  }
  o.result = io::to_json(report);
  o.exit_code = report.verdict ? 0 : 1;
  return o;
}

struct AnalyzeFlags {
  std::optional<std::size_t> a, b, e, n;
  std::optional<std::string> w;
  std::optional<std::uint32_t> q;
  std::optional<std::string> h;
};

Outcome cmd_analyze_rate(const AnalyzeFlags& f) {
  Outcome o;
  const auto a = need(f.a, "a"), b = need(f.b, "b"), e = need(f.e, "e");
  const auto w_text = need(f.w, "w");
  const auto [lo, hi] = parse_range(w_text);
  require(lo <= hi, ErrorKind::BadParameters, "empty --w range");
  o.config = {{"a", a}, {"b", b}, {"e", e}, {"w", w_text}};
  json rows = json::array();
  for (std::size_t w = lo; w <= hi; ++w) {
    json row = {{"a", a}, {"b", b}, {"e", e}, {"w", w}};
    row.update(io::to_json(rate_report(ChannelParams{a, b, e, w})));
    rows.push_back(std::move(row));
  }
  if (lo == hi) {
    o.result = rows.front();
    o.result["prior_bound_scope"] = "any streaming code";
    o.result["r_opt_scope"] = "diagonal embedding, tau = w - 1";
  } else {
    o.result = {{"rows", rows}};
  }
  return o;
}

Outcome cmd_analyze_cyclic(const AnalyzeFlags& f) {
  Outcome o;
  const auto n = need(f.n, "n");
  const auto q = need(f.q, "q");
  const auto coeffs = parse_coefficients(need(f.h, "h"));
  const Field field = Field::make(q);
  const CyclicCode code = cyclic_from_h(n, field, Poly::from_values(field, coeffs));
  o.config = {{"n", n}, {"q", q}, {"h", coeffs}, {"field", io::to_json(field.spec())}};
  o.result = io::to_json(cyclic_report(code));
  o.result["k"] = code.base.k();
  o.result["burst_capability"] = cyclic_burst_capability(code);
  return o;
}

Outcome cmd_analyze_sparsity(const AnalyzeFlags& f) {
  Outcome o;
  const auto n = need(f.n, "n"), b = need(f.b, "b");
  o.config = {{"n", n}, {"b", b}};
  o.result = io::to_json(sparsity_report(n, b));
  return o;
}

Outcome cmd_analyze_fieldbound(const AnalyzeFlags& f) {
  Outcome o;
  const auto n = need(f.n, "n"), b = need(f.b, "b");
  o.config = {{"n", n}, {"b", b}};
  o.result = {{"sparse_field_lower_bound", sparse_field_lower_bound(n, b)},
              {"construction_one_q", smallest_prime_power_at_least(ceil_div(n, b))}};
  if (f.e) {
    o.config["e"] = *f.e;
    try {
      o.result["random_field_lower_bound"] = random_field_lower_bound(n, b, *f.e);
      o.result["random_field_lower_bound_assumes"] = "MDS conjecture";
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::OutOfScope) throw;
      o.result["random_field_lower_bound"] = nullptr;
      o.result["random_field_lower_bound_note"] = "only defined for e > 1";
    }
  }
  return o;
}

struct SearchFlags {
  std::optional<std::size_t> n, b1, b2, b, e;
  std::optional<std::uint32_t> q;
  std::optional<std::string> out;
};

Outcome cmd_search(const SearchFlags& f) {
  Outcome o;
  const auto n = need(f.n, "n");
  const auto q = need(f.q, "q");
  std::optional<LinearCode> found;
  if (f.b1 || f.b2) {
    const auto b1 = need(f.b1, "b1"), b2 = need(f.b2, "b2");
    o.config = {{"family", "b1b2"}, {"n", n}, {"b1", b1}, {"b2", b2}, {"q", q}};
    found = exhaustive_code_search(n, b1, b2, q);
  } else {
    const auto b = need(f.b, "b"), e = need(f.e, "e");
    o.config = {{"family", "burst_random"}, {"n", n}, {"b", b}, {"e", e}, {"q", q}};
    found = exhaustive_burst_random_search(n, b, e, q);
  }
  o.config["field"] = io::to_json(Field::make(q).spec());
  if (found) {
    o.result = {{"found", true}, {"code", io::to_json(*found)}};
    if (f.out) {
      io::write_code_file(*f.out, *found);
      o.config["out"] = *f.out;
    }
  } else {
    o.result = {{"found", false}, {"code", nullptr}};
    o.exit_code = 1;
  }
  return o;
}

struct SimulateFlags {
  std::string code_path;
  std::string source = "none";
  std::optional<std::size_t> periods, length;
  std::uint64_t seed = 0;
  double p_gb = 0.0, p_bg = 0.0, e_good = 0.0, e_bad = 0.0;
  ChannelFlags channel;
};

Outcome cmd_simulate(const SimulateFlags& f) {
  Outcome o;
  const LinearCode code = io::read_code_file(f.code_path);
  const auto params = f.channel.streaming();
  LossSource src;
  if (f.source == "periodic") {
    src.kind = LossSource::Kind::Periodic;
    src.periods = need(f.periods, "periods");
  } else if (f.source == "ge") {
    src.kind = LossSource::Kind::GilbertElliott;
    src.length = need(f.length, "length");
    src.model = GilbertElliott{f.p_gb, f.p_bg, f.e_good, f.e_bad};
  } else {
    src.kind = LossSource::Kind::Lossless;
    src.length = need(f.length, "length");
  }
  o.config = f.channel.to_json();
  o.config.update({{"code", f.code_path},
                   {"source", src.name()},
                   {"seed", f.seed},
                   {"rng", kRngAlgorithm},
                   {"field", io::to_json(code.field().spec())}});
  if (src.kind == LossSource::Kind::Periodic) o.config["periods"] = src.periods;
  if (src.kind != LossSource::Kind::Periodic) o.config["length"] = src.length;
  if (src.kind == LossSource::Kind::GilbertElliott)
    o.config.update({{"p_gb", f.p_gb}, {"p_bg", f.p_bg}, {"e_good", f.e_good}, {"e_bad", f.e_bad}});

  const SimulationSummary s = simulate(code, params, src, f.seed);
  o.result = io::to_json(s);
  o.exit_code = (s.messages_failed == 0 && s.deadline_misses == 0) ? 0 : 1;
  return o;
}

void report_error(std::ostream& err, std::string_view kind, const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify and analyze burst+random erasure streaming codes", "erasurelab"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::string format_name = "json";
  app.add_option("--format", format_name, "output format")->check(CLI::IsMember({"json", "csv", "table"}));

  std::function<Outcome()> action;
  std::string command;

  ConstructFlags cf;
  auto* construct = app.add_subcommand("construct", "build a code and emit its code file");
  construct->fallthrough();
  construct->add_option("--scheme", cf.scheme)->required()->check(CLI::IsMember({"c1", "c1bin", "mds", "cyclic"}));
  construct->add_option("--n", cf.n);
  construct->add_option("--b1", cf.b1);
  construct->add_option("--b2", cf.b2);
  construct->add_option("--r", cf.r, "parity symbols (mds)");
  construct->add_option("--q", cf.q, "field size (c1 override, cyclic)");
  construct->add_option("--h", cf.h, "reciprocal polynomial, lowest degree first, e.g. 1,0,1,1,1");
  construct->add_option("--out", cf.out, "write the code file here");
  construct->callback([&] {
    command = "construct";
    action = [&] { return cmd_construct(cf); };
  });

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "verify a code file");
  verify->fallthrough();
  verify->add_option("--code", vf.code_path)->required();
  verify->add_option("--check", vf.check)->check(CLI::IsMember({"auto", "streaming", "b1b2", "wrap", "subblock"}));
  verify->add_option("--b1", vf.b1);
  verify->add_option("--b2", vf.b2);
  vf.channel.attach(verify);
  verify->callback([&] {
    command = "verify";
    action = [&] { return cmd_verify(vf); };
  });

  AnalyzeFlags af;
  auto* analyze = app.add_subcommand("analyze", "bounds and characterizations");
  analyze->fallthrough();
  analyze->require_subcommand(1);
  auto* rate = analyze->add_subcommand("rate", "optimal DE rate and the general bound");
  rate->fallthrough();
  rate->add_option("--a", af.a);
  rate->add_option("--b", af.b);
  rate->add_option("--e", af.e);
  rate->add_option("--w", af.w, "window length or LO:HI sweep");
  rate->callback([&] {
    command = "analyze rate";
    action = [&] { return cmd_analyze_rate(af); };
  });
  auto* cyclic = analyze->add_subcommand("cyclic", "minimum-distance bound for a cyclic code");
  cyclic->fallthrough();
  cyclic->add_option("--n", af.n);
  cyclic->add_option("--q", af.q);
  cyclic->add_option("--h", af.h);
  cyclic->callback([&] {
    command = "analyze cyclic";
    action = [&] { return cmd_analyze_cyclic(af); };
  });
  auto* sparsity = analyze->add_subcommand("sparsity", "sparsest systematic (b,1) parity-check");
  sparsity->fallthrough();
  sparsity->add_option("--n", af.n);
  sparsity->add_option("--b", af.b);
  sparsity->callback([&] {
    command = "analyze sparsity";
    action = [&] { return cmd_analyze_sparsity(af); };
  });
  auto* fieldbound = analyze->add_subcommand("fieldbound", "field-size lower bounds");
  fieldbound->fallthrough();
  fieldbound->add_option("--n", af.n);
  fieldbound->add_option("--b", af.b);
  fieldbound->add_option("--e", af.e);
  fieldbound->callback([&] {
    command = "analyze fieldbound";
    action = [&] { return cmd_analyze_fieldbound(af); };
  });

  SearchFlags sf;
  auto* search = app.add_subcommand("search", "exhaustive systematic code search");
  search->fallthrough();
  search->add_option("--n", sf.n);
  search->add_option("--b1", sf.b1);
  search->add_option("--b2", sf.b2);
  search->add_option("--b", sf.b);
  search->add_option("--e", sf.e);
  search->add_option("--q", sf.q);
  search->add_option("--out", sf.out);
  search->callback([&] {
    command = "search";
    action = [&] { return cmd_search(sf); };
  });

  SimulateFlags mf;
  auto* sim = app.add_subcommand("simulate", "stream simulation through a loss source");
  sim->fallthrough();
  sim->add_option("--code", mf.code_path)->required();
  mf.channel.attach(sim);
  sim->add_option("--source", mf.source)->check(CLI::IsMember({"none", "periodic", "ge"}));
  sim->add_option("--periods", mf.periods);
  sim->add_option("--length", mf.length);
  sim->add_option("--seed", mf.seed)->required();
  sim->add_option("--p-gb", mf.p_gb, "good -> bad transition probability");
  sim->add_option("--p-bg", mf.p_bg, "bad -> good transition probability");
  sim->add_option("--e-good", mf.e_good, "loss probability in the good state");
  sim->add_option("--e-bad", mf.e_bad, "loss probability in the bad state");
  sim->callback([&] {
    command = "simulate";
    action = [&] { return cmd_simulate(mf); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return 2;
  }

  const Format format = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Table;
  try {
    const Outcome o = action();
    render(format, command, o, out);
    return o.exit_code;
  } catch (const Error& e) {
    report_error(err, to_string(e.kind()), e.what());
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
  }
  return 2;
}

}  // namespace erasurelab::cli
