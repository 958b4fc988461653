// nicolai: enumeration, counting, verification, spectra and charge-word
// generation for the Nicolai chain.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource limit.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nicolai/charges.h"
#include "nicolai/ground_states.h"
#include "nicolai/model.h"
#include "nicolai/serialize.h"
#include "nicolai/suites.h"

using namespace nicolai;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kResource = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::uint64_t max_dim = std::uint64_t{1} << 14;
  std::string data_dir;

  int n = 1;
  std::string kind;
  std::string method = "transfer";
  std::string suite;
  std::string edge = "open";
  std::optional<int> sector;
  std::string target;
  std::string start = "fock";
  std::string word_file = "-";
};

/// A command's outcome before the envelope is attached. `rows` is set for
/// tabular payloads and drives CSV output.
struct Outcome {
  Json payload;
  bool ok = true;
  std::string reason;
  std::optional<std::vector<std::vector<std::string>>> rows;
  std::vector<std::string> header;
};

constexpr int kMaxSpectrumSites = 14;
constexpr int kMaxMatrixSuiteN = 4;
constexpr int kMaxEnumerateCountN = 12;

void require_n(int n) {
  if (n < 1) throw UsageError("--n must be at least 1");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Outcome cmd_enumerate(const Options& o) {
  require_n(o.n);
  Outcome r;
  r.rows.emplace();
  if (o.kind == "ground-configs") {
    r.payload = Json::array();
    r.header = {"index", "values"};
    for (const auto& g : enumerate_upsilon_hat(0, o.n)) {
      r.rows->push_back({std::to_string(r.payload.size()), g.to_string()});
      r.payload.push_back(g.to_string());
    }
  } else if (o.kind == "charges") {
    r.payload = Json::array();
    r.header = {"k", "l", "values", "operator"};
    for (const auto& f : enumerate_sequences(0, o.n)) {
      Json row = to_json(f);
      const std::string op = build_charge(f).monomial.to_string();
      row["operator"] = op;
      r.rows->push_back({std::to_string(f.interval().k()), std::to_string(f.interval().l()), f.to_string(), op});
      r.payload.push_back(std::move(row));
    }
  } else {
    throw UsageError("unknown enumeration kind '" + o.kind + "' (ground-configs|charges)");
  }
  return r;
}

Outcome cmd_count(const Options& o) {
  require_n(o.n);
  const bool transfer = o.method == "transfer" || o.method == "both";
  const bool enumerate = o.method == "enumerate" || o.method == "both";
  if (!transfer && !enumerate) throw UsageError("unknown method '" + o.method + "' (transfer|enumerate|both)");
  if (enumerate && o.n > kMaxEnumerateCountN)
    throw UsageError("enumerate method is limited to n <= " + std::to_string(kMaxEnumerateCountN));

  Outcome r;
  r.payload = Json::object();
  r.header = {"n", "method", "count"};
  r.rows.emplace();
  std::optional<std::string> t, e;
  if (transfer) {
    t = count_transfer(o.n).str();
    r.payload["transfer"] = *t;
    r.rows->push_back({std::to_string(o.n), "transfer", *t});
  }
  if (enumerate) {
    e = std::to_string(enumerate_upsilon_hat(0, o.n).size());
    r.payload["enumerate"] = *e;
    r.rows->push_back({std::to_string(o.n), "enumerate", *e});
  }
  r.payload["count"] = t ? *t : *e;
  if (t && e) {
    r.payload["agree"] = *t == *e;
    if (*t != *e) {
      r.ok = false;
      r.reason = "count_mismatch";
    }
  }
  return r;
}

Outcome cmd_verify(const Options& o) {
  std::vector<CheckResult> checks;
  if (o.suite == "fixtures") {
    checks = verify_fixtures_suite(o.data_dir.empty() ? default_fixture_dir() : std::filesystem::path(o.data_dir));
  } else {
    require_n(o.n);
    if (o.n > kMaxMatrixSuiteN) throw UsageError("matrix suites are limited to n <= " + std::to_string(kMaxMatrixSuiteN));
    if (o.suite == "algebra") {
      checks = verify_algebra_suite(o.n);
    } else if (o.suite == "charges") {
      checks = verify_charges_suite(o.n);
    } else if (o.suite == "classification") {
      checks = verify_classification_suite(o.n);
    } else {
      throw UsageError("unknown suite '" + o.suite + "' (algebra|charges|classification|fixtures)");
    }
  }
  Outcome r;
  r.payload = Json{{"suite", o.suite}, {"checks", Json::array()}};
  r.header = {"identity", "scope", "passed", "detail"};
  r.rows.emplace();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    r.payload["checks"].push_back({{"identity", c.identity}, {"scope", c.scope}, {"passed", c.passed}, {"detail", c.detail}});
    r.rows->push_back({c.identity, c.scope, c.passed ? "true" : "false", c.detail});
    failed += c.passed ? 0 : 1;
  }
  r.payload["total"] = checks.size();
  r.payload["failed"] = failed;
  if (failed > 0) {
    r.ok = false;
    r.reason = "identity_failed";
  }
  return r;
}

Outcome cmd_spectrum(const Options& o) {
  require_n(o.n);
  const EdgeMode edge = parse_edge_mode(o.edge);
  const Interval interval(0, o.n);
  const SiteWindow window = edge == EdgeMode::open ? interval.padded() : interval.inner();
  if (window.size() > kMaxSpectrumSites || window.dimension() > o.max_dim) {
    throw ResourceError("working window " + to_string(window) + " has " + std::to_string(window.size()) +
                        " sites (dimension " + std::to_string(window.dimension()) + "); limits are " +
                        std::to_string(kMaxSpectrumSites) + " sites and --max-dim " + std::to_string(o.max_dim));
  }
  if (o.sector && (*o.sector < 0 || *o.sector > window.size()))
    throw UsageError("--sector must lie in [0, " + std::to_string(window.size()) + "]");

  const ModelOperators m = build_supercharge(interval, edge);
  const SpectrumReport s = spectrum(m, o.sector);
  Outcome r;
  r.payload = Json{{"edge", to_string(edge)},
                   {"window", to_string(window)},
                   {"sector", s.sector_label()},
                   {"dimension", s.eigenvalues.size()},
                   {"min_eigenvalue", s.eigenvalues.empty() ? 0.0 : s.eigenvalues.front()},
                   {"kernel_dimension", s.kernel_dimension},
                   {"eigenvalues", s.eigenvalues}};
  r.header = {"index", "eigenvalue"};
  r.rows.emplace();
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    std::ostringstream v;
    v.precision(17);
    v << s.eigenvalues[i];
    r.rows->push_back({std::to_string(i), v.str()});
  }
  return r;
}

Json vector_to_json(const FockVector& v) {
  Json out = Json::object();
  for (const auto& [index, amp] : v.amplitudes()) out[OccupationConfig(v.window(), index).to_string()] = amp;
  return out;
}

Outcome cmd_generate(const Options& o) {
  require_n(o.n);
  const Interval interval(0, o.n);
  if (o.target.size() != static_cast<std::size_t>(interval.inner().size()))
    throw UsageError("--target must have " + std::to_string(interval.inner().size()) + " bits for n = " +
                     std::to_string(o.n));
  const OccupationConfig target = OccupationConfig::parse(interval.inner(), o.target);
  if (!is_open_boundary_ground_config(target, interval))
    throw UsageError("target " + o.target + " is not an open-boundary ground configuration");
  const StartVector start = parse_start_vector(o.start);

  Outcome r;
  try {
    const GenerationWord w = generate_word(target, start, 0, o.n);
    const bool matches = replay_matches(w);
    r.payload = Json{{"word", to_json(w)}, {"length", w.steps.size()}, {"replay_matches", matches}};
    if (!matches) {
      r.ok = false;
      r.reason = "replay_mismatch";
    }
  } catch (const GenerationFailure& e) {
    r.payload = Json{{"target", o.target}, {"start", o.start}, {"message", e.what()}};
    r.ok = false;
    r.reason = "unreachable";
  }
  return r;
}

Outcome cmd_replay(const Options& o) {
  std::string text;
  if (o.word_file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.word_file);
    if (!in) throw UsageError("cannot open " + o.word_file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed word JSON: ") + e.what());
  }
  // Accept a bare word or the full output of `generate`.
  if (j.contains("payload")) j = j.at("payload");
  if (j.contains("word")) j = j.at("word");

  GenerationWord w = [&] {
    try {
      return word_from_json(j);
    } catch (const Json::exception& e) {
      throw UsageError(std::string("malformed word JSON: ") + e.what());
    }
  }();
  const FockVector result = replay_word(w);
  const bool matches = result == FockVector::basis(w.target, w.predicted_sign);
  Outcome r;
  r.payload = Json{{"target", w.target.to_string()},
                   {"predicted_sign", w.predicted_sign},
                   {"length", w.steps.size()},
                   {"result", vector_to_json(result)},
                   {"matches", matches}};
  if (!matches) {
    r.ok = false;
    r.reason = "replay_mismatch";
  }
  return r;
}

Json parameters(const std::string& command, const Options& o) {
  Json p{{"format", o.format}, {"seed", o.seed}, {"max_dim", o.max_dim}};
  if (command == "enumerate") {
    p["kind"] = o.kind;
    p["n"] = o.n;
  } else if (command == "count") {
    p["n"] = o.n;
    p["method"] = o.method;
  } else if (command == "verify") {
    p["suite"] = o.suite;
    p["n"] = o.n;
    if (!o.data_dir.empty()) p["data_dir"] = o.data_dir;
  } else if (command == "spectrum") {
    p["n"] = o.n;
    p["edge"] = o.edge;
    p["sector"] = o.sector ? Json(*o.sector) : Json("all");
  } else if (command == "generate") {
    p["n"] = o.n;
    p["target"] = o.target;
    p["start"] = o.start;
  } else if (command == "replay") {
    p["word"] = o.word_file;
  }
  return p;
}

int emit(const std::string& command, const Options& o, const Outcome& r, double elapsed_ms) {
  if (o.format == "csv") {
    std::cout << [&] {
      std::string line;
      for (std::size_t i = 0; i < r.header.size(); ++i) line += (i ? "," : "") + r.header[i];
      return line;
    }() << '\n';
    for (const auto& row : *r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_field(row[i]);
      std::cout << '\n';
    }
    if (!r.ok) std::cerr << command << ": " << r.reason << '\n';
  } else {
    Json env{{"command", command}, {"parameters", parameters(command, o)}, {"payload", r.payload},
             {"status", r.ok ? "ok" : "failure"}};
    if (!r.ok) env["reason"] = r.reason;
    env["elapsed_ms"] = elapsed_ms;
    std::cout << env.dump(2) << '\n';
  }
  return r.ok ? kOk : kFailure;
}

int emit_error(const std::string& command, const Options& o, const std::string& reason, const std::string& message,
               int code) {
  if (o.format == "csv") {
    std::cerr << command << ": " << reason << ": " << message << '\n';
  } else {
    Json env{{"command", command}, {"parameters", parameters(command, o)}, {"payload", {{"message", message}}},
             {"status", "failure"}, {"reason", reason}, {"elapsed_ms", 0.0}};
    std::cout << env.dump(2) << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Nicolai chain: ground configurations, hidden charges and supersymmetry checks"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", o.seed, "Seed for randomized suites (echoed in the output)");
  app.add_option("--max-dim", o.max_dim, "Largest Hilbert-space dimension a matrix command may build");
  app.add_option("--data-dir", o.data_dir, "Directory holding fixture tables");

  auto* enumerate = app.add_subcommand("enumerate", "List ground configurations or conservation sequences on I(0,n)");
  enumerate->add_option("kind", o.kind, "ground-configs | charges")->required();
  enumerate->add_option("--n", o.n, "Interval length")->required();

  auto* count = app.add_subcommand("count", "Count open-boundary ground configurations on I(0,n)");
  count->add_option("--n", o.n, "Interval length")->required();
  count->add_option("--method", o.method, "transfer | enumerate | both");

  auto* verify = app.add_subcommand("verify", "Run an exact verification suite");
  verify->add_option("suite", o.suite, "algebra | charges | classification | fixtures")->required();
  verify->add_option("--n", o.n, "Interval length");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum and exact zero-mode count of H");
  spectrum_cmd->add_option("--n", o.n, "Interval length")->required();
  spectrum_cmd->add_option("--edge", o.edge, "open | closed");
  spectrum_cmd->add_option("--sector", o.sector, "Particle-number sector");

  auto* generate = app.add_subcommand("generate", "Find a charge word producing a ground configuration");
  generate->add_option("--n", o.n, "Interval length")->required();
  generate->add_option("--target", o.target, "Target bitstring on I(0,n)")->required();
  generate->add_option("--start", o.start, "fock | occupied");

  auto* replay = app.add_subcommand("replay", "Replay a serialized charge word");
  replay->add_option("--word", o.word_file, "Word JSON file, or - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome r;
    if (command == "enumerate") r = cmd_enumerate(o);
    else if (command == "count") r = cmd_count(o);
    else if (command == "verify") r = cmd_verify(o);
    else if (command == "spectrum") r = cmd_spectrum(o);
    else if (command == "generate") r = cmd_generate(o);
    else r = cmd_replay(o);

    if (o.format == "csv" && !r.rows) throw UsageError("command '" + command + "' has no tabular output; use --format json");
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return emit(command, o, r, ms);
  } catch (const UsageError& e) {
    return emit_error(command, o, "usage_error", e.what(), kUsage);
  } catch (const std::domain_error& e) {
    return emit_error(command, o, "usage_error", e.what(), kUsage);
  } catch (const std::invalid_argument& e) {
    return emit_error(command, o, "usage_error", e.what(), kUsage);
  } catch (const ResourceError& e) {
    return emit_error(command, o, "resource_limit", e.what(), kResource);
  } catch (const std::exception& e) {
    return emit_error(command, o, "internal_error", e.what(), kFailure);
  }
}
