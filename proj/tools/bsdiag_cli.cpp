// Copyright 2026 The bsdiag Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// bsdiag: command-line front end over the C library.
//
// Exit codes: 0 ok, 1 validation failure, 2 budget exceeded, 3 verification
// failure.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bsdiag/bsdiag.h"

namespace {

struct GraphDeleter {
  void operator()(bsd_graph* g) const { bsd_graph_free(g); }
};
using GraphHandle = std::unique_ptr<bsd_graph, GraphDeleter>;

struct Common {
  int n = 4;
  std::string out;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  bool timing = false;
};

int fail(bsd_status status) {
  std::cerr << "bsdiag: " << bsd_last_error() << "\n";
  return static_cast<int>(status);
}

int write_output(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "bsdiag: cannot open " << path << " for writing\n";
    return 1;
  }
  f << text;
  return 0;
}

// Writes the returned text (if any) and maps the status to an exit code.
// Takes the slot by address: argument evaluation order is unspecified, so the
// pointer must be read after the producing call has filled it.
int finish(bsd_status status, char* const* slot, const std::string& path) {
  int code = 0;
  if (char* text = *slot) {
    code = write_output(path, text);
    bsd_string_free(text);
  }
  if (status != BSD_OK) return fail(status);
  return code;
}

unsigned threads_or_env(unsigned flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("BSDIAG_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 0;
}

bsd_options options_from(const Common& c) {
  bsd_options o;
  bsd_options_init(&o);
  o.threads = threads_or_env(c.threads);
  o.seed = c.seed;
  o.include_timing = c.timing ? 1 : 0;
  return o;
}

int open_graph(int n, GraphHandle& g) {
  bsd_graph* raw = nullptr;
  const bsd_status s = bsd_graph_bubble_sort(n, &raw);
  if (s != BSD_OK) return fail(s);
  g.reset(raw);
  return 0;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CLI::ValidationError("--syndrome", "cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void add_common(CLI::App* cmd, Common& c, bool with_n = true) {
  if (with_n) cmd->add_option("--n", c.n, "Bubble-sort graph dimension")->required()->check(CLI::Range(2, 9));
  cmd->add_option("--out,-o", c.out, "Output file (default stdout)");
}

void add_search(CLI::App* cmd, Common& c) {
  cmd->add_option("--threads", c.threads, "Worker threads (default BSDIAG_THREADS or all cores)");
  cmd->add_option("--seed", c.seed, "Random seed");
  cmd->add_flag("--timing", c.timing, "Include wall-clock fields in JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fault diagnosis of bubble-sort graphs under the PMC model"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bsd_version()));

  Common c;

  std::string format = "edge-list";
  auto* gen = app.add_subcommand("gen", "Export B_n as an edge list or DOT");
  add_common(gen, c);
  gen->add_option("--format", format, "edge-list|dot")->check(CLI::IsMember({"edge-list", "dot"}));

  auto* props = app.add_subcommand("props", "Order, size, degree, connectivity, diameter");
  add_common(props, c);

  std::string x, y;
  auto* witness = app.add_subcommand("witness", "Pair-edge witness for the 4n-11 upper bound");
  add_common(witness, c);
  witness->add_option("--x", x, "Pair-edge endpoint label");
  witness->add_option("--y", y, "Pair-edge endpoint label");

  std::string mode = "exhaustive";
  std::uint64_t samples = 100000;
  int max_t = 8;
  bool override_guards = false;
  auto* tc = app.add_subcommand("tc", "Conditional diagnosability report");
  add_common(tc, c);
  add_search(tc, c);
  tc->add_option("--mode", mode, "exhaustive|randomized|witness-only")
      ->check(CLI::IsMember({"exhaustive", "randomized", "witness-only"}));
  tc->add_option("--samples", samples, "Samples for randomized mode")->check(CLI::PositiveNumber);
  tc->add_option("--max-t", max_t, "Largest value an exhaustive run may certify")->check(CLI::PositiveNumber);
  tc->add_flag("--override-guards", override_guards, "Lift the exhaustive size guards");

  auto* t = app.add_subcommand("t", "Ordinary diagnosability report (exhaustive)");
  add_common(t, c);
  add_search(t, c);
  t->add_option("--max-t", max_t, "Largest value the run may certify")->check(CLI::PositiveNumber);
  t->add_flag("--override-guards", override_guards, "Lift the exhaustive size guards");

  std::string faults, strategy = "zero";
  auto* simulate = app.add_subcommand("simulate", "Generate a syndrome for a fault set");
  add_common(simulate, c);
  simulate->add_option("--faults", faults, "Comma-separated permutation labels");
  simulate->add_option("--strategy", strategy, "zero|one|random")->check(CLI::IsMember({"zero", "one", "random"}));
  simulate->add_option("--seed", c.seed, "Seed for the random strategy");

  std::string syndrome_path;
  int bound = 0;
  bool conditional = false;
  auto* diag = app.add_subcommand("diagnose", "Identify the fault set behind a syndrome");
  add_common(diag, c);
  diag->add_option("--syndrome", syndrome_path, "Syndrome JSON file ('-' for stdin)")->required();
  diag->add_option("--t", bound, "Fault bound")->required()->check(CLI::NonNegativeNumber);
  diag->add_flag("--conditional", conditional, "Only consider conditional fault sets");

  std::string suite = "paper", table = "json", csv_path;
  auto* verify = app.add_subcommand("verify", "Run the built-in verification suite");
  add_common(verify, c, false);
  add_search(verify, c);
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember({"paper"}));
  verify->add_option("--format", table, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--csv", csv_path, "Also write the CSV table to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    GraphHandle g;
    char* text = nullptr;
    if (*verify) {
      const bsd_options o = options_from(c);
      if (!csv_path.empty()) {
        char* csv = nullptr;
        const bsd_status s = bsd_verify_suite(suite.c_str(), &o, BSD_TABLE_CSV, &csv);
        if (csv) {
          if (write_output(csv_path, csv) != 0) return 1;
          bsd_string_free(csv);
        }
        if (s != BSD_OK && s != BSD_ERR_VERIFY) return fail(s);
      }
      const bsd_status s =
          bsd_verify_suite(suite.c_str(), &o, table == "csv" ? BSD_TABLE_CSV : BSD_TABLE_JSON, &text);
      return finish(s, &text, c.out);
    }

    if (const int rc = open_graph(c.n, g); rc != 0) return rc;

    if (*gen) {
      return finish(bsd_graph_export(g.get(), format == "dot" ? BSD_EXPORT_DOT : BSD_EXPORT_EDGE_LIST, &text),
                    &text, c.out);
    }
    if (*props) return finish(bsd_graph_props_json(g.get(), &text), &text, c.out);
    if (*witness) {
      if (x.empty() != y.empty()) {
        std::cerr << "bsdiag: give both --x and --y, or neither\n";
        return 1;
      }
      return finish(bsd_witness_json(g.get(), x.empty() ? nullptr : x.c_str(), y.empty() ? nullptr : y.c_str(),
                                     &text),
                    &text, c.out);
    }
    if (*tc || *t) {
      bsd_options o = options_from(c);
      o.samples = samples;
      o.max_t = max_t;
      o.override_guards = override_guards ? 1 : 0;
      if (override_guards) std::cerr << "bsdiag: warning: exhaustive size guards lifted\n";
      if (*t) return finish(bsd_diagnosability_json(g.get(), &o, &text), &text, c.out);
      const bsd_search_mode m = mode == "randomized"     ? BSD_MODE_RANDOMIZED
                                : mode == "witness-only" ? BSD_MODE_WITNESS_ONLY
                                                         : BSD_MODE_EXHAUSTIVE;
      return finish(bsd_conditional_diagnosability_json(g.get(), m, &o, &text), &text, c.out);
    }
    if (*simulate) {
      const bsd_strategy s = strategy == "one"      ? BSD_STRATEGY_ONE
                             : strategy == "random" ? BSD_STRATEGY_RANDOM
                                                    : BSD_STRATEGY_ZERO;
      return finish(bsd_simulate_json(g.get(), faults.c_str(), s, c.seed, &text), &text, c.out);
    }
    if (*diag) {
      const std::string body = read_file(syndrome_path);
      return finish(bsd_diagnose_json(g.get(), body.c_str(), bound, conditional ? 1 : 0, &text), &text, c.out);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "bsdiag: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
