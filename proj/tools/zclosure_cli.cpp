// Copyright 2026 The zclosure Authors
//
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

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "zclosure/zclosure.h"

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string fixture;
  bool as_json = false;
  bool verbose = false;
  bool check = false;
  int max_field_degree = 64;
  int max_bfs_length = 20;
  int max_restarts = 64;
  double time_budget = 0;
  std::uint64_t seed = 1;
};

struct StringDeleter {
  void operator()(char* s) const { zc_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct GroupDeleter {
  void operator()(zc_group* g) const { zc_group_free(g); }
};
using Group = std::unique_ptr<zc_group, GroupDeleter>;

int report(int status) {
  std::cerr << "zclosure: " << zc_last_error() << "\n";
  return status;
}

// Reads PATH, "-" for stdin. Unreadable files count as parse errors.
bool read_text(const std::string& path, std::string& out) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) return false;
    ss << f.rdbuf();
  }
  out = ss.str();
  return true;
}

void add_run_options(CLI::App& app, Options& o) {
  auto* in = app.add_option("--input", o.input, "input document (JSON), - for stdin");
  auto* fx = app.add_option("--fixture", o.fixture, "built-in generator set (g2, a3, b2)");
  in->excludes(fx);
  fx->excludes(in);
  app.add_option("--max-field-degree", o.max_field_degree, "largest splitting field degree")
      ->envname("ZCLOSURE_MAX_FIELD_DEGREE")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-bfs-length", o.max_bfs_length, "longest product length in the coset search")
      ->envname("ZCLOSURE_MAX_BFS_LENGTH")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-restarts", o.max_restarts, "most restarts of the closure loop")
      ->envname("ZCLOSURE_MAX_RESTARTS")
      ->check(CLI::PositiveNumber);
  app.add_option("--time-budget", o.time_budget, "wall-clock budget in seconds (0 = unlimited)")
      ->envname("ZCLOSURE_TIME_BUDGET")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "seed for the Cartan subalgebra search")->envname("ZCLOSURE_SEED");
}

zc_config make_config(const Options& o) {
  zc_config c;
  zc_config_default(&c);
  c.max_field_degree = o.max_field_degree;
  c.max_bfs_length = o.max_bfs_length;
  c.max_restarts = o.max_restarts;
  c.time_budget = o.time_budget;
  c.seed = o.seed;
  return c;
}

// Fetches the input document text; returns a status code.
int load_input(const Options& o, std::string& text) {
  if (!o.fixture.empty()) {
    char* s = nullptr;
    if (int st = zc_fixture_json(o.fixture.c_str(), &s); st != ZC_OK) return report(ZC_ERR_PARSE);
    text = CString(s).get();
    return ZC_OK;
  }
  if (o.input.empty()) {
    std::cerr << "zclosure: one of --input or --fixture is required\n";
    return ZC_ERR_PARSE;
  }
  if (!read_text(o.input, text)) {
    std::cerr << "zclosure: cannot read " << o.input << "\n";
    return ZC_ERR_PARSE;
  }
  return ZC_OK;
}

std::string entry_string(const json& e) {
  if (e.is_string()) return e.get<std::string>();
  std::string s = "[";
  for (size_t i = 0; i < e.size(); ++i) s += (i ? " " : "") + e[i].get<std::string>();
  return s + "]";
}

void print_matrix(std::ostream& os, const json& m) {
  for (const auto& row : m) {
    os << "    ";
    for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << entry_string(row[j]);
    os << "\n";
  }
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

void print_table(std::ostream& os, const json& d, bool verbose) {
  const auto& t = d["trace"];
  std::string field = "Q";
  if (d.contains("field")) field = "Q[x]/(" + join(d["field"].get<std::vector<std::string>>(), ",") + ")";
  os << "status            " << d["status"].get<std::string>() << "\n";
  if (d.contains("message")) os << "message           " << d["message"].get<std::string>() << "\n";
  os << "field             " << field << "\n"
     << "n                 " << d["n"] << "\n"
     << "lie_dim           " << d["lie_dim"] << "\n"
     << "component_count   " << d["component_count"] << "\n"
     << "certified         " << (d["certified"].get<bool>() ? "yes" : "no") << "\n"
     << "rounds            " << t["rounds"] << "\n"
     << "dim_history       " << join(t["dim_history"].get<std::vector<size_t>>(), " -> ") << "\n"
     << "bfs_lengths       " << join(t["bfs_lengths"].get<std::vector<size_t>>(), " ") << "\n"
     << "field_degree      " << t["max_field_degree"] << "\n"
     << "multrel           " << t["multrel_calls"] << " calls, " << t["multrel_time"].get<double>() << " s\n"
     << "membership        " << t["membership_calls"] << " calls, " << t["membership_time"].get<double>()
     << " s\n"
     << "total_time        " << t["total_time"].get<double>() << " s\n";
  if (!verbose) return;
  size_t i = 0;
  for (const auto& m : d["lie_basis"]) {
    os << "lie_basis[" << i++ << "]\n";
    print_matrix(os, m);
  }
  i = 0;
  for (const auto& m : d["component_reps"]) {
    os << "component_reps[" << i++ << "]\n";
    print_matrix(os, m);
  }
}

// Computes the closure; on success or budget exhaustion `g` holds a handle.
int compute(const Options& o, Group& g) {
  std::string text;
  if (int st = load_input(o, text); st != ZC_OK) return st;
  const zc_config cfg = make_config(o);
  zc_group* raw = nullptr;
  const int st = zc_compute(text.c_str(), &cfg, &raw);
  g.reset(raw);
  return st;
}

int emit(const Options& o, const zc_group* g) {
  char* s = nullptr;
  if (int st = zc_group_json(g, o.as_json ? 2 : -1, &s); st != ZC_OK) return report(st);
  const CString text(s);
  if (o.as_json)
    std::cout << text.get() << "\n";
  else
    print_table(std::cout, json::parse(text.get()), o.verbose);
  return ZC_OK;
}

int run_closure(const Options& o) {
  Group g;
  const int st = compute(o, g);
  if (st != ZC_OK && st != ZC_ERR_BUDGET) return report(st);
  if (st == ZC_ERR_BUDGET) {
    std::cerr << "zclosure: " << zc_last_error() << "\n";
    if (!g) return st;
  }
  if (int e = emit(o, g.get()); e != ZC_OK) return e;
  if (st != ZC_OK) return st;
  if (!zc_group_certified(g.get()))
    std::cerr << "zclosure: warning: a relation lattice was not certified; the Lie algebra may be too small\n";
  if (o.check) {
    char* s = nullptr;
    if (int c = zc_group_check(g.get(), &s); c != ZC_OK) return report(c);
    const json failures = json::parse(CString(s).get());
    for (const auto& f : failures) std::cerr << "zclosure: invariant failed: " << f.get<std::string>() << "\n";
    if (!failures.empty()) return ZC_ERR_INVARIANT;
  }
  return ZC_OK;
}

int run_member(const Options& o, const std::string& matrix_arg) {
  std::string mtext = matrix_arg;
  if (!matrix_arg.empty() && matrix_arg.front() != '[' && !read_text(matrix_arg, mtext)) {
    std::cerr << "zclosure: cannot read " << matrix_arg << "\n";
    return ZC_ERR_PARSE;
  }
  Group g;
  if (int st = compute(o, g); st != ZC_OK) return report(st);
  int is_member = 0;
  int64_t comp = -1;
  const zc_config cfg = make_config(o);
  if (int st = zc_group_member(g.get(), mtext.c_str(), &cfg, &is_member, &comp); st != ZC_OK) return report(st);
  if (o.as_json) {
    json j{{"member", is_member != 0}};
    j["component_index"] = comp >= 0 ? json(comp) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (is_member ? "member, component " + std::to_string(comp) : std::string("not a member")) << "\n";
  }
  return ZC_OK;
}

int run_fixtures(const std::string& show) {
  char* s = nullptr;
  if (!show.empty()) {
    if (int st = zc_fixture_json(show.c_str(), &s); st != ZC_OK) return report(ZC_ERR_PARSE);
    std::cout << CString(s).get() << "\n";
    return ZC_OK;
  }
  if (int st = zc_fixture_names(&s); st != ZC_OK) return report(st);
  for (const auto& f : json::parse(CString(s).get()))
    std::cout << f["name"].get<std::string>() << "  " << f["generators"] << " generators of size " << f["n"] << "  "
              << f["description"].get<std::string>() << "\n";
  return ZC_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zariski closure of a finitely generated matrix group"};
  app.set_version_flag("--version", std::string(zc_version()));
  Options opts;
  add_run_options(app, opts);
  app.add_flag("--json", opts.as_json, "print the output document as JSON");
  app.add_flag("--verbose", opts.verbose, "include the Lie basis and component representatives");
  app.add_flag("--check", opts.check, "verify output invariants (exit 4 on failure)");

  Options mopts;
  std::string matrix;
  auto* member = app.add_subcommand("member", "test membership of a matrix in the closure");
  add_run_options(*member, mopts);
  member->add_flag("--json", mopts.as_json, "print the verdict as JSON");
  member->add_option("--matrix", matrix, "matrix as JSON text or a file containing it")->required();

  std::string show;
  auto* fx = app.add_subcommand("fixtures", "list the built-in generator sets");
  fx->add_option("--show", show, "print one fixture as an input document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ZC_ERR_PARSE;
  }
  if (*member) return run_member(mopts, matrix);
  if (*fx) return run_fixtures(show);
  return run_closure(opts);
}
