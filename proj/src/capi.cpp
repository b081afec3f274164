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

#include "zclosure/zclosure.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "json.hpp"
#include "zclosure/document.hpp"
#include "zclosure/fixtures.hpp"

struct zc_group {
  zc::InputDocument input;
  zc::ClosureConfig config;
  std::optional<zc::ComputedGroup> group;  // empty for a partial result
  zc::OutputDocument output;
};

namespace {

thread_local std::string g_last_error;

int fail(int status, const std::string& what) {
  g_last_error = what;
  return status;
}

int status_of(zc::ErrorKind k) {
  switch (k) {
    case zc::ErrorKind::kParse:
      return ZC_ERR_PARSE;
    case zc::ErrorKind::kBudget:
    case zc::ErrorKind::kResourceLimit:
      return ZC_ERR_BUDGET;
    case zc::ErrorKind::kInvariant:
      return ZC_ERR_INVARIANT;
    case zc::ErrorKind::kDomain:
      break;
  }
  return ZC_ERR_OTHER;
}

// Runs fn, mapping exceptions onto status codes.
template <class Fn>
int guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const zc::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZC_ERR_BUDGET, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZC_ERR_OTHER, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

zc::ClosureConfig to_config(const zc_config* c) {
  zc_config d;
  zc_config_default(&d);
  if (!c) c = &d;
  if (c->max_field_degree < 1 || c->max_bfs_length < 1 || c->max_restarts < 1)
    throw zc::ParseError("configuration limits must be positive");
  zc::ClosureConfig cfg;
  cfg.limits.max_field_degree = c->max_field_degree;
  cfg.max_bfs_length = static_cast<size_t>(c->max_bfs_length);
  cfg.max_restarts = static_cast<size_t>(c->max_restarts);
  if (c->time_budget > 0) cfg.time_budget = c->time_budget;
  cfg.seed = c->seed;
  return cfg;
}

}  // namespace

extern "C" {

const char* zc_version(void) { return "0.1.0"; }

const char* zc_last_error(void) { return g_last_error.c_str(); }

void zc_config_default(zc_config* config) {
  if (!config) return;
  config->max_field_degree = 64;
  config->max_bfs_length = 20;
  config->max_restarts = 64;
  config->time_budget = 0;
  config->seed = 1;
}

void zc_string_free(char* s) { std::free(s); }

int zc_compute(const char* input_json, const zc_config* config, zc_group** out) {
  if (out) *out = nullptr;
  if (!input_json || !out) return fail(ZC_ERR_OTHER, "null argument");
  return guarded([&] {
    auto h = std::make_unique<zc_group>();
    h->config = to_config(config);
    h->input = zc::parse_input_document(input_json);
    try {
      h->group = zc::compute_group(h->input, h->config);
      h->output = zc::describe(*h->group);
    } catch (const zc::BudgetExhausted& e) {
      h->output = zc::describe_partial(e.trace, h->input.field, h->input.size(), e.what());
      *out = h.release();
      return fail(ZC_ERR_BUDGET, e.what());
    }
    *out = h.release();
    return static_cast<int>(ZC_OK);
  });
}

void zc_group_free(zc_group* g) { delete g; }

int zc_group_json(const zc_group* g, int indent, char** out) {
  if (!g || !out) return fail(ZC_ERR_OTHER, "null argument");
  return guarded([&] {
    *out = dup_string(zc::output_to_json(g->output, indent));
    return static_cast<int>(ZC_OK);
  });
}

int zc_group_complete(const zc_group* g) { return g && g->group ? 1 : 0; }

int64_t zc_group_lie_dim(const zc_group* g) { return g ? static_cast<int64_t>(g->output.lie_dim) : -1; }

int64_t zc_group_component_count(const zc_group* g) {
  return g ? static_cast<int64_t>(g->output.component_count) : -1;
}

int zc_group_certified(const zc_group* g) { return g && g->output.certified ? 1 : 0; }

int zc_group_check(const zc_group* g, char** failures) {
  if (!g || !failures) return fail(ZC_ERR_OTHER, "null argument");
  if (!g->group) return fail(ZC_ERR_BUDGET, "partial result has no group to check");
  return guarded([&] {
    *failures = dup_string(nlohmann::json(zc::check_invariants(g->input, *g->group, g->config)).dump());
    return static_cast<int>(ZC_OK);
  });
}

int zc_group_member(const zc_group* g, const char* matrix_json, const zc_config* config, int* is_member,
                    int64_t* component) {
  if (!g || !matrix_json || !is_member || !component) return fail(ZC_ERR_OTHER, "null argument");
  if (!g->group) return fail(ZC_ERR_BUDGET, "partial result has no group to query");
  return guarded([&] {
    const zc::ClosureConfig cfg = config ? to_config(config) : g->config;
    const auto v = zc::member_from_json(*g->group, matrix_json, cfg);
    *is_member = v.member ? 1 : 0;
    *component = v.component_index ? static_cast<int64_t>(*v.component_index) : -1;
    return static_cast<int>(ZC_OK);
  });
}

int zc_fixture_names(char** json_list) {
  if (!json_list) return fail(ZC_ERR_OTHER, "null argument");
  return guarded([&] {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& f : zc::fixtures())
      j.push_back({{"name", f.name}, {"description", f.description}, {"generators", f.generators.size()},
                   {"n", f.generators[0].rows()}});
    *json_list = dup_string(j.dump());
    return static_cast<int>(ZC_OK);
  });
}

int zc_fixture_json(const char* name, char** input_json) {
  if (!name || !input_json) return fail(ZC_ERR_OTHER, "null argument");
  return guarded([&] {
    zc::InputDocument doc;
    doc.rational_generators = zc::fixture(name).generators;
    *input_json = dup_string(zc::input_to_json(doc));
    return static_cast<int>(ZC_OK);
  });
}

}  // extern "C"
