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

/* C interface to zclosure. Every function returns a status code; on failure
 * zc_last_error() describes the error for the calling thread. Strings
 * returned through char** out-parameters are owned by the caller and
 * released with zc_string_free. */
#ifndef ZCLOSURE_ZCLOSURE_H_
#define ZCLOSURE_ZCLOSURE_H_

#include <stdint.h>

#if defined(_WIN32)
#define ZC_API __declspec(dllexport)
#else
#define ZC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum zc_status {
  ZC_OK = 0,
  ZC_ERR_OTHER = 1,     /* domain errors, unexpected failures */
  ZC_ERR_PARSE = 2,     /* malformed input */
  ZC_ERR_BUDGET = 3,    /* budget or resource limit exhausted */
  ZC_ERR_INVARIANT = 4, /* internal consistency check failed */
};

typedef struct zc_config {
  int32_t max_field_degree; /* default 64 */
  int32_t max_bfs_length;   /* default 20 */
  int32_t max_restarts;     /* default 64 */
  double time_budget;       /* seconds; <= 0 means unlimited */
  uint64_t seed;            /* Cartan search seed, default 1 */
} zc_config;

typedef struct zc_group zc_group;

ZC_API const char* zc_version(void);
ZC_API const char* zc_last_error(void);
ZC_API void zc_config_default(zc_config* config);
ZC_API void zc_string_free(char* s);

/* Parses an input document and computes the closure. On ZC_OK and on
 * ZC_ERR_BUDGET *out receives a handle (partial for the latter); otherwise
 * *out is set to NULL. config may be NULL for defaults. */
ZC_API int zc_compute(const char* input_json, const zc_config* config, zc_group** out);
ZC_API void zc_group_free(zc_group* g);

/* Output document as JSON; indent < 0 gives compact output. */
ZC_API int zc_group_json(const zc_group* g, int indent, char** out);
ZC_API int zc_group_complete(const zc_group* g);
ZC_API int64_t zc_group_lie_dim(const zc_group* g);
ZC_API int64_t zc_group_component_count(const zc_group* g);
ZC_API int zc_group_certified(const zc_group* g);

/* Output checks that need no reference values. *failures receives a JSON
 * list of messages (empty when everything holds). */
ZC_API int zc_group_check(const zc_group* g, char** failures);

/* Membership of a JSON matrix. *component is -1 for non-members. */
ZC_API int zc_group_member(const zc_group* g, const char* matrix_json, const zc_config* config, int* is_member,
                           int64_t* component);

/* Built-in generator sets. */
ZC_API int zc_fixture_names(char** json_list);
ZC_API int zc_fixture_json(const char* name, char** input_json);

#ifdef __cplusplus
}
#endif

#endif /* ZCLOSURE_ZCLOSURE_H_ */
