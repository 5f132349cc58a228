/*
* Copyright (C) 2026 hetsleep developers
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#ifndef HETSLEEP_H
#define HETSLEEP_H

#include <stddef.h>
#include <stdint.h>

#if defined(HETSLEEP_BUILDING_LIBRARY)
#define HETSLEEP_API __attribute__((visibility("default")))
#else
#define HETSLEEP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hetsleep_status
{
    HETSLEEP_OK = 0,
    HETSLEEP_ERR_CONFIG = 1,
    HETSLEEP_ERR_VALIDATION = 2,
    HETSLEEP_ERR_IO = 3,
    HETSLEEP_ERR_INVALID_ARGUMENT = 4,
    HETSLEEP_ERR_CAPACITY = 5,
    HETSLEEP_ERR_INTERNAL = 6
} hetsleep_status;

typedef struct hetsleep_config hetsleep_config;
typedef struct hetsleep_report hetsleep_report;

/* Message of the last failed call on this thread; never NULL. */
HETSLEEP_API const char* hetsleep_last_error(void);
HETSLEEP_API const char* hetsleep_version(void);

/* Configuration with every built-in default. */
HETSLEEP_API hetsleep_status hetsleep_config_create(hetsleep_config** out);
HETSLEEP_API hetsleep_status hetsleep_config_load(const char* path, hetsleep_config** out);
/* Sets one "key = value" entry, same keys as the config file. */
HETSLEEP_API hetsleep_status hetsleep_config_set(hetsleep_config* cfg, const char* key, const char* value);
/* Writes the full configuration as a config file. */
HETSLEEP_API hetsleep_status hetsleep_config_write(const hetsleep_config* cfg, const char* path);
HETSLEEP_API void hetsleep_config_destroy(hetsleep_config* cfg);

/* Runs the configured strategy for one seed and writes its CSV to out_dir. */
HETSLEEP_API hetsleep_status hetsleep_run(const hetsleep_config* cfg, uint64_t seed, const char* out_dir, int force);
/* Runs the sweep over every configured seed; writes run files and aggregate.csv. */
HETSLEEP_API hetsleep_status hetsleep_sweep(const hetsleep_config* cfg, const char* out_dir, int force);
/* Brute-force table of every super-arm for the deployment of `seed`. */
HETSLEEP_API hetsleep_status hetsleep_oracle_bench(const hetsleep_config* cfg, uint64_t seed, const char* out_dir,
                                                   int force);

/* Runs the property suite. Returns HETSLEEP_ERR_VALIDATION when any property
 * fails; the report is produced either way. */
HETSLEEP_API hetsleep_status hetsleep_validate(const hetsleep_config* cfg, uint64_t seed, hetsleep_report** out);
HETSLEEP_API const char* hetsleep_report_text(const hetsleep_report* report);
HETSLEEP_API size_t hetsleep_report_passed(const hetsleep_report* report);
HETSLEEP_API size_t hetsleep_report_failed(const hetsleep_report* report);
HETSLEEP_API void hetsleep_report_destroy(hetsleep_report* report);

#ifdef __cplusplus
}
#endif

#endif /* HETSLEEP_H */
