/* Copyright 2026 The parascad Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the parascad kernel.
 *
 * Every function returns a psc_status. On failure the calling thread's last
 * error (psc_last_error_*) describes what went wrong; it stays valid until
 * the next failing call on the same thread. Strings and byte buffers handed
 * out by the library are owned by the caller and released with
 * psc_string_free / psc_bytes_free. Returned strings are NUL-terminated
 * UTF-8; JSON documents end with a newline.
 */

#ifndef PARASCAD_H_
#define PARASCAD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(PARASCAD_BUILDING)
#define PSC_API __declspec(dllexport)
#else
#define PSC_API __declspec(dllimport)
#endif
#else
#define PSC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum psc_status {
  PSC_OK = 0,
  PSC_ERROR_INVALID_ARGUMENT = 1, /* null pointer, bad format name */
  PSC_ERROR_PARSE = 2,            /* malformed or unsupported source */
  PSC_ERROR_EVAL = 3,             /* evaluation failed */
  PSC_ERROR_SELECTION = 4,        /* bad node path or handle id */
  PSC_ERROR_IO = 5,
  PSC_ERROR_INTERNAL = 6
} psc_status;

typedef struct psc_model psc_model;
typedef struct psc_analyzer psc_analyzer;

PSC_API const char* psc_version(void);

/* Last error on this thread. Message is empty and line/column are 0 when
 * there is none or it has no source location. The JSON form is the error
 * document also produced by the service. */
PSC_API const char* psc_last_error_message(void);
PSC_API const char* psc_last_error_kind(void);
PSC_API int psc_last_error_line(void);
PSC_API int psc_last_error_column(void);
PSC_API const char* psc_last_error_json(void);

PSC_API void psc_string_free(char* s);
PSC_API void psc_bytes_free(uint8_t* bytes);

/* Parses `source` and returns its canonical rendering, or the AST as JSON
 * when `as_json` is nonzero. */
PSC_API psc_status psc_parse(const char* source, size_t length, int as_json, char** out);

/* Parses and evaluates a program. `default_fn` <= 0 selects 32. */
PSC_API psc_status psc_model_compile(const char* source, size_t length, int default_fn,
                                     psc_model** out);
PSC_API void psc_model_free(psc_model* model);

PSC_API psc_status psc_model_scene_json(const psc_model* model, char** out);
PSC_API psc_status psc_model_stl(const psc_model* model, uint8_t** bytes, size_t* length);
/* `node` is a path such as "1/0"; `handle` is "i,j,k", "i,j" or "center". */
PSC_API psc_status psc_model_position_json(const psc_model* model, const char* node,
                                           const char* handle, char** out);
/* Selections are written "PATH:HANDLE", e.g. "3:2,1,1". */
PSC_API psc_status psc_model_delta_json(const psc_model* model, const char* from,
                                        const char* to, char** out);

PSC_API psc_status psc_analyzer_create(psc_analyzer** out);
PSC_API void psc_analyzer_free(psc_analyzer* analyzer);
/* Adds a file or a directory (searched recursively for .scad files). A
 * path that does not exist fails with PSC_ERROR_IO. */
PSC_API psc_status psc_analyzer_add_path(psc_analyzer* analyzer, const char* path);
PSC_API psc_status psc_analyzer_add_source(psc_analyzer* analyzer, const char* name,
                                           const char* source, size_t length);
/* `format` is "table", "csv" or "json". Files are analyzed in sorted name
 * order regardless of the order they were added. */
PSC_API psc_status psc_analyzer_render(psc_analyzer* analyzer, const char* format,
                                       char** out);

/* Serves the HTTP API on 127.0.0.1:`port` until the process ends.
 * `static_dir` may be NULL. */
PSC_API psc_status psc_serve(int port, const char* static_dir);

#ifdef __cplusplus
}
#endif

#endif /* PARASCAD_H_ */
