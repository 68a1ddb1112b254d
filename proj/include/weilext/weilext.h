/* Copyright 2026 The weilext Authors
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

#ifndef WEILEXT_WEILEXT_H_
#define WEILEXT_WEILEXT_H_

#include <stddef.h>

#if defined(__GNUC__)
#define WX_EXPORT __attribute__((visibility("default")))
#else
#define WX_EXPORT
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  WX_OK = 0,
  WX_ERR_CONFIG = 1,
  WX_ERR_PARSE = 2,
  WX_ERR_DOMAIN = 3,
  WX_ERR_BOUNDS = 4,
  WX_ERR_UNSUPPORTED = 5,
  WX_ERR_INTERNAL = 6
} wx_status;

typedef struct wx_options {
  unsigned trunc;     /* 0 means 4 */
  unsigned witt_len;  /* 0 means 2 */
  unsigned fdeg;      /* 0 means 3 */
  unsigned prec;      /* 0 means the Witt length */
  unsigned cohom_deg; /* 0 means twice the cocycle degree */
} wx_options;

typedef struct wx_presentation wx_presentation;
typedef struct wx_report wx_report;

/* Message of the last failed call on this thread; empty after success. */
WX_EXPORT const char* wx_last_error(void);

WX_EXPORT wx_status wx_presentation_parse(const char* text, const char* name, wx_presentation** out);
WX_EXPORT wx_status wx_presentation_load(const char* path, wx_presentation** out);
/* Canonical text; release with wx_string_free. */
WX_EXPORT wx_status wx_presentation_print(const wx_presentation* p, char** out);
WX_EXPORT size_t wx_presentation_ngens(const wx_presentation* p);
WX_EXPORT unsigned wx_presentation_irank(const wx_presentation* p);
WX_EXPORT void wx_presentation_free(wx_presentation* p);

/* echo is copied into the report; path is read as the input. opts may be NULL. */
WX_EXPORT wx_status wx_verify(const char* echo, const char* path, const wx_options* opts, wx_report** out);
WX_EXPORT wx_status wx_pipeline(const char* echo, const char* path, const char* const* steps, size_t nsteps,
                                const wx_options* opts, wx_report** out);
WX_EXPORT const char* wx_report_text(const wx_report* r);
/* 1 when every verification flag holds. */
WX_EXPORT int wx_report_passed(const wx_report* r);
WX_EXPORT void wx_report_free(wx_report* r);

/* p = 0 selects the rationals. */
WX_EXPORT wx_status wx_catalog_print(const char* name, unsigned p, char** out);
/* Names accepted by wx_catalog_print, space separated. */
WX_EXPORT wx_status wx_catalog_names(char** out);

WX_EXPORT void wx_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* WEILEXT_WEILEXT_H_ */
