// Copyright 2026 The weilext Authors
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

#include "weilext/weilext.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "weilext/catalog.hh"
#include "weilext/commands.hh"
#include "weilext/presentation.hh"

struct wx_presentation {
  wx::Presentation value;
};

struct wx_report {
  wx::Report value;
};

namespace {

thread_local std::string last_error;

wx_status status_of(wx::Error::Kind k) {
  switch (k) {
    case wx::Error::Kind::config: return WX_ERR_CONFIG;
    case wx::Error::Kind::parse: return WX_ERR_PARSE;
    case wx::Error::Kind::domain: return WX_ERR_DOMAIN;
    case wx::Error::Kind::bounds: return WX_ERR_BOUNDS;
    case wx::Error::Kind::unsupported: return WX_ERR_UNSUPPORTED;
  }
  return WX_ERR_INTERNAL;
}

// Runs f, turning exceptions into a status and the thread's last error.
template <class F>
wx_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return WX_OK;
  } catch (const wx::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
  }
  return WX_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
  if (!p) throw wx::Error(wx::Error::Kind::config, std::string(what) + " is NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wx::CommandOptions options(const wx_options* o) {
  wx::CommandOptions c;
  if (!o) return c;
  if (o->trunc) c.trunc = o->trunc;
  if (o->witt_len) c.witt_len = o->witt_len;
  if (o->fdeg) c.fdeg = o->fdeg;
  c.prec = o->prec;
  c.cohom_deg = o->cohom_deg;
  return c;
}

}  // namespace

extern "C" {

const char* wx_last_error(void) { return last_error.c_str(); }

wx_status wx_presentation_parse(const char* text, const char* name, wx_presentation** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new wx_presentation{wx::parse_presentation(text, name ? name : "")};
  });
}

wx_status wx_presentation_load(const char* path, wx_presentation** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new wx_presentation{wx::load_presentation(path)};
  });
}

wx_status wx_presentation_print(const wx_presentation* p, char** out) {
  return guarded([&] {
    require(p, "presentation");
    require(out, "out");
    *out = dup(wx::print_presentation(p->value));
  });
}

size_t wx_presentation_ngens(const wx_presentation* p) { return p ? p->value.group.ngens() : 0; }
unsigned wx_presentation_irank(const wx_presentation* p) { return p ? p->value.group.irank() : 0; }
void wx_presentation_free(wx_presentation* p) { delete p; }

wx_status wx_verify(const char* echo, const char* path, const wx_options* opts, wx_report** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new wx_report{wx::run_verify(echo ? echo : "", wx::read_command_input(path), options(opts))};
  });
}

wx_status wx_pipeline(const char* echo, const char* path, const char* const* steps, size_t nsteps,
                      const wx_options* opts, wx_report** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    if (nsteps) require(steps, "steps");
    std::vector<std::string> s;
    for (size_t i = 0; i < nsteps; ++i) {
      require(steps[i], "step");
      s.emplace_back(steps[i]);
    }
    *out = new wx_report{wx::run_pipeline(echo ? echo : "", wx::read_command_input(path), s, options(opts))};
  });
}

const char* wx_report_text(const wx_report* r) { return r ? r->value.text.c_str() : ""; }
int wx_report_passed(const wx_report* r) { return r && r->value.passed() ? 1 : 0; }
void wx_report_free(wx_report* r) { delete r; }

wx_status wx_catalog_print(const char* name, unsigned p, char** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = dup(wx::catalog_text(name, p));
  });
}

wx_status wx_catalog_names(char** out) {
  return guarded([&] {
    require(out, "out");
    std::string s;
    for (auto& n : wx::catalog::names()) s += (s.empty() ? "" : " ") + n;
    *out = dup(s);
  });
}

void wx_string_free(char* s) { std::free(s); }

}  // extern "C"
