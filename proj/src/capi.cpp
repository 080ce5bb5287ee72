// Copyright 2026 The parascad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "parascad.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "json_util.h"
#include "parascad/analyzer.h"
#include "parascad/model.h"
#include "parascad/payload.h"
#include "parascad/service.h"

struct psc_model {
  std::shared_ptr<const parascad::Model> model;
};

struct psc_analyzer {
  // Name -> inline source, or nullopt to read the file of that name.
  std::map<std::string, std::optional<std::string>> entries;
  std::vector<parascad::FileError> errors;
};

namespace {

using parascad::Diagnostic;
using parascad::ErrorKind;

struct LastError {
  std::string message;
  std::string kind;
  std::string json;
  int line = 0;
  int column = 0;
};

thread_local LastError last_error;

psc_status status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Unsupported: return PSC_ERROR_PARSE;
    case ErrorKind::InvalidPath:
    case ErrorKind::InvalidHandle: return PSC_ERROR_SELECTION;
    case ErrorKind::Io: return PSC_ERROR_IO;
    default: return PSC_ERROR_EVAL;
  }
}

psc_status fail(psc_status status, const Diagnostic& d) {
  last_error.message = d.message;
  last_error.kind = std::string(parascad::error_kind_name(d.kind));
  last_error.json = parascad::error_payload(d);
  last_error.line = d.span ? d.span->start_line : 0;
  last_error.column = d.span ? d.span->start_column : 0;
  return status;
}

psc_status fail(psc_status status, const std::string& kind, const std::string& message) {
  last_error.message = message;
  last_error.kind = kind;
  parascad::detail::Json j{{"error", {{"kind", kind}, {"message", message}, {"span", nullptr}}}};
  last_error.json = j.dump() + "\n";
  last_error.line = 0;
  last_error.column = 0;
  return status;
}

psc_status invalid(const char* what) {
  return fail(PSC_ERROR_INVALID_ARGUMENT, "InvalidArgument", what);
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
psc_status guarded(F&& body) {
  try {
    body();
    return PSC_OK;
  } catch (const parascad::ParseError& e) {
    return fail(PSC_ERROR_PARSE, e.diagnostics().front());
  } catch (const parascad::Error& e) {
    return fail(status_for(e.kind()), e.diagnostic());
  } catch (const std::bad_alloc&) {
    return fail(PSC_ERROR_INTERNAL, "Internal", "out of memory");
  } catch (const std::exception& e) {
    return fail(PSC_ERROR_INTERNAL, "Internal", e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* psc_version(void) { return PARASCAD_VERSION; }

const char* psc_last_error_message(void) { return last_error.message.c_str(); }
const char* psc_last_error_kind(void) { return last_error.kind.c_str(); }
int psc_last_error_line(void) { return last_error.line; }
int psc_last_error_column(void) { return last_error.column; }
const char* psc_last_error_json(void) { return last_error.json.c_str(); }

void psc_string_free(char* s) { std::free(s); }
void psc_bytes_free(uint8_t* bytes) { std::free(bytes); }

psc_status psc_parse(const char* source, size_t length, int as_json, char** out) {
  if (!source || !out) return invalid("null argument to psc_parse");
  return guarded([&] {
    auto ast = parascad::parse(std::string_view(source, length));
    *out = copy_string(as_json ? parascad::ast_payload(*ast) : parascad::render_program(*ast));
  });
}

psc_status psc_model_compile(const char* source, size_t length, int default_fn,
                             psc_model** out) {
  if (!source || !out) return invalid("null argument to psc_model_compile");
  return guarded([&] {
    parascad::EvaluationOptions options;
    if (default_fn > 0) options.default_fn = default_fn;
    auto m = parascad::Model::compile(std::string_view(source, length), options);
    *out = new psc_model{std::move(m)};
  });
}

void psc_model_free(psc_model* model) { delete model; }

psc_status psc_model_scene_json(const psc_model* model, char** out) {
  if (!model || !out) return invalid("null argument to psc_model_scene_json");
  return guarded([&] { *out = copy_string(parascad::scene_payload(model->model->scene())); });
}

psc_status psc_model_stl(const psc_model* model, uint8_t** bytes, size_t* length) {
  if (!model || !bytes || !length) return invalid("null argument to psc_model_stl");
  return guarded([&] {
    auto stl = parascad::export_stl(model->model->scene());
    auto* buf = static_cast<uint8_t*>(std::malloc(stl.size()));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, stl.data(), stl.size());
    *bytes = buf;
    *length = stl.size();
  });
}

psc_status psc_model_position_json(const psc_model* model, const char* node,
                                   const char* handle, char** out) {
  if (!model || !node || !handle || !out)
    return invalid("null argument to psc_model_position_json");
  return guarded([&] {
    auto pos = model->model->position(parascad::parse_path(node),
                                      parascad::parse_handle_id(handle));
    *out = copy_string(parascad::vector_payload(pos));
  });
}

psc_status psc_model_delta_json(const psc_model* model, const char* from, const char* to,
                                char** out) {
  if (!model || !from || !to || !out) return invalid("null argument to psc_model_delta_json");
  return guarded([&] {
    auto d = model->model->delta(parascad::parse_selection(from), parascad::parse_selection(to));
    *out = copy_string(parascad::vector_payload(d));
  });
}

psc_status psc_analyzer_create(psc_analyzer** out) {
  if (!out) return invalid("null argument to psc_analyzer_create");
  return guarded([&] { *out = new psc_analyzer(); });
}

void psc_analyzer_free(psc_analyzer* analyzer) { delete analyzer; }

psc_status psc_analyzer_add_path(psc_analyzer* analyzer, const char* path) {
  if (!analyzer || !path) return invalid("null argument to psc_analyzer_add_path");
  return guarded([&] {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
      throw parascad::Error(ErrorKind::Io, std::string("no such file or directory: ") + path);
    for (const auto& f : parascad::collect_corpus_files({path}, analyzer->errors))
      analyzer->entries[f.string()] = std::nullopt;
  });
}

psc_status psc_analyzer_add_source(psc_analyzer* analyzer, const char* name, const char* source,
                                   size_t length) {
  if (!analyzer || !name || !source) return invalid("null argument to psc_analyzer_add_source");
  return guarded([&] { analyzer->entries[name] = std::string(source, length); });
}

psc_status psc_analyzer_render(psc_analyzer* analyzer, const char* format, char** out) {
  if (!analyzer || !format || !out) return invalid("null argument to psc_analyzer_render");
  parascad::ReportFormat fmt;
  try {
    fmt = parascad::parse_report_format(format);
  } catch (const parascad::Error& e) {
    return fail(PSC_ERROR_INVALID_ARGUMENT, e.diagnostic());
  }
  return guarded([&] {
    parascad::CorpusReport report;
    report.errors = analyzer->errors;
    for (const auto& [name, source] : analyzer->entries) {
      if (source)
        parascad::analyze_into(report, name, *source);
      else
        parascad::analyze_file_into(report, name);
    }
    *out = copy_string(parascad::render_report(report, fmt));
  });
}

psc_status psc_serve(int port, const char* static_dir) {
  if (port < 0 || port > 65535) return invalid("port out of range");
  return guarded([&] {
    parascad::ServiceOptions options;
    if (static_dir) options.static_dir = static_dir;
    parascad::Service service(options);
    if (service.bind("127.0.0.1", port) < 0)
      throw parascad::Error(ErrorKind::Io, "cannot bind port " + std::to_string(port));
    if (!service.listen()) throw parascad::Error(ErrorKind::Io, "server stopped unexpectedly");
  });
}

}  // extern "C"
