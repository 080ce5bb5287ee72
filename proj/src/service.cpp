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

#include "parascad/service.h"

#include <algorithm>
#include <vector>

#include "httplib.h"
#include "json_util.h"
#include "parascad/analyzer.h"
#include "parascad/payload.h"

namespace parascad {

namespace {

using detail::Json;

struct BadRequest {
  std::string message;
};

HttpResponse bad_request(const std::string& message) {
  Json j{{"error", {{"kind", "BadRequest"}, {"message", message}, {"span", nullptr}}}};
  return {400, j.dump() + "\n"};
}

HttpResponse unprocessable(const Diagnostic& d) { return {422, error_payload(d)}; }

const Json& field(const Json& body, const char* name) {
  auto it = body.find(name);
  if (it == body.end()) throw BadRequest{std::string("missing field '") + name + "'"};
  return *it;
}

std::string string_field(const Json& body, const char* name) {
  const Json& v = field(body, name);
  if (!v.is_string()) throw BadRequest{std::string("field '") + name + "' must be a string"};
  return v.get<std::string>();
}

int fn_field(const Json& body) {
  auto it = body.find("fn");
  if (it == body.end() || it->is_null()) return EvaluationOptions{}.default_fn;
  if (!it->is_number_integer()) throw BadRequest{"field 'fn' must be an integer"};
  return it->get<int>();
}

// "path:id" or {"node": path, "handle": id}.
Selection selection_field(const Json& body, const char* name) {
  const Json& v = field(body, name);
  if (v.is_string()) return parse_selection(v.get<std::string>());
  if (v.is_object())
    return {parse_path(string_field(v, "node")), parse_handle_id(string_field(v, "handle"))};
  throw BadRequest{std::string("field '") + name + "' must be \"PATH:HANDLE\" or an object"};
}

}  // namespace

Service::Service(ServiceOptions options) : options_(std::move(options)) {}

Service::~Service() { stop(); }

std::shared_ptr<const Model> Service::model(const std::string& source, int fn) const {
  EvaluationOptions opts;
  opts.default_fn = fn;
  if (options_.cache_capacity == 0) return Model::compile(source, opts);
  std::string key = std::to_string(fn) + '\n' + source;
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto m = Model::compile(source, opts);
  std::lock_guard lock(cache_mutex_);
  if (cache_.emplace(key, m).second) {
    cache_order_.push_back(key);
    while (cache_order_.size() > options_.cache_capacity) {
      cache_.erase(cache_order_.front());
      cache_order_.pop_front();
    }
  }
  return m;
}

HttpResponse Service::handle(std::string_view method, std::string_view path,
                             std::string_view body) const {
  if (method != "POST") return bad_request("unsupported method " + std::string(method));
  try {
    Json request;
    try {
      request = Json::parse(body);
    } catch (const nlohmann::json::exception&) {
      throw BadRequest{"request body is not valid JSON"};
    }
    if (!request.is_object()) throw BadRequest{"request body must be a JSON object"};

    if (path == "/analyze") {
      const Json& files = field(request, "files");
      if (!files.is_array()) throw BadRequest{"field 'files' must be an array"};
      std::vector<std::pair<std::string, std::string>> sources;
      for (const Json& f : files) {
        if (!f.is_object()) throw BadRequest{"each file must be {path, source}"};
        sources.emplace_back(string_field(f, "path"), string_field(f, "source"));
      }
      std::sort(sources.begin(), sources.end());
      CorpusReport report;
      for (const auto& [name, text] : sources) analyze_into(report, name, text);
      ReportFormat format = ReportFormat::Json;
      if (request.contains("format")) {
        try {
          format = parse_report_format(string_field(request, "format"));
        } catch (const Error& e) {
          throw BadRequest{e.what()};
        }
      }
      HttpResponse r{200, render_report(report, format)};
      if (format != ReportFormat::Json) r.content_type = "text/plain";
      return r;
    }

    std::string source = string_field(request, "source");
    int fn = fn_field(request);
    if (path == "/compile") return {200, scene_payload(model(source, fn)->scene())};
    if (path == "/position") {
      NodePath node = parse_path(string_field(request, "node"));
      HandleId handle = parse_handle_id(string_field(request, "handle"));
      return {200, vector_payload(model(source, fn)->position(node, handle))};
    }
    if (path == "/delta") {
      Selection from = selection_field(request, "from");
      Selection to = selection_field(request, "to");
      return {200, vector_payload(model(source, fn)->delta(from, to))};
    }
    return {404, Json{{"error",
                       {{"kind", "NotFound"},
                        {"message", "no endpoint " + std::string(path)},
                        {"span", nullptr}}}}
                     .dump() +
                     "\n"};
  } catch (const BadRequest& e) {
    return bad_request(e.message);
  } catch (const ParseError& e) {
    return unprocessable(e.diagnostics().front());
  } catch (const Error& e) {
    return unprocessable(e.diagnostic());
  } catch (const std::exception& e) {
    Json j{{"error", {{"kind", "Internal"}, {"message", e.what()}, {"span", nullptr}}}};
    return {500, j.dump() + "\n"};
  }
}

int Service::bind(const std::string& host, int port) {
  server_ = std::make_unique<httplib::Server>();
  auto& srv = *server_;
  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                           {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                           {"Access-Control-Allow-Headers", "Content-Type"}});
  srv.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  for (const char* route : {"/compile", "/position", "/delta", "/analyze"}) {
    srv.Post(route, [this, route](const httplib::Request& req, httplib::Response& res) {
      HttpResponse r = handle("POST", route, req.body);
      res.status = r.status;
      res.set_content(r.body, r.content_type);
    });
  }
  if (!options_.static_dir.empty()) srv.set_mount_point("/", options_.static_dir);
  if (port == 0) return srv.bind_to_any_port(host);
  return srv.bind_to_port(host, port) ? port : -1;
}

bool Service::listen() { return server_ && server_->listen_after_bind(); }

void Service::stop() {
  if (server_) server_->stop();
}

}  // namespace parascad
