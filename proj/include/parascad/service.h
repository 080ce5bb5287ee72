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

#pragma once

#include <cstddef>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "parascad/model.h"

namespace httplib {
class Server;
}

namespace parascad {

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

struct ServiceOptions {
  std::string static_dir;         // served under GET / when non-empty
  std::size_t cache_capacity = 32;  // compiled models kept; 0 disables
};

/// JSON over HTTP:
///   POST /compile  {source, fn?}             -> scene
///   POST /position {source, node, handle, fn?} -> position vector
///   POST /delta    {source, from, to, fn?}   -> delta vector
///   POST /analyze  {files: [{path, source}], format?} -> report
/// Malformed requests get 400, source and selection errors 422.
class Service {
 public:
  explicit Service(ServiceOptions options = {});
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Transport-independent request handling. Thread-safe.
  HttpResponse handle(std::string_view method, std::string_view path,
                      std::string_view body) const;

  /// Binds to `host:port` (port 0 picks a free one) and returns the port,
  /// or -1 on failure.
  int bind(const std::string& host, int port);
  /// Serves on the bound socket until stop(). Returns false on failure.
  bool listen();
  void stop();

 private:
  std::shared_ptr<const Model> model(const std::string& source, int fn) const;

  ServiceOptions options_;
  std::unique_ptr<httplib::Server> server_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::string, std::shared_ptr<const Model>> cache_;
  mutable std::list<std::string> cache_order_;
};

}  // namespace parascad
