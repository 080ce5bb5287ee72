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

// parascad command line tool. Talks to the kernel only through the C API.
//
// Exit codes: 0 success, 1 usage error, 2 input error (unreadable file,
// parse, evaluation or selection failure), 3 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parascad.h"

namespace {

constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr int kInternal = 3;

int exit_code(psc_status s) {
  switch (s) {
    case PSC_OK: return 0;
    case PSC_ERROR_INVALID_ARGUMENT: return kUsage;
    case PSC_ERROR_INTERNAL: return kInternal;
    default: return kInput;
  }
}

int report(const std::string& file, psc_status s) {
  std::cerr << file;
  if (psc_last_error_line() > 0)
    std::cerr << ':' << psc_last_error_line() << ':' << psc_last_error_column();
  std::cerr << ": error: " << psc_last_error_message() << '\n';
  return exit_code(s);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << path << ": error: cannot read file\n";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_file(const std::string& path, const void* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary);
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  if (!out) {
    std::cerr << path << ": error: cannot write file\n";
    return false;
  }
  return true;
}

// Owns a library string.
struct Text {
  char* s = nullptr;
  ~Text() { psc_string_free(s); }
};

struct ModelRef {
  psc_model* m = nullptr;
  ~ModelRef() { psc_model_free(m); }
};

int emit(const std::string& file, psc_status s, const Text& text) {
  if (s != PSC_OK) return report(file, s);
  std::fputs(text.s, stdout);
  return 0;
}

int compile(const std::string& file, int fn, ModelRef& model) {
  std::string source;
  if (!read_file(file, source)) return kInput;
  psc_status s = psc_model_compile(source.data(), source.size(), fn, &model.m);
  return s == PSC_OK ? 0 : report(file, s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parametric position extraction for OpenSCAD models"};
  app.set_version_flag("--version", std::string(psc_version()));
  app.require_subcommand(1);

  std::string file;
  int fn = 0;

  auto* parse = app.add_subcommand("parse", "Parse a file and print its canonical form");
  bool ast_json = false;
  parse->add_option("FILE", file, "Source file")->required();
  parse->add_flag("--ast-json", ast_json, "Print the syntax tree as JSON");

  auto* compile_cmd = app.add_subcommand("compile", "Evaluate a file into a scene");
  std::string scene_out, stl_out;
  compile_cmd->add_option("FILE", file, "Source file")->required();
  compile_cmd->add_option("--scene", scene_out, "Scene JSON output")->required();
  compile_cmd->add_option("--stl", stl_out, "Binary STL output");
  compile_cmd->add_option("--fn", fn, "Default segment count")->check(CLI::PositiveNumber);

  auto* position = app.add_subcommand("position", "Parametric position of a handle");
  std::string node, handle;
  position->add_option("FILE", file, "Source file")->required();
  position->add_option("--node", node, "Node path, e.g. 1/0")->required();
  position->add_option("--handle", handle, "Handle id i,j,k or center")->required();
  position->add_option("--fn", fn, "Default segment count")->check(CLI::PositiveNumber);

  auto* delta = app.add_subcommand("delta", "Parametric vector between two handles");
  std::string from, to;
  delta->add_option("FILE", file, "Source file")->required();
  delta->add_option("--from", from, "Origin PATH:HANDLE")->required();
  delta->add_option("--to", to, "Destination PATH:HANDLE")->required();
  delta->add_option("--fn", fn, "Default segment count")->check(CLI::PositiveNumber);

  auto* analyze = app.add_subcommand("analyze", "Classify parameter expressions in a corpus");
  std::vector<std::string> paths;
  std::string format = "table";
  analyze->add_option("PATHS", paths, "Directories or files")->required();
  analyze->add_option("--format", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  int port = 8080;
  std::string static_dir;
  serve->add_option("--port", port, "Port")->check(CLI::Range(1, 65535));
  serve->add_option("--static", static_dir, "Directory served under /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*parse) {
      std::string source;
      if (!read_file(file, source)) return kInput;
      Text out;
      return emit(file, psc_parse(source.data(), source.size(), ast_json ? 1 : 0, &out.s), out);
    }
    if (*compile_cmd) {
      ModelRef model;
      if (int rc = compile(file, fn, model)) return rc;
      Text scene;
      psc_status s = psc_model_scene_json(model.m, &scene.s);
      if (s != PSC_OK) return report(file, s);
      if (!write_file(scene_out, scene.s, std::char_traits<char>::length(scene.s))) return kInput;
      if (!stl_out.empty()) {
        uint8_t* bytes = nullptr;
        std::size_t length = 0;
        s = psc_model_stl(model.m, &bytes, &length);
        if (s != PSC_OK) return report(file, s);
        bool ok = write_file(stl_out, bytes, length);
        psc_bytes_free(bytes);
        if (!ok) return kInput;
      }
      return 0;
    }
    if (*position) {
      ModelRef model;
      if (int rc = compile(file, fn, model)) return rc;
      Text out;
      return emit(file, psc_model_position_json(model.m, node.c_str(), handle.c_str(), &out.s),
                  out);
    }
    if (*delta) {
      ModelRef model;
      if (int rc = compile(file, fn, model)) return rc;
      Text out;
      return emit(file, psc_model_delta_json(model.m, from.c_str(), to.c_str(), &out.s), out);
    }
    if (*analyze) {
      psc_analyzer* a = nullptr;
      if (psc_status s = psc_analyzer_create(&a); s != PSC_OK) return report("analyze", s);
      int rc = 0;
      for (const auto& p : paths)
        if (psc_status s = psc_analyzer_add_path(a, p.c_str()); s != PSC_OK) {
          rc = report(p, s);
          break;
        }
      if (rc == 0) {
        Text out;
        rc = emit("analyze", psc_analyzer_render(a, format.c_str(), &out.s), out);
      }
      psc_analyzer_free(a);
      return rc;
    }
    if (*serve) {
      std::cerr << "listening on http://127.0.0.1:" << port << '\n';
      psc_status s = psc_serve(port, static_dir.empty() ? nullptr : static_dir.c_str());
      return s == PSC_OK ? 0 : report("serve", s);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
