// Copyright 2026 The privpc Authors
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

#include "graph_file.h"

#include <zlib.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "privpc/errors.h"

namespace privpc::tools {
namespace {

bool EndsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string Gunzip(const std::string& path) {
  gzFile f = gzopen(path.c_str(), "rb");
  if (f == nullptr) throw LoadError("cannot open " + path);
  std::string data;
  char buf[1 << 16];
  int got = 0;
  while ((got = gzread(f, buf, sizeof(buf))) > 0) data.append(buf, got);
  int err = 0;
  const char* msg = gzerror(f, &err);
  const bool failed = got < 0 || (err != Z_OK && err != Z_STREAM_END);
  const std::string detail = msg ? msg : "";
  gzclose(f);
  if (failed) throw LoadError("cannot decompress " + path + ": " + detail);
  return data;
}

}  // namespace

Graph LoadGraphFile(const std::string& path, const EdgeListOptions& options) {
  if (EndsWith(path, ".gz")) {
    std::istringstream in(Gunzip(path));
    return LoadEdgeList(in, options);
  }
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path);
  return LoadEdgeList(in, options);
}

std::string GraphLabel(const std::string& path) {
  std::string name = std::filesystem::path(path).filename().string();
  for (const std::string suffix : {".gz", ".txt", ".edges"}) {
    if (EndsWith(name, suffix)) name.erase(name.size() - suffix.size());
  }
  return name;
}

}  // namespace privpc::tools
