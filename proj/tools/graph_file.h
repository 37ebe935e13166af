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

#ifndef PRIVPC_TOOLS_GRAPH_FILE_H_
#define PRIVPC_TOOLS_GRAPH_FILE_H_

#include <string>

#include "privpc/graph.h"

namespace privpc::tools {

// Loads an edge list from `path`; files ending in ".gz" are decompressed.
// Throws LoadError when the file cannot be read or parsed.
Graph LoadGraphFile(const std::string& path,
                    const EdgeListOptions& options = {});

// File name without directories and without .gz/.txt suffixes.
std::string GraphLabel(const std::string& path);

}  // namespace privpc::tools

#endif  // PRIVPC_TOOLS_GRAPH_FILE_H_
