// Copyright 2026 The Tractatus Network Authors.
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

// Read-only HTTP API over a bundle of graph documents.
//
//   GET /api/networks                      list ids and meta
//   GET /api/network/{id}                  the document
//   GET /api/search?net={id}&q={text}&k=N  n-gram search over node labels
//
// Everything else is served from the UI asset directory, when one is given.

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tnet/document.hpp"
#include "tnet/search.hpp"

namespace httplib {
class Server;
}

namespace tnet {

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// Immutable after construction; safe to share across request threads.
class NetworkService {
 public:
  explicit NetworkService(std::vector<BundleEntry> entries, std::size_t ngram = 3);
  static NetworkService from_bundle(const std::filesystem::path& dir);

  ApiResponse list() const;
  ApiResponse network(std::string_view id) const;
  // Parameters: net (required), q (required), k (optional, default 10).
  ApiResponse search(const std::map<std::string, std::string>& params) const;

  std::size_t size() const { return networks_.size(); }

 private:
  struct Network {
    BundleEntry entry;
    std::string body;  // canonical serialization
    std::map<std::string, std::string> labels;
    std::unique_ptr<NGramIndex> index;  // null for documents without nodes
  };

  const Network* find(std::string_view id) const;

  std::vector<Network> networks_;
};

void register_routes(httplib::Server& server, std::shared_ptr<const NetworkService> service,
                     const std::optional<std::filesystem::path>& ui_dir = std::nullopt);

// Blocks until SIGINT or SIGTERM. Returns false if the socket cannot be bound.
bool run_server(std::shared_ptr<const NetworkService> service, const std::string& host, int port,
                const std::optional<std::filesystem::path>& ui_dir = std::nullopt);

}  // namespace tnet
