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

#include "tnet/serve.hpp"

#include <csignal>
#include <iostream>
#include <pthread.h>
#include <thread>

#include "httplib.h"
#include "tnet/error.hpp"

namespace tnet {

using nlohmann::json;

namespace {

ApiResponse error_response(int status, const std::string& message) {
  return {status, json{{"error", message}, {"status", status}}.dump() + "\n"};
}

}  // namespace

NetworkService::NetworkService(std::vector<BundleEntry> entries, std::size_t ngram) {
  for (auto& entry : entries) {
    Network net;
    net.body = export_document(entry.document);
    for (const auto& n : entry.document.nodes) net.labels.emplace(n.id, n.label);
    if (!net.labels.empty()) net.index = std::make_unique<NGramIndex>(net.labels, ngram);
    net.entry = std::move(entry);
    networks_.push_back(std::move(net));
  }
}

NetworkService NetworkService::from_bundle(const std::filesystem::path& dir) {
  return NetworkService(load_bundle(dir));
}

const NetworkService::Network* NetworkService::find(std::string_view id) const {
  for (const auto& n : networks_) {
    if (n.entry.id == id) return &n;
  }
  return nullptr;
}

ApiResponse NetworkService::list() const {
  json networks = json::array();
  for (const auto& n : networks_) {
    const auto& doc = n.entry.document;
    networks.push_back({{"id", n.entry.id},
                        {"kind", doc.kind},
                        {"language", doc.language},
                        {"translator", doc.translator},
                        {"nodes", doc.nodes.size()},
                        {"edges", doc.edges.size()}});
  }
  return {200, json{{"networks", std::move(networks)}}.dump() + "\n"};
}

ApiResponse NetworkService::network(std::string_view id) const {
  const auto* net = find(id);
  if (!net) return error_response(404, "unknown network '" + std::string(id) + "'");
  return {200, net->body};
}

ApiResponse NetworkService::search(const std::map<std::string, std::string>& params) const {
  const auto net_it = params.find("net");
  const auto q_it = params.find("q");
  if (net_it == params.end() || net_it->second.empty()) {
    return error_response(400, "missing parameter 'net'");
  }
  if (q_it == params.end()) return error_response(400, "missing parameter 'q'");
  std::size_t k = 10;
  if (const auto k_it = params.find("k"); k_it != params.end()) {
    const auto& raw = k_it->second;
    if (raw.empty() || raw.size() > 6 ||
        raw.find_first_not_of("0123456789") != std::string::npos) {
      return error_response(400, "parameter 'k' must be a positive integer");
    }
    k = std::stoul(raw);
    if (k < 1) return error_response(400, "parameter 'k' must be a positive integer");
  }
  const auto* net = find(net_it->second);
  if (!net) return error_response(404, "unknown network '" + net_it->second + "'");

  json results = json::array();
  if (net->index) {
    for (const auto& hit : net->index->query(q_it->second, k)) {
      results.push_back({{"id", hit.id}, {"label", net->labels.at(hit.id)}, {"score", hit.score}});
    }
  }
  return {200, json{{"network", net->entry.id}, {"query", q_it->second}, {"results", results}}
                   .dump() +
                   "\n"};
}

void register_routes(httplib::Server& server, std::shared_ptr<const NetworkService> service,
                     const std::optional<std::filesystem::path>& ui_dir) {
  auto reply = [](httplib::Response& res, const ApiResponse& api) {
    res.status = api.status;
    res.set_content(api.body, api.content_type);
  };
  server.Get("/api/networks", [service, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, service->list());
  });
  server.Get(R"(/api/network/([^/]+))",
             [service, reply](const httplib::Request& req, httplib::Response& res) {
               reply(res, service->network(req.matches[1].str()));
             });
  server.Get("/api/search", [service, reply](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> params;
    for (const auto& [key, value] : req.params) params.emplace(key, value);
    reply(res, service->search(params));
  });
  server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (req.path.rfind("/api/", 0) == 0 && res.body.empty()) {
      const auto api = error_response(res.status, "not found: " + req.path);
      res.set_content(api.body, api.content_type);
    }
  });
  if (ui_dir) server.set_mount_point("/", ui_dir->string());
}

bool run_server(std::shared_ptr<const NetworkService> service, const std::string& host, int port,
                const std::optional<std::filesystem::path>& ui_dir) {
  httplib::Server server;
  register_routes(server, std::move(service), ui_dir);
  if (!server.bind_to_port(host, port)) return false;

  // Signals are taken synchronously by a watcher thread, which stops the
  // server; the listener threads never see them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);
  std::thread watcher([&server, signals] {
    int sig = 0;
    sigwait(&signals, &sig);
    std::cerr << "tnet: signal " << sig << ", shutting down\n";
    server.stop();
  });
  std::cerr << "tnet: serving on http://" << host << ":" << port << "\n";
  server.listen_after_bind();
  if (watcher.joinable()) {
    // Reached after stop(); if listen returned for another reason, wake the
    // watcher so it can exit.
    pthread_kill(watcher.native_handle(), SIGTERM);
    watcher.join();
  }
  return true;
}

}  // namespace tnet
