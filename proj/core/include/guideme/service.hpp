#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "guideme/catalog.hpp"
#include "guideme/classifier.hpp"
#include "guideme/error.hpp"
#include "guideme/selection.hpp"

namespace guideme {

inline constexpr std::size_t kDefaultMaxImageBytes = 8u << 20;

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path catalog_path;
  std::filesystem::path index_path;
  SelectionPolicy policy;
  std::optional<std::filesystem::path> asset_dir;
  bool permissive_cors = false;
  bool enable_admin_reload = false;
  bool access_log = false;
  std::size_t max_image_bytes = kDefaultMaxImageBytes;
};

/// Status code plus JSON body. Error bodies are always {code, message}.
struct HttpReply {
  int status = 200;
  nlohmann::json body;
};

int http_status(ErrorCode code);

/**
 * Transport-independent request handlers.
 *
 * Holds an immutable catalog/classifier snapshot. reload() builds a new
 * snapshot from the configured paths and swaps it in; requests already in
 * flight keep the snapshot they started with.
 */
class GuideService {
 public:
  /// Loads catalog and index from config paths. Throws guideme::Error.
  explicit GuideService(ServiceConfig config);
  GuideService(ServiceConfig config, Catalog catalog, ReferenceIndex index);

  const ServiceConfig& config() const noexcept { return config_; }

  HttpReply resolve_location(std::string_view json_body) const;
  HttpReply resolve_manual(std::string_view json_body) const;
  /// JSON body of the form {"image_b64": "..."}.
  HttpReply resolve_image_json(std::string_view json_body) const;
  HttpReply resolve_image_bytes(std::span<const std::uint8_t> bytes) const;

  HttpReply places() const;
  HttpReply duas() const;
  HttpReply dua(std::string_view id) const;
  HttpReply manifest() const;
  HttpReply health() const;
  HttpReply reload();

 private:
  struct Snapshot {
    std::shared_ptr<const Catalog> catalog;
    std::shared_ptr<const NearestNeighborClassifier> classifier;
  };
  Snapshot snapshot() const;

  ServiceConfig config_;
  mutable std::mutex mutex_;  // guards snapshot_ swaps only
  Snapshot snapshot_;
};

/// httplib server bound to a GuideService.
class HttpServer {
 public:
  explicit HttpServer(std::shared_ptr<GuideService> service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds to config().host:config().port, or an ephemeral port when the
  /// configured port is 0. Returns the bound port.
  int bind();
  /// Serves until stop(). Requires bind().
  void serve();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Strict RFC 4648 base64 decoding (padding required, no whitespace).
std::optional<std::vector<std::uint8_t>> decode_base64(std::string_view text);

}  // namespace guideme
