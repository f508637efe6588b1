#include <iostream>

#include <httplib.h>

#include "guideme/json_io.hpp"
#include "guideme/service.hpp"

namespace guideme {
namespace {

constexpr const char* kJson = "application/json";

void send(httplib::Response& res, const HttpReply& reply) {
  res.status = reply.status;
  res.set_content(reply.body.dump(), kJson);
}

std::string_view body_view(const httplib::Request& req) { return req.body; }

}  // namespace

struct HttpServer::Impl {
  std::shared_ptr<GuideService> service;
  httplib::Server server;
  int port = -1;
};

HttpServer::HttpServer(std::shared_ptr<GuideService> service)
    : impl_(std::make_unique<Impl>()) {
  impl_->service = std::move(service);
  auto& server = impl_->server;
  const auto& config = impl_->service->config();
  GuideService* svc = impl_->service.get();

  // Base64 inflates by 4/3 and multipart adds framing; the handlers enforce
  // the exact image limit.
  server.set_payload_max_length(config.max_image_bytes * 2 + (1u << 20));

  server.Post("/api/resolve/location",
              [svc](const httplib::Request& req, httplib::Response& res) {
                send(res, svc->resolve_location(body_view(req)));
              });
  server.Post("/api/resolve/manual",
              [svc](const httplib::Request& req, httplib::Response& res) {
                send(res, svc->resolve_manual(body_view(req)));
              });
  server.Post("/api/resolve/image", [svc](const httplib::Request& req,
                                          httplib::Response& res) {
    if (req.is_multipart_form_data()) {
      if (!req.has_file("image")) {
        send(res, {400, error_body(ErrorCode::kInvalidArgument,
                                   "multipart upload needs a field named 'image'")});
        return;
      }
      const auto& content = req.get_file_value("image").content;
      send(res, svc->resolve_image_bytes(std::span(
                    reinterpret_cast<const std::uint8_t*>(content.data()),
                    content.size())));
      return;
    }
    if (req.get_header_value("Content-Type").starts_with(kJson)) {
      send(res, svc->resolve_image_json(body_view(req)));
      return;
    }
    send(res, {400, error_body(ErrorCode::kInvalidArgument,
                               "expected multipart/form-data field 'image' or "
                               "JSON {\"image_b64\": ...}")});
  });

  server.Get("/api/places", [svc](const httplib::Request&, httplib::Response& res) {
    send(res, svc->places());
  });
  server.Get("/api/duas", [svc](const httplib::Request&, httplib::Response& res) {
    send(res, svc->duas());
  });
  server.Get(R"(/api/duas/([^/]+))",
             [svc](const httplib::Request& req, httplib::Response& res) {
               send(res, svc->dua(req.matches[1].str()));
             });
  server.Get("/api/model/manifest",
             [svc](const httplib::Request&, httplib::Response& res) {
               send(res, svc->manifest());
             });
  server.Get("/api/health", [svc](const httplib::Request&, httplib::Response& res) {
    send(res, svc->health());
  });
  if (config.enable_admin_reload) {
    server.Post("/api/admin/reload",
                [svc](const httplib::Request&, httplib::Response& res) {
                  send(res, svc->reload());
                });
  }

  if (config.asset_dir) {
    if (!server.set_mount_point("/", config.asset_dir->string())) {
      throw Error(ErrorCode::kNotFound,
                  "asset directory not found: " + config.asset_dir->string());
    }
  }

  if (config.permissive_cors) {
    server.set_post_routing_handler([](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", "*");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    });
    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
      res.status = 204;
    });
  }

  // Responses httplib produces on its own (unknown route, oversized body)
  // still get a {code, message} body.
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
    ErrorCode code = ErrorCode::kInvalidArgument;
    std::string message = "bad request";
    if (res.status == 404) {
      code = ErrorCode::kNotFound;
      message = "no such route";
    } else if (res.status == 413) {
      code = ErrorCode::kPayloadTooLarge;
      message = "request body exceeds the size limit";
    } else if (res.status >= 500) {
      code = ErrorCode::kInvalidState;
      message = "internal error";
    }
    res.set_content(error_body(code, message).dump(), kJson);
    return httplib::Server::HandlerResponse::Handled;
  });

  if (config.access_log) {
    server.set_logger([](const httplib::Request& req, const httplib::Response& res) {
      std::cerr << req.method << ' ' << req.path << ' ' << res.status << '\n';
    });
  }
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  const auto& config = impl_->service->config();
  if (config.port == 0) {
    impl_->port = impl_->server.bind_to_any_port(config.host);
  } else if (impl_->server.bind_to_port(config.host, config.port)) {
    impl_->port = config.port;
  }
  if (impl_->port <= 0) {
    throw Error(ErrorCode::kIoError, "cannot bind " + config.host + ":" +
                                         std::to_string(config.port));
  }
  return impl_->port;
}

void HttpServer::serve() {
  if (impl_->port <= 0) throw Error(ErrorCode::kInvalidState, "server is not bound");
  impl_->server.listen_after_bind();
}

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace guideme
