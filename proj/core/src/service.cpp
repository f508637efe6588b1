#include "guideme/service.hpp"

#include <algorithm>
#include <array>

#include "guideme/json_io.hpp"
#include "guideme/resolver.hpp"
#include "guideme/version.hpp"

namespace guideme {
namespace {

using nlohmann::json;

HttpReply error_reply(ErrorCode code, std::string_view message) {
  return {http_status(code), error_body(code, message)};
}

HttpReply error_reply(const Error& e) { return error_reply(e.code(), e.what()); }

template <class F>
HttpReply guarded(F&& handler) {
  try {
    return handler();
  } catch (const Error& e) {
    return error_reply(e);
  } catch (const std::exception& e) {
    return error_reply(ErrorCode::kInvalidState, e.what());
  }
}

json parse_object(std::string_view body) {
  json doc = json::parse(body.begin(), body.end(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, "request body must be a JSON object");
  }
  return doc;
}

void only_fields(const json& doc, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown field '" + key + "'");
    }
  }
}

double number_field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw Error(ErrorCode::kInvalidArgument, std::string("missing field '") + key + "'");
  }
  if (!it->is_number()) {
    throw Error(ErrorCode::kInvalidArgument, std::string("field '") + key + "' must be a number");
  }
  return it->get<double>();
}

LocationStatus parse_location_body(std::string_view body) {
  const json doc = parse_object(body);
  only_fields(doc, {"lat", "lon", "status"});
  std::string status = "available";
  if (auto it = doc.find("status"); it != doc.end()) {
    if (!it->is_string()) {
      throw Error(ErrorCode::kInvalidArgument, "field 'status' must be a string");
    }
    status = it->get<std::string>();
  }
  if (status == "gps_disabled" || status == "permission_denied") {
    if (doc.contains("lat") || doc.contains("lon")) {
      throw Error(ErrorCode::kInvalidArgument,
                  "status '" + status + "' cannot carry coordinates");
    }
    if (status == "gps_disabled") return GpsDisabled{};
    return PermissionDenied{};
  }
  if (status != "available") {
    throw Error(ErrorCode::kInvalidArgument, "unknown status '" + status + "'");
  }
  // GeoPoint names the offending coordinate in its message.
  return LocationAvailable{GeoPoint(number_field(doc, "lat"), number_field(doc, "lon"))};
}

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kParseError:
    case ErrorCode::kValidationError:
    case ErrorCode::kDecodeError:
      return 400;
    case ErrorCode::kNotFound:
    case ErrorCode::kNotAtKnownPlace:
      return 404;
    case ErrorCode::kLabelWithoutPlace:
      return 409;
    case ErrorCode::kPayloadTooLarge:
      return 413;
    case ErrorCode::kUnrecognizedScene:
      return 422;
    case ErrorCode::kGpsActivationRequired:
    case ErrorCode::kPermissionRequired:
      return 428;
    case ErrorCode::kInvalidState:
    case ErrorCode::kIoError:
      return 500;
  }
  return 500;
}

GuideService::GuideService(ServiceConfig config)
    : GuideService(config, load_catalog(config.catalog_path),
                   load_index(config.index_path)) {}

GuideService::GuideService(ServiceConfig config, Catalog catalog,
                           ReferenceIndex index)
    : config_(std::move(config)) {
  config_.policy.validate();
  snapshot_.catalog = std::make_shared<const Catalog>(std::move(catalog));
  snapshot_.classifier = std::make_shared<const NearestNeighborClassifier>(
      std::make_shared<const ReferenceIndex>(std::move(index)));
}

GuideService::Snapshot GuideService::snapshot() const {
  std::lock_guard lock(mutex_);
  return snapshot_;
}

HttpReply GuideService::resolve_location(std::string_view json_body) const {
  return guarded([&] {
    const auto status = parse_location_body(json_body);
    const auto snap = snapshot();
    return HttpReply{200, json(guideme::resolve_location(*snap.catalog, status))};
  });
}

HttpReply GuideService::resolve_manual(std::string_view json_body) const {
  return guarded([&] {
    const json doc = parse_object(json_body);
    only_fields(doc, {"dua_id"});
    auto it = doc.find("dua_id");
    if (it == doc.end() || !it->is_string()) {
      throw Error(ErrorCode::kInvalidArgument, "field 'dua_id' must be a string");
    }
    const auto snap = snapshot();
    return HttpReply{200, json(guideme::resolve_manual(*snap.catalog,
                                                       it->get<std::string>()))};
  });
}

HttpReply GuideService::resolve_image_json(std::string_view json_body) const {
  return guarded([&] {
    const json doc = parse_object(json_body);
    only_fields(doc, {"image_b64"});
    auto it = doc.find("image_b64");
    if (it == doc.end() || !it->is_string()) {
      throw Error(ErrorCode::kInvalidArgument, "field 'image_b64' must be a string");
    }
    const auto& text = it->get_ref<const std::string&>();
    // Reject on encoded length first so oversized payloads are never decoded.
    if (text.size() / 4 * 3 > config_.max_image_bytes + 2) {
      throw Error(ErrorCode::kPayloadTooLarge, "image exceeds the size limit");
    }
    auto bytes = decode_base64(text);
    if (!bytes) throw Error(ErrorCode::kDecodeError, "image_b64 is not valid base64");
    return resolve_image_bytes(*bytes);
  });
}

HttpReply GuideService::resolve_image_bytes(std::span<const std::uint8_t> bytes) const {
  return guarded([&] {
    if (bytes.size() > config_.max_image_bytes) {
      throw Error(ErrorCode::kPayloadTooLarge,
                  "image of " + std::to_string(bytes.size()) +
                      " bytes exceeds the limit of " +
                      std::to_string(config_.max_image_bytes));
    }
    const auto snap = snapshot();
    return HttpReply{200, json(guideme::resolve_image(*snap.catalog, *snap.classifier,
                                                      bytes, config_.policy))};
  });
}

HttpReply GuideService::places() const {
  return {200, json(snapshot().catalog->places())};
}

HttpReply GuideService::duas() const {
  return {200, json(list_duas(*snapshot().catalog))};
}

HttpReply GuideService::dua(std::string_view id) const {
  const auto snap = snapshot();
  const Dua* found = snap.catalog->find_dua(id);
  if (found == nullptr) {
    return error_reply(ErrorCode::kNotFound, "unknown dua id '" + std::string(id) + "'");
  }
  return {200, json(*found)};
}

HttpReply GuideService::manifest() const {
  return {200, manifest_json(snapshot().classifier->index())};
}

HttpReply GuideService::health() const {
  const auto snap = snapshot();
  const auto& m = snap.classifier->manifest();
  return {200, json{{"status", "ok"},
                    {"version", kVersion},
                    {"catalog",
                     {{"version", snap.catalog->version()},
                      {"places", snap.catalog->places().size()},
                      {"duas", snap.catalog->duas().size()}}},
                    {"model",
                     {{"name", m.name},
                      {"version", m.version},
                      {"labels", m.labels}}}}};
}

HttpReply GuideService::reload() {
  return guarded([&] {
    Snapshot fresh;
    fresh.catalog = std::make_shared<const Catalog>(load_catalog(config_.catalog_path));
    fresh.classifier = std::make_shared<const NearestNeighborClassifier>(
        std::make_shared<const ReferenceIndex>(load_index(config_.index_path)));
    {
      std::lock_guard lock(mutex_);
      snapshot_ = std::move(fresh);
    }
    return health();
  });
}

std::optional<std::vector<std::uint8_t>> decode_base64(std::string_view text) {
  static constexpr auto kTable = [] {
    std::array<int, 256> t{};
    t.fill(-1);
    constexpr std::string_view alphabet =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      t[static_cast<unsigned char>(alphabet[i])] = static_cast<int>(i);
    }
    return t;
  }();
  if (text.size() % 4 != 0) return std::nullopt;
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t i = 0; i < text.size(); i += 4) {
    const bool last = i + 4 == text.size();
    int v[4];
    int pad = 0;
    for (int k = 0; k < 4; ++k) {
      const char c = text[i + k];
      if (c == '=' && last && k >= 2) {
        v[k] = 0;
        ++pad;
        continue;
      }
      if (pad > 0) return std::nullopt;  // data after padding
      v[k] = kTable[static_cast<unsigned char>(c)];
      if (v[k] < 0) return std::nullopt;
    }
    const std::uint32_t n = (std::uint32_t(v[0]) << 18) | (std::uint32_t(v[1]) << 12) |
                            (std::uint32_t(v[2]) << 6) | std::uint32_t(v[3]);
    out.push_back(std::uint8_t(n >> 16));
    if (pad < 2) out.push_back(std::uint8_t(n >> 8));
    if (pad < 1) out.push_back(std::uint8_t(n));
  }
  return out;
}

}  // namespace guideme
