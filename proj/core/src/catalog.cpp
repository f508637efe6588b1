#include "guideme/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <limits>
#include <set>
#include <tuple>
#include <utility>

#include <nlohmann/json.hpp>

#include "guideme/error.hpp"

namespace guideme {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParseError, where + ": " + what);
}

void reject_unknown_fields(const json& record, const std::string& where,
                           std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : record.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(where + "." + key, "unknown field");
    }
  }
}

const json& require(const json& record, const std::string& where,
                    const char* key) {
  auto it = record.find(key);
  if (it == record.end()) fail(where + "." + key, "missing required field");
  return *it;
}

std::string require_string(const json& record, const std::string& where,
                           const char* key) {
  const json& v = require(record, where, key);
  if (!v.is_string()) fail(where + "." + key, "expected string");
  return v.get<std::string>();
}

double require_number(const json& v, const std::string& field) {
  if (!v.is_number()) fail(field, "expected number");
  return v.get<double>();
}

Place parse_place(const json& record, const std::string& where) {
  if (!record.is_object()) fail(where, "expected object");
  reject_unknown_fields(record, where,
                        {"id", "name", "lat", "lon", "geofence_radius_m"});
  std::string id = require_string(record, where, "id");
  std::string name = require_string(record, where, "name");
  double lat = require_number(require(record, where, "lat"), where + ".lat");
  double lon = require_number(require(record, where, "lon"), where + ".lon");
  double radius = kDefaultGeofenceRadiusMeters;
  if (auto it = record.find("geofence_radius_m"); it != record.end()) {
    radius = require_number(*it, where + ".geofence_radius_m");
  }
  try {
    return Place{std::move(id), std::move(name), GeoPoint(lat, lon), radius};
  } catch (const Error& e) {
    throw Error(ErrorCode::kValidationError, where + ": " + e.what());
  }
}

Dua parse_dua(const json& record, const std::string& where) {
  if (!record.is_object()) fail(where, "expected object");
  reject_unknown_fields(record, where,
                        {"id", "place_id", "title", "body", "order"});
  Dua dua;
  dua.id = require_string(record, where, "id");
  if (record.contains("place_id")) {
    dua.place_id = require_string(record, where, "place_id");
  }
  dua.title = require_string(record, where, "title");
  dua.body = require_string(record, where, "body");
  const json& order = require(record, where, "order");
  if (!order.is_number_integer() ||
      (order.is_number_integer() && !order.is_number_unsigned() &&
       order.get<std::int64_t>() < 0) ||
      order.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max()) {
    fail(where + ".order", "expected non-negative integer");
  }
  dua.order = order.get<std::uint32_t>();
  return dua;
}

const std::string& place_name_or_empty(const Catalog& catalog, const Dua& dua) {
  static const std::string kEmpty;
  if (!dua.place_id) return kEmpty;
  return catalog.find_place(*dua.place_id)->name;
}

}  // namespace

Catalog::Catalog(std::string version, std::vector<Place> places,
                 std::vector<Dua> duas)
    : version_(std::move(version)),
      places_(std::move(places)),
      duas_(std::move(duas)) {
  auto invalid = [](const std::string& msg) {
    throw Error(ErrorCode::kValidationError, msg);
  };
  std::set<std::string_view> place_ids;
  std::set<std::string_view> place_names;
  for (const Place& p : places_) {
    if (p.id.empty()) invalid("place id must be non-empty");
    if (p.name.empty()) invalid("place '" + p.id + "' has an empty name");
    if (!place_ids.insert(p.id).second) invalid("duplicate place id '" + p.id + "'");
    if (!place_names.insert(p.name).second) {
      invalid("duplicate place name '" + p.name + "'");
    }
    if (!(p.geofence_radius_m > 0.0)) {
      invalid("place '" + p.id + "' geofence_radius_m must be positive");
    }
  }
  std::set<std::string_view> dua_ids;
  std::set<std::pair<std::string_view, std::uint32_t>> place_orders;
  for (const Dua& d : duas_) {
    if (d.id.empty()) invalid("dua id must be non-empty");
    if (!dua_ids.insert(d.id).second) invalid("duplicate dua id '" + d.id + "'");
    if (!d.place_id) continue;
    if (!place_ids.contains(*d.place_id)) {
      invalid("dua '" + d.id + "' references unknown place_id '" +
              *d.place_id + "'");
    }
    if (!place_orders.emplace(*d.place_id, d.order).second) {
      invalid("dua '" + d.id + "' repeats order " + std::to_string(d.order) +
              " for place '" + *d.place_id + "'");
    }
  }
}

const Place* Catalog::find_place(std::string_view id) const {
  auto it = std::find_if(places_.begin(), places_.end(),
                         [&](const Place& p) { return p.id == id; });
  return it == places_.end() ? nullptr : &*it;
}

const Place* Catalog::find_place_by_name(std::string_view name) const {
  auto it = std::find_if(places_.begin(), places_.end(),
                         [&](const Place& p) { return p.name == name; });
  return it == places_.end() ? nullptr : &*it;
}

const Dua* Catalog::find_dua(std::string_view id) const {
  auto it = std::find_if(duas_.begin(), duas_.end(),
                         [&](const Dua& d) { return d.id == id; });
  return it == duas_.end() ? nullptr : &*it;
}

Catalog parse_catalog(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports "parse error at line L, column C: ..."
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos) {
      what = what.substr(pos);
    }
    throw Error(ErrorCode::kParseError, std::string(source) + ": " + what);
  }
  const std::string root(source);
  if (!doc.is_object()) fail(root, "top level must be an object");
  reject_unknown_fields(doc, root, {"version", "places", "duas"});
  std::string version = require_string(doc, root, "version");

  std::vector<Place> places;
  const json& places_doc = require(doc, root, "places");
  if (!places_doc.is_array()) fail(root + ".places", "expected array");
  for (std::size_t i = 0; i < places_doc.size(); ++i) {
    places.push_back(parse_place(places_doc[i],
                                 root + ".places[" + std::to_string(i) + "]"));
  }

  std::vector<Dua> duas;
  const json& duas_doc = require(doc, root, "duas");
  if (!duas_doc.is_array()) fail(root + ".duas", "expected array");
  for (std::size_t i = 0; i < duas_doc.size(); ++i) {
    duas.push_back(
        parse_dua(duas_doc[i], root + ".duas[" + std::to_string(i) + "]"));
  }
  return Catalog(std::move(version), std::move(places), std::move(duas));
}

Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) {
      throw Error(ErrorCode::kNotFound,
                  "catalog not found: " + path.string());
    }
    throw Error(ErrorCode::kIoError, "cannot read catalog: " + path.string());
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_catalog(text, path.filename().string());
}

std::vector<Dua> list_duas(const Catalog& catalog) {
  std::vector<Dua> out = catalog.duas();
  std::sort(out.begin(), out.end(), [&](const Dua& a, const Dua& b) {
    return std::tie(place_name_or_empty(catalog, a), a.order, a.id) <
           std::tie(place_name_or_empty(catalog, b), b.order, b.id);
  });
  return out;
}

std::vector<Dua> duas_for_place(const Catalog& catalog,
                                std::string_view place_id) {
  if (catalog.find_place(place_id) == nullptr) {
    throw Error(ErrorCode::kNotFound,
                "unknown place id '" + std::string(place_id) + "'");
  }
  std::vector<Dua> out;
  for (const Dua& d : catalog.duas()) {
    if (d.place_id && *d.place_id == place_id) out.push_back(d);
  }
  std::sort(out.begin(), out.end(), [](const Dua& a, const Dua& b) {
    return std::tie(a.order, a.id) < std::tie(b.order, b.id);
  });
  return out;
}

std::optional<PlaceMatch> nearest_place(const Catalog& catalog,
                                        const GeoPoint& point) {
  std::optional<PlaceMatch> best;
  for (const Place& place : catalog.places()) {
    const double d = haversine_distance(point, place.location);
    if (!(d < place.geofence_radius_m)) continue;
    if (!best || d < best->distance_m ||
        (d == best->distance_m && place.id < best->place.id)) {
      best = PlaceMatch{place, d};
    }
  }
  return best;
}

}  // namespace guideme
