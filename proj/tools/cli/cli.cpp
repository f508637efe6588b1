#include "cli.hpp"

#include <algorithm>
#include <csignal>
#include <cstdlib>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

#include "guideme/catalog.hpp"
#include "guideme/classifier.hpp"
#include "guideme/error.hpp"
#include "guideme/json_io.hpp"
#include "guideme/reference_index.hpp"
#include "guideme/resolver.hpp"
#include "guideme/service.hpp"

namespace guideme::cli {
namespace {

using nlohmann::json;

bool quiet() { return std::getenv("QUIET") != nullptr; }

void print_response(std::ostream& out, const GuideResponse& r) {
  out << "mode: " << to_string(r.mode) << '\n';
  if (r.matched_place) {
    out << "place: " << r.matched_place->name << " (" << r.matched_place->id << ")";
    if (r.diagnostics.distance_m) {
      out << " at " << std::fixed << std::setprecision(2) << *r.diagnostics.distance_m
          << " m" << std::defaultfloat;
    }
    out << '\n';
  }
  if (r.diagnostics.label_scores) {
    for (const auto& s : *r.diagnostics.label_scores) {
      out << "score: " << s.label << ' ' << std::fixed << std::setprecision(4)
          << s.confidence << std::defaultfloat << '\n';
    }
  }
  out << "duas:\n";
  for (std::size_t i = 0; i < r.duas.size(); ++i) {
    out << "  " << i + 1 << ". " << r.duas[i].title << '\n'
        << "     " << r.duas[i].body << '\n';
  }
}

void print_duas(std::ostream& out, const Catalog& catalog, const std::vector<Dua>& duas) {
  for (const auto& d : duas) {
    const std::string where =
        d.place_id ? catalog.find_place(*d.place_id)->name : std::string("general");
    out << d.id << "\t[" << where << "]\t" << d.title << '\n';
  }
}

void print_report(std::ostream& out, const EvaluationReport& report) {
  out << "accuracy: " << std::fixed << std::setprecision(3) << report.accuracy
      << std::defaultfloat << " (" << report.correct << "/" << report.total << ")\n";
  std::size_t width = 9;
  for (const auto& l : report.labels) width = std::max(width, l.size() + 2);
  out << "confusion (rows = true, columns = predicted):\n" << std::setw(int(width)) << "";
  for (const auto& l : report.labels) out << std::setw(int(width)) << l;
  out << '\n';
  for (std::size_t i = 0; i < report.labels.size(); ++i) {
    out << std::setw(int(width)) << report.labels[i];
    for (std::size_t n : report.confusion[i]) out << std::setw(int(width)) << n;
    out << '\n';
  }
}

// Error report for a failed operation. With --json the error body goes to
// `out` as data so scripts can parse it.
int fail(const Error& e, bool as_json, std::ostream& out, std::ostream& err) {
  if (as_json) out << error_body(e.code(), e.what()).dump(2) << '\n';
  err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
  return 1;
}

HttpServer* g_running_server = nullptr;

extern "C" void handle_stop_signal(int) {
  if (g_running_server != nullptr) g_running_server->stop();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"guideme: resolve places and their duas by list, location or photo"};
  app.name("guideme");
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  // serve
  ServiceConfig config;
  std::string catalog_path;
  std::string index_path;
  std::string asset_dir;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--host", config.host, "Bind address")
      ->envname("GUIDEME_HOST")->capture_default_str();
  serve->add_option("--port", config.port, "Port (0 = any free port)")
      ->envname("GUIDEME_PORT")->check(CLI::Range(0, 65535))->capture_default_str();
  serve->add_option("--catalog", config.catalog_path, "Catalog file")
      ->envname("GUIDEME_CATALOG")->required();
  serve->add_option("--index", config.index_path, "Index directory")
      ->envname("GUIDEME_INDEX")->required();
  serve->add_option("--assets", asset_dir, "Static UI directory served at /")
      ->envname("GUIDEME_ASSETS");
  serve->add_option("--floor", config.policy.floor, "Confidence floor")
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  serve->add_option("--accept", config.policy.accept, "Acceptance threshold")
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  serve->add_option("--max-image-bytes", config.max_image_bytes, "Upload size limit")
      ->capture_default_str();
  serve->add_flag("--cors", config.permissive_cors, "Allow any origin");
  serve->add_flag("--admin-reload", config.enable_admin_reload,
                  "Enable POST /api/admin/reload");

  // catalog-validate
  auto* validate = app.add_subcommand("catalog-validate", "Validate a catalog file");
  validate->add_option("path", catalog_path, "Catalog file")->required();

  // index-build
  std::string train_dir;
  std::string out_dir;
  DescriptorParams params;
  std::string model_name = "guideme-reference";
  std::string model_version = "1";
  auto* build = app.add_subcommand("index-build", "Build a reference index");
  build->add_option("--train", train_dir, "Directory of per-label image folders")->required();
  build->add_option("--out", out_dir, "Output index directory")->required();
  build->add_option("--grid", params.grid_size, "Descriptor grid size")->capture_default_str();
  build->add_option("--bins", params.histogram_bins, "Histogram bins")->capture_default_str();
  build->add_option("--temperature", params.temperature, "Softmax temperature")
      ->capture_default_str();
  build->add_option("--name", model_name, "Model name")->capture_default_str();
  build->add_option("--model-version", model_version, "Model version")->capture_default_str();

  // index-eval
  std::string test_dir;
  auto* eval = app.add_subcommand("index-eval", "Top-1 accuracy on a labelled test set");
  eval->add_option("--index", index_path, "Index directory")->required();
  eval->add_option("--test", test_dir, "Directory of per-label image folders")->required();

  // classify
  std::string image_path;
  SelectionPolicy policy;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one image");
  classify_cmd->add_option("--index", index_path, "Index directory")->required();
  classify_cmd->add_option("image", image_path, "PNG or JPEG file")->required();
  classify_cmd->add_option("--catalog", catalog_path, "Catalog to map the label to a place");
  classify_cmd->add_option("--floor", policy.floor, "Confidence floor")
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  classify_cmd->add_option("--accept", policy.accept, "Acceptance threshold")
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();

  // resolve-location
  double lat = 0.0;
  double lon = 0.0;
  std::string status = "available";
  auto* locate = app.add_subcommand("resolve-location", "Resolve duas for a position");
  locate->add_option("--catalog", catalog_path, "Catalog file")->required();
  auto* lat_opt = locate->add_option("--lat", lat, "Latitude in degrees");
  auto* lon_opt = locate->add_option("--lon", lon, "Longitude in degrees");
  locate->add_option("--status", status, "Device location status")
      ->check(CLI::IsMember({"available", "gps_disabled", "permission_denied"}));

  // list-duas
  auto* list = app.add_subcommand("list-duas", "Print the manual-mode dua list");
  list->add_option("--catalog", catalog_path, "Catalog file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*validate) {
      const Catalog catalog = load_catalog(catalog_path);
      if (as_json) {
        out << json{{"ok", true},
                    {"version", catalog.version()},
                    {"places", catalog.places().size()},
                    {"duas", catalog.duas().size()}}
                   .dump(2)
            << '\n';
      } else {
        out << "OK\n";
        if (!quiet()) {
          err << catalog.places().size() << " places, " << catalog.duas().size()
              << " duas, version " << catalog.version() << '\n';
        }
      }
      return 0;
    }

    if (*list) {
      const Catalog catalog = load_catalog(catalog_path);
      const auto duas = list_duas(catalog);
      if (as_json) {
        out << json(duas).dump(2) << '\n';
      } else {
        print_duas(out, catalog, duas);
      }
      return 0;
    }

    if (*locate) {
      const Catalog catalog = load_catalog(catalog_path);
      LocationStatus location = GpsDisabled{};
      if (status == "gps_disabled") {
        location = GpsDisabled{};
      } else if (status == "permission_denied") {
        location = PermissionDenied{};
      } else {
        if (lat_opt->count() == 0 || lon_opt->count() == 0) {
          err << "error: --lat and --lon are required when status is available\n";
          return 2;
        }
        location = LocationAvailable{GeoPoint(lat, lon)};
      }
      const auto response = resolve_location(catalog, location);
      if (as_json) {
        out << json(response).dump(2) << '\n';
      } else {
        print_response(out, response);
      }
      return 0;
    }

    if (*build) {
      const auto index = build_index(train_dir, params, model_name, model_version);
      save_index(index, out_dir);
      if (as_json) {
        out << manifest_json(index).dump(2) << '\n';
      } else {
        out << "index: " << out_dir << '\n'
            << "labels: " << index.manifest().labels.size() << '\n'
            << "descriptors: " << index.descriptor_count() << '\n';
      }
      return 0;
    }

    if (*eval) {
      const auto report = evaluate_index(load_index(index_path), test_dir);
      if (as_json) {
        out << json(report).dump(2) << '\n';
      } else {
        print_report(out, report);
      }
      return 0;
    }

    if (*classify_cmd) {
      policy.validate();
      const auto index = load_index(index_path);
      const auto scores = classify(read_file_bytes(image_path), index);
      const auto selection = select_place(scores, policy);
      std::optional<Place> place;
      if (selection.top && !catalog_path.empty()) {
        const Catalog catalog = load_catalog(catalog_path);
        if (const Place* p = catalog.find_place_by_name(*selection.top)) place = *p;
      }
      if (as_json) {
        json doc = classification_json(scores, selection);
        doc["place"] = place ? json(*place) : json(nullptr);
        out << doc.dump(2) << '\n';
      } else {
        for (const auto& s : scores) {
          out << std::left << std::setw(24) << s.label << std::right << std::fixed
              << std::setprecision(6) << s.confidence << std::defaultfloat << '\n';
        }
        out << "selected: " << (selection.top ? *selection.top : "(none)");
        if (place) out << " -> place " << place->id;
        out << '\n';
      }
      if (!selection.top) {
        err << "error: " << to_string(ErrorCode::kUnrecognizedScene)
            << ": no label reached " << policy.accept << '\n';
        return 1;
      }
      return 0;
    }

    if (*serve) {
      if (!asset_dir.empty()) config.asset_dir = asset_dir;
      config.access_log = !quiet();
      auto service = std::make_shared<GuideService>(config);
      HttpServer server(service);
      const int port = server.bind();
      if (!quiet()) err << "guideme listening on " << config.host << ':' << port << '\n';
      g_running_server = &server;
      std::signal(SIGINT, handle_stop_signal);
      std::signal(SIGTERM, handle_stop_signal);
      server.serve();
      g_running_server = nullptr;
      return 0;
    }
  } catch (const Error& e) {
    return fail(e, as_json, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace guideme::cli
