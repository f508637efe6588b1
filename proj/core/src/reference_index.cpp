#include "guideme/reference_index.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dataset_scan.hpp"
#include "guideme/error.hpp"

namespace guideme {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr std::string_view kFormatName = "guideme-reference-index";
constexpr std::string_view kTableMagic = "# guideme-descriptors";

bool has_control_chars(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](char c) { return c == '\t' || c == '\n' || c == '\r'; });
}

[[noreturn]] void bad_index(const std::string& what) {
  throw Error(ErrorCode::kParseError, "index: " + what);
}

void append_double(std::string& out, double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, end);
}

double parse_double(std::string_view text, std::size_t line_no) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    bad_index("line " + std::to_string(line_no) + ": bad number '" +
              std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find('\t', start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

}  // namespace

ReferenceIndex::ReferenceIndex(ModelManifest manifest,
                               std::vector<std::vector<IndexEntry>> entries)
    : manifest_(std::move(manifest)), entries_(std::move(entries)) {
  auto invalid = [](const std::string& msg) {
    throw Error(ErrorCode::kValidationError, msg);
  };
  manifest_.descriptor_params.validate();
  if (manifest_.labels.empty()) invalid("index has no labels");
  std::set<std::string> seen;
  for (const auto& label : manifest_.labels) {
    if (label.empty() || has_control_chars(label)) {
      invalid("invalid label '" + label + "'");
    }
    if (!seen.insert(label).second) invalid("duplicate label '" + label + "'");
  }
  if (entries_.size() != manifest_.labels.size()) {
    invalid("entry groups do not match label count");
  }
  const std::size_t dim = manifest_.descriptor_params.dimension();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].empty()) {
      invalid("label '" + manifest_.labels[i] + "' has no descriptors");
    }
    for (const auto& e : entries_[i]) {
      if (e.descriptor.size() != dim) {
        invalid("descriptor from '" + e.source + "' has length " +
                std::to_string(e.descriptor.size()) + ", expected " +
                std::to_string(dim));
      }
      if (has_control_chars(e.source)) invalid("invalid source name");
    }
  }
}

std::size_t ReferenceIndex::descriptor_count() const noexcept {
  std::size_t n = 0;
  for (const auto& group : entries_) n += group.size();
  return n;
}

ReferenceIndex build_index(const fs::path& training_root,
                           const DescriptorParams& params,
                           const std::string& name, const std::string& version) {
  params.validate();
  const auto folders = detail::scan_label_folders(training_root);
  if (folders.empty()) {
    throw Error(ErrorCode::kValidationError,
                "no label folders under " + training_root.string());
  }
  ModelManifest manifest{name, version, {}, params};
  std::vector<std::vector<IndexEntry>> entries;
  for (const auto& folder : folders) {
    if (folder.files.empty()) {
      throw Error(ErrorCode::kValidationError,
                  "label '" + folder.label + "' has no images");
    }
    manifest.labels.push_back(folder.label);
    auto& group = entries.emplace_back();
    for (const auto& file : folder.files) {
      const std::string source =
          folder.label + "/" + file.filename().string();
      try {
        const auto bytes = read_file_bytes(file);
        group.push_back({source, extract_descriptor(decode_image(bytes), params)});
      } catch (const Error& e) {
        throw Error(e.code(), file.string() + ": " + e.what());
      }
    }
  }
  return ReferenceIndex(std::move(manifest), std::move(entries));
}

std::string manifest_document(const ReferenceIndex& index) {
  const auto& m = index.manifest();
  json doc = {
      {"format", kFormatName},
      {"format_version", kIndexFormatVersion},
      {"name", m.name},
      {"version", m.version},
      {"labels", m.labels},
      {"descriptor_params",
       {{"grid_size", m.descriptor_params.grid_size},
        {"histogram_bins", m.descriptor_params.histogram_bins},
        {"temperature", m.descriptor_params.temperature}}},
      {"descriptor_dimension", m.descriptor_params.dimension()},
      {"descriptor_count", index.descriptor_count()},
  };
  return doc.dump(2) + "\n";
}

std::string descriptor_table(const ReferenceIndex& index) {
  const auto& m = index.manifest();
  std::string out(kTableMagic);
  out += " v" + std::to_string(kIndexFormatVersion) +
         " dim=" + std::to_string(m.descriptor_params.dimension()) +
         " count=" + std::to_string(index.descriptor_count()) + "\n";
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    for (const auto& e : index.entries()[i]) {
      out += m.labels[i];
      out += '\t';
      out += e.source;
      for (double v : e.descriptor.values()) {
        out += '\t';
        append_double(out, v);
      }
      out += '\n';
    }
  }
  return out;
}

ReferenceIndex parse_index(const std::string& manifest_text,
                           const std::string& table_text) {
  json doc;
  try {
    doc = json::parse(manifest_text);
  } catch (const json::parse_error& e) {
    bad_index(std::string("manifest: ") + e.what());
  }
  ModelManifest manifest;
  std::size_t declared_count = 0;
  try {
    if (doc.at("format").get<std::string>() != kFormatName) {
      bad_index("manifest: unexpected format");
    }
    if (doc.at("format_version").get<int>() != kIndexFormatVersion) {
      bad_index("manifest: unsupported format_version");
    }
    manifest.name = doc.at("name").get<std::string>();
    manifest.version = doc.at("version").get<std::string>();
    manifest.labels = doc.at("labels").get<std::vector<std::string>>();
    const auto& p = doc.at("descriptor_params");
    manifest.descriptor_params.grid_size = p.at("grid_size").get<int>();
    manifest.descriptor_params.histogram_bins = p.at("histogram_bins").get<int>();
    manifest.descriptor_params.temperature = p.at("temperature").get<double>();
    declared_count = doc.at("descriptor_count").get<std::size_t>();
    if (doc.at("descriptor_dimension").get<std::size_t>() !=
        manifest.descriptor_params.dimension()) {
      bad_index("manifest: descriptor_dimension disagrees with descriptor_params");
    }
  } catch (const json::exception& e) {
    bad_index(std::string("manifest: ") + e.what());
  }
  manifest.descriptor_params.validate();
  const std::size_t dim = manifest.descriptor_params.dimension();

  std::istringstream in(table_text);
  std::string line;
  if (!std::getline(in, line)) bad_index("descriptor table is empty");
  const std::string expected_header =
      std::string(kTableMagic) + " v" + std::to_string(kIndexFormatVersion) +
      " dim=" + std::to_string(dim) + " count=" + std::to_string(declared_count);
  if (line != expected_header) {
    bad_index("descriptor table header mismatch: '" + line + "'");
  }

  std::vector<std::vector<IndexEntry>> entries(manifest.labels.size());
  std::size_t rows = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != dim + 2) {
      bad_index("line " + std::to_string(line_no) + ": expected " +
                std::to_string(dim + 2) + " fields, got " +
                std::to_string(fields.size()));
    }
    auto it = std::find(manifest.labels.begin(), manifest.labels.end(), fields[0]);
    if (it == manifest.labels.end()) {
      bad_index("line " + std::to_string(line_no) + ": unknown label '" +
                std::string(fields[0]) + "'");
    }
    std::vector<double> values;
    values.reserve(dim);
    for (std::size_t i = 2; i < fields.size(); ++i) {
      values.push_back(parse_double(fields[i], line_no));
    }
    entries[std::size_t(it - manifest.labels.begin())].push_back(
        {std::string(fields[1]), ImageDescriptor(std::move(values))});
    ++rows;
  }
  if (rows != declared_count) {
    bad_index("descriptor_count is " + std::to_string(declared_count) +
              " but the table has " + std::to_string(rows) + " rows");
  }
  return ReferenceIndex(std::move(manifest), std::move(entries));
}

void save_index(const ReferenceIndex& index, const fs::path& dir) {
  if (index.empty()) throw Error(ErrorCode::kInvalidState, "refusing to save an empty index");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir.string());
  write_text(dir / kManifestFileName, manifest_document(index));
  write_text(dir / kDescriptorFileName, descriptor_table(index));
}

ReferenceIndex load_index(const fs::path& dir) {
  const auto manifest_path = dir / kManifestFileName;
  std::error_code ec;
  if (!fs::exists(manifest_path, ec)) {
    throw Error(ErrorCode::kNotFound, "no index manifest at " + manifest_path.string());
  }
  return parse_index(read_text(manifest_path), read_text(dir / kDescriptorFileName));
}

}  // namespace guideme
