#include "common/jsonio.hpp"

#include <fstream>
#include <sstream>

namespace promptrend {

Json parse_json(std::string_view text, std::string_view what) {
  Json parsed = Json::parse(text, nullptr, false);
  if (parsed.is_discarded()) {
    throw validation_error("malformed JSON in " + std::string(what));
  }
  return parsed;
}

Json read_json_file(const std::filesystem::path& path) {
  return parse_json(read_text_file(path), path.string());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw io_error("cannot open for write: " + path.string());
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw io_error("write failed: " + path.string());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw io_error("cannot open: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const Json& require_field(const Json& obj, std::string_view key, std::string_view context) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw validation_error(std::string(context) + ": missing field '" + std::string(key) + "'");
  }
  return *it;
}

std::string require_string(const Json& obj, std::string_view key, std::string_view context) {
  const Json& v = require_field(obj, key, context);
  if (!v.is_string()) {
    throw validation_error(std::string(context) + ": field '" + std::string(key) +
                           "' must be a string");
  }
  return v.get<std::string>();
}

std::int64_t require_int(const Json& obj, std::string_view key, std::string_view context) {
  const Json& v = require_field(obj, key, context);
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw validation_error(std::string(context) + ": field '" + std::string(key) +
                           "' must be an integer");
  }
  return v.get<std::int64_t>();
}

double require_number(const Json& obj, std::string_view key, std::string_view context) {
  const Json& v = require_field(obj, key, context);
  if (!v.is_number()) {
    throw validation_error(std::string(context) + ": field '" + std::string(key) +
                           "' must be a number");
  }
  return v.get<double>();
}

}  // namespace promptrend
