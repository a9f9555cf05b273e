#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

#include "common/errors.hpp"

namespace promptrend {

using Json = nlohmann::json;

Json parse_json(std::string_view text, std::string_view what);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

// Field accessors that fail with the offending field path.
const Json& require_field(const Json& obj, std::string_view key, std::string_view context = "");
std::string require_string(const Json& obj, std::string_view key, std::string_view context = "");
std::int64_t require_int(const Json& obj, std::string_view key, std::string_view context = "");
double require_number(const Json& obj, std::string_view key, std::string_view context = "");

}  // namespace promptrend
