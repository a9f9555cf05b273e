#include "ingest/connector.hpp"

#include <cstdlib>
#include <fstream>

#include <httplib.h>

#include "common/errors.hpp"

namespace promptrend {
namespace {

UnixSeconds parse_posted_at(const Json& doc) {
  const Json& value = require_field(doc, "posted_at", "raw post");
  if (value.is_number_integer() || value.is_number_unsigned()) {
    return value.get<UnixSeconds>();
  }
  if (value.is_string()) return parse_iso8601(value.get<std::string>());
  throw validation_error("raw post: posted_at must be unix seconds or ISO-8601");
}

struct SplitUrl {
  std::string host_port;  // scheme://host:port
  std::string path;       // /path (query added by caller)
};

SplitUrl split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw config_error("connector url missing scheme: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

RawPost raw_post_from_json(const Json& doc) {
  RawPost post;
  post.platform = platform_from_name(require_string(doc, "platform", "raw post"));
  post.source_locator = require_string(doc, "source_locator", "raw post");
  post.author = require_string(doc, "author", "raw post");
  post.text = require_string(doc, "text", "raw post");
  post.title = doc.value("title", std::string{});
  post.posted_at = parse_posted_at(doc);
  const Json& engagement = require_field(doc, "engagement", "raw post");
  post.engagement = EngagementSignals::from_json(engagement);
  return post;
}

Json raw_post_to_json(const RawPost& post) {
  return Json{{"platform", platform_name(post.platform)},
              {"source_locator", post.source_locator},
              {"author", post.author},
              {"text", post.text},
              {"title", post.title},
              {"engagement", post.engagement.to_json()},
              {"posted_at", post.posted_at}};
}

FileConnector::FileConnector(std::filesystem::path path) : path_(std::move(path)) {}

std::string FileConnector::name() const {
  return "file:" + path_.filename().string();
}

std::vector<RawPost> FileConnector::poll(std::string& cursor) {
  std::ifstream in(path_, std::ios::binary);
  if (!in) throw io_error("cannot open fixture " + path_.string());
  std::size_t skip = 0;
  if (!cursor.empty()) skip = std::stoull(cursor);

  std::vector<RawPost> posts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no <= skip || line.empty()) continue;
    posts.push_back(raw_post_from_json(
        parse_json(line, path_.filename().string() + ":" + std::to_string(line_no))));
  }
  cursor = std::to_string(line_no);
  return posts;
}

HttpPollConnector::HttpPollConnector(HttpConnectorConfig config)
    : config_(std::move(config)) {
  if (config_.url.empty()) throw config_error("http connector: url required");
}

std::vector<RawPost> HttpPollConnector::poll(std::string& cursor) {
  const SplitUrl url = split_url(config_.url);
  httplib::Client client(url.host_port);
  client.set_connection_timeout(config_.timeout_seconds, 0);
  client.set_read_timeout(config_.timeout_seconds, 0);

  httplib::Headers headers;
  if (!config_.auth_env.empty()) {
    const char* token = std::getenv(config_.auth_env.c_str());
    if (token == nullptr || *token == '\0') {
      throw config_error("http connector " + config_.name +
                         ": environment variable " + config_.auth_env +
                         " is not set");
    }
    headers.emplace("Authorization", std::string("Bearer ") + token);
  }

  std::string path = url.path;
  if (!cursor.empty()) {
    path += (path.find('?') == std::string::npos ? '?' : '&');
    path += "cursor=" + httplib::detail::encode_url(cursor);
  }
  auto response = client.Get(path, headers);
  if (!response) {
    throw io_error("http connector " + config_.name + ": request failed");
  }
  if (response->status != 200) {
    throw io_error("http connector " + config_.name + ": HTTP " +
                   std::to_string(response->status));
  }
  const Json body = parse_json(response->body, "connector response");
  std::vector<RawPost> posts;
  for (const Json& item : require_field(body, "posts", "connector response")) {
    posts.push_back(raw_post_from_json(item));
  }
  if (body.contains("next_cursor") && body["next_cursor"].is_string()) {
    cursor = body["next_cursor"].get<std::string>();
  }
  return posts;
}

}  // namespace promptrend
