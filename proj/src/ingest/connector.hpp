#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "common/jsonio.hpp"
#include "common/timeutil.hpp"
#include "core/record.hpp"

namespace promptrend {

// One candidate post as pulled from a platform, before filtering.
struct RawPost {
  Platform platform = Platform::other;
  std::string source_locator;
  std::string author;
  std::string text;
  std::string title;
  EngagementSignals engagement;
  UnixSeconds posted_at = 0;
};

RawPost raw_post_from_json(const Json& doc);
Json raw_post_to_json(const RawPost& post);

// Platform agent boundary. poll() returns everything after `cursor` and
// advances it; polling again with the updated cursor yields nothing new until
// the source grows, so replays are idempotent per (connector, cursor).
class Connector {
 public:
  virtual ~Connector() = default;
  virtual std::string name() const = 0;
  virtual std::vector<RawPost> poll(std::string& cursor) = 0;
};

// Reads RawPost JSONL fixtures; the cursor is the count of consumed lines.
class FileConnector : public Connector {
 public:
  explicit FileConnector(std::filesystem::path path);
  std::string name() const override;
  std::vector<RawPost> poll(std::string& cursor) override;

 private:
  std::filesystem::path path_;
};

// Generic authenticated HTTP poller: GET <url>?cursor=<cursor>, expecting
// {"posts": [RawPost...], "next_cursor": "..."}. The bearer token is read
// from the environment variable named in the config, never from the config
// value itself.
struct HttpConnectorConfig {
  std::string name;
  std::string url;            // http://host:port/path
  std::string auth_env;       // optional env var holding the bearer token
  int timeout_seconds = 30;
  int poll_interval_seconds = 3600;  // advisory; enforced by the scheduler
};

class HttpPollConnector : public Connector {
 public:
  explicit HttpPollConnector(HttpConnectorConfig config);
  std::string name() const override { return config_.name; }
  std::vector<RawPost> poll(std::string& cursor) override;

 private:
  HttpConnectorConfig config_;
};

}  // namespace promptrend
