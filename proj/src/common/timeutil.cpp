#include "common/timeutil.hpp"

#include <chrono>
#include <cstdio>

#include "common/errors.hpp"

namespace promptrend {

namespace {

constexpr bool is_leap(std::int64_t y) {
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

constexpr int days_in_month(std::int64_t y, int m) {
  constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) {
    return 29;
  }
  return kDays[m - 1];
}

// Howard Hinnant's civil-from-days / days-from-civil algorithms.
constexpr std::int64_t days_from_civil(std::int64_t y, int m, int d) {
  y -= m <= 2;
  std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  std::int64_t yoe = y - era * 400;
  std::int64_t doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + doe - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, int& m, int& d) {
  z += 719468;
  std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  std::int64_t doe = z - era * 146097;
  std::int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = yoe + era * 400;
  std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  std::int64_t mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y += m <= 2;
}

}  // namespace

UnixSeconds now_unix() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

std::string format_iso8601(UnixSeconds ts) {
  std::int64_t days = ts / kSecondsPerDay;
  std::int64_t rem = ts % kSecondsPerDay;
  if (rem < 0) {
    rem += kSecondsPerDay;
    days -= 1;
  }
  std::int64_t year = 0;
  int month = 0, day = 0;
  civil_from_days(days, year, month, day);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04lld-%02d-%02dT%02d:%02d:%02dZ",
                static_cast<long long>(year), month, day,
                static_cast<int>(rem / 3600), static_cast<int>((rem / 60) % 60),
                static_cast<int>(rem % 60));
  return buf;
}

UnixSeconds parse_iso8601(std::string_view text) {
  int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
  char tail = 0;
  std::string buf(text);
  int matched = std::sscanf(buf.c_str(), "%d-%d-%dT%d:%d:%d%c", &year, &month,
                            &day, &hour, &minute, &second, &tail);
  if (matched < 6 || month < 1 || month > 12 || day < 1 ||
      day > days_in_month(year, month) || hour > 23 || minute > 59 ||
      second > 60) {
    throw validation_error("invalid ISO-8601 timestamp: " + buf);
  }
  if (matched == 7 && tail == '.') {
    // Fractional seconds present; require the trailing Z after them.
    if (buf.find('Z') == std::string::npos) {
      throw validation_error("ISO-8601 timestamp must be UTC (Z): " + buf);
    }
  } else if (matched == 7 && tail != 'Z') {
    throw validation_error("ISO-8601 timestamp must be UTC (Z): " + buf);
  } else if (matched == 6) {
    throw validation_error("ISO-8601 timestamp must end in Z: " + buf);
  }
  return days_from_civil(year, month, day) * kSecondsPerDay + hour * 3600 +
         minute * 60 + second;
}

}  // namespace promptrend
