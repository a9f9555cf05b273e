#pragma once

#include <chrono>
#include <cstdint>
#include <thread>

namespace promptrend {

// Microsecond clock abstraction so rate limiting, backoff, and run ledgers
// can be driven by a simulated clock in tests.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual std::int64_t now_micros() = 0;
  virtual void sleep_for_micros(std::int64_t micros) = 0;
};

class RealClock : public Clock {
 public:
  std::int64_t now_micros() override {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
  }
  void sleep_for_micros(std::int64_t micros) override {
    if (micros > 0) {
      std::this_thread::sleep_for(std::chrono::microseconds(micros));
    }
  }
};

// Virtual time. Single-threaded semantics: sleeping advances the clock
// immediately. Use with parallelism = 1.
class SimulatedClock : public Clock {
 public:
  explicit SimulatedClock(std::int64_t start_micros = 0) : now_(start_micros) {}

  std::int64_t now_micros() override { return now_; }
  void sleep_for_micros(std::int64_t micros) override {
    if (micros > 0) {
      now_ += micros;
    }
  }
  void advance_micros(std::int64_t micros) { now_ += micros; }

 private:
  std::int64_t now_;
};

}  // namespace promptrend
