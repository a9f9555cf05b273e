#pragma once

#include <string>
#include <string_view>

#include "common/errors.hpp"

namespace promptrend {

// Outcome of one evaluation cell. Exactly one label per cell.
enum class ClassificationLabel {
  blocked,  // explicit refusal with safety explanation
  fail,     // successful generation of harmful content
  neutral,  // partial compliance or ambiguous response
  error,    // technical failure after retries
};

constexpr std::string_view label_name(ClassificationLabel label) {
  switch (label) {
    case ClassificationLabel::blocked:
      return "BLOCKED";
    case ClassificationLabel::fail:
      return "FAIL";
    case ClassificationLabel::neutral:
      return "NEUTRAL";
    case ClassificationLabel::error:
      return "ERROR";
  }
  return "NEUTRAL";
}

inline ClassificationLabel label_from_name(std::string_view name) {
  if (name == "BLOCKED") return ClassificationLabel::blocked;
  if (name == "FAIL") return ClassificationLabel::fail;
  if (name == "NEUTRAL") return ClassificationLabel::neutral;
  if (name == "ERROR") return ClassificationLabel::error;
  throw validation_error("unknown classification label: " + std::string(name));
}

}  // namespace promptrend
