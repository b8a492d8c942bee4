// SPDX-License-Identifier: Apache-2.0
#include "lexshift/error.hpp"

namespace lexshift {
namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> line,
                     std::optional<std::size_t> index) {
  std::string out = to_string(code);
  if (line) out += " (line " + std::to_string(*line) + ")";
  if (index) out += " (record " + std::to_string(*index) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kUnknownUpos: return "UnknownUpos";
    case ErrorCode::kNoObservations: return "NoObservations";
    case ErrorCode::kMalformedJson: return "MalformedJson";
    case ErrorCode::kMissingField: return "MissingField";
    case ErrorCode::kNoVariants: return "NoVariants";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kMissingProvenance: return "MissingProvenance";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> line, std::optional<std::size_t> index)
    : std::runtime_error(decorate(code, message, line, index)),
      code_(code),
      line_(line),
      index_(index) {}

}  // namespace lexshift
