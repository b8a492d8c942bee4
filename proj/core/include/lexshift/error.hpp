// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace lexshift {

enum class ErrorCode {
  kMalformedLine,
  kUnknownUpos,
  kNoObservations,
  kMalformedJson,
  kMissingField,
  kNoVariants,
  kInvalidConfig,
  kMissingProvenance,
  kIo,
};

const char* to_string(ErrorCode code);

// Single exception type for the library. `line()` is set for errors that
// originate from a specific input line (1-based) and `index()` for errors tied
// to a record position in a JSON array.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> index_;
};

}  // namespace lexshift
