// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace lexshift {

// Whole-file read in binary mode. Throws Error{kIo}.
std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`, so readers
// never observe a partial file. Throws Error{kIo}.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// Lowercase hex SHA-256 of the exact bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace lexshift
