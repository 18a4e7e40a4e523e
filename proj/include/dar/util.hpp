#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dar {

// Reads a whole file into a byte string; throws on failure.
std::string read_file_bytes(const std::string& path);

void write_file_bytes(const std::string& path, const std::string& bytes);

// Hex SHA-1 of the content in git blob form ("blob <size>\0<content>").
// Embedded in experiment reports so runs can be traced back to their inputs.
std::string git_blob_sha1(const std::string& content);

std::string sha1_of_file(const std::string& path);

// Fixed-format floating point rendering (%.10g) so that repeated runs
// serialize identically byte for byte.
std::string format_double(double v);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace dar
