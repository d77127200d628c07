#pragma once

#include <cstdint>
#include <string>

namespace hypack {

// Hex SHA-256 digest of a byte string.
std::string sha256_hex(const std::string& data);

// Digest of a file's contents; throws Error when the file cannot be read.
std::string sha256_file(const std::string& path);

}  // namespace hypack
