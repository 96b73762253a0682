#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace capsula {

/// SHA-256 digest of `data`, as 64 lowercase hex characters.
std::string sha256_hex(std::string_view data);

bool is_sha256_hex(std::string_view s);

} // namespace capsula
