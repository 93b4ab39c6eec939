#pragma once

#include <string_view>

namespace tourney {

// True for the 183 two-letter ISO 639-1 codes (lowercase only).
bool is_iso639_1(std::string_view code) noexcept;

}  // namespace tourney
