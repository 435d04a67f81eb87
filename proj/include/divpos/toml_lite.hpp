#pragma once

#include <string_view>

#include <json.hpp>

namespace divpos::toml_lite {

// Reader for the TOML subset used by hand-written scenario files:
// comments, [tables], [[arrays of tables]], dotted/bare/quoted keys, basic
// strings, integers, booleans, (multi-line) arrays and inline tables.
// Floats, dates and multi-line strings are rejected; exact numbers travel
// as strings anyway.
nlohmann::ordered_json parse(std::string_view text);

}  // namespace divpos::toml_lite
