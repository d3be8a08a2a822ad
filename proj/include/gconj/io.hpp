#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "gconj/complex.hpp"

namespace gconj {

/// {"n": int, "facets": [[int, ...], ...]}
nlohmann::json complex_to_json(const Complex& c);
Complex complex_from_json(const nlohmann::json& j);

/// One facet per line, vertex ids separated by whitespace. `#` starts a
/// comment; a leading `# n <N>` line records the vertex bound (otherwise the
/// largest id is used).
std::string complex_to_text(const Complex& c);
Complex complex_from_text(const std::string& text);

/// Reads a facet list, choosing the format from the first non-blank
/// character (`{` means JSON). Throws ParseError.
Complex parse_complex(const std::string& content);
Complex read_complex_file(const std::string& path);

/// Writes via a temporary file and rename, so readers never see a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace gconj
