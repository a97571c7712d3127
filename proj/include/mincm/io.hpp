#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "mincm/complex.hpp"
#include "mincm/dual.hpp"
#include "mincm/shelling.hpp"

namespace mincm::io {

// Plain-text format: one facet per line, whitespace-separated vertex labels.
// Lines whose first non-blank character is '#' and blank lines are ignored;
// a line holding only "{}" is the empty face.
//
// Structured format: a JSON object {"n": int?, "vertices": [label]?,
// "facets": [[label]]}. Labels may be strings or integers.

SimplicialComplex read_text(std::istream& in);
SimplicialComplex parse_text(const std::string& text);
std::string write_text(const SimplicialComplex& c);

SimplicialComplex from_json(const nlohmann::json& doc);
SimplicialComplex parse_json(const std::string& text);
nlohmann::json to_json(const SimplicialComplex& c);
std::string write_json(const SimplicialComplex& c);

/// Detects the format from the first non-blank character ('{' is JSON).
SimplicialComplex parse_any(const std::string& text);
/// Throws Error(Io) when the file cannot be read.
SimplicialComplex read_file(const std::string& path);
std::string read_file_text(const std::string& path);

/// Label as a JSON value: an integer when the label is a plain integer.
nlohmann::json label_value(const std::string& label);
/// A face of `c` as a list of label values.
nlohmann::json face_to_json(const SimplicialComplex& c, Face f);

nlohmann::json to_json(const ShellingCertificate& cert);
/// Throws MalformedInput when moves are not facets of the target.
ShellingCertificate certificate_from_json(const nlohmann::json& doc);

/// {"n": n, "variables": [label], "generators": [[label]]}; `c` supplies the
/// variable names.
nlohmann::json to_json(const SquarefreeIdeal& ideal, const SimplicialComplex& c);

}  // namespace mincm::io
