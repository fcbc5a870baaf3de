#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ultra/amalgam.hpp"
#include "ultra/dendrogram.hpp"
#include "ultra/gallery.hpp"
#include "ultra/rational.hpp"
#include "ultra/space.hpp"
#include "ultra/ugh.hpp"

// Wire formats. Rationals travel as canonical strings ("3/4", "0"); objects
// are emitted with sorted keys, so equal values serialize to equal bytes.
//
//   space:      {"dist": [["0","1/2"],["1/2","0"]], "points": ["a","b"]}
//   dendrogram: {"children": [...], "height": "1/2"} or {"leaf": "a"}
//   gluespec:   {"identify": [["a","a'"]], "x1": <space>, "x2": <space>}
//   chain:      {"links": [[["0:a","b"]], ...], "spaces": [<space>, ...]}
namespace ultra::json_io {

using nlohmann::json;

/// Accepts a string ("p/q", integer, decimal) or a JSON integer.
Rational rational_from_json(const json& j);

json to_json(const UltrametricSpace& space);
json to_json(const Dendrogram& dendrogram);
json to_json(const Certificate& cert);
json to_json(const Spectrum& values);

/// Reads labels plus a raw matrix without checking any axiom.
struct RawSpace {
  std::vector<std::string> labels;
  Matrix dist;
};
RawSpace raw_space_from_json(const json& j);

UltrametricSpace space_from_json(const json& j, bool merge_duplicate_points = false);
Dendrogram dendrogram_from_json(const json& j);
GlueSpec glue_spec_from_json(const json& j);
ChainSpec chain_spec_from_json(const json& j);
std::vector<std::string> labels_from_json(const json& j);

/// True when `j` looks like a dendrogram rather than a space.
bool is_dendrogram(const json& j);

/// Parses text; malformed JSON becomes ultra::Error(ParseError).
json parse(const std::string& text, const std::string& origin);

/// Canonical byte form: two-space indentation and a trailing newline.
std::string dump(const json& j);

}  // namespace ultra::json_io
