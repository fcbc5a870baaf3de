#include "ultra/json_io.hpp"

#include "ultra/error.hpp"

namespace ultra::json_io {

namespace {

[[noreturn]] void bad_shape(const std::string& what) { throw Error(ErrorKind::ParseError, {}, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_shape(std::string("expected an object with key \"") + key + "\"");
  return j.at(key);
}

std::string string_from_json(const json& j, const char* what) {
  if (!j.is_string()) bad_shape(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Identification identification_from_json(const json& j) {
  if (!j.is_array()) bad_shape("identification must be an array of [left, right] pairs");
  Identification out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) bad_shape("identification entries must be [left, right] pairs");
    out.emplace_back(string_from_json(pair[0], "identified label"), string_from_json(pair[1], "identified label"));
  }
  return out;
}

json to_json(const DendrogramNode& node) {
  if (node.is_leaf()) return json{{"leaf", node.label}};
  json children = json::array();
  for (const auto& child : node.children) children.push_back(to_json(child));
  return json{{"children", std::move(children)}, {"height", node.height.str()}};
}

DendrogramNode node_from_json(const json& j) {
  if (j.is_object() && j.contains("leaf")) return DendrogramNode::leaf(string_from_json(j.at("leaf"), "leaf"));
  DendrogramNode node{rational_from_json(field(j, "height")), {}, {}};
  const json& children = field(j, "children");
  if (!children.is_array()) bad_shape("children must be an array");
  for (const auto& c : children) node.children.push_back(node_from_json(c));
  return node;
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad_shape("rational values must be strings like \"3/4\" or integers, got " + j.dump());
}

json to_json(const UltrametricSpace& space) {
  json rows = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < space.size(); ++j) row.push_back(space.distance(i, j).str());
    rows.push_back(std::move(row));
  }
  return json{{"dist", std::move(rows)}, {"points", space.labels()}};
}

json to_json(const Dendrogram& dendrogram) { return to_json(dendrogram.root); }

json to_json(const Certificate& cert) {
  return json{{"achieved", cert.achieved.str()},
              {"embed_x", cert.embed_x},
              {"embed_y", cert.embed_y},
              {"z", to_json(cert.z)}};
}

json to_json(const Spectrum& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

RawSpace raw_space_from_json(const json& j) {
  RawSpace raw;
  raw.labels = labels_from_json(field(j, "points"));
  const json& dist = field(j, "dist");
  if (!dist.is_array()) bad_shape("dist must be an array of rows");
  for (const auto& row : dist) {
    if (!row.is_array()) bad_shape("dist rows must be arrays");
    auto& out = raw.dist.emplace_back();
    for (const auto& v : row) out.push_back(rational_from_json(v));
  }
  return raw;
}

UltrametricSpace space_from_json(const json& j, bool merge_duplicate_points) {
  RawSpace raw = raw_space_from_json(j);
  if (merge_duplicate_points) return merge_duplicates(std::move(raw.labels), raw.dist);
  return UltrametricSpace::validate(std::move(raw.labels), raw.dist);
}

Dendrogram dendrogram_from_json(const json& j) { return Dendrogram{node_from_json(j)}; }

GlueSpec glue_spec_from_json(const json& j) {
  return GlueSpec{space_from_json(field(j, "x1")), space_from_json(field(j, "x2")),
                  identification_from_json(field(j, "identify"))};
}

ChainSpec chain_spec_from_json(const json& j) {
  ChainSpec chain;
  const json& spaces = field(j, "spaces");
  const json& links = field(j, "links");
  if (!spaces.is_array() || !links.is_array()) bad_shape("spaces and links must be arrays");
  for (const auto& s : spaces) chain.spaces.push_back(space_from_json(s));
  for (const auto& l : links) chain.links.push_back(identification_from_json(l));
  return chain;
}

std::vector<std::string> labels_from_json(const json& j) {
  if (!j.is_array()) bad_shape("expected an array of labels");
  std::vector<std::string> out;
  for (const auto& l : j) out.push_back(string_from_json(l, "label"));
  return out;
}

bool is_dendrogram(const json& j) { return j.is_object() && (j.contains("leaf") || j.contains("children")); }

json parse(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, {origin}, e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ultra::json_io
