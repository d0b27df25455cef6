#include "spacefile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace sigma {

using ordered_json = nlohmann::ordered_json;

ParsedSpace parse_space_file(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("invalid space file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc.contains("opens"))
    throw Error(Errc::parse_error, "space file must be an object with 'points' and 'opens'");

  std::vector<std::string> labels;
  if (!doc["points"].is_array())
    throw Error(Errc::parse_error, "'points' must be an array of strings");
  for (const auto& p : doc["points"]) {
    if (!p.is_string()) throw Error(Errc::parse_error, "'points' must be an array of strings");
    labels.push_back(p.get<std::string>());
  }
  GroundPtr ground;
  try {
    ground = std::make_shared<const GroundSet>(std::move(labels));
  } catch (const Error& e) {
    throw Error(Errc::parse_error, e.what());
  }

  if (!doc["opens"].is_array())
    throw Error(Errc::parse_error, "'opens' must be an array of point-name arrays");
  std::vector<Mask> opens;
  for (const auto& entry : doc["opens"]) {
    if (!entry.is_array())
      throw Error(Errc::parse_error, "'opens' must be an array of point-name arrays");
    Mask m = 0;
    for (const auto& name : entry) {
      if (!name.is_string())
        throw Error(Errc::parse_error, "open set members must be point names");
      const auto idx = ground->index_of(name.get<std::string>());
      if (!idx)
        throw Error(Errc::parse_error,
                    "open set mentions unknown point '" + name.get<std::string>() + "'");
      m |= Mask{1} << *idx;
    }
    opens.push_back(m);
  }

  ParsedSpace out;
  const Mask full = ground->full();
  if (std::find(opens.begin(), opens.end(), Mask{0}) == opens.end()) {
    opens.push_back(0);
    out.inserted_empty = true;
  }
  if (std::find(opens.begin(), opens.end(), full) == opens.end()) {
    opens.push_back(full);
    out.inserted_full = true;
  }
  out.space = validate_space(std::move(ground), opens);
  return out;
}

ParsedSpace load_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open space file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space_file(buf.str());
}

std::string format_space_file(const SpaceStructure& space) {
  ordered_json doc;
  doc["points"] = space.ground->labels();
  ordered_json opens = ordered_json::array();
  for (Mask m : space.opens) opens.push_back(space.ground->subset_labels(m));
  doc["opens"] = opens;
  return doc.dump(2) + "\n";
}

}  // namespace sigma
