#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "garside/builders.hpp"

namespace garside {

namespace {

using nlohmann::json;

RawGerm raw_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("germ file: top level must be an object");
  RawGerm raw;
  try {
    raw.name = j.value("name", std::string{});
    if (!j.contains("simples") || !j.at("simples").is_array())
      throw ParseError("germ file: missing \"simples\" array");
    for (const auto& s : j.at("simples"))
      raw.simples.push_back(s.get<std::string>());
    if (!j.contains("delta"))
      throw ParseError("germ file: missing \"delta\"");
    raw.delta = j.at("delta").get<std::string>();
    if (j.contains("atoms")) {
      std::vector<std::string> atoms;
      for (const auto& s : j.at("atoms")) atoms.push_back(s.get<std::string>());
      raw.atoms = std::move(atoms);
    }
    if (!j.contains("product") || !j.at("product").is_array())
      throw ParseError("germ file: missing \"product\" array");
    for (const auto& t : j.at("product")) {
      if (!t.is_array() || t.size() != 3)
        throw ParseError("germ file: product entries must be [a, b, c]");
      raw.product.push_back({t[0].get<std::string>(), t[1].get<std::string>(),
                             t[2].get<std::string>()});
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("germ file: ") + e.what());
  }
  return raw;
}

}  // namespace

RawGerm raw_germ_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("germ file: invalid JSON");
  return raw_from_json(j);
}

Germ load_germ(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  return Germ::validate(raw_germ_from_json_text(buf.str()));
}

Germ load_germ_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open germ file '" + path + "'");
  return load_germ(in);
}

void save_germ(const Germ& g, std::ostream& out) {
  // canonical ordering: "1" first, the rest name-sorted; triples sorted;
  // identity products omitted
  std::vector<std::string> names = g.simple_names();
  std::sort(names.begin(), names.end());
  names.erase(std::remove(names.begin(), names.end(), "1"), names.end());
  names.insert(names.begin(), "1");

  std::vector<std::string> atoms;
  for (SimpleId a : g.atoms()) atoms.push_back(g.name_of(a));
  std::sort(atoms.begin(), atoms.end());

  std::vector<std::array<std::string, 3>> triples;
  for (SimpleId a = 1; a < g.size(); ++a)
    for (SimpleId b = 1; b < g.size(); ++b) {
      SimpleId c = g.product(a, b);
      if (c != simple_undefined)
        triples.push_back({g.name_of(a), g.name_of(b), g.name_of(c)});
    }
  std::sort(triples.begin(), triples.end());

  json j;
  j["name"] = g.name();
  j["simples"] = names;
  j["delta"] = g.name_of(g.delta());
  j["atoms"] = atoms;
  j["product"] = json::array();
  for (const auto& t : triples) j["product"].push_back({t[0], t[1], t[2]});
  out << j.dump(2) << "\n";
}

std::string germ_to_string(const Germ& g) {
  std::ostringstream os;
  save_germ(g, os);
  return os.str();
}

}  // namespace garside
