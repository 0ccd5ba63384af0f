#include "symtau/spec_json.hpp"

#include <json.hpp>

#include <initializer_list>
#include <string>

namespace symtau {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& constraint, const std::string& message) {
  throw SpecError(SpecError::Kind::parse, constraint, message);
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) fail("unknown_key", "unknown key \"" + item.key() + "\" in " + where);
  }
}

long get_long(const json& obj, const char* key, const std::string& where) {
  const json& value = obj.at(key);
  if (!value.is_number_integer()) {
    fail(key, "\"" + std::string(key) + "\" in " + where + " must be an integer");
  }
  return value.get<long>();
}

bool get_bool(const json& obj, const char* key, const std::string& where) {
  const json& value = obj.at(key);
  if (!value.is_boolean()) {
    fail(key, "\"" + std::string(key) + "\" in " + where + " must be true or false");
  }
  return value.get<bool>();
}

TriState get_tri(const json& obj, const char* key, const std::string& where) {
  const json& value = obj.at(key);
  if (value.is_string()) {
    if (auto tri = tri_parse(value.get<std::string>())) return *tri;
  }
  fail(key, "\"" + std::string(key) + "\" in " + where +
                " must be \"yes\", \"no\", or \"unknown\"");
}

}  // namespace

CurveSpec spec_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("json", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("json", "the specification must be a JSON object");
  check_keys(doc, {"genus", "pencils", "covers", "hyperelliptic", "bielliptic"},
             "the specification");
  if (!doc.contains("genus")) fail("genus", "missing required key \"genus\"");

  CurveSpec spec;
  spec.genus = get_long(doc, "genus", "the specification");

  if (doc.contains("pencils")) {
    const json& arr = doc.at("pencils");
    if (!arr.is_array()) fail("pencils", "\"pencils\" must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "pencils[" + std::to_string(i) + "]";
      const json& entry = arr[i];
      if (!entry.is_object()) fail("pencils", where + " must be an object");
      check_keys(entry, {"degree", "base_point_free", "gamma_irreducible"}, where);
      if (!entry.contains("degree")) fail("degree", "missing \"degree\" in " + where);
      PencilDatum pencil;
      pencil.degree = get_long(entry, "degree", where);
      if (entry.contains("base_point_free")) {
        pencil.base_point_free = get_bool(entry, "base_point_free", where);
      }
      if (entry.contains("gamma_irreducible")) {
        pencil.gamma_irreducible = get_tri(entry, "gamma_irreducible", where);
      }
      spec.pencils.push_back(pencil);
    }
  }

  if (doc.contains("covers")) {
    const json& arr = doc.at("covers");
    if (!arr.is_array()) fail("covers", "\"covers\" must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "covers[" + std::to_string(i) + "]";
      const json& entry = arr[i];
      if (!entry.is_object()) fail("covers", where + " must be an object");
      check_keys(entry, {"degree", "target_genus", "target_has_g12"}, where);
      if (!entry.contains("degree")) fail("degree", "missing \"degree\" in " + where);
      CoverDecl cover;
      cover.degree = get_long(entry, "degree", where);
      if (entry.contains("target_genus")) {
        cover.target_genus = get_long(entry, "target_genus", where);
      }
      if (entry.contains("target_has_g12")) {
        cover.target_has_g12 = get_bool(entry, "target_has_g12", where);
      }
      spec.covers.push_back(cover);
    }
  }

  if (doc.contains("hyperelliptic")) {
    spec.hyperelliptic = get_tri(doc, "hyperelliptic", "the specification");
  }
  if (doc.contains("bielliptic")) {
    spec.bielliptic = get_tri(doc, "bielliptic", "the specification");
  }
  return spec;
}

std::string spec_to_json(const CurveSpec& spec) {
  json doc;
  doc["genus"] = spec.genus;
  if (!spec.pencils.empty()) {
    json arr = json::array();
    for (const PencilDatum& pencil : spec.pencils) {
      json entry;
      entry["degree"] = pencil.degree;
      entry["base_point_free"] = pencil.base_point_free;
      entry["gamma_irreducible"] = tri_str(pencil.gamma_irreducible);
      arr.push_back(std::move(entry));
    }
    doc["pencils"] = std::move(arr);
  }
  if (!spec.covers.empty()) {
    json arr = json::array();
    for (const CoverDecl& cover : spec.covers) {
      json entry;
      entry["degree"] = cover.degree;
      entry["target_genus"] = cover.target_genus;
      if (cover.target_has_g12) entry["target_has_g12"] = *cover.target_has_g12;
      arr.push_back(std::move(entry));
    }
    doc["covers"] = std::move(arr);
  }
  if (spec.hyperelliptic != TriState::unknown) {
    doc["hyperelliptic"] = tri_str(spec.hyperelliptic);
  }
  if (spec.bielliptic != TriState::unknown) {
    doc["bielliptic"] = tri_str(spec.bielliptic);
  }
  return doc.dump(2) + "\n";
}

}  // namespace symtau
