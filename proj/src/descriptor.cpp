#include "sperner/descriptor.hpp"

#include <json.hpp>

#include "sperner/reduction.hpp"

namespace sperner {

namespace {

using nlohmann::json;

json to_object(const InstanceDescriptor& d) {
  return json{{"schema", kBrouwerSchema},
              {"layout", kLayoutVersion},
              {"formula", to_qdimacs(d.formula)},
              {"params",
               {{"LW", d.params.leaf_width},
                {"LH", d.params.leaf_height},
                {"M", d.params.margin},
                {"G", d.params.gap}}}};
}

InstanceDescriptor from_object(const json& j) {
  if (!j.is_object()) throw ParseError("descriptor must be a JSON object");
  if (j.value("schema", "") != kBrouwerSchema) {
    throw ParseError("descriptor schema mismatch: expected " + std::string(kBrouwerSchema));
  }
  if (j.contains("layout") && j.at("layout") != kLayoutVersion) {
    throw ParseError("unsupported layout version");
  }
  if (!j.contains("formula") || !j.at("formula").is_string()) {
    throw ParseError("descriptor lacks a formula string");
  }
  LayoutParams p;
  if (j.contains("params")) {
    const json& q = j.at("params");
    if (!q.is_object()) throw ParseError("params must be an object");
    auto field = [&q](const char* key, Coord fallback) -> Coord {
      if (!q.contains(key)) return fallback;
      if (!q.at(key).is_number_integer()) throw ParseError(std::string("param ") + key + " must be an integer");
      return q.at(key).get<Coord>();
    };
    p.leaf_width = field("LW", p.leaf_width);
    p.leaf_height = field("LH", p.leaf_height);
    p.margin = field("M", p.margin);
    p.gap = field("G", p.gap);
  }
  try {
    p.validate();
    return InstanceDescriptor{parse_qdimacs(j.at("formula").get<std::string>()), p};
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid descriptor: ") + e.what());
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

LoadedInstance from_descriptor(InstanceDescriptor d) {
  LoadedInstance out;
  out.brouwer = build_brouwer(d.formula, d.params);
  out.descriptor = std::move(d);
  return out;
}

}  // namespace

std::string descriptor_to_json(const InstanceDescriptor& d) { return to_object(d).dump(2) + "\n"; }

InstanceDescriptor descriptor_from_json(std::string_view text) { return from_object(parse_json(text)); }

LoadedInstance load_instance(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty instance file");
  if (text[first] != '{') {
    DenseInstance dense = import_dense(text);
    LoadedInstance out;
    out.brouwer = std::move(dense.brouwer);
    out.sperner = std::move(dense.sperner);
    return out;
  }

  const json j = parse_json(text);
  const std::string schema = j.is_object() ? j.value("schema", "") : "";
  if (schema == kBrouwerSchema) return from_descriptor(from_object(j));
  if (schema != kSpernerSchema) throw ParseError("unknown schema '" + schema + "'");
  if (!j.contains("base")) throw ParseError("reduced descriptor lacks a base");

  const json& base = j.at("base");
  LoadedInstance out;
  if (base.is_object()) {
    out = from_descriptor(from_object(base));
  } else if (base.is_string()) {
    DenseInstance dense = import_dense(base.get<std::string>());
    if (!dense.brouwer) throw ParseError("reduced descriptor base must be a Brouwer instance");
    out.brouwer = std::move(dense.brouwer);
  } else {
    throw ParseError("reduced descriptor base must be an object or dense text");
  }
  out.sperner = brouwer_to_sperner(*out.brouwer);
  return out;
}

std::string reduced_to_json(const InstanceDescriptor& base) {
  return json{{"schema", kSpernerSchema}, {"base", to_object(base)}}.dump(2) + "\n";
}

std::string reduced_to_json(std::string_view dense_brouwer_text) {
  return json{{"schema", kSpernerSchema}, {"base", std::string(dense_brouwer_text)}}.dump(2) + "\n";
}

}  // namespace sperner
