#include "hss/json_schema.hpp"

#include <cmath>
#include <regex>
#include <set>
#include <stdexcept>

#include "report_schema_text.hpp"

namespace hss {
namespace {

using nlohmann::json;

const std::set<std::string> kAnnotations{"$schema", "$id", "$defs", "title", "description", "$comment"};

bool has_type(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer() || (v.is_number_float() && std::floor(v.get<double>()) == v.get<double>());
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  throw std::invalid_argument("unknown schema type '" + t + "'");
}

class Validator {
 public:
  explicit Validator(const json& root) : root_(root) {}

  void run(const json& schema, const json& v, const std::string& path, std::vector<SchemaViolation>& out) const {
    if (schema.is_boolean()) {
      if (!schema.get<bool>()) out.push_back({path, "no value is allowed here"});
      return;
    }
    for (const auto& [key, sub] : schema.items()) {
      if (kAnnotations.count(key)) continue;
      if (key == "$ref") {
        run(resolve(sub.get<std::string>()), v, path, out);
      } else if (key == "type") {
        bool ok = false;
        if (sub.is_array()) {
          for (const auto& t : sub) ok = ok || has_type(v, t.get<std::string>());
        } else {
          ok = has_type(v, sub.get<std::string>());
        }
        if (!ok) out.push_back({path, "expected type " + sub.dump()});
      } else if (key == "enum") {
        bool ok = false;
        for (const auto& e : sub) ok = ok || e == v;
        if (!ok) out.push_back({path, "value " + v.dump() + " not in " + sub.dump()});
      } else if (key == "const") {
        if (sub != v) out.push_back({path, "expected " + sub.dump()});
      } else if (key == "properties") {
        if (!v.is_object()) continue;
        for (const auto& [name, s] : sub.items())
          if (v.contains(name)) run(s, v.at(name), path + "/" + name, out);
      } else if (key == "required") {
        if (!v.is_object()) continue;
        for (const auto& name : sub)
          if (!v.contains(name.get<std::string>())) out.push_back({path, "missing property " + name.dump()});
      } else if (key == "additionalProperties") {
        if (!v.is_object()) continue;
        const json props = schema.value("properties", json::object());
        for (const auto& [name, value] : v.items())
          if (!props.contains(name)) run(sub, value, path + "/" + name, out);
      } else if (key == "items") {
        if (!v.is_array()) continue;
        for (std::size_t i = 0; i < v.size(); ++i) run(sub, v[i], path + "/" + std::to_string(i), out);
      } else if (key == "minItems") {
        if (v.is_array() && v.size() < sub.get<std::size_t>()) out.push_back({path, "fewer than " + sub.dump() + " items"});
      } else if (key == "minimum") {
        if (v.is_number() && v.get<double>() < sub.get<double>()) out.push_back({path, "below minimum " + sub.dump()});
      } else if (key == "maximum") {
        if (v.is_number() && v.get<double>() > sub.get<double>()) out.push_back({path, "above maximum " + sub.dump()});
      } else if (key == "pattern") {
        if (v.is_string() && !std::regex_search(v.get<std::string>(), std::regex(sub.get<std::string>())))
          out.push_back({path, "does not match " + sub.dump()});
      } else if (key == "anyOf" || key == "oneOf") {
        std::size_t matches = 0;
        for (const auto& s : sub) {
          std::vector<SchemaViolation> tmp;
          run(s, v, path, tmp);
          if (tmp.empty()) ++matches;
        }
        if (matches == 0 || (key == "oneOf" && matches > 1))
          out.push_back({path, std::to_string(matches) + " alternatives of " + key + " match"});
      } else {
        throw std::invalid_argument("unsupported schema keyword '" + key + "'");
      }
    }
  }

 private:
  const json& resolve(const std::string& ref) const {
    if (ref.rfind("#/", 0) != 0) throw std::invalid_argument("only local $ref values are supported: " + ref);
    return root_.at(json::json_pointer(ref.substr(1)));
  }

  const json& root_;
};

}  // namespace

std::vector<SchemaViolation> validate_json(const nlohmann::json& schema, const nlohmann::json& instance) {
  std::vector<SchemaViolation> out;
  Validator(schema).run(schema, instance, "", out);
  return out;
}

const nlohmann::json& report_schema() {
  static const nlohmann::json schema = nlohmann::json::parse(kReportSchemaText);
  return schema;
}

}  // namespace hss
