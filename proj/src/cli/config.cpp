#include <cmath>

#include <json.hpp>

#include "nli/cli.hpp"
#include "nli/errors.hpp"
#include "nli/local_reference.hpp"

namespace nli::cli {

namespace {

using nlohmann::json;

Quadratic quadratic_from_json(const json& j, const char* key) {
  if (!j.is_array() || j.size() != 3) {
    throw InvalidArgument(std::string(key) + " must be an array of three coefficients");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

void RunConfig::validate() const {
  layout().validate();
  material().validate();
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("h must be positive");
  if (!std::isfinite(f)) throw InvalidArgument("f must be finite");
}

DomainLayout RunConfig::layout() const { return {a, x_gamma, b, delta1, delta2}; }

Material RunConfig::material() const { return {kappa1, kappa2}; }

ConstraintData RunConfig::constraints() const {
  const LocalSolution exact = local_exact(material(), SourceTerm::constant(f), a, x_gamma, b);
  return {g1.value_or(exact.left), g2.value_or(exact.right)};
}

StudySetup RunConfig::setup() const {
  StudySetup s;
  s.layout = layout();
  s.material = material();
  s.family = kernel;
  s.source = SourceTerm::constant(f);
  s.constraints = constraints();
  return s;
}

RunConfig parse_config_json(const std::string& text, RunConfig c) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "kappa1") c.kappa1 = value.get<double>();
      else if (key == "kappa2") c.kappa2 = value.get<double>();
      else if (key == "delta1") c.delta1 = value.get<double>();
      else if (key == "delta2") c.delta2 = value.get<double>();
      else if (key == "h") c.h = value.get<double>();
      else if (key == "f") c.f = value.get<double>();
      else if (key == "a") c.a = value.get<double>();
      else if (key == "x_gamma") c.x_gamma = value.get<double>();
      else if (key == "b") c.b = value.get<double>();
      else if (key == "g1") c.g1 = value.is_null() ? std::nullopt : std::optional(quadratic_from_json(value, "g1"));
      else if (key == "g2") c.g2 = value.is_null() ? std::nullopt : std::optional(quadratic_from_json(value, "g2"));
      else if (key == "kernel") {
        const auto fam = parse_kernel_family(value.get<std::string>());
        if (!fam) throw InvalidArgument("kernel must be one of k1, k2, k3, k4");
        c.kernel = *fam;
      } else {
        throw InvalidArgument("unknown config key '" + key + "'");
      }
    }
  } catch (const json::type_error& e) {
    throw InvalidArgument(std::string("config value has the wrong type: ") + e.what());
  }
  return c;
}

std::string dump_config_json(const RunConfig& c) {
  json j = {
      {"kappa1", c.kappa1}, {"kappa2", c.kappa2}, {"delta1", c.delta1},
      {"delta2", c.delta2}, {"h", c.h},           {"kernel", std::string(to_string(c.kernel))},
      {"f", c.f},           {"a", c.a},           {"x_gamma", c.x_gamma},
      {"b", c.b},
  };
  if (c.g1) j["g1"] = json::array({c.g1->c0, c.g1->c1, c.g1->c2});
  if (c.g2) j["g2"] = json::array({c.g2->c0, c.g2->c1, c.g2->c2});
  return j.dump(2) + "\n";
}

}  // namespace nli::cli
