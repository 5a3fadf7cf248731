#pragma once

// JSON recurrence spec files:
//
//   {"order":2,"initial":["1","1"],"coeffs":[["0"],["1"],["1"]],"name":"fibonacci"}
//
// Rationals are always strings matching -?[0-9]+(/[1-9][0-9]*)?. Each entry of
// "coeffs" is one polynomial in the 1-based term index i, ascending powers.

#include "reach/error.hpp"
#include "reach/polynomial.hpp"
#include "reach/rational.hpp"
#include "reach/recurrence.hpp"

#include <json.hpp>

#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace reach {

using Json = nlohmann::ordered_json;

inline Rational rational_from_json(const Json &value, const std::string &where)
{
  if (!value.is_string())
    throw ParseError("expected a rational string", where, 0);
  return Rational::parse(value.get_ref<const std::string &>(), where);
}

inline Json rational_to_json(const Rational &q) { return q.str(); }

inline Json rationals_to_json(std::span<const Rational> values)
{
  Json out = Json::array();
  for (const auto &v : values)
    out.push_back(v.str());
  return out;
}

inline RecurrenceSpec spec_from_json(const Json &doc)
{
  if (!doc.is_object())
    throw ParseError("spec must be a JSON object", "spec", 0);

  const auto field = [&](const char *key) -> const Json & {
    const auto it = doc.find(key);
    if (it == doc.end())
      throw ParseError(std::string("missing field \"") + key + "\"", "spec", 0);
    return *it;
  };

  const Json &order_json = field("order");
  if (!order_json.is_number_integer() || order_json.get<long long>() < 1)
    throw ParseError("order must be a positive integer", "order", 0);
  const auto order = static_cast<std::size_t>(order_json.get<long long>());

  const Json &initial_json = field("initial");
  if (!initial_json.is_array())
    throw ParseError("expected an array", "initial", 0);
  if (initial_json.size() != order)
    throw InvalidArgument("initial: expected " + std::to_string(order) + " terms, got "
                          + std::to_string(initial_json.size()));
  std::vector<Rational> initial;
  for (std::size_t k = 0; k < initial_json.size(); ++k)
    initial.push_back(rational_from_json(initial_json[k], "initial[" + std::to_string(k) + "]"));

  const Json &coeffs_json = field("coeffs");
  if (!coeffs_json.is_array())
    throw ParseError("expected an array", "coeffs", 0);
  if (coeffs_json.size() != order + 1)
    throw InvalidArgument("coeffs: expected " + std::to_string(order + 1)
                          + " polynomials, got " + std::to_string(coeffs_json.size()));
  std::vector<IndexPolynomial> coeffs;
  for (std::size_t m = 0; m < coeffs_json.size(); ++m) {
    const std::string where = "coeffs[" + std::to_string(m) + "]";
    if (!coeffs_json[m].is_array())
      throw ParseError("expected an array of rational strings", where, 0);
    std::vector<Rational> poly;
    for (std::size_t p = 0; p < coeffs_json[m].size(); ++p)
      poly.push_back(rational_from_json(coeffs_json[m][p], where + "[" + std::to_string(p) + "]"));
    coeffs.emplace_back(std::move(poly));
  }

  std::string name;
  if (const auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string())
      throw ParseError("name must be a string", "name", 0);
    name = it->get<std::string>();
  }
  return RecurrenceSpec(std::move(initial), std::move(coeffs), std::move(name));
}

inline Json spec_to_json(const RecurrenceSpec &spec)
{
  Json out;
  out["order"] = spec.order();
  out["initial"] = rationals_to_json(spec.initial());
  Json coeffs = Json::array();
  for (const auto &p : spec.coeffs())
    coeffs.push_back(p.is_zero() ? Json::array({"0"}) : rationals_to_json(p.coefficients()));
  out["coeffs"] = std::move(coeffs);
  if (!spec.name().empty())
    out["name"] = spec.name();
  return out;
}

inline RecurrenceSpec parse_spec(const std::string &text)
{
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("invalid JSON (") + e.what() + ")", "spec", e.byte);
  }
  return spec_from_json(doc);
}

inline std::string serialize_spec(const RecurrenceSpec &spec) { return spec_to_json(spec).dump(); }

inline RecurrenceSpec load_spec(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open spec file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

} // namespace reach
