#include "bellows/geometry/embedding.hpp"

#include <cstdlib>

#include <json.hpp>

#include "bellows/simplicial/io.hpp"

namespace bellows {

using nlohmann::json;
using nlohmann::ordered_json;

std::string field_name(Field f) {
  switch (f) {
    case Field::rational:
      return "rational";
    case Field::float64:
      return "float64";
    case Field::complex:
      return "complex";
    case Field::laurent:
      return "laurent";
  }
  return "?";
}

Field parse_field(const std::string& name) {
  if (name == "rational") return Field::rational;
  if (name == "float64" || name == "float") return Field::float64;
  if (name == "complex" || name == "complex-float64") return Field::complex;
  if (name == "laurent") return Field::laurent;
  throw SchemaError("unknown scalar field '" + name + "'");
}

Field field_of(const AnyEmbedding& e) {
  return std::visit([](const auto& emb) { return ScalarTraits<typename std::decay_t<decltype(emb.coords.begin()->second)>::value_type>::field; }, e);
}

namespace {

double parse_double(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_string()) throw SchemaError("float coordinate must be a number or a decimal string");
  const std::string s = v.get<std::string>();
  if (s.find('/') != std::string::npos) return parse_rational(s).get_d();
  char* end = nullptr;
  const double d = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw SchemaError("malformed float coordinate '" + s + "'");
  return d;
}

Rational parse_rational_value(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  throw SchemaError("rational coordinates must be strings such as \"3/4\"");
}

template <class S>
S parse_scalar(const json& v);

template <>
Rational parse_scalar<Rational>(const json& v) {
  return parse_rational_value(v);
}

template <>
double parse_scalar<double>(const json& v) {
  return parse_double(v);
}

template <>
Complex parse_scalar<Complex>(const json& v) {
  if (v.is_array() && v.size() == 2) return {parse_double(v[0]), parse_double(v[1])};
  if (v.is_string() || v.is_number()) return {parse_double(v), 0.0};
  throw SchemaError("complex coordinates must be [\"re\",\"im\"] pairs");
}

template <>
LaurentScalar parse_scalar<LaurentScalar>(const json& v) {
  if (!v.is_object() || !v.contains("order") || !v.contains("coeffs") || !v["coeffs"].is_array()) {
    if (v.is_string() || v.is_number_integer()) return LaurentScalar(parse_rational_value(v));
    throw SchemaError("laurent coordinates need 'order' and 'coeffs'");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : v["coeffs"]) coeffs.push_back(parse_rational_value(c));
  const bool exact = v.value("exact", false);
  return LaurentScalar::series(v["order"].get<long>(), std::move(coeffs), exact);
}

template <class S>
Embedding<S> parse_coords(int dim, const json& coords) {
  Embedding<S> e(dim);
  for (const auto& [name, values] : coords.items()) {
    if (!values.is_array()) throw SchemaError("coordinates of '" + name + "' must be an array");
    std::vector<S> x;
    for (const auto& c : values) x.push_back(parse_scalar<S>(c));
    if (static_cast<int>(x.size()) != dim) {
      throw SchemaError("vertex '" + name + "' has " + std::to_string(x.size()) + " coordinates, expected " +
                        std::to_string(dim));
    }
    e.coords.emplace(name, std::move(x));
  }
  return e;
}

ordered_json scalar_json(const Rational& x) { return x.get_str(); }
ordered_json scalar_json(double x) { return ScalarTraits<double>::str(x); }
ordered_json scalar_json(const Complex& x) {
  return ordered_json::array({ScalarTraits<double>::str(x.real()), ScalarTraits<double>::str(x.imag())});
}
ordered_json scalar_json(const LaurentScalar& x) {
  ordered_json j;
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : x.known_coefficients()) coeffs.push_back(c.get_str());
  j["order"] = x.leading_exponent();
  j["coeffs"] = coeffs;
  j["exact"] = x.is_exact();
  return j;
}

}  // namespace

AnyEmbedding parse_embedding_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("embedding file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer() || !j.contains("coords") ||
      !j["coords"].is_object()) {
    throw SchemaError("embedding file needs 'dim' and 'coords'");
  }
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw SchemaError("embedding dimension must be positive");
  const Field field = parse_field(j.value("field", std::string("rational")));
  switch (field) {
    case Field::rational:
      return parse_coords<Rational>(dim, j["coords"]);
    case Field::float64:
      return parse_coords<double>(dim, j["coords"]);
    case Field::complex:
      return parse_coords<Complex>(dim, j["coords"]);
    case Field::laurent:
      return parse_coords<LaurentScalar>(dim, j["coords"]);
  }
  throw SchemaError("unsupported field");
}

AnyEmbedding load_embedding(const std::filesystem::path& path) { return parse_embedding_json(read_text_file(path)); }

std::string embedding_to_json(const AnyEmbedding& any) {
  return std::visit(
      [](const auto& e) {
        using S = typename std::decay_t<decltype(e.coords.begin()->second)>::value_type;
        ordered_json j;
        j["dim"] = e.dim;
        j["field"] = field_name(ScalarTraits<S>::field);
        ordered_json coords = ordered_json::object();
        for (const auto& [v, x] : e.coords) {
          ordered_json arr = ordered_json::array();
          for (const auto& c : x) arr.push_back(scalar_json(c));
          coords[v] = arr;
        }
        j["coords"] = coords;
        return j.dump(2) + "\n";
      },
      any);
}

Embedding<double> to_float(const Embedding<Rational>& e) {
  return e.map<double>([](const Rational& q) { return q.get_d(); });
}

}  // namespace bellows
