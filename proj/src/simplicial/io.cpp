#include "bellows/simplicial/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bellows/errors.hpp"

namespace bellows {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

CycleData parse_cycle_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("complex file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("cycle") || !j["vertices"].is_array() ||
      !j["cycle"].is_array()) {
    throw SchemaError("complex file needs array fields 'vertices' and 'cycle'");
  }
  CycleData data;
  std::set<Vertex> known;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw SchemaError("vertex identifiers must be strings");
    if (!known.insert(v.get<std::string>()).second) throw SchemaError("duplicate vertex '" + v.get<std::string>() + "'");
    data.vertices.push_back(v.get<std::string>());
  }
  int dim = -2;
  for (const auto& term : j["cycle"]) {
    if (!term.is_object() || !term.contains("simplex") || !term["simplex"].is_array()) {
      throw SchemaError("cycle entries need a 'simplex' array");
    }
    std::vector<Vertex> ordered;
    for (const auto& v : term["simplex"]) {
      if (!v.is_string() || !known.count(v.get<std::string>())) {
        throw SchemaError("cycle simplex uses an undeclared vertex");
      }
      ordered.push_back(v.get<std::string>());
    }
    Integer coeff = 1;
    if (term.contains("coeff")) {
      const auto& c = term["coeff"];
      if (c.is_number_integer()) {
        coeff = Integer(std::to_string(c.get<long long>()));
      } else if (c.is_string()) {
        try {
          coeff = Integer(c.get<std::string>());
        } catch (const std::invalid_argument&) {
          throw SchemaError("coefficient '" + c.get<std::string>() + "' is not an integer");
        }
      } else {
        throw SchemaError("coefficients must be integers");
      }
    }
    OrientedSimplex s;
    try {
      s = OrientedSimplex::from_ordered(ordered);
    } catch (const PreconditionError& e) {
      throw SchemaError(e.what());
    }
    if (dim == -2) {
      dim = s.dimension();
      data.cycle = Chain(dim);
    } else if (s.dimension() != dim) {
      throw SchemaError("cycle mixes simplices of different dimensions");
    }
    data.cycle.add(s, coeff);
  }
  return data;
}

CycleData load_cycle(const std::filesystem::path& path) { return parse_cycle_json(read_text_file(path)); }

std::string cycle_to_json(const CycleData& data) {
  nlohmann::ordered_json j;
  j["vertices"] = data.vertices;
  j["cycle"] = nlohmann::ordered_json::array();
  for (const auto& [s, c] : data.cycle.terms()) {
    nlohmann::ordered_json term;
    term["simplex"] = s;
    if (c.fits_slong_p()) {
      term["coeff"] = c.get_si();
    } else {
      term["coeff"] = c.get_str();
    }
    j["cycle"].push_back(term);
  }
  return j.dump(2) + "\n";
}

}  // namespace bellows
