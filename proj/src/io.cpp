#include "lscat/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "lscat/error.hpp"

namespace lscat {

using json = nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("invalid JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(column),
                     line, column);
  }
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object()) throw InputError("document must be a JSON object", "$");
  const auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing field '") + key + "'", key);
  if (!it->is_array()) throw InputError(std::string("field '") + key + "' must be an array", key);
  return *it;
}

std::string label_at(const json& v, const std::string& field) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError("expected a string label", field);
}

bool is_path(const std::string& s) {
  return s.find('/') != std::string::npos || s.ends_with(".json");
}

}  // namespace

FinSpace parse_space_json(std::string_view text) {
  const json doc = parse_json(text);
  const json& points = require(doc, "points");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < points.size(); ++i)
    labels.push_back(label_at(points[i], "points[" + std::to_string(i) + "]"));
  std::vector<std::pair<std::string, std::string>> less;
  if (doc.contains("order")) {
    const json& order = require(doc, "order");
    for (std::size_t i = 0; i < order.size(); ++i) {
      const std::string field = "order[" + std::to_string(i) + "]";
      if (!order[i].is_array() || order[i].size() != 2)
        throw InputError("relation must be a pair [lower, upper]", field);
      less.emplace_back(label_at(order[i][0], field + "[0]"), label_at(order[i][1], field + "[1]"));
    }
  }
  return FinSpace::build(std::move(labels), less);
}

SimplicialComplex parse_complex_json(std::string_view text) {
  const json doc = parse_json(text);
  const json& faces = require(doc, "maximal_faces");
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  std::vector<Simplex> simplices;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const std::string field = "maximal_faces[" + std::to_string(i) + "]";
    if (!faces[i].is_array() || faces[i].empty())
      throw InputError("face must be a nonempty array of vertices", field);
    Simplex s;
    for (std::size_t j = 0; j < faces[i].size(); ++j) {
      const std::string v = label_at(faces[i][j], field + "[" + std::to_string(j) + "]");
      auto [it, added] = index.emplace(v, static_cast<int>(labels.size()));
      if (added) {
        if (labels.size() >= static_cast<std::size_t>(kMaxPoints))
          throw InputError("more than " + std::to_string(kMaxPoints) + " vertices", field);
        labels.push_back(v);
      }
      if (std::find(s.begin(), s.end(), it->second) != s.end())
        throw InputError("repeated vertex in face", field + "[" + std::to_string(j) + "]");
      s.push_back(it->second);
    }
    simplices.push_back(std::move(s));
  }
  return SimplicialComplex::from_faces(std::move(labels), simplices);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'", "path");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FinSpace load_space(const std::string& name_or_path) {
  if (!is_path(name_or_path))
    if (auto s = builtin_space(name_or_path)) return *s;
  return parse_space_json(read_text_file(name_or_path));
}

SimplicialComplex load_complex(const std::string& name_or_path) {
  if (!is_path(name_or_path))
    if (auto k = builtin_complex(name_or_path)) return *k;
  return parse_complex_json(read_text_file(name_or_path));
}

std::string data_dir() {
  if (const char* dir = std::getenv("LSCAT_DATA_DIR"); dir && *dir) return dir;
  return LSCAT_DATA_DIR;
}

std::optional<SimplicialComplex> builtin_complex(std::string_view name) {
  for (const auto& known : builtin_complex_names())
    if (name == known) return parse_complex_json(read_text_file(data_dir() + "/" + known + ".json"));
  return std::nullopt;
}

std::vector<std::string> builtin_complex_names() { return {"rp2_6", "torus7"}; }

}  // namespace lscat
