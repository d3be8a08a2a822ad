#include "gconj/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gconj/errors.hpp"

namespace gconj {

nlohmann::json complex_to_json(const Complex& c) {
  nlohmann::json facets = nlohmann::json::array();
  for (const Face& f : c.facets()) facets.push_back(f);
  return {{"n", c.n_vertices()}, {"facets", std::move(facets)}};
}

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("facets")) {
    throw ParseError("expected an object with \"n\" and \"facets\"");
  }
  if (!j["n"].is_number_integer() || !j["facets"].is_array()) {
    throw ParseError("\"n\" must be an integer and \"facets\" an array");
  }
  std::vector<Face> facets;
  for (const auto& f : j["facets"]) {
    if (!f.is_array()) throw ParseError("each facet must be an array of vertex ids");
    Face face;
    for (const auto& v : f) {
      if (!v.is_number_integer()) throw ParseError("vertex ids must be integers");
      face.push_back(v.get<Vertex>());
    }
    facets.push_back(std::move(face));
  }
  return from_facets(j["n"].get<int>(), facets);
}

std::string complex_to_text(const Complex& c) {
  std::ostringstream os;
  os << "# n " << c.n_vertices() << '\n';
  for (const Face& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) os << ' ';
      os << f[i];
    }
    os << '\n';
  }
  return os.str();
}

Complex complex_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Face> facets;
  int declared_n = -1;
  Vertex max_id = 0;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::istringstream comment(line.substr(hash + 1));
      std::string key;
      int value = 0;
      if (comment >> key && key == "n" && comment >> value) declared_n = value;
      line.erase(hash);
    }
    std::istringstream fields(line);
    Face face;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        const long v = std::stol(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        face.push_back(static_cast<Vertex>(v));
        max_id = std::max<Vertex>(max_id, static_cast<Vertex>(v));
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" + token + "'");
      }
    }
    if (!face.empty()) facets.push_back(std::move(face));
  }
  return from_facets(declared_n > 0 ? declared_n : max_id, facets);
}

Complex parse_complex(const std::string& content) {
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what());
    }
    return complex_from_json(j);
  }
  return complex_from_text(content);
}

Complex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write " + tmp);
    out << content;
    if (!out) throw ParseError("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace gconj
