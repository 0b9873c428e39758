#include "lindef/complex_io.hpp"

#include <fstream>
#include <sstream>

namespace lindef {

nlohmann::json complex_to_json(const SimplicialComplex& c) {
  nlohmann::json j;
  j["n"] = c.n();
  auto facets = nlohmann::json::array();
  for (Mask f : c.facets())
    if (f != 0) facets.push_back(mask_vertices(f));
  j["facets"] = facets;
  if (c.is_irrelevant()) j["empty_face_only"] = true;
  return j;
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    std::vector<std::vector<int>> facets;
    for (const auto& f : j.at("facets"))
      facets.push_back(f.get<std::vector<int>>());
    bool empty_only = j.value("empty_face_only", false);
    if (empty_only) {
      if (!facets.empty())
        throw ParseError("complex: empty_face_only with nonempty facet list");
      return SimplicialComplex::irrelevant(n);
    }
    if (facets.empty()) return SimplicialComplex::void_complex(n);
    return SimplicialComplex::from_facets(n, facets);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("complex JSON: ") + e.what());
  }
}

std::string complex_to_text(const SimplicialComplex& c) {
  std::ostringstream os;
  os << "n=" << c.n() << "\n";
  if (c.is_irrelevant()) {
    os << "empty_face_only\n";
    return os.str();
  }
  for (Mask f : c.facets()) {
    bool first = true;
    for (int v : mask_vertices(f)) {
      if (!first) os << ' ';
      os << v;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

SimplicialComplex complex_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("n=", 0) != 0)
    throw ParseError("complex text: first line must be n=<int>");
  int n = 0;
  try {
    n = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    throw ParseError("complex text: bad ambient size '" + line + "'");
  }
  std::vector<std::vector<int>> facets;
  bool empty_only = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line == "empty_face_only") {
      empty_only = true;
      continue;
    }
    std::istringstream ls(line);
    std::vector<int> f;
    int v;
    while (ls >> v) f.push_back(v);
    if (!ls.eof()) throw ParseError("complex text: bad facet line '" + line + "'");
    facets.push_back(f);
  }
  if (empty_only) {
    if (!facets.empty())
      throw ParseError("complex text: empty_face_only with facet lines");
    return SimplicialComplex::irrelevant(n);
  }
  if (facets.empty()) return SimplicialComplex::void_complex(n);
  return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex load_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("JSON parse: ") + e.what());
    }
    return complex_from_json(j);
  }
  return complex_from_text(text);
}

}  // namespace lindef
