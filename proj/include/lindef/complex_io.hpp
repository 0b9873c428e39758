#pragma once

#include <string>

#include <json.hpp>

#include "lindef/simplicial.hpp"

namespace lindef {

// Complex file format.  JSON:
//   {"n": int, "facets": [[int,...],...], "empty_face_only": bool?}
// with 1-based vertices; "empty_face_only": true encodes {∅}; an empty facet
// list without the flag is the void complex.  Text:
//   n=<int>
//   <facet as space-separated vertices, one per line>
// where a single line "empty_face_only" encodes {∅}.
nlohmann::json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const nlohmann::json& j);

std::string complex_to_text(const SimplicialComplex& c);
SimplicialComplex complex_from_text(const std::string& text);

// Reads either format, sniffing JSON by a leading '{'.
SimplicialComplex load_complex_file(const std::string& path);

}  // namespace lindef
