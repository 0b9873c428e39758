#include "lindef/builtins.hpp"

#include <algorithm>

#include "lindef/fields.hpp"
#include "lindef/homology.hpp"

namespace lindef {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw BuiltinValidationFailed(what);
}

std::vector<std::size_t> q_cohomology(const SimplicialComplex& c) {
  return reduced_cohomology_dims(c, QField{});
}

}  // namespace

SimplicialComplex ngon(int n) {
  if (n < 3) throw BadParams("ngon: need n >= 3");
  std::vector<std::vector<int>> facets;
  for (int i = 1; i < n; ++i) facets.push_back({i, i + 1});
  facets.push_back({n, 1});
  return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex boundary_complex(int n) {
  if (n < 1) throw BadParams("boundary: need n >= 1");
  if (n == 1) return SimplicialComplex::irrelevant(1);
  std::vector<Mask> facets;
  for (int v = 1; v <= n; ++v) facets.push_back(without_vertex(full_mask(n), v));
  return SimplicialComplex::from_facet_masks(n, facets);
}

SimplicialComplex cyclic_sphere(int m, int d) {
  if (!(m > d && d >= 2)) throw BadParams("cyclic_sphere: need m > d >= 2");
  if (m > kMaxVertices) throw BadParams("cyclic_sphere: m too large");
  std::vector<Mask> facets;
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    if (popcount(s) != d) continue;
    bool ok = true;
    int run = 0;
    bool touches_end = false;
    for (int v = 1; v <= m && ok; ++v) {
      if (contains_vertex(s, v)) {
        if (run == 0) touches_end = (v == 1);
        ++run;
        if (v == m) touches_end = true;
      }
      if ((!contains_vertex(s, v) || v == m) && run > 0) {
        if (!touches_end && run % 2 != 0) ok = false;
        run = 0;
      }
    }
    if (ok) facets.push_back(s);
  }
  auto c = SimplicialComplex::from_facet_masks(m, facets);
  for (Mask f : c.facets())
    require(popcount(f) == d, "cyclic_sphere: not pure of dimension d-1");
  auto h = q_cohomology(c);
  for (int i = -1; i < m; ++i) {
    std::size_t expect = (i == d - 1) ? 1 : 0;
    require(h[i + 1] == expect, "cyclic_sphere: wrong reduced cohomology");
  }
  return c;
}

SimplicialComplex sharp_family(int n, int d) {
  if (!(2 <= d && d < n - 1)) throw BadParams("sharp_family: need 2 <= d < n-1");
  std::vector<Mask> facets = cyclic_sphere(n, d).facets();
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (popcount(s) == d - 1) facets.push_back(s);
  return SimplicialComplex::from_facet_masks(n, facets);
}

SimplicialComplex rp2_6() {
  // Transcribed from the standard 6-vertex triangulation of the projective
  // plane (antipodal quotient of the icosahedron); validated below.
  auto c = SimplicialComplex::from_facets(
      6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
          {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}});
  require(c.vertices() == full_mask(6), "rp2_6: must use all 6 vertices");
  require(c.facets().size() == 10, "rp2_6: must have 10 triangles");
  auto h2 = reduced_cohomology_dims(c, FpField{2});
  require(h2[2] == 1 && h2[3] == 1, "rp2_6: H^1 = H^2 = 1 over F_2 required");
  auto hq = q_cohomology(c);
  require(hq[2] == 0 && hq[3] == 0, "rp2_6: rational H^1 = H^2 = 0 required");
  require(c.alexander_dual() == c, "rp2_6: must be self-Alexander-dual");
  return c;
}

SimplicialComplex torus_7() {
  // Moebius-Kantor 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3}
  // mod 7.
  std::vector<std::vector<int>> facets;
  auto wrap = [](int v) { return (v - 1) % 7 + 1; };
  for (int i = 1; i <= 7; ++i) {
    facets.push_back({i, wrap(i + 1), wrap(i + 3)});
    facets.push_back({i, wrap(i + 2), wrap(i + 3)});
  }
  auto c = SimplicialComplex::from_facets(7, facets);
  require(c.vertices() == full_mask(7), "torus_7: must use all 7 vertices");
  require(c.facets().size() == 14, "torus_7: must have 14 triangles");
  auto hq = q_cohomology(c);
  require(hq[2] == 2 && hq[3] == 1, "torus_7: rational H^1 = 2, H^2 = 1 required");
  return c;
}

SimplicialComplex builtin_complex(const std::string& spec) {
  std::string name = spec;
  std::vector<int> params;
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    name = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      auto comma = rest.find(',', pos);
      std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
      try {
        params.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw BadParams("builtin: bad parameter '" + tok + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  auto want = [&](std::size_t k) {
    if (params.size() != k)
      throw BadParams("builtin " + name + ": expected " + std::to_string(k) +
                      " parameter(s)");
  };
  if (name == "ngon") { want(1); return ngon(params[0]); }
  if (name == "full_simplex") { want(1); return SimplicialComplex::full_simplex(params[0]); }
  if (name == "boundary") { want(1); return boundary_complex(params[0]); }
  if (name == "cyclic_sphere") { want(2); return cyclic_sphere(params[0], params[1]); }
  if (name == "sharp_family") { want(2); return sharp_family(params[0], params[1]); }
  if (name == "rp2_6") { want(0); return rp2_6(); }
  if (name == "torus_7") { want(0); return torus_7(); }
  throw BadParams("unknown builtin '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"ngon:n",          "full_simplex:n",    "boundary:n",
          "cyclic_sphere:m,d", "sharp_family:n,d", "rp2_6",
          "torus_7"};
}

}  // namespace lindef
