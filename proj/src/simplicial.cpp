#include "lindef/simplicial.hpp"

#include <algorithm>
#include <queue>

namespace lindef {

namespace {

void check_ambient(int n) {
  if (n < 1 || n > kMaxVertices)
    throw BadParams("SimplicialComplex: ambient vertex count must be in [1, " +
                    std::to_string(kMaxVertices) + "], got " + std::to_string(n));
}

// Drops masks contained in another mask and deduplicates.
std::vector<Mask> antichain(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Mask> out;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < masks.size(); ++j)
      if (i != j && subset_of(masks[i], masks[j]) && masks[i] != masks[j]) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(masks[i]);
  }
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<Mask> facets, bool has_faces)
    : n_(n), facets_(std::move(facets)), has_faces_(has_faces) {}

SimplicialComplex SimplicialComplex::from_facet_masks(int n, std::vector<Mask> facets) {
  check_ambient(n);
  for (Mask m : facets)
    if (!subset_of(m, full_mask(n)))
      throw VertexOutOfRange("facet " + mask_to_string(m) + " not within [1," +
                             std::to_string(n) + "]");
  if (facets.empty()) return void_complex(n);
  return SimplicialComplex(n, antichain(std::move(facets)), true);
}

SimplicialComplex SimplicialComplex::from_facets(
    int n, const std::vector<std::vector<int>>& facets) {
  check_ambient(n);
  std::vector<Mask> masks;
  masks.reserve(facets.size());
  for (const auto& f : facets) {
    Mask m = 0;
    for (int v : f) {
      if (v < 1 || v > n)
        throw VertexOutOfRange("vertex " + std::to_string(v) + " not in [1," +
                               std::to_string(n) + "]");
      m = with_vertex(m, v);
    }
    masks.push_back(m);
  }
  return from_facet_masks(n, std::move(masks));
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
  check_ambient(n);
  return SimplicialComplex(n, {}, false);
}

SimplicialComplex SimplicialComplex::irrelevant(int n) {
  check_ambient(n);
  return SimplicialComplex(n, {0}, true);
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
  check_ambient(n);
  return SimplicialComplex(n, {full_mask(n)}, true);
}

bool SimplicialComplex::contains(Mask face) const {
  if (!has_faces_) return false;
  for (Mask f : facets_)
    if (subset_of(face, f)) return true;
  return false;
}

Mask SimplicialComplex::vertices() const {
  Mask v = 0;
  for (Mask f : facets_) v |= f;
  return v;
}

int SimplicialComplex::dim() const {
  if (!has_faces_) return kMinusInfinity;
  int d = -1;
  for (Mask f : facets_) d = std::max(d, popcount(f) - 1);
  return d;
}

std::vector<std::vector<Mask>> SimplicialComplex::faces_by_card() const {
  if (!has_faces_) return {};
  std::vector<bool> seen(std::size_t{1} << n_, false);
  for (Mask f : facets_)
    for_each_submask(f, [&](Mask s) { seen[s] = true; });
  std::vector<std::vector<Mask>> out(dim() + 2);
  for (Mask m = 0; m < (Mask{1} << n_); ++m)
    if (seen[m]) out[popcount(m)].push_back(m);
  return out;
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t c = 0;
  for (const auto& level : faces_by_card()) c += level.size();
  return c;
}

std::vector<Mask> SimplicialComplex::minimal_nonfaces() const {
  std::vector<Mask> out;
  if (!has_faces_) return {Mask{0}};  // ∅ itself is the minimal nonface
  std::vector<bool> face(std::size_t{1} << n_, false);
  for (Mask f : facets_)
    for_each_submask(f, [&](Mask s) { face[s] = true; });
  for (Mask m = 0; m < (Mask{1} << n_); ++m) {
    if (face[m]) continue;
    bool minimal = true;
    Mask rest = m;
    while (rest) {
      Mask bit = rest & (~rest + 1);
      if (!face[m & ~bit]) {
        minimal = false;
        break;
      }
      rest &= rest - 1;
    }
    if (minimal) out.push_back(m);
  }
  return out;
}

int SimplicialComplex::indeg() const {
  if (is_full_simplex())
    throw FullSimplex("indeg: the full simplex has no nonface");
  int best = n_ + 1;
  for (Mask m : minimal_nonfaces()) best = std::min(best, popcount(m));
  return best;
}

SimplicialComplex SimplicialComplex::alexander_dual() const {
  std::vector<Mask> dual_facets;
  for (Mask m : minimal_nonfaces()) dual_facets.push_back(complement_in(m, n_));
  if (dual_facets.empty()) return void_complex(n_);  // dual of the full simplex
  return SimplicialComplex(n_, antichain(std::move(dual_facets)), true);
}

SimplicialComplex SimplicialComplex::induced(Mask keep) const {
  if (!subset_of(keep, full_mask(n_)))
    throw VertexOutOfRange("induced: subset not within ambient");
  if (!has_faces_) return void_complex(n_);
  std::vector<Mask> cut;
  cut.reserve(facets_.size());
  for (Mask f : facets_) cut.push_back(f & keep);
  return SimplicialComplex(n_, antichain(std::move(cut)), true);
}

SimplicialComplex SimplicialComplex::link(Mask face) const {
  if (!subset_of(face, full_mask(n_)))
    throw VertexOutOfRange("link: subset not within ambient");
  if (!contains(face)) return void_complex(n_);
  std::vector<Mask> lk;
  for (Mask f : facets_)
    if (subset_of(face, f)) lk.push_back(f & ~face);
  return SimplicialComplex(n_, antichain(std::move(lk)), true);
}

SimplicialComplex SimplicialComplex::skeleton(int i) const {
  if (!has_faces_) return void_complex(n_);
  if (i < -1) return void_complex(n_);
  std::vector<Mask> kept;
  auto levels = faces_by_card();
  int top = std::min<int>(i + 1, static_cast<int>(levels.size()) - 1);
  for (int k = 0; k <= top; ++k)
    for (Mask m : levels[k]) kept.push_back(m);
  return SimplicialComplex(n_, antichain(std::move(kept)), true);
}

SimplicialComplex SimplicialComplex::join(const SimplicialComplex& other) const {
  if (n_ != other.n_)
    throw AmbientMismatch("join: ambient vertex sets differ");
  if (vertices() & other.vertices())
    throw NonDisjointJoin("join: vertex supports overlap");
  if (!has_faces_ || !other.has_faces_) return void_complex(n_);
  std::vector<Mask> out;
  out.reserve(facets_.size() * other.facets_.size());
  for (Mask a : facets_)
    for (Mask b : other.facets_) out.push_back(a | b);
  return SimplicialComplex(n_, antichain(std::move(out)), true);
}

SimplicialComplex SimplicialComplex::cone(int vertex) const {
  if (vertex < 1 || vertex > n_)
    throw VertexOutOfRange("cone: vertex out of range");
  std::vector<Mask> point = {Mask{0}, Mask{1} << (vertex - 1)};
  return join(SimplicialComplex(n_, antichain(std::move(point)), true));
}

bool SimplicialComplex::is_ngon() const {
  if (!has_faces_ || n_ < 3) return false;
  if (static_cast<int>(facets_.size()) != n_) return false;
  std::vector<int> degree(n_, 0);
  for (Mask f : facets_) {
    if (popcount(f) != 2) return false;
    for (int v : mask_vertices(f)) ++degree[v - 1];
  }
  for (int d : degree)
    if (d != 2) return false;
  // walk the cycle; it must close after exactly n edges and visit everything
  std::vector<std::vector<int>> adj(n_);
  for (Mask f : facets_) {
    auto vs = mask_vertices(f);
    adj[vs[0] - 1].push_back(vs[1] - 1);
    adj[vs[1] - 1].push_back(vs[0] - 1);
  }
  int prev = -1, cur = 0, steps = 0;
  do {
    int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
    prev = cur;
    cur = next;
    ++steps;
  } while (cur != 0 && steps <= n_);
  return cur == 0 && steps == n_;
}

SimplicialComplex SimplicialComplex::reembedded(int new_n) const {
  check_ambient(new_n);
  if (new_n < n_) throw BadParams("reembedded: ambient may only grow");
  return SimplicialComplex(new_n, facets_, has_faces_);
}

SimplicialComplex SimplicialComplex::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw BadParams("relabeled: permutation size mismatch");
  std::vector<Mask> out;
  out.reserve(facets_.size());
  for (Mask f : facets_) {
    Mask g = 0;
    for (int v : mask_vertices(f)) g = with_vertex(g, perm[v - 1]);
    out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return SimplicialComplex(n_, std::move(out), has_faces_);
}

int girth(const SimplicialComplex& c) {
  if (c.is_void() || c.dim() < 1) return 0;
  const int n = c.n();
  std::vector<std::vector<int>> adj(n);
  std::vector<std::pair<int, int>> edges;
  const auto levels = c.faces_by_card();
  for (const auto& f : levels[2]) {
    auto vs = mask_vertices(f);
    adj[vs[0] - 1].push_back(vs[1] - 1);
    adj[vs[1] - 1].push_back(vs[0] - 1);
    edges.push_back({vs[0] - 1, vs[1] - 1});
  }
  int best = 0;
  // shortest cycle through each edge: remove it, BFS between its endpoints
  for (auto [u, v] : edges) {
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if ((x == u && y == v) || (x == v && y == u)) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    if (dist[v] >= 0) {
      int cyc = dist[v] + 1;
      if (best == 0 || cyc < best) best = cyc;
    }
  }
  return best;
}

std::string complex_brief(const SimplicialComplex& c) {
  std::string s = "n=" + std::to_string(c.n()) + " facets={";
  if (c.is_void()) return s + "} (void)";
  bool first = true;
  for (Mask f : c.facets()) {
    if (!first) s += ",";
    s += mask_to_string(f);
    first = false;
  }
  return s + "}";
}

}  // namespace lindef
