#include "gconj/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "face_set.hpp"
#include "gconj/errors.hpp"

namespace gconj {

namespace {

void canonicalize_face(Face& f, int n) {
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
    throw ParamError("repeated vertex in face " + to_string(f));
  }
  for (Vertex v : f) {
    if (v < 1 || v > n) {
      throw VertexRange("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    }
  }
}

void sort_unique(std::vector<Face>& faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

// Calls fn(subset) for every k-subset of `f`.
template <typename Fn>
void for_each_subset(const Face& f, int k, Fn&& fn) {
  const int m = static_cast<int>(f.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  Face sub(static_cast<std::size_t>(k));
  while (true) {
    for (int j = 0; j < k; ++j) sub[j] = f[idx[j]];
    fn(sub);
    int j = k - 1;
    while (j >= 0 && idx[j] == m - k + j) --j;
    if (j < 0) return;
    ++idx[j];
    for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

Relabeled relabel_dense(const Complex& c) {
  std::vector<Vertex> used = c.vertices();
  std::vector<Vertex> to_new(static_cast<std::size_t>(c.n_vertices()) + 1, 0);
  for (std::size_t k = 0; k < used.size(); ++k) to_new[used[k]] = static_cast<Vertex>(k + 1);
  std::vector<Face> facets;
  facets.reserve(c.facets().size());
  for (const Face& f : c.facets()) {
    Face g;
    g.reserve(f.size());
    for (Vertex v : f) g.push_back(to_new[v]);
    facets.push_back(std::move(g));
  }
  const int m = static_cast<int>(used.size());
  return {Complex::general(m, std::move(facets)), std::move(used)};
}

}  // namespace

Complex::Complex(int n, std::vector<Face> facets) : n_(n), facets_(std::move(facets)) {
  if (facets_.empty()) {
    dim_ = -2;
    pure_ = true;
    return;
  }
  std::size_t lo = facets_.front().size();
  std::size_t hi = lo;
  for (const Face& f : facets_) {
    lo = std::min(lo, f.size());
    hi = std::max(hi, f.size());
  }
  dim_ = static_cast<int>(hi) - 1;
  pure_ = (lo == hi);
}

Complex Complex::pure(int n, std::vector<Face> raw) { return from_facets(n, raw); }

Complex Complex::general(int n, std::vector<Face> raw, bool strict) {
  if (n < 0) throw ParamError("negative vertex bound");
  for (Face& f : raw) canonicalize_face(f, n);
  sort_unique(raw);
  const bool uniform = std::all_of(raw.begin(), raw.end(),
                                   [&](const Face& f) { return f.size() == raw.front().size(); });
  if (uniform) return Complex(n, std::move(raw));
  // Larger faces first so domination only needs to look backwards.
  std::stable_sort(raw.begin(), raw.end(),
                   [](const Face& a, const Face& b) { return a.size() > b.size(); });
  std::vector<Face> kept;
  for (Face& f : raw) {
    bool dominated = false;
    for (const Face& g : kept) {
      if (g.size() > f.size() && is_subset(f, g)) {
        dominated = true;
        break;
      }
    }
    if (dominated) {
      if (strict) throw DominatedFacet(to_string(f) + " is contained in another facet");
      continue;
    }
    kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end());
  return Complex(n, std::move(kept));
}

Complex Complex::empty_face() { return Complex(0, {Face{}}); }

std::vector<Vertex> Complex::vertices() const {
  std::vector<Vertex> vs;
  for (const Face& f : facets_) vs.insert(vs.end(), f.begin(), f.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool Complex::contains(const Face& face) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Face& f) { return is_subset(face, f); });
}

bool Complex::is_facet(const Face& face) const {
  return std::binary_search(facets_.begin(), facets_.end(), face);
}

std::vector<Face> Complex::star_facets(const Face& face) const {
  std::vector<Face> out;
  for (const Face& f : facets_) {
    if (is_subset(face, f)) out.push_back(f);
  }
  return out;
}

Complex from_facets(int n, const std::vector<Face>& raw_facets) {
  if (n < 1) throw ParamError("vertex count must be positive");
  if (raw_facets.empty()) throw ParamError("no facets given");
  std::vector<Face> facets = raw_facets;
  for (Face& f : facets) {
    if (f.empty()) throw ParamError("empty facet");
    canonicalize_face(f, n);
  }
  for (const Face& f : facets) {
    if (f.size() != facets.front().size()) {
      throw PurityError("facets of sizes " + std::to_string(facets.front().size()) + " and " +
                        std::to_string(f.size()));
    }
  }
  return Complex::general(n, std::move(facets), true);
}

bool is_subset(const Face& a, const Face& b) {
  return a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face face_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_difference(const Face& a, const Face& b) {
  Face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Face> faces_of_dim(const Complex& c, int k) {
  if (k < -1 || k > c.dim()) {
    throw RangeError("dimension " + std::to_string(k) + " outside [-1, " + std::to_string(c.dim()) + "]");
  }
  std::vector<Face> out;
  for (const Face& f : c.facets()) {
    for_each_subset(f, k + 1, [&](const Face& s) { out.push_back(s); });
  }
  sort_unique(out);
  return out;
}

std::vector<std::vector<Face>> all_faces(const Complex& c) {
  if (c.is_void()) return {};
  std::vector<std::vector<Face>> out(static_cast<std::size_t>(c.dim()) + 2);
  for (const Face& f : c.facets()) {
    for (int k = 0; k <= static_cast<int>(f.size()); ++k) {
      for_each_subset(f, k, [&](const Face& s) { out[k].push_back(s); });
    }
  }
  for (auto& layer : out) sort_unique(layer);
  return out;
}

Complex link_in_place(const Complex& c, const Face& sigma) {
  std::vector<Face> facets;
  for (const Face& f : c.facets()) {
    if (is_subset(sigma, f)) facets.push_back(face_difference(f, sigma));
  }
  if (facets.empty()) throw NotAFace(to_string(sigma));
  return Complex::general(c.n_vertices(), std::move(facets));
}

Relabeled link(const Complex& c, const Face& sigma) { return relabel_dense(link_in_place(c, sigma)); }

Complex closed_star(const Complex& c, const Face& sigma) {
  std::vector<Face> facets = c.star_facets(sigma);
  if (facets.empty()) throw NotAFace(to_string(sigma));
  return Complex::general(c.n_vertices(), std::move(facets));
}

Complex join(const Complex& a, const Complex& b) {
  if (a.is_void() || b.is_void()) return Complex::general(a.n_vertices() + b.n_vertices(), {});
  const Vertex shift = a.n_vertices();
  std::vector<Face> facets;
  facets.reserve(a.facets().size() * b.facets().size());
  for (const Face& fa : a.facets()) {
    for (const Face& fb : b.facets()) {
      Face u = fa;
      for (Vertex v : fb) u.push_back(v + shift);
      facets.push_back(std::move(u));
    }
  }
  return Complex::general(a.n_vertices() + b.n_vertices(), std::move(facets));
}

Complex cone(const Complex& c) { return join(c, from_facets(1, {{1}})); }

Complex suspension(const Complex& c) { return join(c, from_facets(2, {{1}, {2}})); }

Complex induced_subcomplex_in_place(const Complex& c, const std::vector<Vertex>& w) {
  Face ws = w;
  canonicalize_face(ws, c.n_vertices());
  std::vector<Face> faces;
  for (const Face& f : c.facets()) {
    Face g;
    std::set_intersection(f.begin(), f.end(), ws.begin(), ws.end(), std::back_inserter(g));
    faces.push_back(std::move(g));
  }
  return Complex::general(c.n_vertices(), std::move(faces));
}

Relabeled induced_subcomplex(const Complex& c, const std::vector<Vertex>& w) {
  return relabel_dense(induced_subcomplex_in_place(c, w));
}

Complex skeleton(const Complex& c, int k) {
  if (k < 0 || k > c.dim()) {
    throw RangeError("skeleton dimension " + std::to_string(k) + " outside [0, " + std::to_string(c.dim()) + "]");
  }
  return Complex::general(c.n_vertices(), faces_of_dim(c, k));
}

std::vector<Face> missing_facets(const Complex& c) {
  std::vector<Face> out;
  const int d = c.d();
  if (c.is_void() || d < 2) return out;
  const std::vector<Face> ridges = faces_of_dim(c, d - 2);
  const FaceSet ridge_set(ridges.begin(), ridges.end());
  const std::vector<Vertex> verts = c.vertices();
  for (const Face& r : ridges) {
    for (Vertex v : verts) {
      if (v <= r.back()) continue;
      Face cand = r;
      cand.push_back(v);
      bool boundary_present = true;
      for_each_subset(cand, d - 1, [&](const Face& s) {
        if (boundary_present && !ridge_set.count(s)) boundary_present = false;
      });
      if (boundary_present && !c.is_facet(cand)) out.push_back(std::move(cand));
    }
  }
  sort_unique(out);
  return out;
}

Relabeled compact(const Complex& c) { return relabel_dense(c); }

int connected_components(const Complex& c) {
  std::vector<Vertex> verts = c.vertices();
  if (verts.empty()) return 0;
  std::vector<int> parent(static_cast<std::size_t>(c.n_vertices()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Face& f : c.facets()) {
    for (std::size_t j = 1; j < f.size(); ++j) parent[find(f[j])] = find(f[0]);
  }
  int count = 0;
  for (Vertex v : verts) count += (find(v) == v);
  return count;
}

std::string to_string(const Face& f) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << ',';
    os << f[i];
  }
  os << '}';
  return os.str();
}

}  // namespace gconj
