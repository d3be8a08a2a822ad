#include "gconj/homology.hpp"

#include <algorithm>
#include <numeric>

#include "face_set.hpp"
#include "gconj/enumeration.hpp"
#include "gconj/errors.hpp"
#include "gconj/modular.hpp"

namespace gconj {

namespace {

std::size_t index_in(const std::vector<Face>& layer, const Face& f) {
  return static_cast<std::size_t>(std::lower_bound(layer.begin(), layer.end(), f) - layer.begin());
}

enum class LinkKind { kOther, kSphere, kBall };

// Link homology type of every nonempty face, plus the Euler test.
struct Survey {
  std::vector<std::vector<Face>> faces;       // faces[s] = faces of size s
  std::vector<std::vector<LinkKind>> kind;    // parallel to faces
  bool semi_eulerian = true;
  bool low_links_connected = true;            // links of faces of size <= d-2
};

Survey survey(const Complex& c, FieldSpec field) {
  Survey s;
  s.faces = all_faces(c);
  s.kind.resize(s.faces.size());
  const int d = c.d();
  for (std::size_t size = 1; size < s.faces.size(); ++size) {
    const int expected = d - static_cast<int>(size) - 1;
    for (const Face& sigma : s.faces[size]) {
      const Complex lk = link_in_place(c, sigma);
      const auto b = reduced_betti_full(lk, field);
      LinkKind k = LinkKind::kOther;
      if (has_sphere_homology(b, expected)) {
        k = LinkKind::kSphere;
      } else if (has_ball_homology(b) && lk.dim() == expected) {
        k = LinkKind::kBall;
      }
      s.kind[size].push_back(k);
      std::int64_t chi = 1;
      for (std::size_t j = 0; j < b.size(); ++j) chi += (j % 2 == 0 ? -1 : 1) * b[j];
      if (chi != 1 + ((expected % 2 == 0) ? 1 : -1)) s.semi_eulerian = false;
      if (static_cast<int>(size) <= d - 2 && connected_components(lk) != 1) {
        s.low_links_connected = false;
      }
    }
  }
  return s;
}

// Facets through each ridge.
FaceMap<int> ridge_degrees(const Complex& c) {
  FaceMap<int> deg;
  for (const Face& f : c.facets()) {
    for (std::size_t t = 0; t < f.size(); ++t) {
      Face r = f;
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(t));
      ++deg[r];
    }
  }
  return deg;
}

bool strongly_connected(const Complex& c) {
  const auto& facets = c.facets();
  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  FaceMap<std::size_t> first_owner;
  for (std::size_t k = 0; k < facets.size(); ++k) {
    for (std::size_t t = 0; t < facets[k].size(); ++t) {
      Face r = facets[k];
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(t));
      auto [it, fresh] = first_owner.emplace(std::move(r), k);
      if (!fresh) parent[find(k)] = find(it->second);
    }
  }
  std::size_t roots = 0;
  for (std::size_t k = 0; k < facets.size(); ++k) roots += (find(k) == k);
  return roots == 1;
}

Complex boundary_complex(const Complex& c, const FaceMap<int>& deg) {
  std::vector<Face> ridges;
  for (const auto& [r, count] : deg) {
    if (count == 1) ridges.push_back(r);
  }
  return Complex::general(c.n_vertices(), std::move(ridges));
}

// Every nonempty face link of b is a sphere of the right dimension.
bool closed_manifold_links(const Complex& b, FieldSpec field) {
  const auto faces = all_faces(b);
  const int d = b.d();
  for (std::size_t size = 1; size < faces.size(); ++size) {
    for (const Face& tau : faces[size]) {
      const auto bt = reduced_betti_full(link_in_place(b, tau), field);
      if (!has_sphere_homology(bt, d - static_cast<int>(size) - 1)) return false;
    }
  }
  return true;
}

struct Classified {
  ClassReport report;
  Survey survey;
  Complex boundary;
};

Classified classify_full(const Complex& c, FieldSpec field) {
  Classified out;
  ClassReport& r = out.report;
  r.field = field.p;
  r.pure = c.is_pure() && !c.is_void();
  r.betti = betti_numbers(c, field);
  r.connected = connected_components(c) == 1;
  if (!r.pure || c.dim() < 0) return out;

  const int d = c.d();
  out.survey = survey(c, field);
  const Survey& s = out.survey;
  const FaceMap<int> deg = ridge_degrees(c);
  const bool strong = strongly_connected(c);

  bool all_two = true;
  bool at_most_two = true;
  for (const auto& [ridge, count] : deg) {
    all_two = all_two && count == 2;
    at_most_two = at_most_two && count <= 2;
  }
  r.pseudomanifold = at_most_two && strong;
  r.normal_pseudomanifold = r.pseudomanifold && all_two && s.low_links_connected &&
                            (d <= 1 || r.connected);
  r.semi_eulerian = s.semi_eulerian;

  bool all_sphere = true;
  bool sphere_or_ball = true;
  bool any_ball = false;
  for (std::size_t size = 1; size < s.kind.size(); ++size) {
    for (LinkKind k : s.kind[size]) {
      all_sphere = all_sphere && k == LinkKind::kSphere;
      sphere_or_ball = sphere_or_ball && k != LinkKind::kOther;
      any_ball = any_ball || k == LinkKind::kBall;
    }
  }
  r.homology_manifold = all_sphere && r.connected;

  if (sphere_or_ball && any_ball && r.connected && d >= 2) {
    out.boundary = boundary_complex(c, deg);
    // Ball-link faces must be exactly the nonempty faces of the boundary.
    const auto bfaces = all_faces(out.boundary);
    bool match = true;
    for (std::size_t size = 1; size < s.faces.size() && match; ++size) {
      for (std::size_t k = 0; k < s.faces[size].size(); ++k) {
        const bool in_boundary = size < bfaces.size() &&
                                 std::binary_search(bfaces[size].begin(), bfaces[size].end(),
                                                    s.faces[size][k]);
        if (in_boundary != (s.kind[size][k] == LinkKind::kBall)) {
          match = false;
          break;
        }
      }
    }
    r.homology_manifold_with_boundary =
        match && out.boundary.is_pure() && out.boundary.d() == d - 1 &&
        closed_manifold_links(out.boundary, field);
  }

  const bool acyclic = std::all_of(r.betti.begin(), r.betti.end(), [](const Int& b) { return b == 0; });
  bool sphere_betti = !r.betti.empty() && r.betti.back() == 1;
  for (std::size_t j = 0; j + 1 < r.betti.size(); ++j) sphere_betti = sphere_betti && r.betti[j] == 0;
  r.homology_sphere = r.homology_manifold && sphere_betti;
  r.homology_ball = r.homology_manifold_with_boundary && acyclic;
  r.orientable_over_F = r.homology_manifold && !r.betti.empty() && r.betti.back() == 1;
  return out;
}

}  // namespace

std::vector<std::int64_t> reduced_betti_full(const Complex& c, FieldSpec field) {
  if (c.is_void()) return {};
  const auto faces = all_faces(c);
  const std::size_t top = faces.size();  // sizes 0 .. top-1
  const modp::u64 p = field.p;
  // ranks[s] = rank of the boundary map from faces of size s to size s-1.
  std::vector<std::int64_t> ranks(top + 1, 0);
  for (std::size_t s = 1; s < top; ++s) {
    std::vector<modp::SparseColumn> cols;
    cols.reserve(faces[s].size());
    for (const Face& f : faces[s]) {
      modp::SparseColumn col;
      for (std::size_t t = 0; t < f.size(); ++t) {
        Face g = f;
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(t));
        const auto row = static_cast<std::uint32_t>(index_in(faces[s - 1], g));
        col.emplace_back(row, (t % 2 == 0) ? 1 % p : p - 1);
      }
      std::sort(col.begin(), col.end());
      cols.push_back(std::move(col));
    }
    ranks[s] = static_cast<std::int64_t>(modp::sparse_rank(std::move(cols), p));
  }
  std::vector<std::int64_t> betti(top);
  for (std::size_t s = 0; s < top; ++s) {
    betti[s] = static_cast<std::int64_t>(faces[s].size()) - ranks[s] - ranks[s + 1];
  }
  return betti;
}

IntSeq betti_numbers(const Complex& c, FieldSpec field) {
  const auto full = reduced_betti_full(c, field);
  IntSeq out;
  for (std::size_t s = 1; s < full.size(); ++s) out.emplace_back(full[s]);
  return out;
}

bool has_sphere_homology(const std::vector<std::int64_t>& b, int k) {
  if (static_cast<int>(b.size()) != k + 2) return false;
  for (int j = -1; j <= k; ++j) {
    if (b[static_cast<std::size_t>(j + 1)] != (j == k ? 1 : 0)) return false;
  }
  return true;
}

bool has_ball_homology(const std::vector<std::int64_t>& b) {
  return !b.empty() && std::all_of(b.begin(), b.end(), [](std::int64_t x) { return x == 0; });
}

ClassReport classify(const Complex& c, FieldSpec field) { return classify_full(c, field).report; }

BoundaryReport boundary_and_interior(const Complex& c, FieldSpec field) {
  Classified cl = classify_full(c, field);
  if (!cl.report.homology_manifold_with_boundary) {
    throw NotAManifoldWithBoundary("complex is not an F-homology manifold with nonempty boundary");
  }
  const int d = c.d();
  BoundaryReport out;
  out.boundary = cl.boundary;
  out.interior_face_counts.assign(static_cast<std::size_t>(d), Int(0));
  int j_min = d - 1;
  for (std::size_t size = 1; size < cl.survey.kind.size(); ++size) {
    for (LinkKind k : cl.survey.kind[size]) {
      if (k != LinkKind::kSphere) continue;
      out.interior_face_counts[size - 1] += 1;
      j_min = std::min(j_min, static_cast<int>(size) - 1);
    }
  }
  out.stacked_index = std::max(0, d - 1 - j_min);
  const IntSeq fc = f_vector(c);
  const IntSeq fb = f_vector(out.boundary);
  out.census_consistent = true;
  for (int j = 0; j < d; ++j) {
    const Int on_boundary = (static_cast<std::size_t>(j + 1) < fb.size()) ? fb[j + 1] : Int(0);
    if (fc[j + 1] - on_boundary != out.interior_face_counts[j]) out.census_consistent = false;
  }
  return out;
}

GraebeReport graebe_boundary_g(const Complex& c, FieldSpec field) {
  if (!classify(c, field).homology_ball) throw NotABall("complex is not an F-homology ball");
  const int d = c.d();
  const BoundaryReport br = boundary_and_interior(c, field);
  const IntSeq g_boundary = g_vector_full(h_vector(br.boundary));
  const IntSeq h = h_vector(c);
  GraebeReport out;
  for (int i = 0; i < d; ++i) {
    out.direct.push_back(g_boundary[i]);
    out.from_h.push_back(h[i] - h[d - i]);
  }
  out.agree = out.direct == out.from_h;
  return out;
}

}  // namespace gconj
