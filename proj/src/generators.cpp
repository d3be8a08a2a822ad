#include "gconj/generators.hpp"

#include "gconj/errors.hpp"

namespace gconj {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParamError(msg);
}

// All k-subsets of {1..n} in lexicographic order.
std::vector<Face> subsets(int n, int k) {
  std::vector<Face> out;
  Face cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

bool gale_even(const Face& s, int n) {
  std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
  for (Vertex v : s) in[v] = true;
  // Between any two non-members the run of members must have even length.
  int prev_gap = 0;
  for (int v = 1; v <= n; ++v) {
    if (in[v]) continue;
    if (prev_gap != 0) {
      int between = 0;
      for (int u = prev_gap + 1; u < v; ++u) between += in[u];
      if (between % 2 != 0) return false;
    }
    prev_gap = v;
  }
  return true;
}

}  // namespace

Complex boundary_simplex(int d) {
  require(d >= 1, "boundary_simplex needs d >= 1");
  return from_facets(d + 1, subsets(d + 1, d));
}

Complex simplex(int d) {
  require(d >= 0, "simplex needs d >= 0");
  return from_facets(d + 1, subsets(d + 1, d + 1));
}

Complex cross_polytope(int d) {
  require(d >= 1, "cross_polytope needs d >= 1");
  std::vector<Face> facets;
  for (long mask = 0; mask < (1L << d); ++mask) {
    Face f;
    for (int k = 0; k < d; ++k) f.push_back(2 * k + 1 + static_cast<int>((mask >> k) & 1));
    facets.push_back(std::move(f));
  }
  return from_facets(2 * d, facets);
}

Complex cyclic_polytope_boundary(int d, int n) {
  require(d >= 2 && n >= d + 1, "cyclic_polytope_boundary needs d >= 2 and n >= d + 1");
  std::vector<Face> facets;
  for (Face& s : subsets(n, d)) {
    if (gale_even(s, n)) facets.push_back(std::move(s));
  }
  return from_facets(n, facets);
}

Complex polygon(int m) {
  require(m >= 3, "polygon needs m >= 3");
  std::vector<Face> facets;
  for (int v = 1; v <= m; ++v) facets.push_back({v, v % m + 1});
  return from_facets(m, facets);
}

Complex torus7() {
  std::vector<Face> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
    facets.push_back({i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
  }
  return from_facets(7, facets);
}

Complex rp2_6() {
  return from_facets(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                         {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}});
}

Complex generate(const std::string& kind, const std::vector<int>& params) {
  auto arity = [&](std::size_t k) {
    require(params.size() == k, kind + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (kind == "boundary_simplex") return arity(1), boundary_simplex(params[0]);
  if (kind == "simplex") return arity(1), simplex(params[0]);
  if (kind == "cross_polytope") return arity(1), cross_polytope(params[0]);
  if (kind == "cyclic_polytope_boundary" || kind == "cyclic") {
    arity(2);
    return cyclic_polytope_boundary(params[0], params[1]);
  }
  if (kind == "polygon") return arity(1), polygon(params[0]);
  if (kind == "torus7") return arity(0), torus7();
  if (kind == "rp2_6" || kind == "rp2") return arity(0), rp2_6();
  if (kind == "octahedron") return arity(0), cross_polytope(3);
  throw ParamError("unknown complex kind '" + kind + "'");
}

}  // namespace gconj
