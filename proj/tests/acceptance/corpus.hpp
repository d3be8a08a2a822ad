#pragma once

#include <string>
#include <vector>

#include "gconj/complex.hpp"
#include "gconj/generators.hpp"
#include "gconj/moves.hpp"

namespace corpus {

struct Entry {
  std::string name;
  gconj::Complex complex;
};

// Spheres, closed manifolds, pseudomanifolds and balls of facet size 2..7.
inline std::vector<Entry> build() {
  using namespace gconj;
  std::vector<Entry> out;
  for (int d = 2; d <= 7; ++d) out.push_back({"boundary_simplex:" + std::to_string(d), boundary_simplex(d)});
  for (int d = 2; d <= 5; ++d) out.push_back({"cross_polytope:" + std::to_string(d), cross_polytope(d)});
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 7}, {4, 6}, {4, 7}, {4, 8}, {5, 8}, {5, 9}, {6, 9}, {6, 10}}) {
    out.push_back({"cyclic:" + std::to_string(d) + ":" + std::to_string(n), cyclic_polytope_boundary(d, n)});
  }
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 8}, {4, 7}, {5, 9}, {6, 11}}) {
    out.push_back({"stacked:" + std::to_string(d) + ":" + std::to_string(n) + ":5", stacked_sphere(d, n, 5)});
  }
  out.push_back({"polygon:5", polygon(5)});
  out.push_back({"torus7", torus7()});
  out.push_back({"rp2_6", rp2_6()});
  out.push_back({"join(polygon:5,boundary_simplex:3)", join(polygon(5), boundary_simplex(3))});
  out.push_back({"join(boundary_simplex:2,boundary_simplex:3)", join(boundary_simplex(2), boundary_simplex(3))});
  out.push_back({"suspension(torus7)", suspension(torus7())});
  out.push_back({"suspension(rp2_6)", suspension(rp2_6())});
  out.push_back({"cone(torus7)", cone(torus7())});
  out.push_back({"cone(octahedron)", cone(cross_polytope(3))});
  out.push_back({"simplex:3", simplex(3)});
  const Complex oct = cross_polytope(3);
  out.push_back({"octahedron#octahedron", connected_sum(oct, oct, {1, 3, 5}, {2, 4, 6})});
  const Complex c4 = cross_polytope(4), cy = cyclic_polytope_boundary(4, 7);
  out.push_back({"cross_polytope:4#cyclic:4:7", connected_sum(c4, cy, c4.facets()[0], cy.facets()[0])});
  out.push_back({"torus7#torus7", connected_sum(torus7(), torus7(), {1, 2, 4}, {1, 2, 4})});
  return out;
}

}  // namespace corpus
