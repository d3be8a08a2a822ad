#pragma once

#include <string>
#include <vector>

#include "gconj/complex.hpp"

namespace gconj {

/// Boundary of the d-simplex: d+1 vertices, facets of size d.
Complex boundary_simplex(int d);

/// The d-simplex as a complex with a single facet of size d+1.
Complex simplex(int d);

/// Boundary of the d-dimensional cross-polytope: vertices 2k-1, 2k are the
/// antipodal pair on axis k.
Complex cross_polytope(int d);

/// Boundary of the cyclic d-polytope on n vertices (Gale evenness).
Complex cyclic_polytope_boundary(int d, int n);

/// m-cycle.
Complex polygon(int m);

/// Seven-vertex (Möbius) torus.
Complex torus7();

/// Six-vertex real projective plane.
Complex rp2_6();

/// Named-family dispatch: kind is one of boundary_simplex, simplex,
/// cross_polytope, cyclic_polytope_boundary, polygon, torus7, rp2_6,
/// octahedron. Throws ParamError.
Complex generate(const std::string& kind, const std::vector<int>& params);

}  // namespace gconj
