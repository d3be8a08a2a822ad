#pragma once

#include <cstdint>
#include <vector>

#include "gconj/complex.hpp"
#include "gconj/field.hpp"
#include "gconj/integer.hpp"

namespace gconj {

/// Reduced Betti numbers beta_0 .. beta_dim over F_p. Empty for {∅}.
IntSeq betti_numbers(const Complex& c, FieldSpec field);

/// Reduced Betti numbers including degree -1: entry k+1 is beta_k for
/// -1 <= k <= dim. {∅} gives (1); the void complex gives ().
std::vector<std::int64_t> reduced_betti_full(const Complex& c, FieldSpec field);

/// True when the reduced homology is that of S^k (k = -1 allowed).
bool has_sphere_homology(const std::vector<std::int64_t>& full_betti, int k);
/// True when every reduced Betti number vanishes.
bool has_ball_homology(const std::vector<std::int64_t>& full_betti);

struct ClassReport {
  std::uint64_t field = 0;
  bool pure = false;
  bool connected = false;
  bool pseudomanifold = false;
  bool normal_pseudomanifold = false;
  bool homology_manifold = false;  ///< closed
  bool homology_manifold_with_boundary = false;  ///< nonempty boundary
  bool homology_sphere = false;
  bool homology_ball = false;
  bool semi_eulerian = false;
  bool orientable_over_F = false;
  IntSeq betti;
};

ClassReport classify(const Complex& c, FieldSpec field);

struct BoundaryReport {
  Complex boundary;
  /// Interior j-faces (link is a sphere) for 0 <= j <= d-1.
  IntSeq interior_face_counts;
  /// Least i such that no interior face has dimension <= d-i-2.
  int stacked_index = 0;
  /// Interior counts agree with f(c) - f(boundary) in every dimension.
  bool census_consistent = false;
};

/// Throws NotAManifoldWithBoundary.
BoundaryReport boundary_and_interior(const Complex& c, FieldSpec field);

struct GraebeReport {
  IntSeq direct;  ///< g_i(boundary) for 0 <= i <= d-1
  IntSeq from_h;  ///< h_i(c) - h_{d-i}(c)
  bool agree = false;
};

/// Throws NotABall.
GraebeReport graebe_boundary_g(const Complex& c, FieldSpec field);

}  // namespace gconj
