#include <gtest/gtest.h>

#include "gconj/enumeration.hpp"
#include "gconj/errors.hpp"
#include "gconj/generators.hpp"
#include "gconj/homology.hpp"
#include "oracles.hpp"

using namespace gconj;

namespace {

IntSeq seq(std::initializer_list<long> v) {
  IntSeq out;
  for (long x : v) out.emplace_back(x);
  return out;
}

const FieldSpec kLarge{};
const FieldSpec kTwo{2};
const FieldSpec kThree{3};

Complex two_triangles() { return from_facets(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}); }

Complex stacked_ball() { return from_facets(7, {{1, 2, 3, 4, 5}, {2, 3, 4, 5, 6}, {3, 4, 5, 6, 7}}); }

Complex sphere_minus_facet(const Complex& s) {
  std::vector<Face> rest(s.facets().begin() + 1, s.facets().end());
  return from_facets(s.n_vertices(), rest);
}

std::vector<Complex> corpus() {
  return {boundary_simplex(3), cross_polytope(3), cross_polytope(4), torus7(), rp2_6(),
          cone(torus7()), suspension(torus7()), two_triangles(), cyclic_polytope_boundary(5, 8),
          simplex(4), cone(cross_polytope(3)), stacked_ball(), skeleton(simplex(5), 2)};
}

}  // namespace

TEST(Betti, KnownValues) {
  EXPECT_EQ(betti_numbers(boundary_simplex(3), kLarge), seq({0, 0, 1}));
  EXPECT_EQ(betti_numbers(boundary_simplex(3), kTwo), seq({0, 0, 1}));
  EXPECT_EQ(betti_numbers(rp2_6(), kTwo), seq({0, 1, 1}));
  EXPECT_EQ(betti_numbers(rp2_6(), kLarge), seq({0, 0, 0}));
  EXPECT_EQ(betti_numbers(torus7(), kLarge), seq({0, 2, 1}));
  EXPECT_EQ(betti_numbers(two_triangles(), kLarge)[0], 1);
  EXPECT_EQ(reduced_betti_full(Complex::empty_face(), kLarge), (std::vector<std::int64_t>{1}));
}

TEST(Betti, MatchesDenseOracle) {
  for (const FieldSpec f : {kTwo, kThree, kLarge}) {
    for (const Complex& c : corpus()) {
      const auto expect = oracle::betti(c, static_cast<long long>(f.p));
      const IntSeq got = betti_numbers(c, f);
      ASSERT_EQ(got.size(), expect.size());
      for (std::size_t j = 0; j < got.size(); ++j) EXPECT_EQ(got[j], expect[j]) << "p=" << f.p << " j=" << j;
    }
  }
}

TEST(Betti, EulerCharacteristicIsFieldIndependent) {
  for (const FieldSpec f : {kTwo, kThree, kLarge}) {
    for (const Complex& c : corpus()) {
      Int alt = 0;
      const IntSeq b = betti_numbers(c, f);
      for (std::size_t j = 0; j < b.size(); ++j) alt += sign_power(static_cast<std::int64_t>(j)) * b[j];
      EXPECT_EQ(alt, reduced_euler_characteristic(c));
    }
  }
}

TEST(Classify, Octahedron) {
  const ClassReport r = classify(cross_polytope(3), kLarge);
  EXPECT_TRUE(r.homology_sphere);
  EXPECT_TRUE(r.homology_manifold);
  EXPECT_TRUE(r.normal_pseudomanifold);
  EXPECT_TRUE(r.pseudomanifold);
  EXPECT_TRUE(r.semi_eulerian);
  EXPECT_TRUE(r.orientable_over_F);
  EXPECT_FALSE(r.homology_manifold_with_boundary);
}

TEST(Classify, TorusAndItsCone) {
  const ClassReport t = classify(torus7(), kLarge);
  EXPECT_TRUE(t.homology_manifold);
  EXPECT_FALSE(t.homology_sphere);
  EXPECT_TRUE(t.semi_eulerian);
  EXPECT_TRUE(t.orientable_over_F);

  const ClassReport c = classify(cone(torus7()), kLarge);
  EXPECT_FALSE(c.homology_manifold);
  EXPECT_FALSE(c.homology_manifold_with_boundary);
  EXPECT_TRUE(c.pseudomanifold);
  EXPECT_FALSE(c.normal_pseudomanifold);

  const ClassReport s = classify(suspension(torus7()), kLarge);
  EXPECT_TRUE(s.normal_pseudomanifold);
  EXPECT_FALSE(s.homology_manifold);
}

TEST(Classify, ProjectivePlaneDependsOnField) {
  EXPECT_TRUE(classify(rp2_6(), kTwo).orientable_over_F);
  EXPECT_FALSE(classify(rp2_6(), kLarge).orientable_over_F);
  EXPECT_TRUE(classify(rp2_6(), kLarge).homology_manifold);
}

TEST(Classify, BallsAndDisconnected) {
  for (const Complex& b : {simplex(4), cone(cross_polytope(3)), stacked_ball(), sphere_minus_facet(torus7())}) {
    const ClassReport r = classify(b, kLarge);
    EXPECT_TRUE(r.homology_manifold_with_boundary);
    EXPECT_FALSE(r.homology_manifold);
  }
  EXPECT_TRUE(classify(simplex(4), kLarge).homology_ball);
  EXPECT_FALSE(classify(sphere_minus_facet(torus7()), kLarge).homology_ball);
  EXPECT_FALSE(classify(two_triangles(), kLarge).connected);
  EXPECT_FALSE(classify(two_triangles(), kLarge).homology_manifold);
  EXPECT_FALSE(classify(skeleton(simplex(5), 2), kLarge).pseudomanifold);
}

TEST(Classify, FlagsAreMonotone) {
  for (const FieldSpec f : {kTwo, kLarge}) {
    for (const Complex& c : corpus()) {
      const ClassReport r = classify(c, f);
      if (r.homology_sphere) EXPECT_TRUE(r.homology_manifold);
      if (r.homology_manifold) EXPECT_TRUE(r.normal_pseudomanifold);
      if (r.normal_pseudomanifold) EXPECT_TRUE(r.pseudomanifold);
      if (r.homology_ball) EXPECT_TRUE(r.homology_manifold_with_boundary);
      if (r.homology_manifold) EXPECT_TRUE(r.semi_eulerian);
      if (r.semi_eulerian) {
        for (const Int& x : klee_residual(c)) EXPECT_EQ(x, 0);
      }
    }
  }
}

TEST(BoundaryAndInterior, Census) {
  const BoundaryReport s = boundary_and_interior(simplex(4), kLarge);
  EXPECT_EQ(s.boundary, boundary_simplex(4));
  EXPECT_EQ(s.interior_face_counts, seq({0, 0, 0, 0, 1}));
  EXPECT_EQ(s.stacked_index, 0);
  EXPECT_TRUE(s.census_consistent);

  const BoundaryReport c = boundary_and_interior(cone(cross_polytope(3)), kLarge);
  EXPECT_EQ(c.interior_face_counts[0], 1);
  EXPECT_EQ(c.stacked_index, 3);
  EXPECT_TRUE(c.census_consistent);

  const BoundaryReport b = boundary_and_interior(stacked_ball(), kLarge);
  EXPECT_EQ(b.stacked_index, 1);
  EXPECT_EQ(b.interior_face_counts, seq({0, 0, 0, 2, 3}));

  EXPECT_THROW(boundary_and_interior(torus7(), kLarge), NotAManifoldWithBoundary);
}

TEST(Graebe, BoundaryGFromBallH) {
  const GraebeReport s = graebe_boundary_g(simplex(4), kLarge);
  EXPECT_TRUE(s.agree);
  EXPECT_EQ(s.direct, seq({1, 0, 0, 0, 0}));

  const GraebeReport c = graebe_boundary_g(cone(cross_polytope(3)), kLarge);
  EXPECT_TRUE(c.agree);
  EXPECT_EQ(c.direct, seq({1, 2, 0, -2}));

  for (const Complex& s2 : {cross_polytope(4), cyclic_polytope_boundary(5, 9)}) {
    EXPECT_TRUE(graebe_boundary_g(sphere_minus_facet(s2), kLarge).agree);
  }
  EXPECT_THROW(graebe_boundary_g(torus7(), kLarge), NotABall);
}
