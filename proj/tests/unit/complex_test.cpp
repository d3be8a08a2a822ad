#include <gtest/gtest.h>

#include "gconj/complex.hpp"
#include "gconj/errors.hpp"
#include "gconj/generators.hpp"
#include "gconj/io.hpp"
#include "oracles.hpp"

using namespace gconj;

TEST(FromFacets, CanonicalizesAndValidates) {
  const Complex c = from_facets(4, {{3, 2, 1}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 3}});
  EXPECT_EQ(c.dim(), 2);
  ASSERT_EQ(c.facets().size(), 4u);
  EXPECT_EQ(c.facets().front(), (Face{1, 2, 3}));
  EXPECT_EQ(c, boundary_simplex(3));

  EXPECT_THROW(from_facets(4, {{1, 2, 3}, {1, 2}}), PurityError);
  EXPECT_THROW(from_facets(3, {{1, 2, 4}}), VertexRange);
  EXPECT_THROW(from_facets(3, {{0, 1}}), VertexRange);
  EXPECT_THROW(from_facets(3, {{1, 1}}), ParamError);
  EXPECT_THROW(from_facets(3, {}), ParamError);
  EXPECT_THROW(Complex::general(4, {{1, 2, 3}, {1, 2}}, true), DominatedFacet);
  EXPECT_EQ(from_facets(3, {{1, 2}, {2, 3}, {1, 3}}).dim(), 1);
}

TEST(Faces, CountsMatchBitmaskEnumeration) {
  const Complex b3 = boundary_simplex(3);
  EXPECT_EQ(faces_of_dim(b3, 1).size(), 6u);
  EXPECT_EQ(faces_of_dim(b3, -1), std::vector<Face>{Face{}});
  EXPECT_THROW(faces_of_dim(b3, 3), RangeError);
  EXPECT_EQ(faces_of_dim(cross_polytope(3), 2).size(), 8u);

  for (const Complex& c : {torus7(), rp2_6(), cyclic_polytope_boundary(5, 9), cross_polytope(4)}) {
    const auto layers = all_faces(c);
    const auto f = oracle::f_vector(c);
    ASSERT_EQ(layers.size(), f.size());
    for (std::size_t k = 0; k < f.size(); ++k) EXPECT_EQ(static_cast<long>(layers[k].size()), f[k]);
  }
}

TEST(Link, SmallCases) {
  const Relabeled l = link(boundary_simplex(3), {1});
  EXPECT_EQ(l.complex, boundary_simplex(2));
  EXPECT_EQ(l.original, (std::vector<Vertex>{2, 3, 4}));

  // Antipodal pairs are (1,2), (3,4), (5,6): the link of 1 is the 4-cycle 3-5-4-6.
  EXPECT_EQ(link(cross_polytope(3), {1}).complex, from_facets(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  EXPECT_EQ(link(boundary_simplex(3), {1, 2}).complex, boundary_simplex(1));
  EXPECT_THROW(link(cross_polytope(3), {1, 2}), NotAFace);
  EXPECT_EQ(link(boundary_simplex(3), {1, 2, 3}).complex, Complex::empty_face());
}

TEST(Star, ClosedStarIsJoinOfFaceAndLink) {
  for (const Complex& c : {cross_polytope(3), torus7(), cyclic_polytope_boundary(4, 7)}) {
    for (const auto& layer : all_faces(c)) {
      for (const Face& sigma : layer) {
        if (sigma.empty()) continue;
        const Complex st = closed_star(c, sigma);
        const Complex lk = link_in_place(c, sigma);
        std::vector<Face> joined;
        for (const Face& t : lk.facets()) joined.push_back(face_union(sigma, t));
        EXPECT_EQ(st, Complex::general(c.n_vertices(), joined)) << to_string(sigma);
      }
    }
  }
  EXPECT_EQ(closed_star(torus7(), {}), torus7());
  EXPECT_EQ(closed_star(boundary_simplex(3), {1}).facets().size(), 3u);
}

TEST(Join, DimensionsAndNamedWrappers) {
  const Complex s0 = boundary_simplex(1);
  EXPECT_EQ(join(s0, s0), from_facets(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  const Complex c = cone(boundary_simplex(2));
  EXPECT_EQ(c.facets().size(), 3u);
  EXPECT_EQ(c.d(), 3);
  const Complex j = join(boundary_simplex(2), boundary_simplex(3));
  EXPECT_EQ(j.dim(), 1 + 2 + 1);
  EXPECT_EQ(suspension(polygon(5)).facets().size(), 10u);
  // Associativity up to relabeling: the shifts compose the same way.
  const Complex a = polygon(3), b = boundary_simplex(1), d = polygon(4);
  EXPECT_EQ(join(join(a, b), d), join(a, join(b, d)));
}

TEST(InducedSubcomplex, Cases) {
  EXPECT_EQ(induced_subcomplex(boundary_simplex(3), {1, 2, 3}).complex, simplex(2));
  const Relabeled anti = induced_subcomplex(cross_polytope(3), {1, 2});
  EXPECT_EQ(anti.complex, from_facets(2, {{1}, {2}}));
  EXPECT_EQ(induced_subcomplex(torus7(), {1, 2, 3, 4, 5, 6, 7}).complex, torus7());
  EXPECT_THROW(induced_subcomplex(torus7(), {9}), VertexRange);
  // Non-pure results are allowed here.
  const Complex mixed = induced_subcomplex_in_place(polygon(5), {1, 2, 4});
  EXPECT_FALSE(mixed.is_pure());
  EXPECT_EQ(induced_subcomplex(torus7(), {}).complex, Complex::empty_face());
}

TEST(Skeleton, Cases) {
  const auto f = oracle::f_vector(skeleton(simplex(11), 3));
  EXPECT_EQ(f, (std::vector<long>{1, 12, 66, 220, 495}));
  EXPECT_EQ(skeleton(boundary_simplex(3), 2), boundary_simplex(3));
  EXPECT_EQ(skeleton(boundary_simplex(3), 0).facets().size(), 4u);
  EXPECT_THROW(skeleton(boundary_simplex(3), 3), RangeError);
}

TEST(Generators, NamedFamilies) {
  EXPECT_EQ(oracle::f_vector(cross_polytope(3)), (std::vector<long>{1, 6, 12, 8}));
  EXPECT_EQ(boundary_simplex(4).facets().size(), 5u);
  EXPECT_EQ(oracle::f_vector(cyclic_polytope_boundary(4, 8))[2], 28);
  EXPECT_EQ(oracle::f_vector(torus7()), (std::vector<long>{1, 7, 21, 14}));
  EXPECT_EQ(oracle::f_vector(rp2_6()), (std::vector<long>{1, 6, 15, 10}));
  EXPECT_EQ(generate("cyclic", {6, 10}), cyclic_polytope_boundary(6, 10));
  EXPECT_THROW(generate("polygon", {2}), ParamError);
  EXPECT_THROW(generate("nonsense", {}), ParamError);
}

TEST(MissingFacets, Cases) {
  EXPECT_TRUE(missing_facets(boundary_simplex(3)).empty());
  EXPECT_TRUE(missing_facets(cross_polytope(3)).empty());
  EXPECT_TRUE(missing_facets(skeleton(simplex(3), 1)).empty());
  // Graph of the octahedron: the three antipodal pairs are missing edges.
  EXPECT_EQ(missing_facets(skeleton(cross_polytope(3), 1)),
            (std::vector<Face>{{1, 2}, {3, 4}, {5, 6}}));
}

TEST(Components, Counts) {
  EXPECT_EQ(connected_components(torus7()), 1);
  EXPECT_EQ(connected_components(from_facets(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}})), 2);
  EXPECT_EQ(connected_components(Complex::empty_face()), 0);
}

TEST(Io, RoundTripsBothFormats) {
  for (const Complex& c : {torus7(), cross_polytope(4), cyclic_polytope_boundary(5, 9),
                           from_facets(9, {{2, 5}, {5, 7}})}) {
    EXPECT_EQ(complex_from_json(complex_to_json(c)), c);
    EXPECT_EQ(parse_complex(complex_to_json(c).dump()), c);
    EXPECT_EQ(parse_complex(complex_to_text(c)), c);
    EXPECT_EQ(complex_to_text(parse_complex(complex_to_text(c))), complex_to_text(c));
  }
  EXPECT_EQ(parse_complex("# comment\n1 2 3\n3 2 4 # trailing\n"), from_facets(4, {{1, 2, 3}, {2, 3, 4}}));
  EXPECT_THROW(parse_complex("1 2 x\n"), ParseError);
  EXPECT_THROW(parse_complex("{\"n\": 3}"), ParseError);
  EXPECT_THROW(parse_complex("{broken"), ParseError);
}
