#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "gconj/errors.hpp"
#include "gconj/generators.hpp"
#include "gconj/io.hpp"
#include "gconj/report.hpp"

using namespace gconj;
using nlohmann::json;

TEST(Json, IntegersFallBackToStrings) {
  EXPECT_EQ(to_json(Int(-42)), json(-42));
  const Int big = Int(1) << 70;
  EXPECT_EQ(to_json(big), json(big.str()));
  EXPECT_EQ(to_json(to_intseq({1, 2})), json::parse("[1,2]"));
}

TEST(Resolve, KindsFilesAndErrors) {
  EXPECT_EQ(resolve_complex("octahedron"), cross_polytope(3));
  EXPECT_EQ(resolve_complex("cyclic:4:7"), cyclic_polytope_boundary(4, 7));
  EXPECT_EQ(resolve_complex("stacked:4:7:3"), stacked_sphere(4, 7, 3));
  const std::string path = ::testing::TempDir() + "resolve_torus.txt";
  write_file_atomic(path, complex_to_text(torus7()));
  EXPECT_EQ(resolve_complex(path), torus7());
  std::remove(path.c_str());
  EXPECT_THROW(resolve_complex("polygon:x"), ParseError);
  EXPECT_THROW(resolve_complex("dodecahedron"), ParamError);
  EXPECT_THROW(resolve_complex(""), ParseError);
}

TEST(Analyze, OctahedronReport) {
  const json r = analyze_report(cross_polytope(3), FaceRingOptions{});
  EXPECT_EQ(r["h"], json::parse("[1,3,3,1]"));
  EXPECT_EQ(r["g"], json::parse("[1,2]"));
  EXPECT_TRUE(r["m_vector"]["ok"].get<bool>());
  EXPECT_TRUE(r["classification"]["homology_sphere"].get<bool>());
  EXPECT_EQ(r["lefschetz"]["strong"]["verdict"], "CERTIFIED_YES");
  EXPECT_EQ(r["betti"]["2"], json::parse("[0,0,1]"));
  EXPECT_TRUE(r["findings"].empty());
  EXPECT_FALSE(first_failure(r).has_value());
}

TEST(Analyze, TorusReport) {
  const json r = analyze_report(torus7(), FaceRingOptions{});
  EXPECT_EQ(r["manifold_profile"]["h_doubleprime"], json::parse("[1,4,4,1]"));
  EXPECT_TRUE(r["manifold_profile"]["kalai_symmetric"].get<bool>());
  EXPECT_EQ(r["lefschetz"]["weak"]["verdict"], "CERTIFIED_YES");
  EXPECT_EQ(r["lefschetz"]["strong"]["verdict"], "UNDETERMINED_NO");
  EXPECT_TRUE(r["schenzel"]["holds"].get<bool>());
}

TEST(Analyze, ByteIdenticalAcrossRuns) {
  FaceRingOptions opt;
  opt.seed = 99;
  EXPECT_EQ(analyze_report(rp2_6(), opt).dump(), analyze_report(rp2_6(), opt).dump());
}

TEST(Analyze, LsopFailureIsAnErrorFinding) {
  FaceRingOptions opt;
  opt.field = make_field(2);
  const json r = analyze_report(boundary_simplex(3), opt);
  ASSERT_TRUE(first_failure(r).has_value());
  EXPECT_EQ(*first_failure(r), "schenzel");
  EXPECT_EQ(r["lefschetz"]["weak"]["error"], "LsopFailure");
}

TEST(Verify, StatusesAndUnknownSuite) {
  const json t = verify_report(torus7(), {"schenzel", "rigidity", "graebe"}, FaceRingOptions{});
  EXPECT_TRUE(t["passed"].get<bool>());
  EXPECT_EQ(t["findings"][0]["status"], "PASS");
  EXPECT_EQ(t["findings"][1]["status"], "SKIP");
  EXPECT_EQ(t["findings"][2]["status"], "SKIP");

  const json all = verify_report(cross_polytope(5), {}, FaceRingOptions{});
  EXPECT_EQ(all["findings"].size(), verify_suite_names().size());
  EXPECT_TRUE(all["passed"].get<bool>());

  const json ball = verify_report(cone(cross_polytope(3)), {"graebe", "gtilde"}, FaceRingOptions{});
  EXPECT_EQ(ball["findings"][0]["status"], "PASS");
  EXPECT_THROW(verify_report(torus7(), {"nonsense"}, FaceRingOptions{}), ParamError);
}

TEST(Walk, LogJsonCarriesReplayData) {
  WalkPolicy pol;
  pol.exclude_critical = true;
  const WalkLog log = random_walk(boundary_simplex(4), 6, 3, pol);
  const json j = to_json(log);
  EXPECT_EQ(j["seed"], 3);
  EXPECT_EQ(j["steps"].size(), 6u);
  EXPECT_TRUE(j["policy"]["exclude_critical"].get<bool>());
  Complex cur = complex_from_json(j["start"]);
  for (const auto& s : j["steps"]) {
    cur = apply_move(cur, {s["move"]["A"].get<Face>(), s["move"]["B"].get<Face>()});
  }
  EXPECT_EQ(cur, complex_from_json(j["final"]));
}

TEST(Table, FlattensPaths) {
  const std::string t = render_table(json::parse(R"({"a":{"b":[1,2]},"c":[{"d":true}]})"));
  EXPECT_EQ(t, "a.b  [1,2]\nc[0].d  true\n");
}
