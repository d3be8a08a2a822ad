#include "gconj/report.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>

#include "gconj/errors.hpp"
#include "gconj/generators.hpp"
#include "gconj/io.hpp"

namespace gconj {

using nlohmann::json;

json to_json(const Int& x) {
  if (x >= Int(std::numeric_limits<std::int64_t>::min()) && x <= Int(std::numeric_limits<std::int64_t>::max())) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

json to_json(const IntSeq& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const FaceRingOptions& opt) {
  return {{"field", opt.field.p}, {"trials", opt.trials}, {"seed", opt.seed}, {"cap", opt.cap}};
}

json to_json(const MVectorVerdict& v) {
  return {{"ok", v.ok}, {"failure_index", v.failure_index ? json(*v.failure_index) : json(nullptr)}};
}

json to_json(const ClassReport& r) {
  return {{"field", r.field},
          {"pure", r.pure},
          {"connected", r.connected},
          {"pseudomanifold", r.pseudomanifold},
          {"normal_pseudomanifold", r.normal_pseudomanifold},
          {"homology_manifold", r.homology_manifold},
          {"homology_manifold_with_boundary", r.homology_manifold_with_boundary},
          {"homology_sphere", r.homology_sphere},
          {"homology_ball", r.homology_ball},
          {"semi_eulerian", r.semi_eulerian},
          {"orientable_over_F", r.orientable_over_F},
          {"betti", to_json(r.betti)}};
}

json to_json(const ManifoldProfile& p) {
  return {{"d", p.d},
          {"h", to_json(p.h)},
          {"betti", to_json(p.betti)},
          {"h_prime", to_json(p.h_prime)},
          {"h_doubleprime", to_json(p.h_doubleprime)},
          {"g", to_json(p.g)},
          {"g_hat", to_json(p.g_hat)},
          {"g_bar", to_json(p.g_bar)},
          {"g_bar_formula", to_json(p.g_bar_formula)},
          {"orientable", p.orientable},
          {"kalai_symmetric", p.kalai_symmetric},
          {"g_hat_equals_g_bar", p.g_hat_equals_g_bar},
          {"g_bar_formula_holds", p.g_bar_formula_holds}};
}

json to_json(const BoundaryReport& r) {
  return {{"boundary", complex_to_json(r.boundary)},
          {"interior_face_counts", to_json(r.interior_face_counts)},
          {"stacked_index", r.stacked_index},
          {"census_consistent", r.census_consistent}};
}

json to_json(const GammaReport& r) {
  return {{"gamma", to_json(r.gamma)},
          {"gamma_from_h", to_json(r.gamma_from_h)},
          {"interior_vertices", r.interior_vertices},
          {"agree", r.agree}};
}

json to_json(const GraebeReport& r) {
  return {{"direct", to_json(r.direct)}, {"from_h", to_json(r.from_h)}, {"agree", r.agree}};
}

json to_json(const ShortSimplicialG& r) {
  return {{"g_tilde", to_json(r.g_tilde)},
          {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.rhs)},
          {"identity_holds", r.identity_holds}};
}

json to_json(const MapRank& m) {
  return {{"i", m.i}, {"k", m.k}, {"rank", m.rank}, {"ker", m.ker}, {"coker", m.coker}};
}

json to_json(const GradedReport& r) {
  json maps = json::array();
  for (const MapRank& m : r.maps) maps.push_back(to_json(m));
  return {{"field", r.field},
          {"seed", r.seed},
          {"trials", r.trials},
          {"lsop_trials", r.lsop_trials},
          {"hilbert", to_json(r.hilbert)},
          {"maps", std::move(maps)}};
}

json to_json(const LefschetzResult& r) {
  return {{"mode", to_string(r.mode)},
          {"verdict", to_string(r.verdict)},
          {"sphere_shortcut", r.sphere_shortcut},
          {"witness_seed", r.witness_seed ? json(*r.witness_seed) : json(nullptr)},
          {"report", to_json(r.report)}};
}

json to_json(const SocleReport& r) {
  return {{"i", r.i},
          {"socle_dim", r.socle_dim},
          {"bound", r.bound ? to_json(*r.bound) : json(nullptr)},
          {"bound_holds", r.bound_holds}};
}

json to_json(const SchenzelReport& r) {
  return {{"hilbert", to_json(r.hilbert)},
          {"h_prime", to_json(r.h_prime)},
          {"residual", to_json(r.residual)},
          {"holds", r.holds}};
}

json to_json(const RigidityReport& r) {
  return {{"dim1_equals_h1", r.dim1_equals_h1},
          {"dim2_equals_h2", r.dim2_equals_h2},
          {"dim3_at_least_h3", r.dim3_at_least_h3},
          {"injective_1_to_2", r.injective_1_to_2},
          {"hilbert", to_json(r.hilbert)},
          {"h", to_json(r.h)},
          {"all", r.all()}};
}

json to_json(const G3BoundReport& r) {
  return {{"g2", to_json(r.g2)},
          {"g3", to_json(r.g3)},
          {"bound", to_json(r.bound)},
          {"inequality", r.inequality},
          {"equality", r.equality},
          {"injective_2_to_3", r.injective_2_to_3},
          {"holds", r.holds}};
}

json to_json(const CokernelReport& r) {
  return {{"i", r.i},
          {"bad_vertices", r.bad_vertices},
          {"observed", r.observed},
          {"bound", to_json(r.bound)},
          {"holds", r.holds}};
}

json to_json(const SurjectivityReport& r) {
  return {{"map", to_json(r.map)}, {"surjective", r.surjective}};
}

json to_json(const BistellarMove& m) { return {{"A", m.A}, {"B", m.B}, {"index", m.index()}}; }

json to_json(const WalkPolicy& p) {
  return {{"allowed_indices", p.allowed_indices},
          {"index_weights", p.index_weights},
          {"exclude_critical", p.exclude_critical},
          {"max_vertices", p.max_vertices},
          {"lefschetz_hook", p.lefschetz_hook},
          {"hook_mode", to_string(p.hook_mode)},
          {"hook_options", to_json(p.hook_options)}};
}

json to_json(const WalkLog& log) {
  json steps = json::array();
  for (const WalkStep& s : log.steps) {
    steps.push_back({{"step", s.step},
                     {"move", to_json(s.move)},
                     {"critical", s.critical},
                     {"f", to_json(s.f)},
                     {"verdict", s.verdict ? json(to_string(*s.verdict)) : json(nullptr)}});
  }
  return {{"seed", log.seed},
          {"policy", to_json(log.policy)},
          {"start", complex_to_json(log.start)},
          {"steps", std::move(steps)},
          {"final", complex_to_json(log.final)},
          {"stalled", log.stalled}};
}

Complex resolve_complex(const std::string& spec) {
  if (spec == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return parse_complex(buf.str());
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) return read_complex_file(spec);
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.empty() || parts[0].empty()) throw ParseError("empty complex description");
  std::vector<long long> nums;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    try {
      std::size_t used = 0;
      nums.push_back(std::stoll(parts[k], &used));
      if (used != parts[k].size()) throw std::invalid_argument(parts[k]);
    } catch (const std::exception&) {
      throw ParseError("'" + spec + "' is neither a file nor kind:params (bad parameter '" + parts[k] + "')");
    }
  }
  if (parts[0] == "stacked" || parts[0] == "stacked_sphere") {
    if (nums.size() != 2 && nums.size() != 3) throw ParamError("stacked expects d:n or d:n:seed");
    const auto seed = nums.size() == 3 ? static_cast<std::uint64_t>(nums[2]) : std::uint64_t{1};
    return stacked_sphere(static_cast<int>(nums[0]), static_cast<int>(nums[1]), seed);
  }
  std::vector<int> params(nums.begin(), nums.end());
  return generate(parts[0], params);
}

namespace {

// Runs `fn` and turns library errors into an error entry naming the kind.
json guarded(const std::function<json()>& fn, std::vector<json>& findings, const std::string& what) {
  try {
    return fn();
  } catch (const Error& e) {
    findings.push_back({{"check", what}, {"status", "ERROR"}, {"message", e.what()}});
    return {{"error", e.kind()}, {"message", e.what()}};
  }
}

json finding(const std::string& check, const std::string& status, json detail, const std::string& message = "") {
  json f = {{"check", check}, {"status", status}, {"detail", std::move(detail)}};
  if (!message.empty()) f["message"] = message;
  return f;
}

json run_suite(const std::string& name, const Complex& c, const FaceRingOptions& opt) {
  const int d = c.d();
  const FieldSpec field = opt.field;
  auto pass_if = [&](bool ok, json detail) { return finding(name, ok ? "PASS" : "FAIL", std::move(detail)); };
  try {
    if (name == "schenzel") {
      const auto r = schenzel_check(c, opt);
      return pass_if(r.holds, to_json(r));
    }
    if (name == "socle") {
      const ClassReport cr = classify(c, field);
      if (!cr.homology_manifold && !cr.homology_manifold_with_boundary) {
        return finding(name, "SKIP", nullptr, "needs an F-homology manifold");
      }
      json reports = json::array();
      bool ok = true;
      for (int i = 1; i < d; ++i) {
        const auto r = socle_dim(c, opt, i);
        ok = ok && r.bound_holds;
        reports.push_back(to_json(r));
      }
      return pass_if(ok, reports);
    }
    if (name == "rigidity") {
      const auto r = rigidity_check(c, opt);
      return pass_if(r.all(), to_json(r));
    }
    if (name == "g3bound") {
      const auto r = g3_upper_bound_check(c, opt);
      return pass_if(r.holds, to_json(r));
    }
    if (name == "cokernel") {
      if (d < 3) return finding(name, "SKIP", nullptr, "needs d >= 3");
      json reports = json::array();
      bool ok = true;
      for (int i = 1; i + 1 < d; ++i) {
        const auto r = cokernel_bound_check(c, opt, i);
        ok = ok && r.holds;
        reports.push_back(to_json(r));
      }
      return pass_if(ok, reports);
    }
    if (name == "surjectivity") {
      const auto r = top_surjectivity_check(c, opt);
      return pass_if(r.surjective, to_json(r));
    }
    if (name == "graebe") {
      const auto r = graebe_boundary_g(c, field);
      return pass_if(r.agree, to_json(r));
    }
    if (name == "gtilde") {
      const auto r = short_simplicial_g(c);
      return pass_if(r.identity_holds, to_json(r));
    }
    if (name == "gluing") {
      const Face& s = c.facets().front();
      const IntSeq h = h_vector(c);
      const IntSeq glued = h_vector(glue_facets(c, c, s, s));
      const IntSeq predicted_h = facet_gluing_h(h, h);
      const IntSeq summed = g_vector_full(h_vector(connected_sum(c, c, s, s)));
      const IntSeq gf = g_vector_full(h);
      const IntSeq predicted_g = connected_sum_g(gf, gf);
      json detail = {{"glue_h", to_json(glued)},
                     {"glue_h_predicted", to_json(predicted_h)},
                     {"sum_g", to_json(summed)},
                     {"sum_g_predicted", to_json(predicted_g)}};
      // g_d of a connected sum also loses the removed facet, so compare below d.
      bool g_ok = true;
      for (int i = 0; i < d; ++i) g_ok = g_ok && summed[static_cast<std::size_t>(i)] == predicted_g[static_cast<std::size_t>(i)];
      return pass_if(glued == predicted_h && g_ok, detail);
    }
    if (name == "kalai") {
      const ClassReport cr = classify(c, field);
      if (!cr.homology_manifold || !cr.orientable_over_F) {
        return finding(name, "SKIP", nullptr, "needs a closed orientable F-homology manifold");
      }
      const auto p = manifold_profile(c, field);
      return pass_if(p.kalai_symmetric && p.g_hat_equals_g_bar, to_json(p));
    }
    if (name == "klee") {
      const ClassReport cr = classify(c, field);
      if (!cr.semi_eulerian) return finding(name, "SKIP", nullptr, "needs a semi-Eulerian complex");
      const IntSeq r = klee_residual(c);
      bool zero = true;
      for (const Int& x : r) zero = zero && x == 0;
      return pass_if(zero, {{"residual", to_json(r)}});
    }
  } catch (const ParamError& e) {
    return finding(name, "SKIP", nullptr, e.what());
  } catch (const NotAManifold& e) {
    return finding(name, "SKIP", nullptr, e.what());
  } catch (const NotNormalPseudomanifold& e) {
    return finding(name, "SKIP", nullptr, e.what());
  } catch (const NotABall& e) {
    return finding(name, "SKIP", nullptr, e.what());
  } catch (const Error& e) {
    return finding(name, "ERROR", nullptr, e.what());
  }
  throw ParamError("unknown verify suite '" + name + "'");
}

}  // namespace

json analyze_report(const Complex& c, const FaceRingOptions& opt) {
  std::vector<json> findings;
  json r;
  r["config"] = to_json(opt);
  r["complex"] = {{"n", c.n_vertices()},
                  {"vertices", c.vertices().size()},
                  {"facets", c.facets().size()},
                  {"dim", c.dim()},
                  {"d", c.d()}};
  r["f"] = to_json(f_vector(c));
  const IntSeq h = h_vector(c);
  r["h"] = to_json(h);
  const IntSeq g = g_vector(c);
  r["g"] = to_json(g);
  r["m_vector"] = to_json(is_m_vector(g));
  r["klee_residual"] = to_json(klee_residual(c));
  const ClassReport cr = classify(c, opt.field);
  r["classification"] = to_json(cr);

  json betti;
  std::vector<std::uint64_t> primes{2, 3};
  if (opt.field.p != 2 && opt.field.p != 3) primes.push_back(opt.field.p);
  for (std::uint64_t p : primes) betti[std::to_string(p)] = to_json(betti_numbers(c, make_field(p)));
  r["betti"] = std::move(betti);

  if (cr.homology_manifold) {
    r["manifold_profile"] = to_json(manifold_profile(c, opt.field));
  }
  if (cr.homology_manifold_with_boundary) {
    r["boundary"] = to_json(boundary_and_interior(c, opt.field));
    r["gamma"] = to_json(gamma(c, opt.field));
  }
  if (cr.homology_manifold || cr.homology_manifold_with_boundary) {
    r["schenzel"] = guarded([&] { return to_json(schenzel_check(c, opt)); }, findings, "schenzel");
  }
  json lef;
  for (LefschetzMode m : {LefschetzMode::kWeak, LefschetzMode::kStrong, LefschetzMode::kVeryWeak}) {
    lef[to_string(m)] = guarded([&] { return to_json(lefschetz_test(c, opt, m)); }, findings,
                                "lefschetz_" + to_string(m));
  }
  r["lefschetz"] = std::move(lef);
  r["short_simplicial_g"] = to_json(short_simplicial_g(c));
  r["findings"] = findings;
  return r;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"schenzel", "socle",  "rigidity", "g3bound", "cokernel", "surjectivity",
                                              "graebe",   "gtilde", "gluing",   "kalai",   "klee"};
  return names;
}

json verify_report(const Complex& c, const std::vector<std::string>& suites, const FaceRingOptions& opt) {
  const std::vector<std::string>& run = suites.empty() ? verify_suite_names() : suites;
  for (const std::string& s : run) {
    if (std::find(verify_suite_names().begin(), verify_suite_names().end(), s) == verify_suite_names().end()) {
      throw ParamError("unknown verify suite '" + s + "'");
    }
  }
  json findings = json::array();
  bool passed = true;
  for (const std::string& s : run) {
    json f = run_suite(s, c, opt);
    passed = passed && f["status"] != "FAIL" && f["status"] != "ERROR";
    findings.push_back(std::move(f));
  }
  return {{"config", to_json(opt)}, {"suites", run}, {"findings", std::move(findings)}, {"passed", passed}};
}

std::optional<std::string> first_failure(const json& report) {
  if (!report.contains("findings")) return std::nullopt;
  for (const json& f : report["findings"]) {
    const std::string status = f.value("status", "");
    if (status == "FAIL" || status == "ERROR") return f.value("check", "");
  }
  return std::nullopt;
}

namespace {

void flatten(const json& j, const std::string& path, std::ostringstream& os) {
  const bool leafy_array =
      j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array() && !leafy_array) {
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], path + "[" + std::to_string(k) + "]", os);
  } else {
    os << path << "  " << j.dump() << '\n';
  }
}

}  // namespace

std::string render_table(const json& report) {
  std::ostringstream os;
  flatten(report, "", os);
  return os.str();
}

}  // namespace gconj
