// gconj: analyze, construct, transform, walk and verify simplicial complexes.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "gconj/complex.hpp"
#include "gconj/errors.hpp"
#include "gconj/face_ring.hpp"
#include "gconj/field.hpp"
#include "gconj/generators.hpp"
#include "gconj/io.hpp"
#include "gconj/moves.hpp"
#include "gconj/report.hpp"

using nlohmann::json;
using namespace gconj;

namespace {

struct Common {
  std::uint64_t field = FieldSpec::kDefaultPrime;
  int trials = 3;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultMonomialCap;
  std::string out;
  std::string format = "json";

  FaceRingOptions options() const { return {make_field(field), trials, seed, cap}; }
};

Face parse_face(const std::string& s) {
  Face f;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      f.push_back(static_cast<Vertex>(std::stol(tok)));
    } catch (const std::exception&) {
      throw ParseError("bad vertex list '" + s + "'");
    }
  }
  std::sort(f.begin(), f.end());
  return f;
}

void emit(const Common& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(cfg.out, text);
  }
}

void emit_report(const Common& cfg, const json& report) {
  emit(cfg, cfg.format == "table" ? render_table(report) : report.dump(2) + "\n");
}

void emit_complex(const Common& cfg, const Complex& c) {
  emit(cfg, cfg.format == "table" ? complex_to_text(c) : complex_to_json(c).dump() + "\n");
}

json with_run(json report, const std::string& command, const std::string& input, const Common& cfg) {
  report["run"] = {{"command", command}, {"input", input}, {"config", to_json(cfg.options())}};
  return report;
}

int finish(const json& report) {
  if (auto bad = first_failure(report)) {
    std::cerr << "failed: " << *bad << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Face numbers, face rings and bistellar moves of simplicial complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  Common cfg;
  app.add_option("--field", cfg.field, "Prime p of the coefficient field F_p")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Random (Θ, ω) trials")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", cfg.seed, "Run seed")->capture_default_str();
  app.add_option("--cap", cfg.cap, "Largest degree-t monomial basis allowed")->capture_default_str();
  app.add_option("--out", cfg.out, "Write output here instead of stdout");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();

  // analyze
  std::string analyze_in;
  auto* analyze = app.add_subcommand("analyze", "Invariants, classification and Lefschetz verdicts");
  analyze->add_option("input", analyze_in, "File or kind:params")->required();

  // construct
  std::string kind, a_spec, b_spec, f1_spec, f2_spec;
  int cd = 0, cn = 0, ck = -1;
  std::vector<int> params;
  auto* construct = app.add_subcommand("construct", "Build a complex");
  construct->add_option("kind", kind,
                        "boundary_simplex, simplex, cross_polytope, cyclic, polygon, torus7, rp2_6, octahedron, "
                        "stacked, join, cone, suspension, skeleton, sum, glue")
      ->required();
  construct->add_option("--d", cd, "Facet size d");
  construct->add_option("--n", cn, "Number of vertices");
  construct->add_option("--k", ck, "Skeleton dimension");
  construct->add_option("--params", params, "Generator parameters");
  construct->add_option("--a", a_spec, "First operand");
  construct->add_option("--b", b_spec, "Second operand");
  construct->add_option("--facet1", f1_spec, "Facet of the first operand, e.g. 1,2,3");
  construct->add_option("--facet2", f2_spec, "Facet of the second operand");

  // transform
  std::string t_in, t_a, t_b, t_edge, t_with, t_f1, t_f2;
  auto* transform = app.add_subcommand("transform", "Apply a move, contraction, connected sum or gluing");
  transform->require_subcommand(1);
  transform->fallthrough();
  auto* t_move = transform->add_subcommand("move", "Bistellar move (A, B)");
  t_move->add_option("input", t_in)->required();
  t_move->add_option("--A", t_a)->required();
  t_move->add_option("--B", t_b)->required();
  auto* t_contract = transform->add_subcommand("contract", "Contract an edge satisfying the link condition");
  t_contract->add_option("input", t_in)->required();
  t_contract->add_option("--edge", t_edge)->required();
  auto* t_sum = transform->add_subcommand("sum", "Facet connected sum");
  auto* t_glue = transform->add_subcommand("glue", "Identify two facets and keep them");
  for (auto* sc : {t_sum, t_glue}) {
    sc->add_option("input", t_in)->required();
    sc->add_option("--with", t_with)->required();
    sc->add_option("--facet1", t_f1);
    sc->add_option("--facet2", t_f2);
  }
  auto* t_moves = transform->add_subcommand("moves", "List the applicable bistellar moves");
  t_moves->add_option("input", t_in)->required();

  // walk
  std::string w_start = "boundary_simplex:4", w_mode = "weak";
  int w_steps = 10, w_max = 0;
  bool w_exclude = false, w_verify = false;
  std::vector<int> w_allowed, w_weights;
  auto* walk = app.add_subcommand("walk", "Random bistellar walk");
  walk->add_option("--start", w_start)->capture_default_str();
  walk->add_option("--steps", w_steps)->check(CLI::NonNegativeNumber)->capture_default_str();
  walk->add_flag("--exclude-balanced", w_exclude, "Skip |A| = |B| (odd d) and |A| = d/2 (even d) moves");
  walk->add_option("--allow-index", w_allowed, "Allowed move indices |B| - 1");
  walk->add_option("--weights", w_weights, "Relative weight per move index");
  walk->add_option("--max-vertices", w_max, "Refuse 0-moves beyond this many vertices");
  walk->add_flag("--verify-lefschetz", w_verify, "Run the Lefschetz test after every step");
  walk->add_option("--mode", w_mode, "weak, strong or very_weak")->capture_default_str();

  // verify
  std::string v_in;
  std::vector<std::string> v_suites;
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("input", v_in)->required();
  verify->add_option("--suite", v_suites, "Suites to run (default: all)");

  CLI11_PARSE(app, argc, argv);

  try {
    const FaceRingOptions opt = cfg.options();
    if (analyze->parsed()) {
      const json r = with_run(analyze_report(resolve_complex(analyze_in), opt), "analyze", analyze_in, cfg);
      emit_report(cfg, r);
      return finish(r);
    }
    if (construct->parsed()) {
      auto face_or_first = [](const std::string& s, const Complex& c) {
        return s.empty() ? c.facets().front() : parse_face(s);
      };
      Complex c;
      if (kind == "stacked") {
        c = stacked_sphere(cd, cn, cfg.seed);
      } else if (kind == "join") {
        c = join(resolve_complex(a_spec), resolve_complex(b_spec));
      } else if (kind == "cone") {
        c = cone(resolve_complex(a_spec));
      } else if (kind == "suspension") {
        c = suspension(resolve_complex(a_spec));
      } else if (kind == "skeleton") {
        c = skeleton(resolve_complex(a_spec), ck);
      } else if (kind == "sum" || kind == "glue") {
        const Complex a = resolve_complex(a_spec), b = resolve_complex(b_spec);
        const Face s1 = face_or_first(f1_spec, a), s2 = face_or_first(f2_spec, b);
        c = kind == "sum" ? connected_sum(a, b, s1, s2) : glue_facets(a, b, s1, s2);
      } else {
        std::vector<int> p = params;
        if (p.empty()) {
          if (cd > 0) p.push_back(cd);
          if (cn > 0) p.push_back(cn);
        }
        c = generate(kind, p);
      }
      emit_complex(cfg, c);
      return 0;
    }
    if (transform->parsed()) {
      const Complex c = resolve_complex(t_in);
      if (t_moves->parsed()) {
        json moves = json::array();
        for (const auto& m : valid_moves(c)) {
          json j = to_json(m);
          j["critical"] = is_critical(m, c.d());
          moves.push_back(std::move(j));
        }
        emit_report(cfg, with_run({{"moves", std::move(moves)}}, "transform moves", t_in, cfg));
        return 0;
      }
      Complex out;
      if (t_move->parsed()) out = apply_move(c, {parse_face(t_a), parse_face(t_b)});
      if (t_contract->parsed()) out = contract_edge(c, parse_face(t_edge));
      if (t_sum->parsed() || t_glue->parsed()) {
        const Complex other = resolve_complex(t_with);
        const Face s1 = t_f1.empty() ? c.facets().front() : parse_face(t_f1);
        const Face s2 = t_f2.empty() ? other.facets().front() : parse_face(t_f2);
        out = t_sum->parsed() ? connected_sum(c, other, s1, s2) : glue_facets(c, other, s1, s2);
      }
      emit_complex(cfg, out);
      return 0;
    }
    if (walk->parsed()) {
      WalkPolicy pol;
      pol.allowed_indices = w_allowed;
      pol.index_weights = w_weights;
      pol.exclude_critical = w_exclude;
      pol.max_vertices = w_max;
      pol.lefschetz_hook = w_verify;
      pol.hook_mode = parse_lefschetz_mode(w_mode);
      pol.hook_options = opt;
      const WalkLog log = random_walk(resolve_complex(w_start), w_steps, cfg.seed, pol);
      json r = with_run(to_json(log), "walk", w_start, cfg);
      json findings = json::array();
      for (const WalkStep& s : log.steps) {
        if (s.verdict && *s.verdict != Verdict::kCertifiedYes) {
          findings.push_back({{"check", "lefschetz_step_" + std::to_string(s.step)}, {"status", "FAIL"}});
        }
      }
      r["findings"] = std::move(findings);
      emit_report(cfg, r);
      return finish(r);
    }
    if (verify->parsed()) {
      const json r = with_run(verify_report(resolve_complex(v_in), v_suites, opt), "verify", v_in, cfg);
      emit_report(cfg, r);
      return finish(r);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
