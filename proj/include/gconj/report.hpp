#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gconj/complex.hpp"
#include "gconj/enumeration.hpp"
#include "gconj/face_ring.hpp"
#include "gconj/homology.hpp"
#include "gconj/integer.hpp"
#include "gconj/moves.hpp"

namespace gconj {

// JSON objects keep their keys sorted, so `dump()` of any report is a
// canonical byte string for a given input and configuration.

/// A JSON number when the value fits in 64 bits, its decimal string otherwise.
nlohmann::json to_json(const Int& x);
nlohmann::json to_json(const IntSeq& v);

nlohmann::json to_json(const FaceRingOptions& opt);
nlohmann::json to_json(const MVectorVerdict& v);
nlohmann::json to_json(const ClassReport& r);
nlohmann::json to_json(const ManifoldProfile& p);
nlohmann::json to_json(const BoundaryReport& r);
nlohmann::json to_json(const GammaReport& r);
nlohmann::json to_json(const GraebeReport& r);
nlohmann::json to_json(const ShortSimplicialG& r);
nlohmann::json to_json(const MapRank& m);
nlohmann::json to_json(const GradedReport& r);
nlohmann::json to_json(const LefschetzResult& r);
nlohmann::json to_json(const SocleReport& r);
nlohmann::json to_json(const SchenzelReport& r);
nlohmann::json to_json(const RigidityReport& r);
nlohmann::json to_json(const G3BoundReport& r);
nlohmann::json to_json(const CokernelReport& r);
nlohmann::json to_json(const SurjectivityReport& r);
nlohmann::json to_json(const BistellarMove& m);
nlohmann::json to_json(const WalkPolicy& p);
nlohmann::json to_json(const WalkLog& log);

/// Resolves a complex description. `-` reads a facet list from stdin and an
/// existing file path is read as one; otherwise the text is
/// `kind[:param...]`, where kind is a generator name or `stacked:d:n[:seed]`.
/// Throws ParseError or ParamError.
Complex resolve_complex(const std::string& spec);

/// f/h/g, M-vector verdict, Klee residual, classification, Betti numbers
/// over F_2, F_3 and the run field, manifold data when applicable and the
/// three Lefschetz verdicts.
nlohmann::json analyze_report(const Complex& c, const FaceRingOptions& opt);

/// schenzel, socle, rigidity, g3bound, cokernel, surjectivity, graebe,
/// gtilde, gluing, kalai, klee.
const std::vector<std::string>& verify_suite_names();

/// Each requested suite becomes a finding with status PASS, FAIL, SKIP
/// (precondition not met) or ERROR (the computation could not finish).
/// An empty list runs every suite. Throws ParamError on an unknown name.
nlohmann::json verify_report(const Complex& c, const std::vector<std::string>& suites, const FaceRingOptions& opt);

/// Name of the first FAIL or ERROR finding in `report["findings"]`.
std::optional<std::string> first_failure(const nlohmann::json& report);

/// Flattened `path  value` lines for human reading.
std::string render_table(const nlohmann::json& report);

}  // namespace gconj
