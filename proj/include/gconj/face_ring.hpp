#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gconj/complex.hpp"
#include "gconj/field.hpp"
#include "gconj/integer.hpp"

namespace gconj {

inline constexpr std::size_t kDefaultMonomialCap = 200000;

struct FaceRingOptions {
  FieldSpec field;
  int trials = 3;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultMonomialCap;
};

/// Rows 0..d-1 are the parameters theta_1..theta_d, row d is omega. Column k
/// belongs to `vertices[k]`.
struct LinearForms {
  std::uint64_t seed = 0;
  std::vector<Vertex> vertices;
  std::vector<std::vector<std::uint64_t>> coeff;
};

/// Seeds of the individual trials, derived from the run seed.
std::vector<std::uint64_t> trial_seeds(std::uint64_t seed, int trials);

LinearForms random_forms(const Complex& c, FieldSpec field, std::uint64_t seed);

/// F(Δ) = F[Δ]/(Θ) for one choice of forms.
///
/// Θ is used to eliminate d of the variables, so every graded piece is a
/// quotient of a polynomial ring in f0 - d variables by the image of the
/// face ideal. Degrees are built on demand.
class ArtinianReduction {
 public:
  ArtinianReduction(const Complex& c, LinearForms forms, FieldSpec field, std::size_t cap);
  ~ArtinianReduction();
  ArtinianReduction(ArtinianReduction&&) noexcept;
  ArtinianReduction& operator=(ArtinianReduction&&) noexcept;

  const LinearForms& forms() const noexcept;

  /// Θ restricted to every facet is invertible (Kind–Kleinschmidt), which
  /// is equivalent to Θ being an l.s.o.p.
  bool is_lsop() const noexcept;

  /// dim F(Δ)_t. Throws CapExceeded.
  std::size_t dim(int t);

  /// Rank of ·ω^k: F(Δ)_i → F(Δ)_{i+k}.
  std::size_t rank_power(int i, int k);

  /// dim of {s in F(Δ)_i : x_v s = 0 for all v}.
  std::size_t socle_dim(int i);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Degree-i monomials of F[Δ] as exponent vectors indexed by vertex id - 1.
/// Throws CapExceeded.
std::vector<std::vector<int>> monomial_basis(const Complex& c, int i, std::size_t cap = kDefaultMonomialCap);

struct MapRank {
  int i = 0;
  int k = 1;
  std::int64_t rank = 0;
  std::int64_t ker = 0;
  std::int64_t coker = 0;
};

struct GradedReport {
  std::uint64_t field = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  int lsop_trials = 0;
  IntSeq hilbert;  ///< dim F(Δ)_0 .. up to the highest degree examined
  std::vector<MapRank> maps;
};

/// dim F(Δ)_i for 0 <= i <= d+1, minimized over trials whose Θ is an
/// l.s.o.p. Throws LsopFailure when no trial gives one.
IntSeq artinian_hilbert(const Complex& c, const FaceRingOptions& opt);

/// Rank of ·ω^k maximized over trials achieving the generic Hilbert function.
MapRank mult_rank(const Complex& c, const FaceRingOptions& opt, int i, int k);

/// Hilbert function through degree d+1 and every ·ω: F_i → F_{i+1}.
GradedReport graded_report(const Complex& c, const FaceRingOptions& opt);

enum class LefschetzMode { kWeak, kStrong, kVeryWeak };
enum class Verdict { kCertifiedYes, kUndeterminedNo };

std::string to_string(LefschetzMode m);
std::string to_string(Verdict v);
LefschetzMode parse_lefschetz_mode(const std::string& s);

struct LefschetzResult {
  LefschetzMode mode = LefschetzMode::kWeak;
  Verdict verdict = Verdict::kUndeterminedNo;
  bool sphere_shortcut = false;
  std::optional<std::uint64_t> witness_seed;
  GradedReport report;
};

/// Searches the trials for one (Θ, ω) with the required ranks. On certified
/// homology spheres the weak test only looks at the middle map.
/// Throws LsopFailure.
LefschetzResult lefschetz_test(const Complex& c, const FaceRingOptions& opt, LefschetzMode mode);

struct SocleReport {
  int i = 0;
  std::int64_t socle_dim = 0;
  std::optional<Int> bound;  ///< C(d,i) beta_{i-1}, on homology manifolds
  bool bound_holds = true;
};

SocleReport socle_dim(const Complex& c, const FaceRingOptions& opt, int i);

struct SchenzelReport {
  IntSeq hilbert;  ///< degrees 0..d
  IntSeq h_prime;
  IntSeq residual;
  bool holds = false;
};

/// Throws NotAManifold unless c is a homology manifold (closed or with boundary).
SchenzelReport schenzel_check(const Complex& c, const FaceRingOptions& opt);

struct RigidityReport {
  bool dim1_equals_h1 = false;
  bool dim2_equals_h2 = false;
  bool dim3_at_least_h3 = false;
  bool injective_1_to_2 = false;
  IntSeq hilbert;
  IntSeq h;
  bool all() const { return dim1_equals_h1 && dim2_equals_h2 && dim3_at_least_h3 && injective_1_to_2; }
};

/// Throws NotNormalPseudomanifold, or ParamError when d < 4.
RigidityReport rigidity_check(const Complex& c, const FaceRingOptions& opt);

struct G3BoundReport {
  Int g2;
  Int g3;
  Int bound;  ///< g2^<2>
  bool inequality = false;
  bool equality = false;
  bool injective_2_to_3 = false;  ///< only examined in the equality case
  bool holds = false;
};

/// Throws NotNormalPseudomanifold, or ParamError when d < 4.
G3BoundReport g3_upper_bound_check(const Complex& c, const FaceRingOptions& opt);

struct CokernelReport {
  int i = 0;
  std::vector<Vertex> bad_vertices;  ///< links not surjective in degree i-1 → i
  std::int64_t observed = 0;         ///< coker of ·ω: F_i → F_{i+1}
  Int bound;                         ///< degree-(i+1) monomials in |V|-d-1 variables
  bool holds = false;
};

CokernelReport cokernel_bound_check(const Complex& c, const FaceRingOptions& opt, int i);

struct SurjectivityReport {
  MapRank map;  ///< ·ω: F_{d-2} → F_{d-1}
  bool surjective = false;
};

/// Homology manifolds with or without boundary, d >= 4.
/// Throws NotAManifold or ParamError.
SurjectivityReport top_surjectivity_check(const Complex& c, const FaceRingOptions& opt);

}  // namespace gconj
