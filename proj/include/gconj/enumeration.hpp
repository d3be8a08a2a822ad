#pragma once

#include <optional>

#include "gconj/complex.hpp"
#include "gconj/field.hpp"
#include "gconj/integer.hpp"

namespace gconj {

/// (f_{-1}, f_0, ..., f_{d-1}) of a pure complex, f_{-1} = 1.
IntSeq f_vector(const Complex& c);

/// h_i = sum_j (-1)^{i-j} C(d-j, d-i) f_{j-1}. Both vectors have length
/// d+1. Throws LengthError.
IntSeq h_from_f(const IntSeq& f, int d);
IntSeq f_from_h(const IntSeq& h, int d);

IntSeq h_vector(const Complex& c);

/// (g_0, ..., g_{floor(d/2)}) with g_i = h_i - h_{i-1}.
IntSeq g_vector(const Complex& c);

/// g_i = h_i - h_{i-1} for every 0 <= i <= d+1 (h taken as zero outside
/// 0..d). Used where the identities reach past the middle degree.
IntSeq g_vector_full(const IntSeq& h);

/// Macaulay pseudo-power a^<i> (0^<i> = 0).
Int pseudo_power(const Int& a, int i);

/// The i-binomial expansion of a: pairs (a_k, k), k descending from i.
std::vector<std::pair<Int, int>> macaulay_expansion(const Int& a, int i);

struct MVectorVerdict {
  bool ok = true;
  /// 0 when seq_0 != 1, k for a negative entry seq_k, and i when
  /// seq_{i+1} > seq_i^<i>. The first failure along the sequence wins.
  std::optional<int> failure_index;
};

/// seq_0 = 1, all entries nonnegative, seq_{i+1} <= seq_i^<i> for i >= 1.
MVectorVerdict is_m_vector(const IntSeq& seq);

/// Unreduced Euler characteristic sum_{i >= 0} (-1)^i f_i.
Int euler_characteristic(const Complex& c);
inline Int reduced_euler_characteristic(const Complex& c) { return euler_characteristic(c) - 1; }

/// chi(S^{k}) = 1 + (-1)^k (zero for the empty sphere S^{-1}).
Int sphere_euler_characteristic(int k);

/// h_{d-i} - h_i - (-1)^i C(d,i) (chi - chi(S^{d-1})) for 0 <= i <= d.
/// chi is combinatorial, so no field is involved.
IntSeq klee_residual(const Complex& c);

/// Betti-corrected vectors of a closed homology manifold.
struct ManifoldProfile {
  int d = 0;
  IntSeq h;
  IntSeq betti;  ///< reduced beta_0 .. beta_{d-1}
  IntSeq h_prime;
  IntSeq h_doubleprime;
  IntSeq g;      ///< g_0 .. g_{floor(d/2)}
  IntSeq g_hat;
  IntSeq g_bar;  ///< h''_{d-i} - h'_{d-i+1}
  /// Right side of the closed formula for g_bar (index 0 is not covered by
  /// that formula and mirrors g_bar_0).
  IntSeq g_bar_formula;
  bool orientable = false;
  bool kalai_symmetric = false;   ///< h''_i == h''_{d-i} for all i
  bool g_hat_equals_g_bar = false;
  bool g_bar_formula_holds = false;  ///< g_bar_i matches the formula for 1 <= i <= d/2
};

/// Pure arithmetic from (h, betti, d); `orientable` is taken as given.
ManifoldProfile manifold_profile_from(const IntSeq& h, const IntSeq& betti, int d, bool orientable);

/// h'_i = h_i + C(d,i) sum_{j=0}^{i-2} (-1)^{j-i} beta_j.
IntSeq h_prime(const IntSeq& h, const IntSeq& betti, int d);

struct ShortSimplicialG {
  IntSeq g_tilde;  ///< sum over vertices of g_i(lk v), 0 <= i <= d
  Int lhs;         ///< g~_2
  Int rhs;         ///< 3 g_3 + (d-1) g_2
  bool identity_holds = false;
};

ShortSimplicialG short_simplicial_g(const Complex& c);

/// h of the complex obtained by identifying one facet of c1 with one facet
/// of c2 (facet kept): h1 + h2 - (1, 0, ..., 0).
IntSeq facet_gluing_h(const IntSeq& h1, const IntSeq& h2);

/// g_i(c1 # c2) predicted from the summands: 1 at i = 0, g1 + g2 + 1 at
/// i = 1 (the vertices of the glued facet are counted once), g1 + g2 above.
IntSeq connected_sum_g(const IntSeq& g1, const IntSeq& g2);

/// Profile of a closed F-homology manifold; Betti numbers and orientability
/// come from the homology module. Throws NotAManifold.
ManifoldProfile manifold_profile(const Complex& c, FieldSpec field);

struct GammaReport {
  Int gamma;               ///< h_2 - #interior vertices
  Int gamma_from_h;        ///< h_2 - h_{d-1} - d h_d
  std::int64_t interior_vertices = 0;
  bool agree = false;
};

/// Throws NotAManifoldWithBoundary unless c is an F-homology manifold with
/// nonempty boundary.
GammaReport gamma(const Complex& c, FieldSpec field);

}  // namespace gconj
