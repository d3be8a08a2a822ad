#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gconj/complex.hpp"
#include "gconj/face_ring.hpp"
#include "gconj/integer.hpp"

namespace gconj {

/// Replace A ⋆ ∂B by ∂A ⋆ B, with |A| + |B| = d + 1. A 0-move has |B| = 1
/// and B a vertex not yet in the complex.
struct BistellarMove {
  Face A;
  Face B;

  int index() const { return static_cast<int>(B.size()) - 1; }
  friend bool operator==(const BistellarMove&, const BistellarMove&) = default;
};

/// Moves that can change weak Lefschetz behavior: |A| = |B| when d is odd,
/// |A| = d/2 when d is even.
bool is_critical(const BistellarMove& m, int d);

BistellarMove inverse(const BistellarMove& m);

/// Every applicable move, ordered by |A| and then A. 0-moves use the
/// vertex max + 1.
std::vector<BistellarMove> valid_moves(const Complex& c);

bool is_valid_move(const Complex& c, const BistellarMove& m);

/// The vertex bound of the result is its largest vertex id.
/// Throws InvalidMove.
Complex apply_move(const Complex& c, const BistellarMove& m);

struct WalkPolicy {
  std::vector<int> allowed_indices;   ///< empty means every index
  std::vector<int> index_weights;     ///< relative weight per index; empty means uniform over moves
  bool exclude_critical = false;
  int max_vertices = 0;               ///< 0 means unbounded
  bool lefschetz_hook = false;
  LefschetzMode hook_mode = LefschetzMode::kWeak;
  FaceRingOptions hook_options;
};

struct WalkStep {
  int step = 0;
  BistellarMove move;
  bool critical = false;
  IntSeq f;
  std::optional<Verdict> verdict;
};

struct WalkLog {
  std::uint64_t seed = 0;
  WalkPolicy policy;
  Complex start;
  std::vector<WalkStep> steps;
  Complex final;
  bool stalled = false;  ///< stopped early because no move passed the policy
};

WalkLog random_walk(const Complex& start, int steps, std::uint64_t seed, const WalkPolicy& policy);

/// Re-applies the logged moves to the start complex.
Complex replay(const WalkLog& log);

/// lk e = lk u ∩ lk v. Throws NotAFace, or ParamError when |e| != 2.
bool link_condition(const Complex& c, const Face& e);

/// Identifies the larger endpoint with the smaller one.
/// Throws LinkConditionViolated or DegenerateContraction.
Complex contract_edge(const Complex& c, const Face& e);

/// `phi[k]` is the vertex of sigma2 glued to sigma1[k]; empty means the
/// order-preserving bijection. Vertices of c2 outside sigma2 are renumbered
/// after c1's range. Throws NotAFacet or ParamError.
Complex connected_sum(const Complex& c1, const Complex& c2, const Face& sigma1, const Face& sigma2,
                      const std::vector<Vertex>& phi = {});

/// As connected_sum, but the identified facet is kept.
Complex glue_facets(const Complex& c1, const Complex& c2, const Face& sigma1, const Face& sigma2,
                    const std::vector<Vertex>& phi = {});

/// Boundary of the d-simplex followed by n-d-1 random 0-moves.
/// Throws ParamError.
Complex stacked_sphere(int d, int n, std::uint64_t seed);

}  // namespace gconj
