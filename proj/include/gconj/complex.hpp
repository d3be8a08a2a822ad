#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gconj {

using Vertex = std::int32_t;

/// Sorted, duplicate-free vertex list. The empty face is the empty vector.
using Face = std::vector<Vertex>;

/// A finite simplicial complex stored by its inclusion-maximal faces.
///
/// Facets are sorted ascending and kept in lexicographic order, so two
/// complexes compare equal exactly when their canonical forms agree. The
/// vertex set is the union of the facets; `n_vertices()` is only the upper
/// bound of the id range [1, n].
///
/// Two degenerate values exist: the void complex (no faces at all) and the
/// complex {∅} whose only face is the empty face (dimension -1). The latter
/// is the link of a facet.
class Complex {
 public:
  Complex() = default;

  /// Canonical pure complex from raw facets; see from_facets below.
  static Complex pure(int n, std::vector<Face> raw);

  /// Complex generated by arbitrary faces. Dominated faces are dropped, or
  /// rejected with DominatedFacet when `strict`. Purity is not required.
  static Complex general(int n, std::vector<Face> raw, bool strict = false);

  /// The complex {∅}.
  static Complex empty_face();

  int n_vertices() const noexcept { return n_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }

  /// Dimension of the largest facet; -1 for {∅}, -2 for the void complex.
  int dim() const noexcept { return dim_; }

  /// Facet cardinality d (= dim + 1) of a pure complex.
  int d() const noexcept { return dim_ + 1; }

  bool is_pure() const noexcept { return pure_; }
  bool is_void() const noexcept { return facets_.empty(); }

  /// Vertices actually used by some facet, ascending.
  std::vector<Vertex> vertices() const;

  bool contains(const Face& face) const;
  bool is_facet(const Face& face) const;

  /// Facets containing `face`.
  std::vector<Face> star_facets(const Face& face) const;

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

 private:
  Complex(int n, std::vector<Face> facets);

  int n_ = 0;
  std::vector<Face> facets_;
  int dim_ = -2;
  bool pure_ = true;
};

/// A complex on a dense vertex range together with the map back to the
/// original ids: `original[k - 1]` is the old id of new vertex k.
struct Relabeled {
  Complex complex;
  std::vector<Vertex> original;
};

/// Validated canonical pure complex.
/// Throws VertexRange, PurityError or ParamError.
Complex from_facets(int n, const std::vector<Face>& raw_facets);

bool is_subset(const Face& a, const Face& b);
Face face_union(const Face& a, const Face& b);
Face face_difference(const Face& a, const Face& b);

/// All k-faces (k = -1 yields the empty face). Throws RangeError.
std::vector<Face> faces_of_dim(const Complex& c, int k);

/// Every face including ∅, grouped by dimension: result[k + 1] are the k-faces.
std::vector<std::vector<Face>> all_faces(const Complex& c);

/// Link of a face, relabeled to 1..m. Throws NotAFace.
Relabeled link(const Complex& c, const Face& sigma);

/// Link of a face keeping the ambient vertex ids.
Complex link_in_place(const Complex& c, const Face& sigma);

/// Complex generated by the facets containing `sigma`. Throws NotAFace.
Complex closed_star(const Complex& c, const Face& sigma);

/// Join; the vertices of `b` are shifted by a.n_vertices().
Complex join(const Complex& a, const Complex& b);
Complex cone(const Complex& c);
Complex suspension(const Complex& c);

/// Faces of c inside W, as a general (possibly non-pure) complex, relabeled.
/// Throws VertexRange.
Relabeled induced_subcomplex(const Complex& c, const std::vector<Vertex>& w);
Complex induced_subcomplex_in_place(const Complex& c, const std::vector<Vertex>& w);

/// k-skeleton of a pure complex (facets = the k-faces). Throws RangeError.
Complex skeleton(const Complex& c, int k);

/// d-subsets whose boundary lies in c but which are not faces.
std::vector<Face> missing_facets(const Complex& c);

/// Drops unused vertex ids and renumbers to 1..f0.
Relabeled compact(const Complex& c);

/// Connected components of the 1-skeleton (number of them; 0 for {∅}).
int connected_components(const Complex& c);

std::string to_string(const Face& f);

}  // namespace gconj
