#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace gconj::modp {

using u64 = std::uint64_t;

inline u64 add(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mul(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 power(u64 a, u64 e, u64 p);
inline u64 inverse(u64 a, u64 p) { return power(a, p - 2, p); }

/// Row space of a growing set of vectors in F_p^n, kept in echelon form.
/// Each stored row starts with a 1 in its pivot column and is held sparsely.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t ncols, u64 p);

  /// Subtracts basis rows until no pivot column of `v` is nonzero.
  void reduce(std::vector<u64>& v) const;

  /// Adds `v` to the span; returns true when the rank grew.
  bool insert(std::vector<u64> v);

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t ncols() const noexcept { return pivot_row_.size(); }
  bool full() const noexcept { return rows_.size() == pivot_row_.size(); }
  bool is_pivot(std::size_t col) const noexcept { return pivot_row_[col] >= 0; }
  u64 prime() const noexcept { return p_; }

  using SparseRow = std::vector<std::pair<std::uint32_t, u64>>;
  const std::vector<SparseRow>& rows() const noexcept { return rows_; }

 private:
  u64 p_;
  std::vector<std::int64_t> pivot_row_;
  std::vector<SparseRow> rows_;
};

/// Rank of a dense matrix given by rows.
std::size_t rank(const std::vector<std::vector<u64>>& rows, std::size_t ncols, u64 p);

/// Column of a sparse matrix: (row, value) pairs sorted by row.
using SparseColumn = std::vector<std::pair<std::uint32_t, u64>>;

/// Rank of a sparse matrix given by columns.
std::size_t sparse_rank(std::vector<SparseColumn> cols, u64 p);

}  // namespace gconj::modp
