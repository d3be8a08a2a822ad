#include "gconj/modular.hpp"

#include <unordered_map>

namespace gconj::modp {

u64 power(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

EchelonBasis::EchelonBasis(std::size_t ncols, u64 p) : p_(p), pivot_row_(ncols, -1) {}

void EchelonBasis::reduce(std::vector<u64>& v) const {
  if (rows_.empty()) return;
  const std::size_t n = v.size();
  for (std::size_t c = 0; c < n; ++c) {
    const u64 f = v[c];
    if (f == 0) continue;
    const std::int64_t r = pivot_row_[c];
    if (r < 0) continue;
    const u64 neg = p_ - f;
    for (const auto& [j, val] : rows_[static_cast<std::size_t>(r)]) {
      v[j] = (v[j] + neg * val) % p_;
    }
  }
}

bool EchelonBasis::insert(std::vector<u64> v) {
  if (full()) return false;
  reduce(v);
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) return false;
  const u64 inv = inverse(v[lead], p_);
  std::vector<std::pair<std::uint32_t, u64>> row;
  for (std::size_t j = lead; j < v.size(); ++j) {
    if (v[j]) row.emplace_back(static_cast<std::uint32_t>(j), mul(v[j], inv, p_));
  }
  pivot_row_[lead] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

std::size_t rank(const std::vector<std::vector<u64>>& rows, std::size_t ncols, u64 p) {
  EchelonBasis basis(ncols, p);
  for (const auto& r : rows) {
    basis.insert(r);
    if (basis.full()) break;
  }
  return basis.rank();
}

std::size_t sparse_rank(std::vector<SparseColumn> cols, u64 p) {
  // Column reduction keyed on the lowest nonzero row.
  std::unordered_map<std::uint32_t, std::size_t> pivot_of;
  std::size_t r = 0;
  SparseColumn scratch;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    SparseColumn& col = cols[k];
    while (!col.empty()) {
      const auto it = pivot_of.find(col.back().first);
      if (it == pivot_of.end()) break;
      const SparseColumn& piv = cols[it->second];
      const u64 factor = mul(col.back().second, inverse(piv.back().second, p), p);
      const u64 neg = p - factor;
      scratch.clear();
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < piv.size()) {
        if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
          scratch.push_back(col[a++]);
        } else if (a == col.size() || piv[b].first < col[a].first) {
          scratch.emplace_back(piv[b].first, mul(piv[b].second, neg, p));
          ++b;
        } else {
          const u64 val = add(col[a].second, mul(piv[b].second, neg, p), p);
          if (val) scratch.emplace_back(col[a].first, val);
          ++a;
          ++b;
        }
      }
      col.swap(scratch);
    }
    if (!col.empty()) {
      pivot_of.emplace(col.back().first, k);
      ++r;
    }
  }
  return r;
}

}  // namespace gconj::modp
