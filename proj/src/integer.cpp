#include "gconj/integer.hpp"

#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace gconj {

namespace {

std::mutex pascal_mutex;
std::vector<std::vector<Int>> pascal_rows{{Int(1)}};

}  // namespace

Int binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return Int(0);
  std::lock_guard<std::mutex> lock(pascal_mutex);
  while (static_cast<std::int64_t>(pascal_rows.size()) <= n) {
    const auto& prev = pascal_rows.back();
    std::vector<Int> row(prev.size() + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    pascal_rows.push_back(std::move(row));
  }
  return pascal_rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::int64_t binomial64(std::int64_t n, std::int64_t k) {
  const Int b = binomial(n, k);
  if (b > Int(std::numeric_limits<std::int64_t>::max())) {
    throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return b.convert_to<std::int64_t>();
}

IntSeq to_intseq(const std::vector<std::int64_t>& v) {
  IntSeq out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

std::vector<std::int64_t> to_int64(const IntSeq& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x > Int(std::numeric_limits<std::int64_t>::max()) ||
        x < Int(std::numeric_limits<std::int64_t>::min())) {
      throw std::overflow_error("integer does not fit in 64 bits");
    }
    out.push_back(x.convert_to<std::int64_t>());
  }
  return out;
}

std::string to_string(const IntSeq& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace gconj
