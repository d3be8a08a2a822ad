#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gconj {

/// Exact integer used for every face-number computation.
using Int = boost::multiprecision::cpp_int;

/// Length-indexed integer sequence (f-, h-, g-, Betti vectors).
using IntSeq = std::vector<Int>;

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n. Served from a
/// shared Pascal triangle that grows on demand.
Int binomial(std::int64_t n, std::int64_t k);

/// Same value as `binomial`, for callers that know it fits in 64 bits.
std::int64_t binomial64(std::int64_t n, std::int64_t k);

IntSeq to_intseq(const std::vector<std::int64_t>& v);

/// Converts when every entry fits; throws std::overflow_error otherwise.
std::vector<std::int64_t> to_int64(const IntSeq& v);

std::string to_string(const IntSeq& v);

inline Int sign_power(std::int64_t e) { return (e % 2 == 0) ? Int(1) : Int(-1); }

}  // namespace gconj
