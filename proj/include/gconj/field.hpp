#pragma once

#include <cstdint>

namespace gconj {

/// Prime field F_p. The default large prime stands in for characteristic
/// zero; small primes expose characteristic-dependent behavior.
struct FieldSpec {
  static constexpr std::uint64_t kDefaultPrime = 2147483647ULL;
  std::uint64_t p = kDefaultPrime;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Checks p is a prime below 2^32 (products must fit in 64 bits).
/// Throws ParamError.
FieldSpec make_field(std::uint64_t p);

}  // namespace gconj
