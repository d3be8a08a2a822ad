#include "gconj/field.hpp"

#include <string>

#include "gconj/errors.hpp"

namespace gconj {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

FieldSpec make_field(std::uint64_t p) {
  if (p >= (1ULL << 32) || !is_prime(p)) {
    throw ParamError("field characteristic " + std::to_string(p) + " is not a prime below 2^32");
  }
  return FieldSpec{p};
}

}  // namespace gconj
