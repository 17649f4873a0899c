#pragma once

#include <cstdint>

namespace evalcode {

// C(n, r) in 64 bits; throws TooLarge on overflow. Returns 0 when r < 0 or r > n.
std::uint64_t binomial(std::int64_t n, std::int64_t r);

// Number of degree-a monomials in k variables, C(a+k-1, k-1); 1 for k = 0, a = 0.
std::uint64_t monomial_count(std::int64_t k, std::int64_t a);

}  // namespace evalcode
