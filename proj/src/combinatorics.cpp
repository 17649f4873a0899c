#include "evalcode/combinatorics.hpp"

#include <string>

#include "evalcode/error.hpp"

namespace evalcode {

std::uint64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - r + i) / static_cast<unsigned __int128>(i);
    if (acc > UINT64_MAX) {
      throw Error(ErrorCode::too_large,
                  "binomial C(" + std::to_string(n) + "," + std::to_string(r) + ") overflows");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t monomial_count(std::int64_t k, std::int64_t a) {
  if (a < 0 || k < 0) return 0;
  if (k == 0) return a == 0 ? 1 : 0;
  return binomial(a + k - 1, k - 1);
}

}  // namespace evalcode
