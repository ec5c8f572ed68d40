#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace mawcmp {

inline constexpr std::string_view kDefaultLetters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

/// Parameters of the many-MAW family over sigma letters:
/// k = floor(n / (sigma - 1)) - 1 and m = n - (sigma - 1)(k + 1).
struct FamilyParams {
  std::size_t n = 0;
  std::size_t sigma = 0;
  std::size_t k = 0;
  std::size_t m = 0;

  static FamilyParams make(std::size_t n, std::size_t sigma);
};

/// a2 a1^(n-2) a2, with a1, a2 the first two letters of `letters`. n >= 3.
std::string binary_extremal(std::size_t n, std::string_view letters = kDefaultLetters);

/// a2 a1^k a3 a1^k ... a_sigma a1^k a1^m, of length exactly n; 3 <= sigma <= n.
std::string multiletter_extremal(std::size_t n, std::size_t sigma, std::string_view letters = kDefaultLetters);

/// Lower bound on the MAW count of multiletter_extremal(n, sigma).
std::size_t multiletter_maw_lower_bound(std::size_t n, std::size_t sigma);

}  // namespace mawcmp
