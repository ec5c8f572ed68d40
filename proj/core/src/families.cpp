#include "mawcmp/families.hpp"

#include <set>

#include "mawcmp/text.hpp"

namespace mawcmp {

namespace {

void check_letters(std::string_view letters, std::size_t sigma) {
  if (letters.size() < sigma) throw Error("not enough letters for the requested alphabet size");
  if (std::set<char>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(sigma)).size() != sigma)
    throw Error("family letters must be distinct");
}

}  // namespace

FamilyParams FamilyParams::make(std::size_t n, std::size_t sigma) {
  if (sigma < 2 || sigma > n) throw Error("family parameters need 2 <= sigma <= n");
  FamilyParams p{.n = n, .sigma = sigma};
  p.k = n / (sigma - 1) - 1;
  p.m = n - (sigma - 1) * (p.k + 1);
  return p;
}

std::string binary_extremal(std::size_t n, std::string_view letters) {
  if (n < 3) throw Error("binary extremal word needs n >= 3");
  check_letters(letters, 2);
  std::string w(n, letters[0]);
  w.front() = letters[1];
  w.back() = letters[1];
  return w;
}

std::string multiletter_extremal(std::size_t n, std::size_t sigma, std::string_view letters) {
  if (sigma < 3) throw Error("multi-letter extremal word needs sigma >= 3");
  const auto p = FamilyParams::make(n, sigma);
  check_letters(letters, sigma);
  std::string w;
  w.reserve(n);
  for (std::size_t i = 1; i < sigma; ++i) {
    w.push_back(letters[i]);
    w.append(p.k, letters[0]);
  }
  w.append(p.m, letters[0]);
  return w;
}

std::size_t multiletter_maw_lower_bound(std::size_t n, std::size_t sigma) {
  return (sigma - 1) * (sigma - 2) * (n / (sigma - 1)) - (sigma - 2);
}

}  // namespace mawcmp
