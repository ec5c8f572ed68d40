#include "mawcmp/circular.hpp"

#include <algorithm>
#include <string>

namespace mawcmp {

CircularMawSet circular_maws(std::string_view x, const Alphabet& alphabet) {
  if (x.empty()) throw Error("circular MAWs of an empty word");
  std::string doubled;
  doubled.reserve(2 * x.size());
  doubled.append(x);
  doubled.append(x);

  CircularMawSet out;
  out.linearisation_length = x.size();
  out.maws = compute_maws(doubled, alphabet);
  auto& tuples = out.maws.tuples;
  tuples.erase(std::remove_if(tuples.begin(), tuples.end(),
                              [&](const MawTuple& t) { return t.length() > x.size(); }),
               tuples.end());
  return out;
}

LwResult circular_lw(std::string_view x, std::string_view y, const LwOptions& options) {
  if (x.empty() || y.empty()) throw Error("LW of an empty word");
  const Alphabet sigma = options.alphabet ? *options.alphabet : infer_alphabet({x, y});
  return lw_between(circular_maws(x, sigma).maws, circular_maws(y, sigma).maws, options);
}

}  // namespace mawcmp
