#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mawcmp/suffix_tree.hpp"
#include "mawcmp/text.hpp"

namespace mawcmp {

using Interval = std::pair<std::size_t, std::size_t>;

/// Unique factors of x as read off the suffix tree: the shortest unique
/// factor starting at leaf i has length D(parent(leaf_i)) + 1.
struct UniqueFactorCatalog {
  std::size_t h = 0;                   ///< shortest factor occurring once
  std::optional<std::size_t> t;        ///< shortest infix occurring once
  std::vector<Interval> infixes_t;     ///< unique infixes of length t
  std::vector<Interval> infixes_t1;    ///< unique infixes of length t + 1
  std::size_t shortest_unique_prefix = 0;
  std::size_t shortest_unique_suffix = 0;
};

/// Suffix trees of a word and of its reverse, with the annotations the
/// q-gram routines query.
class QgramIndex {
 public:
  explicit QgramIndex(std::string_view x);

  [[nodiscard]] std::string_view text() const noexcept { return forward_.text(); }
  [[nodiscard]] std::size_t size() const noexcept { return forward_.text_size(); }
  [[nodiscard]] const SuffixTree& forward() const noexcept { return forward_; }
  [[nodiscard]] const SuffixTree& backward() const noexcept { return backward_; }

 private:
  SuffixTree forward_;
  SuffixTree backward_;
};

/// Requires |x| >= 2.
UniqueFactorCatalog unique_factor_catalog(const QgramIndex& index);

/// Whether the unique factor x[i..j] is a factor of some MAW of x. Single
/// letters always are; longer ones are checked as a MAW prefix on the tree of
/// x and as a MAW suffix on the tree of rev(x).
bool test_factor(const QgramIndex& index, std::size_t i, std::size_t j);

std::size_t infix_bound(const QgramIndex& index, const UniqueFactorCatalog& catalog);
std::size_t prefix_bound(const QgramIndex& index, const UniqueFactorCatalog& catalog, std::size_t q);
std::size_t suffix_bound(const QgramIndex& index, const UniqueFactorCatalog& catalog, std::size_t q);

struct QgramReport {
  std::size_t q = 0;
  std::size_t h = 0;
  std::optional<std::size_t> t;
};

/// Largest q such that every q-gram of x is a factor of some MAW of x, taken
/// over the letters of x. Throws for |x| < 2.
std::size_t compute_q(std::string_view x);
/// Same value: letters of `alphabet` absent from x only add single-letter
/// MAWs, which contain no q-gram of x. Throws if x leaves the alphabet.
std::size_t compute_q(std::string_view x, const Alphabet& alphabet);
QgramReport qgram_report(std::string_view x);

}  // namespace mawcmp
