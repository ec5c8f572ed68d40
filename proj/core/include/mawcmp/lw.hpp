#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mawcmp/maw.hpp"
#include "mawcmp/suffix_array.hpp"

namespace mawcmp {

/// A MAW tuple placed in a concatenated text: `start` is the tail start
/// shifted by the source offset, `rank` the suffix-array rank of that start
/// (-1 for a single-letter MAW).
struct RankedMaw {
  MawTuple tuple;
  Index start = 0;
  Index rank = -1;
  Index length = 1;
};

struct LwResult {
  double value = 0.0;
  std::size_t symdiff_size = 0;
  /// Decoded symmetric difference in lexicographic order, when requested.
  std::vector<std::string> symdiff;
};

struct LwOptions {
  /// Only MAWs of length at most this many symbols take part (LW_l).
  std::optional<std::size_t> max_length;
  /// Alphabet for the MAW sets; defaults to the union of both operands.
  std::optional<Alphabet> alphabet;
  bool list_symdiff = false;
};

/// Orders the tuples of `set` lexicographically by their decoded words using
/// two counting passes (suffix rank, then first letter). `bundle` is built
/// over a text that contains `set.source` at `offset`.
std::vector<RankedMaw> sort_maws(const MawSet& set, const SuffixArrayBundle& bundle, std::size_t offset);

/// Three-way lexicographic comparison of two ranked MAWs via LCE on the
/// shared bundle; a proper prefix orders first.
int compare_ranked(const RankedMaw& a, const RankedMaw& b, const SuffixArrayBundle& bundle) noexcept;

/// Linear merge of two sorted lists accumulating 1/|w|^2 over the symmetric
/// difference. Throws if either list is not strictly increasing.
LwResult lw_merge(const std::vector<RankedMaw>& sx, const std::vector<RankedMaw>& sy,
                  const SuffixArrayBundle& bundle, const LwOptions& options = {});

/// LW between two precomputed MAW sets; the bundle is built over the
/// concatenation of their sources.
LwResult lw_between(const MawSet& mx, const MawSet& my, const LwOptions& options = {});

/// LW(x, y) over the union alphabet of x and y (or `options.alphabet`).
LwResult lw_distance(std::string_view x, std::string_view y, const LwOptions& options = {});

}  // namespace mawcmp
