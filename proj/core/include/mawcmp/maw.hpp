#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mawcmp/suffix_array.hpp"
#include "mawcmp/text.hpp"

namespace mawcmp {

/// A minimal absent word `letter . source[i..j]`. The empty interval
/// (i = 0, j = -1) encodes the single letter, used for alphabet letters that
/// do not occur in the source at all.
struct MawTuple {
  Symbol letter = 0;
  Index i = 0;
  Index j = -1;

  [[nodiscard]] std::size_t tail_length() const noexcept { return static_cast<std::size_t>(j - i + 1); }
  [[nodiscard]] std::size_t length() const noexcept { return tail_length() + 1; }

  friend bool operator==(const MawTuple&, const MawTuple&) = default;
};

/// Minimal absent words of `source` over `alphabet`, in tuple form.
struct MawSet {
  std::string source;
  Alphabet alphabet;
  std::vector<MawTuple> tuples;

  [[nodiscard]] std::size_t size() const noexcept { return tuples.size(); }
};

/// All minimal absent words of x whose letters lie in `alphabet`, in O(sigma n)
/// time from one bottom-up pass over the LCP intervals of x. Output order is
/// unspecified. Throws if x is empty or uses a letter outside the alphabet.
MawSet compute_maws(std::string_view x, const Alphabet& alphabet);

/// Spelled-out word of a tuple. Throws on an interval outside the source.
std::string decode(const MawTuple& t, std::string_view source);

/// All decoded words of a set, lexicographically sorted.
std::vector<std::string> decode_sorted(const MawSet& set);

/// One decoded MAW per line, sorted.
std::string dump_maws(const MawSet& set);

}  // namespace mawcmp
