#pragma once

#include <cstddef>
#include <string_view>

#include "mawcmp/lw.hpp"
#include "mawcmp/maw.hpp"

namespace mawcmp {

/// Minimal absent words of the circular word with linearisation x: the MAWs
/// of xx no longer than |x|. Tuples index into the doubled word `maws.source`.
/// The linearisation length is kept because non-primitive words share sets
/// with their roots.
struct CircularMawSet {
  std::size_t linearisation_length = 0;
  MawSet maws;

  [[nodiscard]] std::size_t size() const noexcept { return maws.size(); }
};

CircularMawSet circular_maws(std::string_view x, const Alphabet& alphabet);

/// LW between the circularisations of x and y, over their union alphabet
/// unless `options.alphabet` is set.
LwResult circular_lw(std::string_view x, std::string_view y, const LwOptions& options = {});

}  // namespace mawcmp
