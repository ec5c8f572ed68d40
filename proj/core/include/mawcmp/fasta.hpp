#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "mawcmp/text.hpp"

namespace mawcmp {

/// Reads MultiFASTA records. The label is the header up to the first
/// whitespace; sequence lines are concatenated with surrounding whitespace
/// stripped; blank lines are ignored. Throws on an input with no records, a
/// record with no sequence, or content before the first header.
std::vector<Sequence> parse_multifasta(std::istream& in);
std::vector<Sequence> parse_multifasta(const std::filesystem::path& path);

/// Writes one record per sequence, wrapping sequence lines at `width`
/// symbols (0 disables wrapping).
void write_multifasta(std::ostream& out, std::span<const Sequence> seqs, std::size_t width = 70);

}  // namespace mawcmp
