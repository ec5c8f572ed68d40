#pragma once

// Brute-force reference implementations. Nothing here touches suffix arrays,
// suffix trees or the library's MAW enumeration; everything is quadratic or
// worse and meant for words of at most a few hundred symbols.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mawcmp/text.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using WordSet = std::set<std::string>;

/// MAWs of x over `alphabet` from an explicit trie of all factors of x.
WordSet brute_force_maws(std::string_view x, const mawcmp::Alphabet& alphabet);

/// MAWs of the circular word x: brute-force MAWs of xx no longer than |x|.
WordSet brute_force_circular_maws(std::string_view x, const mawcmp::Alphabet& alphabet);

/// Exact sum of 1/|w|^2 over the symmetric difference, words longer than
/// `cap` excluded.
Rational lw_exact(const WordSet& a, const WordSet& b, std::optional<std::size_t> cap = std::nullopt);
WordSet symmetric_difference(const WordSet& a, const WordSet& b);

/// Largest q <= |x| such that every q-gram of x is a factor of a MAW of x,
/// MAWs taken over the letters of x.
std::size_t brute_force_q(std::string_view x);

/// Whether w is a factor of some word of `maws`.
bool in_factor_closure(const WordSet& maws, std::string_view w);

std::vector<std::size_t> occurrences(std::string_view x, std::string_view w);

/// Shortest unique factor length and shortest unique infix length, by scanning.
std::size_t naive_h(std::string_view x);
std::optional<std::size_t> naive_t(std::string_view x);

/// Statement (2) of the MAW-prefix criterion for the unique factor x[i..j],
/// evaluated over the explicit occurrence list of x[i+1..j].
bool prefix_criterion(std::string_view x, std::size_t i, std::size_t j);

std::vector<std::int32_t> naive_suffix_array(std::string_view x);
std::size_t naive_lce(std::string_view x, std::size_t p, std::size_t q);

/// All words of length `len` over `letters`, in lexicographic order.
std::vector<std::string> all_words(std::string_view letters, std::size_t len);

std::string random_word(std::mt19937_64& rng, std::string_view letters, std::size_t len);

}  // namespace oracle
