#include "mawcmp/lw.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace mawcmp {

std::vector<RankedMaw> sort_maws(const MawSet& set, const SuffixArrayBundle& bundle, std::size_t offset) {
  if (offset + set.source.size() > bundle.size()) throw Error("MAW source does not fit the bundle");
  const auto isa = bundle.isa();
  const std::size_t buckets = bundle.size() + 1;

  std::vector<RankedMaw> ranked;
  ranked.reserve(set.size());
  for (const auto& t : set.tuples) {
    RankedMaw r{.tuple = t, .length = static_cast<Index>(t.length())};
    if (t.j >= t.i) {
      r.start = static_cast<Index>(offset) + t.i;
      r.rank = isa[static_cast<std::size_t>(r.start)];
    }
    ranked.push_back(r);
  }

  // Pass 1: by rank, single-letter tuples (rank -1) first.
  std::vector<std::size_t> count(buckets + 1, 0);
  for (const auto& r : ranked) ++count[static_cast<std::size_t>(r.rank + 1) + 1];
  for (std::size_t k = 1; k < count.size(); ++k) count[k] += count[k - 1];
  std::vector<RankedMaw> by_rank(ranked.size());
  for (const auto& r : ranked) by_rank[count[static_cast<std::size_t>(r.rank + 1)]++] = r;

  // Pass 2: stable by first letter.
  std::array<std::size_t, 257> letter_count{};
  for (const auto& r : by_rank) ++letter_count[static_cast<std::size_t>(r.tuple.letter) + 1];
  for (std::size_t k = 1; k < letter_count.size(); ++k) letter_count[k] += letter_count[k - 1];
  for (const auto& r : by_rank) ranked[letter_count[r.tuple.letter]++] = r;
  return ranked;
}

int compare_ranked(const RankedMaw& a, const RankedMaw& b, const SuffixArrayBundle& bundle) noexcept {
  if (a.tuple.letter != b.tuple.letter) return a.tuple.letter < b.tuple.letter ? -1 : 1;
  const auto la = static_cast<std::size_t>(a.length - 1);
  const auto lb = static_cast<std::size_t>(b.length - 1);
  const std::size_t shorter = std::min(la, lb);
  if (shorter > 0) {
    const auto pa = static_cast<std::size_t>(a.start);
    const auto pb = static_cast<std::size_t>(b.start);
    const std::size_t common = bundle.lce_unchecked(pa, pb);
    if (common < shorter) {
      const auto ca = static_cast<Symbol>(bundle.text()[pa + common]);
      const auto cb = static_cast<Symbol>(bundle.text()[pb + common]);
      return ca < cb ? -1 : 1;
    }
  }
  if (la == lb) return 0;
  return la < lb ? -1 : 1;
}

namespace {

std::string spell(const RankedMaw& r, const SuffixArrayBundle& bundle) {
  std::string w(1, static_cast<char>(r.tuple.letter));
  if (r.length > 1) w.append(bundle.text().substr(static_cast<std::size_t>(r.start), static_cast<std::size_t>(r.length - 1)));
  return w;
}

}  // namespace

LwResult lw_merge(const std::vector<RankedMaw>& sx, const std::vector<RankedMaw>& sy, const SuffixArrayBundle& bundle,
                  const LwOptions& options) {
  const auto cap = static_cast<Index>(options.max_length.value_or(std::numeric_limits<Index>::max()));
  LwResult result;

  auto take = [&](const RankedMaw& r) {
    const double len = r.length;
    result.value += 1.0 / (len * len);
    ++result.symdiff_size;
    if (options.list_symdiff) result.symdiff.push_back(spell(r, bundle));
  };
  auto check_order = [&](const std::vector<RankedMaw>& s, std::size_t k) {
    if (k > 0 && compare_ranked(s[k - 1], s[k], bundle) >= 0) throw Error("MAW list is not sorted");
  };
  // Advances k past entries longer than the cap, validating order on the way.
  auto skip = [&](const std::vector<RankedMaw>& s, std::size_t& k) {
    while (k < s.size() && s[k].length > cap) {
      ++k;
      if (k < s.size()) check_order(s, k);
    }
  };

  std::size_t i = 0;
  std::size_t j = 0;
  skip(sx, i);
  skip(sy, j);
  while (i < sx.size() && j < sy.size()) {
    const int c = compare_ranked(sx[i], sy[j], bundle);
    if (c < 0) {
      take(sx[i]);
      if (++i < sx.size()) check_order(sx, i);
    } else if (c > 0) {
      take(sy[j]);
      if (++j < sy.size()) check_order(sy, j);
    } else {
      if (++i < sx.size()) check_order(sx, i);
      if (++j < sy.size()) check_order(sy, j);
    }
    skip(sx, i);
    skip(sy, j);
  }
  for (; i < sx.size(); ++i) {
    check_order(sx, i);
    if (sx[i].length <= cap) take(sx[i]);
  }
  for (; j < sy.size(); ++j) {
    check_order(sy, j);
    if (sy[j].length <= cap) take(sy[j]);
  }
  return result;
}

LwResult lw_between(const MawSet& mx, const MawSet& my, const LwOptions& options) {
  const SuffixArrayBundle bundle(mx.source + my.source);
  const auto sx = sort_maws(mx, bundle, 0);
  const auto sy = sort_maws(my, bundle, mx.source.size());
  return lw_merge(sx, sy, bundle, options);
}

LwResult lw_distance(std::string_view x, std::string_view y, const LwOptions& options) {
  if (x.empty() || y.empty()) throw Error("LW of an empty word");
  const Alphabet sigma = options.alphabet ? *options.alphabet : infer_alphabet({x, y});
  return lw_between(compute_maws(x, sigma), compute_maws(y, sigma), options);
}

}  // namespace mawcmp
