#include "mawcmp/maw.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

namespace mawcmp {

namespace {

struct LetterMask {
  std::array<std::uint64_t, 4> words{};

  void set(Symbol c) noexcept { words[c >> 6] |= std::uint64_t{1} << (c & 63); }
  LetterMask& operator|=(const LetterMask& o) noexcept {
    for (std::size_t k = 0; k < 4; ++k) words[k] |= o.words[k];
    return *this;
  }

  template <typename F>
  void for_each_not_in(const LetterMask& excluded, F&& f) const {
    for (std::size_t k = 0; k < 4; ++k) {
      std::uint64_t w = words[k] & ~excluded.words[k];
      while (w != 0) {
        f(static_cast<Symbol>(k * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }
};

// A closed child of an LCP interval: the letter following the interval's
// label (or -1 when the occurrence ends the text), the set of letters that
// precede occurrences inside the child, and one occurrence start.
struct Child {
  int letter;
  LetterMask left;
  Index rep;
};

struct OpenInterval {
  Index depth;
  std::size_t first_child;
  LetterMask left;
};

}  // namespace

MawSet compute_maws(std::string_view x, const Alphabet& alphabet) {
  if (x.empty()) throw Error("MAWs of an empty word");
  check_over(x, alphabet);

  MawSet out;
  out.source = std::string(x);
  out.alphabet = alphabet;

  const auto n = static_cast<Index>(x.size());
  const auto sa = build_suffix_array(x);
  const auto lcp = build_lcp_array(x, sa);
  auto at = [&](Index p) { return static_cast<Symbol>(x[static_cast<std::size_t>(p)]); };

  // For a right-maximal u with children b and left-letter sets L(u), L(ub),
  // the MAWs a.u.b are exactly a in L(u) \ L(ub).
  std::vector<Child> children;
  std::vector<OpenInterval> stack{{0, 0, {}}};

  auto add_child = [&](OpenInterval& top, const LetterMask& left, Index rep) {
    const Index p = rep + top.depth;
    children.push_back(Child{p < n ? static_cast<int>(at(p)) : -1, left, rep});
    top.left |= left;
  };
  auto close = [&](OpenInterval& top) {
    if (top.depth == 0) top.left.set(at(n - 1));  // empty word at the end of x
    for (std::size_t k = top.first_child; k < children.size(); ++k) {
      const Child& c = children[k];
      if (c.letter < 0) continue;
      top.left.for_each_not_in(c.left, [&](Symbol a) {
        out.tuples.push_back(MawTuple{a, c.rep, c.rep + top.depth});
      });
    }
    children.resize(top.first_child);
  };

  for (Index r = 1; r <= n; ++r) {
    const Index pos = sa[r - 1];
    LetterMask carry_left;
    if (pos > 0) carry_left.set(at(pos - 1));
    Index carry_rep = pos;
    const Index h = r < n ? lcp[r] : 0;

    while (stack.back().depth > h) {
      OpenInterval top = stack.back();
      stack.pop_back();
      add_child(top, carry_left, carry_rep);
      close(top);
      carry_left = top.left;
    }
    if (stack.back().depth < h) stack.push_back(OpenInterval{h, children.size(), {}});
    add_child(stack.back(), carry_left, carry_rep);
  }
  close(stack.back());

  for (Symbol a : alphabet.letters()) {
    if (x.find(static_cast<char>(a)) == std::string_view::npos) out.tuples.push_back(MawTuple{a, 0, -1});
  }
  return out;
}

std::string decode(const MawTuple& t, std::string_view source) {
  std::string w(1, static_cast<char>(t.letter));
  if (t.j == -1 && t.i == 0) return w;
  if (t.i < 0 || t.j < t.i || static_cast<std::size_t>(t.j) >= source.size())
    throw Error("malformed MAW interval");
  w.append(source.substr(static_cast<std::size_t>(t.i), t.tail_length()));
  return w;
}

std::vector<std::string> decode_sorted(const MawSet& set) {
  std::vector<std::string> words;
  words.reserve(set.size());
  for (const auto& t : set.tuples) words.push_back(decode(t, set.source));
  std::sort(words.begin(), words.end());
  return words;
}

std::string dump_maws(const MawSet& set) {
  std::string out;
  for (const auto& w : decode_sorted(set)) {
    out += w;
    out += '\n';
  }
  return out;
}

}  // namespace mawcmp
