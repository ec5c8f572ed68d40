#include "mawcmp/text.hpp"

#include <algorithm>

namespace mawcmp {

Alphabet::Alphabet(std::string_view letters) {
  for (char c : letters) present_[static_cast<Symbol>(c)] = true;
  for (int c = 0; c < 256; ++c)
    if (present_[c]) letters_.push_back(static_cast<char>(c));
  if (letters_.empty()) throw Error("empty alphabet");
}

Alphabet Alphabet::merged(const Alphabet& other) const {
  return Alphabet(letters_ + other.letters_);
}

Alphabet infer_alphabet(std::span<const Sequence> seqs) {
  std::string all;
  for (const auto& s : seqs) all += s.data;
  return Alphabet(all);
}

Alphabet infer_alphabet(std::initializer_list<std::string_view> words) {
  std::string all;
  for (auto w : words) all += w;
  return Alphabet(all);
}

void check_over(std::string_view x, const Alphabet& alphabet) {
  for (char c : x) {
    if (!alphabet.contains(static_cast<Symbol>(c)))
      throw Error(std::string("symbol '") + c + "' is not in the alphabet");
  }
}

Sequence reverse(const Sequence& x) {
  Sequence r = x;
  std::reverse(r.data.begin(), r.data.end());
  return r;
}

Sequence rotate(const Sequence& x, std::size_t i) {
  if (i >= x.size()) throw Error("rotation index out of range");
  Sequence r;
  r.label = x.label;
  r.data.reserve(x.size());
  r.data.append(x.data, i);
  r.data.append(x.data, 0, i);
  return r;
}

}  // namespace mawcmp
