#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mawcmp {

/// Raised for every contract violation in the library (bad ranges, empty
/// inputs, letters outside an alphabet, malformed files).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Symbol = unsigned char;

/// Ordered set of distinct byte symbols.
class Alphabet {
 public:
  Alphabet() = default;

  /// Builds the alphabet of all distinct symbols in `letters`; throws on empty.
  explicit Alphabet(std::string_view letters);

  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool contains(Symbol c) const noexcept { return present_[c]; }
  [[nodiscard]] const std::string& letters() const noexcept { return letters_; }
  [[nodiscard]] Symbol operator[](std::size_t rank) const { return static_cast<Symbol>(letters_[rank]); }

  /// Ordered union of both alphabets.
  [[nodiscard]] Alphabet merged(const Alphabet& other) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept { return a.letters_ == b.letters_; }

 private:
  std::string letters_;
  bool present_[256] = {};
};

/// A labelled word. The data is taken verbatim; symbols are single bytes.
struct Sequence {
  std::string label;
  std::string data;

  Sequence() = default;
  Sequence(std::string data_) : data(std::move(data_)) {}  // NOLINT: implicit from text is intended
  Sequence(const char* data_) : data(data_) {}             // NOLINT
  Sequence(std::string label_, std::string data_) : label(std::move(label_)), data(std::move(data_)) {}

  [[nodiscard]] std::size_t size() const noexcept { return data.size(); }
  [[nodiscard]] bool empty() const noexcept { return data.empty(); }
  [[nodiscard]] std::string_view view() const noexcept { return data; }
  [[nodiscard]] Symbol operator[](std::size_t i) const noexcept { return static_cast<Symbol>(data[i]); }

  friend bool operator==(const Sequence& a, const Sequence& b) = default;
};

/// Ordered union of the symbols of all sequences. Throws Error("empty alphabet")
/// when no symbol occurs at all.
Alphabet infer_alphabet(std::span<const Sequence> seqs);
Alphabet infer_alphabet(std::initializer_list<std::string_view> words);

/// Throws Error if some symbol of `x` is not in `alphabet`.
void check_over(std::string_view x, const Alphabet& alphabet);

Sequence reverse(const Sequence& x);

/// x[i..m-1] x[0..i-1]; requires 0 <= i < |x|.
Sequence rotate(const Sequence& x, std::size_t i);

}  // namespace mawcmp
