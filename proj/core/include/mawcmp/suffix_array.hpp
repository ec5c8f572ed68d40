#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mawcmp/rmq.hpp"

namespace mawcmp {

using Index = std::int32_t;

/// Suffix array of an integer text with symbols in [0, upper], by induced
/// sorting (SA-IS). Suffixes that are prefixes of others sort first.
std::vector<Index> build_suffix_array(std::span<const Index> text, Index upper);

/// Byte-text convenience overload.
std::vector<Index> build_suffix_array(std::string_view text);

/// LCP array by Kasai's rank scan: lcp[0] = 0, lcp[r] = lcp(sa[r-1], sa[r]).
std::vector<Index> build_lcp_array(std::string_view text, std::span<const Index> sa);

/// SA, inverse SA, LCP and a constant-time RMQ over LCP; answers longest
/// common extension queries between any two suffixes of the text.
class SuffixArrayBundle {
 public:
  explicit SuffixArrayBundle(std::string text);

  [[nodiscard]] std::size_t size() const noexcept { return text_.size(); }
  [[nodiscard]] std::string_view text() const noexcept { return text_; }
  [[nodiscard]] std::span<const Index> sa() const noexcept { return sa_; }
  [[nodiscard]] std::span<const Index> isa() const noexcept { return isa_; }
  [[nodiscard]] std::span<const Index> lcp() const noexcept { return lcp_; }
  [[nodiscard]] const RangeMin& rmq() const noexcept { return rmq_; }

  /// Length of the longest common prefix of the suffixes at p and q.
  [[nodiscard]] std::size_t lce(std::size_t p, std::size_t q) const;

  /// lce() without range checks, for hot loops that already guarantee p, q < n.
  [[nodiscard]] std::size_t lce_unchecked(std::size_t p, std::size_t q) const noexcept {
    if (p == q) return text_.size() - p;
    Index a = isa_[p];
    Index b = isa_[q];
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(lcp_[rmq_.argmin(static_cast<std::size_t>(a) + 1, static_cast<std::size_t>(b))]);
  }

 private:
  std::string text_;
  std::vector<Index> sa_;
  std::vector<Index> isa_;
  std::vector<Index> lcp_;
  RangeMin rmq_;
};

/// Throws on empty input.
SuffixArrayBundle build_sa_bundle(std::string_view text);

}  // namespace mawcmp
