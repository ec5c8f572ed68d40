#include "mawcmp/rmq.hpp"

#include <algorithm>
#include <bit>

namespace mawcmp {

RangeMin::RangeMin(std::span<const std::int32_t> values) : values_(values.begin(), values.end()) {
  const std::size_t n = values_.size();
  masks_.assign(n, 0);

  std::uint64_t stack = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % kBlock == 0) stack = 0;
    const std::size_t base = i - i % kBlock;
    // Pop strictly larger entries so equal values keep the leftmost position.
    while (stack != 0) {
      const std::size_t top = base + (63 - static_cast<std::size_t>(std::countl_zero(stack)));
      if (values_[top] <= values_[i]) break;
      stack &= ~(std::uint64_t{1} << (top - base));
    }
    stack |= std::uint64_t{1} << (i - base);
    masks_[i] = stack;
  }

  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  if (blocks == 0) return;
  table_.emplace_back(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t last = std::min(n, (b + 1) * kBlock) - 1;
    table_[0][b] = static_cast<std::uint32_t>(in_block(b * kBlock, last));
  }
  for (std::size_t k = 1; (std::size_t{1} << k) <= blocks; ++k) {
    const std::size_t half = std::size_t{1} << (k - 1);
    std::vector<std::uint32_t> level(blocks - (std::size_t{1} << k) + 1);
    for (std::size_t b = 0; b < level.size(); ++b)
      level[b] = static_cast<std::uint32_t>(better(table_[k - 1][b], table_[k - 1][b + half]));
    table_.push_back(std::move(level));
  }
}

std::size_t RangeMin::in_block(std::size_t l, std::size_t r) const noexcept {
  const std::size_t base = r - r % kBlock;
  const std::uint64_t live = masks_[r] & (~std::uint64_t{0} << (l - base));
  return base + static_cast<std::size_t>(std::countr_zero(live));
}

std::size_t RangeMin::argmin(std::size_t l, std::size_t r) const noexcept {
  const std::size_t bl = l / kBlock;
  const std::size_t br = r / kBlock;
  if (bl == br) return in_block(l, r);

  std::size_t best = in_block(l, bl * kBlock + kBlock - 1);
  if (bl + 1 < br) {
    const std::size_t span = br - bl - 1;
    const auto k = static_cast<std::size_t>(std::bit_width(span) - 1);
    best = better(best, table_[k][bl + 1]);
    best = better(best, table_[k][br - (std::size_t{1} << k)]);
  }
  return better(best, in_block(br * kBlock, r));
}

}  // namespace mawcmp
