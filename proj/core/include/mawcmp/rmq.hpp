#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mawcmp {

/// Constant-time range-minimum structure. Positions are grouped into blocks
/// of 64; a sparse table covers block minima and a per-position bitmask of the
/// in-block minimum stack answers the partial blocks with one ctz each.
/// Ties resolve to the leftmost position.
class RangeMin {
 public:
  RangeMin() = default;
  explicit RangeMin(std::span<const std::int32_t> values);

  /// Position of the minimum of values[l..r], inclusive; requires l <= r < size().
  [[nodiscard]] std::size_t argmin(std::size_t l, std::size_t r) const noexcept;

  [[nodiscard]] std::int32_t min(std::size_t l, std::size_t r) const noexcept { return values_[argmin(l, r)]; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

 private:
  static constexpr std::size_t kBlock = 64;

  [[nodiscard]] std::size_t better(std::size_t a, std::size_t b) const noexcept {
    return values_[b] < values_[a] || (values_[b] == values_[a] && b < a) ? b : a;
  }
  [[nodiscard]] std::size_t in_block(std::size_t l, std::size_t r) const noexcept;

  std::vector<std::int32_t> values_;
  std::vector<std::uint64_t> masks_;
  // table_[k][b]: argmin over blocks b .. b + 2^k - 1.
  std::vector<std::vector<std::uint32_t>> table_;
};

}  // namespace mawcmp
