#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mawcmp/text.hpp"

namespace mawcmp {

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::vector<std::string> labels)
      : labels_(std::move(labels)), cells_(labels_.size() * labels_.size(), 0.0) {}

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] double at(std::size_t i, std::size_t j) const { return cells_[i * size() + j]; }
  double& at(std::size_t i, std::size_t j) { return cells_[i * size() + j]; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> cells_;
};

enum class Mode { linear, circular };

struct RunConfig {
  Mode mode = Mode::linear;
  std::optional<std::size_t> max_maw_length;
  std::size_t threads = 1;
  int precision = 6;
  bool uppercase = false;
  /// Use the union of all records' letters instead of each pair's union.
  bool global_alphabet = false;
  bool relaxed_phylip = false;

  /// Throws unless threads >= 1 and precision in 1..17.
  void validate() const;
};

/// Pairwise LW (or circular LW) of all records. Each unordered pair is one
/// job writing only its own cell; cells are mirrored afterwards, so the result
/// does not depend on the worker count. Needs at least two records.
DistanceMatrix distance_matrix(std::span<const Sequence> seqs, const RunConfig& config);

/// Taxa count, then one row per taxon: the label padded or cut to ten
/// characters (or the full label and two spaces in relaxed mode) followed by
/// the fixed-point cells.
void write_phylip(std::ostream& out, const DistanceMatrix& m, int precision, bool relaxed = false);

DistanceMatrix read_phylip(std::istream& in, bool relaxed = false);

/// Empty when the matrix is square, symmetric, non-negative with a zero
/// diagonal; otherwise a description of the first violation.
std::optional<std::string> validate_matrix(const DistanceMatrix& m);

}  // namespace mawcmp
