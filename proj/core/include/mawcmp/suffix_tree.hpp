#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mawcmp/suffix_array.hpp"

namespace mawcmp {

/// Position of a factor's locus in a suffix tree: the edge (parent, child)
/// it lies on and how far down that edge. `is_explicit` iff the locus is the
/// child endpoint itself.
struct NodeLocator {
  Index parent = -1;
  Index child = -1;
  Index offset = 0;
  bool is_explicit = false;

  /// The explicit node whose annotations describe the locus: the node itself,
  /// or the lower end of the edge for an implicit locus.
  [[nodiscard]] Index node() const noexcept { return child; }
};

/// Suffix tree of `text` terminated by a sentinel smaller than every byte.
/// Built from SA and LCP of the text. Every node carries its string depth,
/// the leftmost occurrence of its path label, a suffix link, and whether a
/// branching on two real letters happens at or below it.
///
/// The sentinel is part of the leaf edges only; path labels and depths
/// reported through `label()` exclude it.
class SuffixTree {
 public:
  static constexpr int kSentinel = -1;

  explicit SuffixTree(std::string text);

  [[nodiscard]] std::string_view text() const noexcept { return text_; }
  [[nodiscard]] std::size_t text_size() const noexcept { return text_.size(); }
  [[nodiscard]] std::size_t node_count() const noexcept { return nodes_.size(); }
  [[nodiscard]] static constexpr Index root() noexcept { return 0; }

  [[nodiscard]] Index parent(Index v) const { return nodes_[v].parent; }
  /// String depth including the sentinel on leaves.
  [[nodiscard]] Index depth(Index v) const { return nodes_[v].depth; }
  [[nodiscard]] bool is_leaf(Index v) const { return nodes_[v].suffix >= 0; }
  /// Suffix index of a leaf, -1 for internal nodes.
  [[nodiscard]] Index suffix(Index v) const { return nodes_[v].suffix; }
  [[nodiscard]] Index suffix_link(Index v) const { return nodes_[v].link; }
  [[nodiscard]] bool branching(Index v) const { return nodes_[v].branching; }
  [[nodiscard]] Index first_occurrence(Index v) const { return nodes_[v].first; }

  /// Start of the edge label into v, as a text position, and its length.
  [[nodiscard]] Index edge_begin(Index v) const;
  [[nodiscard]] Index edge_length(Index v) const;
  /// First symbol on the edge into v (kSentinel for a sentinel leaf edge).
  [[nodiscard]] int edge_letter(Index v) const;

  [[nodiscard]] std::span<const Index> children(Index v) const;
  /// Child of v whose edge starts with `letter`, or -1.
  [[nodiscard]] Index child(Index v, int letter) const;

  /// Leaf for suffix i, 0 <= i <= n (i = n is the sentinel-only leaf).
  [[nodiscard]] Index leaf(std::size_t i) const { return leaf_of_[i]; }

  /// Path label without the sentinel.
  [[nodiscard]] std::string label(Index v) const;

  /// Locus of text[i..j]; requires 0 <= i <= j < n.
  [[nodiscard]] NodeLocator locate(std::size_t i, std::size_t j) const;

  /// Symbol at text position p, kSentinel at p == n.
  [[nodiscard]] int symbol(std::size_t p) const noexcept {
    return p < text_.size() ? static_cast<int>(static_cast<unsigned char>(text_[p])) : kSentinel;
  }

 private:
  struct Node {
    Index parent = -1;
    Index depth = 0;
    Index rep = 0;  // start of some occurrence of the path label
    Index suffix = -1;
    Index link = -1;
    Index first = 0;
    bool branching = false;
  };

  void link_and_annotate(std::span<const Index> sa_full, std::span<const Index> lcp_full,
                         std::span<const Index> boundary_owner);

  std::string text_;
  std::vector<Node> nodes_;
  std::vector<Index> child_offsets_;
  std::vector<Index> child_ids_;
  std::vector<int> child_letters_;
  std::vector<Index> leaf_of_;
};

/// Throws on empty input.
SuffixTree build_annotated_suffix_tree(std::string_view text);

}  // namespace mawcmp
