#include "mawcmp/suffix_tree.hpp"

#include <algorithm>
#include <cassert>

#include "mawcmp/rmq.hpp"
#include "mawcmp/text.hpp"

namespace mawcmp {

SuffixTree::SuffixTree(std::string text) : text_(std::move(text)) {
  if (text_.empty()) throw Error("suffix tree of an empty text");
  const auto n = static_cast<Index>(text_.size());

  // Sentinel suffix (position n) is the smallest; everything else keeps SA order.
  const auto sa = build_suffix_array(text_);
  const auto lcp = build_lcp_array(text_, sa);
  std::vector<Index> sa_full(n + 1), lcp_full(n + 1, 0);
  sa_full[0] = n;
  for (Index r = 0; r < n; ++r) {
    sa_full[r + 1] = sa[r];
    if (r > 0) lcp_full[r + 1] = lcp[r];
  }

  nodes_.reserve(2 * static_cast<std::size_t>(n) + 2);
  nodes_.push_back(Node{});
  std::vector<std::vector<Index>> kids(1);
  std::vector<Index> boundary_owner(n + 1, -1);
  leaf_of_.assign(n + 1, -1);

  std::vector<Index> stack{root()};
  for (Index r = 0; r <= n; ++r) {
    const Index pos = sa_full[r];
    const Index l = lcp_full[r];
    Index last = -1;
    while (nodes_[stack.back()].depth > l) {
      last = stack.back();
      stack.pop_back();
    }
    if (nodes_[stack.back()].depth < l) {
      const Index top = stack.back();
      const auto w = static_cast<Index>(nodes_.size());
      nodes_.push_back(Node{.parent = top, .depth = l, .rep = nodes_[last].rep});
      kids.emplace_back(std::vector<Index>{last});
      assert(kids[top].back() == last);
      kids[top].back() = w;
      nodes_[last].parent = w;
      stack.push_back(w);
    }
    const Index owner = stack.back();
    if (r > 0) boundary_owner[r] = owner;
    const auto leaf = static_cast<Index>(nodes_.size());
    nodes_.push_back(Node{.parent = owner, .depth = n - pos + 1, .rep = pos, .suffix = pos});
    kids.emplace_back();
    kids[owner].push_back(leaf);
    leaf_of_[pos] = leaf;
    stack.push_back(leaf);
  }

  child_offsets_.assign(nodes_.size() + 1, 0);
  for (std::size_t v = 0; v < nodes_.size(); ++v)
    child_offsets_[v + 1] = child_offsets_[v] + static_cast<Index>(kids[v].size());
  child_ids_.reserve(child_offsets_.back());
  child_letters_.reserve(child_offsets_.back());
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    for (Index c : kids[v]) {
      child_ids_.push_back(c);
      child_letters_.push_back(symbol(static_cast<std::size_t>(nodes_[c].rep + nodes_[v].depth)));
    }
  }

  link_and_annotate(sa_full, lcp_full, boundary_owner);
}

void SuffixTree::link_and_annotate(std::span<const Index> sa_full, std::span<const Index> lcp_full,
                                   std::span<const Index> boundary_owner) {
  const std::size_t total = sa_full.size();
  std::vector<Index> isa_full(total);
  for (std::size_t r = 0; r < total; ++r) isa_full[sa_full[r]] = static_cast<Index>(r);
  const RangeMin rmq(lcp_full);

  // Suffix link of an internal node: the lowest common ancestor of the leaves
  // one position to the right of two leaves from different children.
  for (std::size_t v = 1; v < nodes_.size(); ++v) {
    if (nodes_[v].suffix >= 0) continue;
    const auto kids = children(static_cast<Index>(v));
    const auto p1 = static_cast<std::size_t>(nodes_[kids[0]].rep) + 1;
    const auto p2 = static_cast<std::size_t>(nodes_[kids[1]].rep) + 1;
    auto lo = static_cast<std::size_t>(isa_full[p1]);
    auto hi = static_cast<std::size_t>(isa_full[p2]);
    if (lo > hi) std::swap(lo, hi);
    nodes_[v].link = boundary_owner[rmq.argmin(lo + 1, hi)];
    assert(nodes_[nodes_[v].link].depth + 1 == nodes_[v].depth);
  }

  std::vector<Index> order;
  order.reserve(nodes_.size());
  std::vector<Index> todo{root()};
  while (!todo.empty()) {
    const Index v = todo.back();
    todo.pop_back();
    order.push_back(v);
    for (Index c : children(v)) todo.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Node& node = nodes_[*it];
    if (node.suffix >= 0) {
      node.first = node.suffix;
      node.branching = false;
      continue;
    }
    const auto lo = static_cast<std::size_t>(child_offsets_[*it]);
    const auto hi = static_cast<std::size_t>(child_offsets_[*it + 1]);
    Index first = static_cast<Index>(text_.size());
    int real_children = 0;
    bool below = false;
    for (std::size_t k = lo; k < hi; ++k) {
      const Node& c = nodes_[child_ids_[k]];
      first = std::min(first, c.first);
      below = below || c.branching;
      if (child_letters_[k] != kSentinel) ++real_children;
    }
    node.first = first;
    node.branching = below || real_children >= 2;
  }
}

Index SuffixTree::edge_begin(Index v) const {
  if (v == root()) return 0;
  return nodes_[v].rep + nodes_[nodes_[v].parent].depth;
}

Index SuffixTree::edge_length(Index v) const {
  if (v == root()) return 0;
  return nodes_[v].depth - nodes_[nodes_[v].parent].depth;
}

int SuffixTree::edge_letter(Index v) const {
  if (v == root()) return kSentinel;
  return symbol(static_cast<std::size_t>(edge_begin(v)));
}

std::span<const Index> SuffixTree::children(Index v) const {
  const auto lo = static_cast<std::size_t>(child_offsets_[v]);
  const auto hi = static_cast<std::size_t>(child_offsets_[v + 1]);
  return std::span<const Index>(child_ids_).subspan(lo, hi - lo);
}

Index SuffixTree::child(Index v, int letter) const {
  const auto first = child_letters_.begin() + child_offsets_[v];
  const auto last = child_letters_.begin() + child_offsets_[v + 1];
  const auto it = std::lower_bound(first, last, letter);
  if (it == last || *it != letter) return -1;
  return child_ids_[static_cast<std::size_t>(it - child_letters_.begin())];
}

std::string SuffixTree::label(Index v) const {
  const auto rep = static_cast<std::size_t>(nodes_[v].rep);
  const auto len = std::min(static_cast<std::size_t>(nodes_[v].depth), text_.size() - rep);
  return text_.substr(rep, len);
}

NodeLocator SuffixTree::locate(std::size_t i, std::size_t j) const {
  if (i > j || j >= text_.size()) throw Error("factor interval out of range");
  const auto len = static_cast<Index>(j - i + 1);
  Index v = root();
  for (;;) {
    const Index c = child(v, symbol(i + static_cast<std::size_t>(nodes_[v].depth)));
    assert(c >= 0);
    if (nodes_[c].depth >= len) {
      return NodeLocator{.parent = v, .child = c, .offset = len - nodes_[v].depth, .is_explicit = nodes_[c].depth == len};
    }
    v = c;
  }
}

SuffixTree build_annotated_suffix_tree(std::string_view text) { return SuffixTree(std::string(text)); }

}  // namespace mawcmp
