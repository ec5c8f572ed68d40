#include "mawcmp/qgram.hpp"

#include <algorithm>
#include <string>

#include "mawcmp/text.hpp"

namespace mawcmp {

namespace {

std::string reversed(std::string_view x) { return std::string(x.rbegin(), x.rend()); }

// Length of the shortest unique factor starting at i, or 0 when every factor
// starting at i repeats (the suffix at i occurs elsewhere).
std::size_t shortest_unique_at(const SuffixTree& tree, std::size_t i) {
  const auto len = static_cast<std::size_t>(tree.depth(tree.parent(tree.leaf(i)))) + 1;
  return len <= tree.text_size() - i ? len : 0;
}

// Prefix side of the test for text[i..j] = a.u.b with j > i: u.b must occur
// elsewhere and either two of its occurrences diverge on real letters, or the
// occurrence after a is not the leftmost one.
bool extends_as_maw_prefix(const SuffixTree& tree, std::size_t i, std::size_t j) {
  const Index v = tree.locate(i + 1, j).node();
  return tree.branching(v) || static_cast<std::size_t>(tree.first_occurrence(v)) <= i;
}

}  // namespace

QgramIndex::QgramIndex(std::string_view x) : forward_(std::string(x)), backward_(reversed(x)) {}

UniqueFactorCatalog unique_factor_catalog(const QgramIndex& index) {
  const std::size_t n = index.size();
  if (n < 2) throw Error("q-gram analysis needs a word of length at least 2");
  const SuffixTree& tree = index.forward();

  UniqueFactorCatalog cat;
  cat.h = n;
  std::vector<std::size_t> shortest(n);
  for (std::size_t i = 0; i < n; ++i) {
    shortest[i] = shortest_unique_at(tree, i);
    if (shortest[i] != 0) cat.h = std::min(cat.h, shortest[i]);
  }

  // Infixes start at i >= 1 and end at or before n - 2.
  auto fits_as_infix = [&](std::size_t i, std::size_t len) {
    return i >= 1 && shortest[i] != 0 && shortest[i] <= len && i + len <= n - 1;
  };
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (fits_as_infix(i, shortest[i]) && (!cat.t || shortest[i] < *cat.t)) cat.t = shortest[i];
  }
  if (cat.t) {
    const std::size_t t = *cat.t;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (fits_as_infix(i, t)) cat.infixes_t.emplace_back(i, i + t - 1);
      if (fits_as_infix(i, t + 1)) cat.infixes_t1.emplace_back(i, i + t);
    }
  }

  cat.shortest_unique_prefix = shortest[0];
  cat.shortest_unique_suffix = shortest_unique_at(index.backward(), 0);
  return cat;
}

bool test_factor(const QgramIndex& index, std::size_t i, std::size_t j) {
  const std::size_t n = index.size();
  if (i > j || j >= n) throw Error("factor interval out of range");
  if (i == j) return true;
  if (extends_as_maw_prefix(index.forward(), i, j)) return true;
  // rev(x)[n-1-j .. n-1-i] is b.rev(u).a; its MAW-prefix test is our suffix test.
  return extends_as_maw_prefix(index.backward(), n - 1 - j, n - 1 - i);
}

std::size_t infix_bound(const QgramIndex& index, const UniqueFactorCatalog& catalog) {
  if (!catalog.t) return index.size();
  const std::size_t t = *catalog.t;
  for (const auto& [i, j] : catalog.infixes_t)
    if (!test_factor(index, i, j)) return t - 1;
  for (const auto& [i, j] : catalog.infixes_t1)
    if (!test_factor(index, i, j)) return t;
  return t + 1;
}

std::size_t prefix_bound(const QgramIndex& index, const UniqueFactorCatalog& catalog, std::size_t q) {
  for (std::size_t p = catalog.shortest_unique_prefix; p <= q; ++p)
    if (!test_factor(index, 0, p - 1)) return p - 1;
  return q;
}

std::size_t suffix_bound(const QgramIndex& index, const UniqueFactorCatalog& catalog, std::size_t q) {
  const std::size_t n = index.size();
  for (std::size_t s = catalog.shortest_unique_suffix; s <= q; ++s)
    if (!test_factor(index, n - s, n - 1)) return s - 1;
  return q;
}

QgramReport qgram_report(std::string_view x) {
  if (x.size() < 2) throw Error("q-gram analysis needs a word of length at least 2");
  const QgramIndex index(x);
  const auto catalog = unique_factor_catalog(index);
  std::size_t q = infix_bound(index, catalog);
  q = prefix_bound(index, catalog, q);
  q = suffix_bound(index, catalog, q);
  return QgramReport{.q = q, .h = catalog.h, .t = catalog.t};
}

std::size_t compute_q(std::string_view x) { return qgram_report(x).q; }

std::size_t compute_q(std::string_view x, const Alphabet& alphabet) {
  check_over(x, alphabet);
  return compute_q(x);
}

}  // namespace mawcmp
