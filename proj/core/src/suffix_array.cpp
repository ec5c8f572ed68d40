#include "mawcmp/suffix_array.hpp"

#include <algorithm>
#include <limits>

#include "mawcmp/text.hpp"

namespace mawcmp {

namespace {

// Induced sorting after Nong, Zhang and Chan. `is_s` marks S-type positions,
// bucket tables hold the start of the S region (bucket_s) and the L region
// (bucket_l) of each symbol.
std::vector<Index> sa_is(std::span<const Index> s, Index upper) {
  const auto n = static_cast<Index>(s.size());
  if (n == 0) return {};
  if (n == 1) return {0};
  if (n == 2) return s[0] < s[1] ? std::vector<Index>{0, 1} : std::vector<Index>{1, 0};

  std::vector<Index> sa(n);
  std::vector<bool> is_s(n);
  for (Index i = n - 2; i >= 0; --i) is_s[i] = s[i] == s[i + 1] ? is_s[i + 1] : s[i] < s[i + 1];

  std::vector<Index> bucket_l(upper + 1), bucket_s(upper + 1);
  for (Index i = 0; i < n; ++i) {
    if (!is_s[i])
      ++bucket_s[s[i]];
    else
      ++bucket_l[s[i] + 1];
  }
  for (Index c = 0; c <= upper; ++c) {
    bucket_s[c] += bucket_l[c];
    if (c < upper) bucket_l[c + 1] += bucket_s[c];
  }

  auto induce = [&](std::span<const Index> lms) {
    std::fill(sa.begin(), sa.end(), -1);
    std::vector<Index> head(bucket_s);
    for (Index d : lms) {
      if (d != n) sa[head[s[d]]++] = d;
    }
    head = bucket_l;
    sa[head[s[n - 1]]++] = n - 1;
    for (Index i = 0; i < n; ++i) {
      const Index v = sa[i];
      if (v >= 1 && !is_s[v - 1]) sa[head[s[v - 1]]++] = v - 1;
    }
    head = bucket_l;
    for (Index i = n - 1; i >= 0; --i) {
      const Index v = sa[i];
      if (v >= 1 && is_s[v - 1]) sa[--head[s[v - 1] + 1]] = v - 1;
    }
  };

  std::vector<Index> lms_id(n + 1, -1);
  std::vector<Index> lms;
  for (Index i = 1; i < n; ++i) {
    if (!is_s[i - 1] && is_s[i]) {
      lms_id[i] = static_cast<Index>(lms.size());
      lms.push_back(i);
    }
  }
  const auto m = static_cast<Index>(lms.size());
  induce(lms);

  if (m > 0) {
    std::vector<Index> sorted_lms;
    sorted_lms.reserve(m);
    for (Index v : sa)
      if (lms_id[v] != -1) sorted_lms.push_back(v);

    // Name LMS substrings; equal names mean identical substrings.
    std::vector<Index> reduced(m);
    Index names = 0;
    reduced[lms_id[sorted_lms[0]]] = 0;
    for (Index k = 1; k < m; ++k) {
      Index l = sorted_lms[k - 1];
      Index r = sorted_lms[k];
      const Index end_l = lms_id[l] + 1 < m ? lms[lms_id[l] + 1] : n;
      const Index end_r = lms_id[r] + 1 < m ? lms[lms_id[r] + 1] : n;
      bool same = true;
      if (end_l - l != end_r - r) {
        same = false;
      } else {
        while (l < end_l && s[l] == s[r]) {
          ++l;
          ++r;
        }
        if (l == n || s[l] != s[r]) same = false;
      }
      if (!same) ++names;
      reduced[lms_id[sorted_lms[k]]] = names;
    }

    const auto reduced_sa = sa_is(reduced, names);
    for (Index k = 0; k < m; ++k) sorted_lms[k] = lms[reduced_sa[k]];
    induce(sorted_lms);
  }
  return sa;
}

}  // namespace

std::vector<Index> build_suffix_array(std::span<const Index> text, Index upper) {
  if (text.size() >= static_cast<std::size_t>(std::numeric_limits<Index>::max()))
    throw Error("text too long for 32-bit suffix array");
  return sa_is(text, upper);
}

std::vector<Index> build_suffix_array(std::string_view text) {
  std::vector<Index> s(text.size());
  std::transform(text.begin(), text.end(), s.begin(), [](char c) { return static_cast<Index>(static_cast<Symbol>(c)); });
  return build_suffix_array(s, 255);
}

std::vector<Index> build_lcp_array(std::string_view text, std::span<const Index> sa) {
  const std::size_t n = text.size();
  std::vector<Index> lcp(n, 0);
  if (n == 0) return lcp;
  std::vector<Index> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[sa[r]] = static_cast<Index>(r);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const auto j = static_cast<std::size_t>(sa[rank[i] - 1]);
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp[rank[i]] = static_cast<Index>(h);
    if (h > 0) --h;
  }
  return lcp;
}

SuffixArrayBundle::SuffixArrayBundle(std::string text) : text_(std::move(text)) {
  if (text_.empty()) throw Error("suffix array of an empty text");
  sa_ = build_suffix_array(text_);
  isa_.resize(sa_.size());
  for (std::size_t r = 0; r < sa_.size(); ++r) isa_[sa_[r]] = static_cast<Index>(r);
  lcp_ = build_lcp_array(text_, sa_);
  rmq_ = RangeMin(lcp_);
}

std::size_t SuffixArrayBundle::lce(std::size_t p, std::size_t q) const {
  if (p >= text_.size() || q >= text_.size()) throw Error("lce position out of range");
  return lce_unchecked(p, q);
}

SuffixArrayBundle build_sa_bundle(std::string_view text) { return SuffixArrayBundle(std::string(text)); }

}  // namespace mawcmp
