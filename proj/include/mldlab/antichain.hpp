#pragma once

// Inclusion order on finite families of monomial ideals: comparable pairs and
// descending subsequences.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mldlab/monomial.hpp"
#include "mldlab/rational.hpp"

namespace mldlab {

using IndexList = std::vector<std::size_t>;

namespace detail {

inline void check_uniform(const std::vector<MonomialIdeal>& items, const char* what) {
  for (std::size_t i = 1; i < items.size(); ++i)
    if (items[i].dim() != items[0].dim())
      throw InputError(std::string(what) + ": items[" + std::to_string(i) + "] has dimension " +
                       std::to_string(items[i].dim()) + ", expected " + std::to_string(items[0].dim()));
}

/// Lexicographically smallest chain i_1 < ... < i_t inside `allowed` with
/// items[i_k] containing items[i_{k+1}], t = min(target, longest).
inline IndexList descending_chain_within(const std::vector<MonomialIdeal>& items, const IndexList& allowed,
                                         std::size_t target) {
  const std::size_t L = allowed.size();
  if (L == 0) return {};
  // longest[a] = longest chain starting at allowed[a]
  std::vector<std::size_t> longest(L, 1);
  std::vector<std::vector<char>> contains(L, std::vector<char>(L, 0));
  for (std::size_t a = L; a-- > 0;)
    for (std::size_t b = a + 1; b < L; ++b)
      if (ideal_contains(items[allowed[a]], items[allowed[b]])) {
        contains[a][b] = 1;
        longest[a] = std::max(longest[a], longest[b] + 1);
      }
  std::size_t best = 0;
  for (auto x : longest) best = std::max(best, x);
  const std::size_t t = std::min(target, best);
  IndexList out;
  std::optional<std::size_t> prev;
  for (std::size_t need = t; need > 0; --need) {
    for (std::size_t a = prev ? *prev + 1 : 0; a < L; ++a) {
      if (longest[a] < need) continue;
      if (prev && !contains[*prev][a]) continue;
      out.push_back(allowed[a]);
      prev = a;
      break;
    }
  }
  return out;
}

}  // namespace detail

/// Lexicographically smallest (i, j), i != j, with items[i] contained in items[j].
inline std::optional<std::pair<std::size_t, std::size_t>> find_comparable_pair(const std::vector<MonomialIdeal>& items) {
  if (items.size() < 2) throw InputError("find_comparable_pair: need at least 2 ideals");
  detail::check_uniform(items, "find_comparable_pair");
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < items.size(); ++j)
      if (i != j && ideal_contains(items[j], items[i])) return std::make_pair(i, j);
  return std::nullopt;
}

/// Never empty for a nonempty input: a single index is always a chain.
inline IndexList extract_descending_chain(const std::vector<MonomialIdeal>& items, std::size_t target_len) {
  if (items.empty()) throw InputError("extract_descending_chain: empty sequence");
  if (target_len < 1) throw InputError("extract_descending_chain: target length must be >= 1");
  detail::check_uniform(items, "extract_descending_chain");
  IndexList all(items.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return detail::descending_chain_within(items, all, target_len);
}

/// Refines one coordinate sequence at a time: each step keeps the longest
/// descending subsequence of the current index set, the last step cuts to
/// target_len.
inline IndexList multi_factor_descending(const std::vector<std::vector<MonomialIdeal>>& seqs, std::size_t target_len) {
  if (seqs.empty()) throw InputError("multi_factor_descending: no sequences");
  if (target_len < 1) throw InputError("multi_factor_descending: target length must be >= 1");
  const std::size_t L = seqs[0].size();
  if (L == 0) throw InputError("multi_factor_descending: empty sequence");
  for (std::size_t j = 0; j < seqs.size(); ++j) {
    if (seqs[j].size() != L)
      throw InputError("multi_factor_descending: sequences[" + std::to_string(j) + "] has length " +
                       std::to_string(seqs[j].size()) + ", expected " + std::to_string(L));
    detail::check_uniform(seqs[j], "multi_factor_descending");
  }
  IndexList cur(L);
  for (std::size_t i = 0; i < L; ++i) cur[i] = i;
  for (std::size_t j = 0; j < seqs.size(); ++j) {
    const bool last = j + 1 == seqs.size();
    cur = detail::descending_chain_within(seqs[j], cur, last ? target_len : L);
  }
  return cur;
}

}  // namespace mldlab
