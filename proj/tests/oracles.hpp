#pragma once

// Independent brute-force references. Nothing here calls the search,
// orbit or sequence code it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "cubal/semigroup.hpp"

namespace cubal::oracle {

using Cells = std::vector<std::uint8_t>;

inline bool associative(const Cells& t, int m) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        if (t[t[i * m + j] * m + k] != t[i * m + t[j * m + k]]) return false;
  return true;
}

/// All m^(m^2) tables in lexicographic order, filtered by associativity.
inline std::vector<Cells> naive_enumerate(int m) {
  const int cells = m * m;
  std::vector<Cells> out;
  Cells t(static_cast<std::size_t>(cells), 0);
  while (true) {
    if (associative(t, m)) out.push_back(t);
    int pos = cells - 1;
    while (pos >= 0 && t[pos] == m - 1) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  return out;
}

/// Relabel by writing b(pi(i), pi(j)) = pi(a(i,j)) directly.
inline Cells relabel(const std::vector<int>& pi, const Cells& a, int m) {
  Cells b(a.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) b[pi[i] * m + pi[j]] = static_cast<std::uint8_t>(pi[a[i * m + j]]);
  return b;
}

inline std::set<Cells> brute_orbit(const Cells& a, int m) {
  std::vector<int> pi(static_cast<std::size_t>(m));
  std::iota(pi.begin(), pi.end(), 0);
  std::set<Cells> out;
  do out.insert(relabel(pi, a, m));
  while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

/// i_0 .. i_steps
inline std::vector<int> unroll_squares(int i, const Operation& a, int steps) {
  std::vector<int> out{i};
  for (int n = 0; n < steps; ++n) out.push_back(a(out.back(), out.back()));
  return out;
}

/// Least n0 with i_{n0} recurring later in the unrolled sequence, and the gap.
inline std::pair<int, int> first_recurrence(const std::vector<int>& seq) {
  for (std::size_t q = 1; q < seq.size(); ++q)
    for (std::size_t p = 0; p < q; ++p)
      if (seq[p] == seq[q]) return {static_cast<int>(p), static_cast<int>(q - p)};
  return {-1, -1};
}

}  // namespace cubal::oracle
