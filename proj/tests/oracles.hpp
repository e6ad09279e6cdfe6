// Brute-force reference implementations over plain vectors of ints, kept
// independent of the word-level library kernels.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_set>
#include <vector>

#include "mingens/boolmat.hpp"

namespace oracle {

using Grid = std::vector<std::vector<int>>;

inline Grid grid(const mingens::BoolMat& a) {
  Grid g(a.dim(), std::vector<int>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) g[i][j] = a.get(i, j);
  return g;
}

inline mingens::BoolMat from_grid(const Grid& g) {
  const int n = static_cast<int>(g.size());
  mingens::BoolMat a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.set(i, j, g[i][j] != 0);
  return a;
}

inline mingens::BoolMat multiply(const mingens::BoolMat& a, const mingens::BoolMat& b) {
  const int n = a.dim();
  Grid x = grid(a), y = grid(b), z(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) z[i][j] |= x[i][k] & y[k][j];
  return from_grid(z);
}

using Vec = std::vector<int>;

inline std::set<Vec> row_space(const mingens::BoolMat& a) {
  const int n = a.dim();
  Grid g = grid(a);
  std::set<Vec> space{Vec(n, 0)};
  for (int s = 1; s < (1 << n); ++s) {
    Vec u(n, 0);
    for (int i = 0; i < n; ++i)
      if (s >> i & 1)
        for (int j = 0; j < n; ++j) u[j] |= g[i][j];
    space.insert(u);
  }
  return space;
}

inline bool leq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool is_hall(const mingens::BoolMat& a) {
  const int n = a.dim();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = a.get(i, p[i]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Rows (or columns via transpose) with a non-zero row contained in a
// different row, or two equal non-zero rows.
inline bool rows_trim(const Grid& g) {
  const int n = static_cast<int>(g.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      bool zero = std::all_of(g[i].begin(), g[i].end(), [](int x) { return x == 0; });
      if (!zero && leq(g[i], g[j])) return false;
    }
  return true;
}

inline Grid transpose(const Grid& g) {
  Grid t(g[0].size(), std::vector<int>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g[0].size(); ++j) t[j][i] = g[i][j];
  return t;
}

// No non-zero row is a union of the other rows; duplicates count as unions.
inline bool rows_reduced(const Grid& g) {
  const int n = static_cast<int>(g.size());
  const int m = static_cast<int>(g[0].size());
  for (int i = 0; i < n; ++i) {
    if (std::all_of(g[i].begin(), g[i].end(), [](int x) { return x == 0; })) continue;
    Vec u(m, 0);
    for (int j = 0; j < n; ++j)
      if (j != i && leq(g[j], g[i]))
        for (int c = 0; c < m; ++c) u[c] |= g[j][c];
    if (u == g[i]) return false;
  }
  return true;
}

inline bool is_trim(const mingens::BoolMat& a) {
  Grid g = grid(a);
  return rows_trim(g) && rows_trim(transpose(g));
}

inline bool is_reduced(const mingens::BoolMat& a) {
  Grid g = grid(a);
  return rows_reduced(g) && rows_reduced(transpose(g));
}

// Semigroup generated by gens, by repeated multiplication until stable.
inline std::set<mingens::BoolMat> closure(const std::vector<mingens::BoolMat>& gens) {
  std::set<mingens::BoolMat> s(gens.begin(), gens.end());
  std::vector<mingens::BoolMat> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<mingens::BoolMat> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto p = multiply(x, g);
        if (s.insert(p).second) next.push_back(p);
      }
    frontier.swap(next);
  }
  return s;
}

inline std::vector<mingens::BoolMat> all_matrices(int n) {
  std::vector<mingens::BoolMat> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << (n * n)); ++b) {
    mingens::BoolMat a(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.set(i, j, (b >> (i * n + j)) & 1U);
    out.push_back(a);
  }
  return out;
}

// Principal two-sided ideal M a M. Uses the library product, which is
// checked against multiply() separately; the grid version is too slow here.
inline std::unordered_set<mingens::BoolMat> ideal(const mingens::BoolMat& a,
                                                  const std::vector<mingens::BoolMat>& all) {
  std::unordered_set<mingens::BoolMat> left;
  for (const auto& x : all) left.insert(x * a);
  std::unordered_set<mingens::BoolMat> out;
  for (const auto& l : left)
    for (const auto& y : all) out.insert(l * y);
  return out;
}

inline bool is_prime_number(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Distinct prime factors by sieve, for n <= limit.
inline std::vector<int> omega_table(int limit) {
  std::vector<int> omega(limit + 1, 0);
  for (int p = 2; p <= limit; ++p)
    if (omega[p] == 0)
      for (int m = p; m <= limit; m += p) ++omega[m];
  return omega;
}

}  // namespace oracle
