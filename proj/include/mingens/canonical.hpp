#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mingens/boolmat.hpp"

namespace mingens {

// Square bit matrix used as digraph adjacency.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}
  std::size_t size() const { return n_; }
  bool test(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= Word{1} << (j % 64); }
  std::size_t count() const;
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

struct ColoredDigraph {
  std::size_t vertex_count = 0;
  std::vector<int> colors;
  BitMatrix adjacency;

  explicit ColoredDigraph(std::size_t n = 0) : vertex_count(n), colors(n, 0), adjacency(n) {}
  bool edge(std::size_t u, std::size_t v) const { return adjacency.test(u, v); }
  void add_edge(std::size_t u, std::size_t v) { adjacency.set(u, v); }
  std::size_t edge_count() const { return adjacency.count(); }
};

// Row-major bits packed into bytes, most significant bit first.
struct CanonicalKey {
  int n = 0;
  std::vector<std::uint8_t> bytes;

  static CanonicalKey of(const BoolMat& a);
  std::string hex() const;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

// Minimum over row and column permutations of the row-major bit string.
// Input must be reduced.
BoolMat canonical_similarity(const BoolMat& a);
// Minimum over a single permutation applied to rows and columns.
BoolMat canonical_conjugation(const BoolMat& a);

// Vertices 0..n-1 rows (colour 0), n..2n-1 columns (colour 1); i -> j+n iff a_ij.
ColoredDigraph bipartite_graph(const BoolMat& a);
// Adds vertices 2n..3n-1 (colour 2) with i+2n -> i and i+2n -> i+n.
ColoredDigraph tripartite_graph(const BoolMat& a);

}  // namespace mingens
