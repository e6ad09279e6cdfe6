#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mingens/boolmat.hpp"
#include "mingens/canonical.hpp"
#include "mingens/exec.hpp"

namespace mingens {

struct FilterStats {
  std::size_t input = 0;
  std::size_t x_size = 0;        // distinct row spaces generated (row-space filter)
  std::size_t embedding_searches = 0;
  std::size_t prefiltered = 0;   // candidates removed before the main filter
};

// Graph of the row space (edge v -> w iff v <= w, loops included) plus
// vertices c_0..c_{n-1} with v -> c_i iff v_i = 1.
class AugmentedGraph {
 public:
  explicit AugmentedGraph(const BoolMat& a);

  int dim() const { return n_; }
  std::size_t space_size() const { return vectors_.size(); }
  std::size_t c_vertex(int i) const { return vectors_.size() + static_cast<std::size_t>(i); }
  const ColoredDigraph& base() const { return graph_; }
  std::span<const Word> vectors() const { return vectors_; }
  std::optional<std::size_t> vertex_of(Word v) const;

 private:
  int n_;
  std::vector<Word> vectors_;  // sorted
  ColoredDigraph graph_;
};

// Injective map preserving edges and non-edges, sending row-space vertices to
// row-space vertices and permuting the c-vertices.
bool embedding_exists(const AugmentedGraph& k, const AugmentedGraph& l);

// Both filters take canonical representatives without permutation matrices
// and return the prime representatives, sorted. n <= 8.
std::vector<BoolMat> filter_by_row_spaces(std::span<const BoolMat> q, Exec exec = Exec::parallel,
                                          FilterStats* stats = nullptr);
std::vector<BoolMat> filter_by_embeddings(std::span<const BoolMat> q, Exec exec = Exec::parallel,
                                          FilterStats* stats = nullptr);

// Appends a zero row and column and sets the new corner entry.
BoolMat extend_prime(const BoolMat& a);

struct PrefilterOptions {
  std::size_t extended = 13;  // extended primes with the largest row spaces
  std::size_t largest = 0;    // members of q with the largest row spaces
};

// Drops members of q whose row space is strictly inside a column permutation
// of a chosen large row space. Primes always survive.
std::vector<BoolMat> prefilter(std::span<const BoolMat> q, std::span<const BoolMat> lower_primes,
                               const PrefilterOptions& opt, Exec exec = Exec::parallel);

// J-order test: an order embedding of row spaces exists.
bool j_leq(const BoolMat& a, const BoolMat& b);

bool is_elementary(const BoolMat& a);

enum class FilterKind { row_spaces, embeddings };
std::string to_string(FilterKind k);
FilterKind filter_kind_from_string(const std::string& s);

struct PrimeOptions {
  FilterKind kind = FilterKind::row_spaces;
  Exec exec = Exec::parallel;
  bool use_prefilter = false;
  PrefilterOptions prefilter;
};

// Whole pipeline: enumerate, canonicalise, (prefilter), filter. n <= 8.
std::vector<BoolMat> prime_representatives(int n, const PrimeOptions& opt = {}, FilterStats* stats = nullptr);

}  // namespace mingens
