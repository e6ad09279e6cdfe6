#include "mingens/canonical.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <utility>

namespace mingens {

std::size_t BitMatrix::count() const {
  std::size_t c = 0;
  for (Word w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

CanonicalKey CanonicalKey::of(const BoolMat& a) {
  CanonicalKey k;
  k.n = a.dim();
  const int total = a.dim() * a.dim();
  k.bytes.assign(static_cast<std::size_t>((total + 7) / 8), 0);
  for (int p = 0; p < total; ++p)
    if (a.get(p / a.dim(), p % a.dim())) k.bytes[static_cast<std::size_t>(p / 8)] |= static_cast<std::uint8_t>(0x80U >> (p % 8));
  return k;
}

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  for (auto b : bytes) {
    s += digits[b >> 4];
    s += digits[b & 15];
  }
  return s;
}

namespace {

// Columns not yet told apart, as consecutive blocks of positions from the left.
using Partition = std::vector<Word>;

struct State {
  Word used = 0;
  Partition cells;
  friend bool operator<(const State& a, const State& b) {
    return std::tie(a.used, a.cells) < std::tie(b.used, b.cells);
  }
};

// Smallest value row r can take given the partition: within each cell its
// ones go to the rightmost positions.
Word image_value(Word r, const Partition& cells, int n) {
  Word v = 0;
  int pos = 0;
  for (Word cell : cells) {
    int size = std::popcount(cell);
    int ones = std::popcount(cell & r);
    for (int p = pos + size - ones; p < pos + size; ++p) v |= Word{1} << (n - 1 - p);
    pos += size;
  }
  return v;
}

Partition refine(const Partition& cells, Word r) {
  Partition out;
  out.reserve(cells.size() + 1);
  for (Word cell : cells) {
    if (Word z = cell & ~r) out.push_back(z);
    if (Word o = cell & r) out.push_back(o);
  }
  return out;
}

}  // namespace

BoolMat canonical_similarity(const BoolMat& a) {
  if (!is_reduced(a)) throw std::invalid_argument("canonical_similarity needs a reduced matrix");
  const int n = a.dim();
  BoolMat out(n);
  if (n == 0) return out;
  std::set<State> level{State{0, Partition{low_mask(n)}}};
  for (int depth = 0; depth < n; ++depth) {
    Word best = ~Word{0};
    std::vector<std::pair<const State*, int>> choices;
    for (const State& s : level) {
      for (int i = 0; i < n; ++i) {
        if ((s.used >> i) & 1U) continue;
        // equal rows are interchangeable; only try the first unused copy
        bool dup = false;
        for (int k = 0; k < i && !dup; ++k) dup = !((s.used >> k) & 1U) && a.row(k) == a.row(i);
        if (dup) continue;
        Word v = image_value(a.row(i), s.cells, n);
        if (v < best) {
          best = v;
          choices.clear();
        }
        if (v == best) choices.emplace_back(&s, i);
      }
    }
    std::set<State> next;
    for (auto [s, i] : choices) next.insert(State{s->used | (Word{1} << i), refine(s->cells, a.row(i))});
    out.set_row(depth, best);
    level = std::move(next);
  }
  return out;
}

namespace {

struct ConjugationSearch {
  const BoolMat& a;
  int n;
  std::vector<int> sigma;  // position -> original index
  std::vector<char> taken;
  BoolMat best;
  bool have_best = false;

  // Row-major entries known once positions 0..k are fixed: row 0 cols 0..k.
  int compare_prefix(int k) const {
    for (int q = 0; q <= k; ++q) {
      bool mine = a.get(sigma[0], sigma[static_cast<std::size_t>(q)]);
      bool theirs = best.get(0, q);
      if (mine != theirs) return mine ? 1 : -1;
    }
    return 0;
  }

  void leaf() {
    BoolMat img(n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (a.get(sigma[static_cast<std::size_t>(p)], sigma[static_cast<std::size_t>(q)])) img.set(p, q, true);
    if (!have_best || img < best) {
      best = img;
      have_best = true;
    }
  }

  void run(int k) {
    if (k == n) {
      leaf();
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      sigma[static_cast<std::size_t>(k)] = i;
      if (have_best && compare_prefix(k) > 0) continue;
      taken[static_cast<std::size_t>(i)] = 1;
      run(k + 1);
      taken[static_cast<std::size_t>(i)] = 0;
    }
  }
};

}  // namespace

BoolMat canonical_conjugation(const BoolMat& a) {
  const int n = a.dim();
  ConjugationSearch s{a, n, std::vector<int>(static_cast<std::size_t>(n)), std::vector<char>(static_cast<std::size_t>(n), 0),
                      BoolMat(n), false};
  s.run(0);
  return s.best;
}

ColoredDigraph bipartite_graph(const BoolMat& a) {
  const auto n = static_cast<std::size_t>(a.dim());
  ColoredDigraph g(2 * n);
  for (std::size_t v = n; v < 2 * n; ++v) g.colors[v] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.get(static_cast<int>(i), static_cast<int>(j))) g.add_edge(i, j + n);
  return g;
}

ColoredDigraph tripartite_graph(const BoolMat& a) {
  if (!is_reflexive(a)) throw std::invalid_argument("tripartite_graph needs a reflexive matrix");
  const auto n = static_cast<std::size_t>(a.dim());
  ColoredDigraph g(3 * n);
  for (std::size_t v = 0; v < 3 * n; ++v) g.colors[v] = static_cast<int>(v / n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.get(static_cast<int>(i), static_cast<int>(j))) g.add_edge(i, j + n);
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge(i + 2 * n, i);
    g.add_edge(i + 2 * n, i + n);
  }
  return g;
}

}  // namespace mingens
