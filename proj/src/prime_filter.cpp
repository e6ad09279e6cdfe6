#include "mingens/prime_filter.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "mingens/breen.hpp"

namespace mingens {

namespace {

void check_input(std::span<const BoolMat> q) {
  int n = -1;
  for (const auto& a : q) {
    if (n >= 0 && a.dim() != n) throw std::invalid_argument("filter input has mixed dimensions");
    n = a.dim();
    if (n > 8) throw std::invalid_argument("filters need n <= 8");
    if (is_permutation(a)) throw std::invalid_argument("filter input contains a permutation matrix");
  }
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<SmallRowSpace> column_orbit(const BoolMat& a, const std::vector<std::vector<int>>& perms) {
  std::vector<SmallRowSpace> out;
  out.reserve(perms.size());
  for (const auto& p : perms) out.push_back(small_row_space(permute_columns(a, p)));
  return out;
}

// Distinct row spaces of all column permutations of the given matrices.
std::vector<SmallRowSpace> row_space_orbits(std::span<const BoolMat> ms, int n, Exec exec) {
  auto perms = all_permutations(n);
  std::unordered_set<SmallRowSpace, SmallRowSpaceHash> seen;
  if (exec == Exec::serial) {
    for (const auto& a : ms)
      for (auto& s : column_orbit(a, perms)) seen.insert(s);
  } else {
#pragma omp parallel
    {
      std::vector<SmallRowSpace> local;
#pragma omp for schedule(dynamic, 4) nowait
      for (std::size_t i = 0; i < ms.size(); ++i) {
        auto orbit = column_orbit(ms[i], perms);
        local.insert(local.end(), orbit.begin(), orbit.end());
      }
#pragma omp critical(mingens_xset_merge)
      seen.insert(local.begin(), local.end());
    }
  }
  std::vector<SmallRowSpace> out(seen.begin(), seen.end());
  // largest first so strict-containment scans can stop early
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    auto sa = a.size(), sb = b.size();
    return sa != sb ? sa > sb : a < b;
  });
  return out;
}

// True iff some member of xs (sorted by size, descending) strictly contains s.
bool strictly_inside_any(const SmallRowSpace& s, const std::vector<SmallRowSpace>& xs) {
  const auto sz = s.size();
  for (const auto& x : xs) {
    if (x.size() <= sz) break;
    if (s.subset_of(x)) return true;
  }
  return false;
}

std::vector<BoolMat> keep_maximal(std::span<const BoolMat> q, const std::vector<SmallRowSpace>& xs, Exec exec) {
  std::vector<char> keep(q.size(), 0);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < q.size(); ++i) keep[i] = !strictly_inside_any(small_row_space(q[i]), xs);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::size_t i = 0; i < q.size(); ++i) keep[i] = !strictly_inside_any(small_row_space(q[i]), xs);
  }
  std::vector<BoolMat> out;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (keep[i]) out.push_back(q[i]);
  return out;
}

std::vector<BoolMat> drop_elementary_sorted(std::vector<BoolMat> v) {
  std::erase_if(v, [](const BoolMat& a) { return is_elementary(a); });
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

bool is_elementary(const BoolMat& a) {
  const int n = a.dim();
  if (n < 2 || a.popcount() != n + 1 || !is_hall(a)) return false;
  // exactly one row with two ones, contained-in relation as in E
  return is_reduced(a) && canonical_similarity(a) == canonical_similarity(elementary(n, 1, 0));
}

std::vector<BoolMat> filter_by_row_spaces(std::span<const BoolMat> q, Exec exec, FilterStats* stats) {
  check_input(q);
  if (q.empty()) return {};
  const int n = q.front().dim();
  std::vector<BoolMat> with_e(q.begin(), q.end());
  with_e.push_back(elementary(n, 1, 0));
  auto xs = row_space_orbits(with_e, n, exec);
  if (stats) {
    stats->input = q.size();
    stats->x_size = xs.size();
  }
  return drop_elementary_sorted(keep_maximal(q, xs, exec));
}

AugmentedGraph::AugmentedGraph(const BoolMat& a) : n_(a.dim()) {
  RowSpace rs(a);
  vectors_.assign(rs.elements().begin(), rs.elements().end());
  const std::size_t m = vectors_.size();
  graph_ = ColoredDigraph(m + static_cast<std::size_t>(n_));
  for (std::size_t v = 0; v < m; ++v) {
    for (std::size_t w = 0; w < m; ++w)
      if (is_subset(vectors_[v], vectors_[w])) graph_.add_edge(v, w);
    for (int i = 0; i < n_; ++i)
      if ((vectors_[v] >> (n_ - 1 - i)) & 1U) graph_.add_edge(v, c_vertex(i));
  }
  for (int i = 0; i < n_; ++i) graph_.colors[c_vertex(i)] = 1;
}

std::optional<std::size_t> AugmentedGraph::vertex_of(Word v) const {
  auto it = std::lower_bound(vectors_.begin(), vectors_.end(), v);
  if (it == vectors_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vectors_.begin());
}

namespace {

// Bipartite perfect matching on c-vertex domains (bit j of dom[i]: c_i -> c_j).
bool domains_feasible(const std::array<Word, 64>& dom, int n) {
  std::array<int, 64> match{};
  match.fill(-1);
  auto try_assign = [&](auto&& self, int i, Word& seen) -> bool {
    Word d = dom[static_cast<std::size_t>(i)] & ~seen;
    while (d) {
      int j = std::countr_zero(d);
      d &= d - 1;
      seen |= Word{1} << j;
      int& m = match[static_cast<std::size_t>(j)];
      if (m < 0 || self(self, m, seen)) {
        m = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    Word seen = 0;
    if (!try_assign(try_assign, i, seen)) return false;
  }
  return true;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const AugmentedGraph& k, const AugmentedGraph& l) : k_(k), l_(l), n_(k.dim()) {
    const auto& gk = k_.base();
    const auto& gl = l_.base();
    for (std::size_t v = 0; v < k_.space_size(); ++v) order_.push_back(v);
    kc_.resize(k_.space_size());
    lc_.resize(l_.space_size());
    for (std::size_t v = 0; v < k_.space_size(); ++v)
      for (int i = 0; i < n_; ++i)
        if (gk.edge(v, k_.c_vertex(i))) kc_[v] |= Word{1} << i;
    for (std::size_t w = 0; w < l_.space_size(); ++w)
      for (int i = 0; i < n_; ++i)
        if (gl.edge(w, l_.c_vertex(i))) lc_[w] |= Word{1} << i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return std::popcount(kc_[a]) > std::popcount(kc_[b]); });
    image_.assign(k_.space_size(), 0);
    used_.assign(l_.space_size(), 0);
  }

  bool run() {
    std::array<Word, 64> dom{};
    dom.fill(low_mask(n_));
    return extend(0, dom);
  }

 private:
  bool extend(std::size_t depth, const std::array<Word, 64>& dom) {
    if (depth == order_.size()) return true;
    const auto& gk = k_.base();
    const auto& gl = l_.base();
    const std::size_t v = order_[depth];
    const int deg = std::popcount(kc_[v]);
    for (std::size_t w = 0; w < l_.space_size(); ++w) {
      if (used_[w] || std::popcount(lc_[w]) != deg) continue;
      bool ok = true;
      for (std::size_t e = 0; e < depth && ok; ++e) {
        std::size_t u = order_[e], fu = image_[u];
        ok = gk.edge(v, u) == gl.edge(w, fu) && gk.edge(u, v) == gl.edge(fu, w);
      }
      if (!ok) continue;
      std::array<Word, 64> next = dom;
      for (int i = 0; i < n_ && ok; ++i) {
        auto& d = next[static_cast<std::size_t>(i)];
        d &= ((kc_[v] >> i) & 1U) ? lc_[w] : ~lc_[w] & low_mask(n_);
        ok = d != 0;
      }
      if (!ok || !domains_feasible(next, n_)) continue;
      used_[w] = 1;
      image_[v] = w;
      if (extend(depth + 1, next)) return true;
      used_[w] = 0;
    }
    return false;
  }

  const AugmentedGraph& k_;
  const AugmentedGraph& l_;
  int n_;
  std::vector<std::size_t> order_;
  std::vector<Word> kc_, lc_;
  std::vector<std::size_t> image_;
  std::vector<char> used_;
};

// Row-space vertices per popcount; an embedding needs l to dominate k.
std::array<std::size_t, 65> popcount_histogram(const AugmentedGraph& g) {
  std::array<std::size_t, 65> h{};
  for (Word v : g.vectors()) ++h[static_cast<std::size_t>(std::popcount(v))];
  return h;
}

bool histogram_dominated(const std::array<std::size_t, 65>& a, const std::array<std::size_t, 65>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

bool embedding_exists(const AugmentedGraph& k, const AugmentedGraph& l) {
  if (k.dim() != l.dim()) throw std::invalid_argument("embedding_exists: dimension mismatch");
  if (k.space_size() > l.space_size()) return false;
  if (!histogram_dominated(popcount_histogram(k), popcount_histogram(l))) return false;
  return EmbeddingSearch(k, l).run();
}

std::vector<BoolMat> filter_by_embeddings(std::span<const BoolMat> q, Exec exec, FilterStats* stats) {
  check_input(q);
  if (q.empty()) return {};
  const int n = q.front().dim();
  std::vector<BoolMat> targets(q.begin(), q.end());
  targets.push_back(elementary(n, 1, 0));
  std::vector<AugmentedGraph> graphs;
  std::vector<std::array<std::size_t, 65>> hist;
  graphs.reserve(targets.size());
  for (const auto& a : targets) {
    graphs.emplace_back(a);
    hist.push_back(popcount_histogram(graphs.back()));
  }
  std::vector<char> keep(q.size(), 1);
  std::size_t searches = 0;
  auto discard = [&](std::size_t i) {
    std::size_t local = 0;
    for (std::size_t j = 0; j < targets.size(); ++j) {
      if (j == i) continue;
      if (graphs[i].space_size() > graphs[j].space_size() || !histogram_dominated(hist[i], hist[j])) continue;
      ++local;
      if (EmbeddingSearch(graphs[i], graphs[j]).run()) return std::pair{true, local};
    }
    return std::pair{false, local};
  };
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < q.size(); ++i) {
      auto [d, s] = discard(i);
      keep[i] = !d;
      searches += s;
    }
  } else {
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : searches)
    for (std::size_t i = 0; i < q.size(); ++i) {
      auto [d, s] = discard(i);
      keep[i] = !d;
      searches += s;
    }
  }
  if (stats) {
    stats->input = q.size();
    stats->embedding_searches = searches;
  }
  std::vector<BoolMat> out;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (keep[i]) out.push_back(q[i]);
  return drop_elementary_sorted(std::move(out));
}

BoolMat extend_prime(const BoolMat& a) {
  const int n = a.dim() + 1;
  BoolMat b(n);
  for (int i = 0; i < a.dim(); ++i) b.set_row(i, a.row(i) << 1);
  b.set_row(n - 1, 1);
  return b;
}

std::vector<BoolMat> prefilter(std::span<const BoolMat> q, std::span<const BoolMat> lower_primes,
                               const PrefilterOptions& opt, Exec exec) {
  check_input(q);
  if (q.empty()) return {};
  const int n = q.front().dim();
  auto by_space_desc = [](std::vector<BoolMat> v, std::size_t keep) {
    std::stable_sort(v.begin(), v.end(),
                     [](const BoolMat& a, const BoolMat& b) { return small_row_space(a).size() > small_row_space(b).size(); });
    if (v.size() > keep) v.resize(keep);
    return v;
  };
  std::vector<BoolMat> ext;
  for (const auto& p : lower_primes) ext.push_back(extend_prime(p));
  std::vector<BoolMat> y = by_space_desc(ext, opt.extended);
  auto big = by_space_desc(std::vector<BoolMat>(q.begin(), q.end()), opt.largest);
  y.insert(y.end(), big.begin(), big.end());
  if (y.empty()) return {q.begin(), q.end()};
  return keep_maximal(q, row_space_orbits(y, n, exec), exec);
}

namespace {

class OrderEmbedding {
 public:
  OrderEmbedding(const RowSpace& a, const RowSpace& b)
      : av_(a.elements().begin(), a.elements().end()), bv_(b.elements().begin(), b.elements().end()) {
    // most constrained first: larger elements sit above more of the space
    std::sort(av_.begin(), av_.end(), [](Word x, Word y) {
      int px = std::popcount(x), py = std::popcount(y);
      return px != py ? px > py : x < y;
    });
    image_.resize(av_.size());
    used_.assign(bv_.size(), 0);
  }

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t depth) {
    if (depth == av_.size()) return true;
    Word x = av_[depth];
    for (std::size_t w = 0; w < bv_.size(); ++w) {
      if (used_[w]) continue;
      Word fx = bv_[w];
      bool ok = true;
      for (std::size_t e = 0; e < depth && ok; ++e) {
        Word y = av_[e], fy = image_[e];
        ok = is_subset(x, y) == is_subset(fx, fy) && is_subset(y, x) == is_subset(fy, fx);
      }
      if (!ok) continue;
      used_[w] = 1;
      image_[depth] = fx;
      if (extend(depth + 1)) return true;
      used_[w] = 0;
    }
    return false;
  }

  std::vector<Word> av_, bv_;
  std::vector<Word> image_;
  std::vector<char> used_;
};

}  // namespace

bool j_leq(const BoolMat& a, const BoolMat& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("j_leq: dimension mismatch");
  RowSpace ra(a), rb(b);
  if (ra.size() > rb.size()) return false;
  return OrderEmbedding(ra, rb).run();
}

std::string to_string(FilterKind k) { return k == FilterKind::row_spaces ? "rowspace" : "embedding"; }

FilterKind filter_kind_from_string(const std::string& s) {
  if (s == "rowspace" || s == "row_spaces") return FilterKind::row_spaces;
  if (s == "embedding" || s == "embeddings") return FilterKind::embeddings;
  throw std::invalid_argument("unknown filter: " + s);
}

std::vector<BoolMat> prime_representatives(int n, const PrimeOptions& opt, FilterStats* stats) {
  if (n < 1 || n > 8) throw std::invalid_argument("prime_representatives needs 1 <= n <= 8");
  auto q = filter_input(canonical_superset(n, opt.exec));
  std::size_t before = q.size();
  if (opt.use_prefilter && n >= 4) {
    PrimeOptions lower = opt;
    lower.use_prefilter = false;
    auto lp = prime_representatives(n - 1, lower);
    q = prefilter(q, lp, opt.prefilter, opt.exec);
  }
  auto out = opt.kind == FilterKind::row_spaces ? filter_by_row_spaces(q, opt.exec, stats)
                                                : filter_by_embeddings(q, opt.exec, stats);
  if (stats) stats->prefiltered = before - q.size();
  return out;
}

}  // namespace mingens
