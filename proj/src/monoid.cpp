#include "mingens/monoid.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "mingens/boolmat.hpp"

namespace mingens {

Green green_from_string(const std::string& s) {
  if (s == "L") return Green::L;
  if (s == "R") return Green::R;
  if (s == "J") return Green::J;
  if (s == "H") return Green::H;
  throw std::invalid_argument("unknown Green's relation: " + s);
}

std::string to_string(Green g) {
  switch (g) {
    case Green::L:
      return "L";
    case Green::R:
      return "R";
    case Green::J:
      return "J";
    case Green::H:
      return "H";
  }
  return "?";
}

Partition strongly_connected(const std::vector<std::vector<std::uint32_t>>& adj) {
  // iterative Tarjan
  const std::size_t n = adj.size();
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> index(n, unset), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  Partition p;
  p.class_of.assign(n, unset);
  std::uint32_t next = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> call;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (index[s] != unset) continue;
    call.emplace_back(s, 0);
    index[s] = low[s] = next++;
    stack.push_back(s);
    on_stack[s] = 1;
    while (!call.empty()) {
      auto& [v, e] = call.back();
      if (e < adj[v].size()) {
        std::uint32_t w = adj[v][e++];
        if (index[w] == unset) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          p.class_of[w] = static_cast<std::uint32_t>(p.count);
        } while (w != v);
        ++p.count;
      }
      std::uint32_t done = v;
      call.pop_back();
      if (!call.empty()) {
        std::uint32_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return p;
}

Partition intersect(const Partition& a, const Partition& b) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;
  Partition p;
  p.class_of.resize(a.class_of.size());
  for (std::size_t i = 0; i < a.class_of.size(); ++i) {
    auto [it, fresh] = ids.try_emplace({a.class_of[i], b.class_of[i]}, static_cast<std::uint32_t>(ids.size()));
    p.class_of[i] = it->second;
  }
  p.count = ids.size();
  return p;
}

namespace {

// Row space of the matrix whose rows are the n-bit chunks of bits; n <= 5
// so the space fits in one 32-bit set.
Word row_space_key(Word bits, int n) {
  Word space = 1;  // zero vector
  const Word mask = low_mask(n);
  for (int i = 0; i < n; ++i) {
    Word r = (bits >> (i * n)) & mask;
    if ((space >> r) & 1U) continue;
    Word s = space;
    while (s) {
      int x = std::countr_zero(s);
      s &= s - 1;
      space |= Word{1} << (static_cast<Word>(x) | r);
    }
  }
  return space;
}

}  // namespace

std::uint64_t count_lclasses(int n, Exec exec) {
  if (n < 1 || n > 5) throw std::invalid_argument("count_lclasses needs 1 <= n <= 5");
  const Word total = Word{1} << (n * n);
  std::unordered_set<Word> keys;
  if (exec == Exec::serial) {
    for (Word b = 0; b < total; ++b) keys.insert(row_space_key(b, n));
    return keys.size();
  }
#pragma omp parallel
  {
    std::unordered_set<Word> local;
#pragma omp for schedule(static)
    for (Word b = 0; b < total; ++b) local.insert(row_space_key(b, n));
#pragma omp critical(mingens_lclass_merge)
    keys.insert(local.begin(), local.end());
  }
  return keys.size();
}

}  // namespace mingens
