#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mingens/exec.hpp"

namespace mingens {

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t cap)
      : std::runtime_error("closure exceeded size cap of " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

struct ClosureOptions {
  std::size_t cap = 50'000'000;
  Exec exec = Exec::parallel;
  bool track_words = false;  // shortest words over generator indices
};

template <class T, class Hash = std::hash<T>>
struct ClosureResult {
  std::vector<T> elements;  // breadth-first discovery order
  std::unordered_map<T, std::uint32_t, Hash> index;
  std::vector<std::vector<std::uint32_t>> words;

  std::size_t size() const { return elements.size(); }
  bool contains(const T& x) const { return index.find(x) != index.end(); }
  std::optional<std::uint32_t> find(const T& x) const {
    auto it = index.find(x);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

// Semigroup generated by gens: breadth-first right multiplication. Products
// of a frontier are computed in parallel and inserted serially, so the result
// (and word assignment) does not depend on the schedule.
template <class T, class Hash = std::hash<T>>
ClosureResult<T, Hash> closure(std::span<const T> gens, const ClosureOptions& opt = {}) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  ClosureResult<T, Hash> r;
  auto insert = [&](const T& x, const std::vector<std::uint32_t>* word) {
    if (r.index.find(x) != r.index.end()) return;
    if (r.elements.size() >= opt.cap) throw CapExceeded(opt.cap);
    r.index.emplace(x, static_cast<std::uint32_t>(r.elements.size()));
    r.elements.push_back(x);
    if (opt.track_words) r.words.push_back(word ? *word : std::vector<std::uint32_t>{});
  };
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::vector<std::uint32_t> w{static_cast<std::uint32_t>(g)};
    insert(gens[g], &w);
  }
  std::size_t lo = 0;
  std::vector<T> products;
  while (lo < r.elements.size()) {
    const std::size_t hi = r.elements.size();
    const std::size_t k = gens.size();
    products.resize((hi - lo) * k);
    if (opt.exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
      for (std::size_t i = lo; i < hi; ++i)
        for (std::size_t g = 0; g < k; ++g) products[(i - lo) * k + g] = r.elements[i] * gens[g];
    } else {
      for (std::size_t i = lo; i < hi; ++i)
        for (std::size_t g = 0; g < k; ++g) products[(i - lo) * k + g] = r.elements[i] * gens[g];
    }
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t g = 0; g < k; ++g) {
        const T& p = products[(i - lo) * k + g];
        if (opt.track_words) {
          if (r.index.find(p) != r.index.end()) continue;
          auto w = r.words[i];
          w.push_back(static_cast<std::uint32_t>(g));
          insert(p, &w);
        } else {
          insert(p, nullptr);
        }
      }
    lo = hi;
  }
  return r;
}

struct IrredundancyResult {
  bool irredundant = true;
  std::optional<std::size_t> witness;  // index of a generator lying in the closure of the others
};

template <class T, class Hash = std::hash<T>>
IrredundancyResult is_irredundant(std::span<const T> gens, const ClosureOptions& opt = {}) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<T> rest;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (rest.empty()) continue;
    if (closure<T, Hash>(std::span<const T>(rest), opt).contains(gens[i])) return {false, i};
  }
  return {};
}

enum class Green { L, R, J, H };
Green green_from_string(const std::string& s);
std::string to_string(Green g);

struct Partition {
  std::vector<std::uint32_t> class_of;
  std::size_t count = 0;
};

// Strongly connected components; adj[v] lists the out-neighbours of v.
Partition strongly_connected(const std::vector<std::vector<std::uint32_t>>& adj);
Partition intersect(const Partition& a, const Partition& b);

// Green's classes of the monoid S^1 through Cayley graph components: x R y
// iff each is reachable from the other by right multiplication by generators.
template <class T, class Hash = std::hash<T>>
Partition greens_classes(const ClosureResult<T, Hash>& m, std::span<const T> gens, Green rel) {
  const std::size_t n = m.size();
  std::vector<std::vector<std::uint32_t>> right(n), left(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const T& g : gens) {
      right[i].push_back(m.index.at(m.elements[i] * g));
      left[i].push_back(m.index.at(g * m.elements[i]));
    }
  switch (rel) {
    case Green::R:
      return strongly_connected(right);
    case Green::L:
      return strongly_connected(left);
    case Green::H:
      return intersect(strongly_connected(left), strongly_connected(right));
    case Green::J: {
      auto both = right;
      for (std::size_t i = 0; i < n; ++i) both[i].insert(both[i].end(), left[i].begin(), left[i].end());
      return strongly_connected(both);
    }
  }
  return {};
}

// Number of distinct row spaces over all of M_n(B), n <= 5.
std::uint64_t count_lclasses(int n, Exec exec = Exec::parallel);

}  // namespace mingens
