#include "mingens/breen.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <stdexcept>

#include "mingens/canonical.hpp"

namespace mingens {

namespace {

void check_enum_dim(int n) {
  if (n < 1 || n > kMaxEnumDim) throw std::invalid_argument("enumeration needs 1 <= n <= 8");
}

bool is_right_justified(Word v) { return v != 0 && (v & (v + 1)) == 0; }

// Nonzero entries strictly increasing, zeros all before them.
bool zeros_first_then_increasing(std::span<const Word> v) {
  std::size_t k = 0;
  while (k < v.size() && v[k] == 0) ++k;
  for (std::size_t i = k; i < v.size(); ++i) {
    if (v[i] == 0) return false;
    if (i > k && v[i] <= v[i - 1]) return false;
  }
  return true;
}

std::vector<Word> columns(std::span<const Word> rows, int n) {
  std::vector<Word> c(static_cast<std::size_t>(n), 0);
  for (Word r : rows)
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(j)] = (c[static_cast<std::size_t>(j)] << 1) | ((r >> (n - 1 - j)) & 1U);
  return c;
}

enum class Variant { trim, all };

// Depth-first search below one root: m-1 zero rows then k right-justified ones.
class BreenSearch {
 public:
  BreenSearch(int n, Variant v) : n_(n), variant_(v), full_(low_mask(n)) {}

  void run(int m, int k, const MatrixVisitor& visit) {
    rows_.fill(0);
    first_ = m - 1;
    rows_[static_cast<std::size_t>(first_)] = low_mask(k);
    if (m == n_) {
      leaf(visit);
      return;
    }
    int d = m;
    prepare(d);
    next_[static_cast<std::size_t>(d)] = rows_[static_cast<std::size_t>(d - 1)] + 1;
    while (true) {
      if (d == n_) {
        leaf(visit);
        --d;
        continue;
      }
      Word x = next_[static_cast<std::size_t>(d)];
      bool found = false;
      for (; x <= full_; ++x)
        if (accept(d, x)) {
          found = true;
          break;
        }
      if (!found) {
        if (d == m) break;
        --d;
        continue;
      }
      rows_[static_cast<std::size_t>(d)] = x;
      next_[static_cast<std::size_t>(d)] = x + 1;
      ++d;
      if (d < n_) {
        prepare(d);
        next_[static_cast<std::size_t>(d)] = x + 1;
      }
    }
  }

 private:
  // Pairs of columns equal over rows 0..d-1, as (left bit, right bit).
  void prepare(int d) {
    auto& pairs = pairs_[static_cast<std::size_t>(d)];
    int& count = pair_count_[static_cast<std::size_t>(d)];
    count = 0;
    auto cols = columns(std::span<const Word>(rows_.data(), static_cast<std::size_t>(d)), n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (cols[static_cast<std::size_t>(i)] == cols[static_cast<std::size_t>(j)])
          pairs[static_cast<std::size_t>(count++)] = {Word{1} << (n_ - 1 - i), Word{1} << (n_ - 1 - j)};
  }

  bool accept(int d, Word x) const {
    if (std::popcount(x) < std::popcount(rows_[static_cast<std::size_t>(first_)])) return false;
    if (variant_ == Variant::trim) {
      for (int l = first_; l < d; ++l)
        if (is_subset(rows_[static_cast<std::size_t>(l)], x)) return false;
    } else {
      Word u = 0;
      for (int l = first_; l < d; ++l)
        if (is_subset(rows_[static_cast<std::size_t>(l)], x)) u |= rows_[static_cast<std::size_t>(l)];
      if (u == x) return false;
    }
    const auto& pairs = pairs_[static_cast<std::size_t>(d)];
    for (int p = 0; p < pair_count_[static_cast<std::size_t>(d)]; ++p) {
      auto [bi, bj] = pairs[static_cast<std::size_t>(p)];
      if ((x & bi) && !(x & bj)) return false;
    }
    return true;
  }

  void leaf(const MatrixVisitor& visit) const {
    std::span<const Word> rows(rows_.data(), static_cast<std::size_t>(n_));
    auto cols = columns(rows, n_);
    std::vector<Word> nz;
    for (Word c : cols)
      if (c) nz.push_back(c);
    for (std::size_t i = 1; i < nz.size(); ++i)
      if (nz[i] <= nz[i - 1]) return;
    if (!rows_reduced(cols)) return;
    if (variant_ == Variant::trim && !rows_trim(cols)) return;
    visit(BoolMat(n_, rows));
  }

  int n_;
  Variant variant_;
  Word full_;
  int first_ = 0;
  std::array<Word, kMaxEnumDim + 1> rows_{};
  std::array<Word, kMaxEnumDim + 1> next_{};
  std::array<std::array<std::pair<Word, Word>, 28>, kMaxEnumDim + 1> pairs_{};
  std::array<int, kMaxEnumDim + 1> pair_count_{};
};

std::vector<std::pair<int, int>> roots(int n) {
  std::vector<std::pair<int, int>> r;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= n; ++k) r.emplace_back(m, k);
  return r;
}

void for_each_variant(int n, Variant v, const MatrixVisitor& visit) {
  check_enum_dim(n);
  visit(BoolMat::zero(n));
  BreenSearch s(n, v);
  for (auto [m, k] : roots(n)) s.run(m, k, visit);
}

// Runs fn(root, visitor-sink) per root and merges per-thread sets.
template <class Key, class Map>
std::set<Key> collect(int n, Variant v, Exec exec, Map map) {
  check_enum_dim(n);
  auto rs = roots(n);
  std::set<Key> merged;
  merged.insert(map(BoolMat::zero(n)));
  if (exec == Exec::serial) {
    BreenSearch s(n, v);
    for (auto [m, k] : rs) s.run(m, k, [&](const BoolMat& a) { merged.insert(map(a)); });
    return merged;
  }
#pragma omp parallel
  {
    std::set<Key> local;
    BreenSearch s(n, v);
#pragma omp for schedule(dynamic, 1) nowait
    for (std::size_t r = 0; r < rs.size(); ++r)
      s.run(rs[r].first, rs[r].second, [&](const BoolMat& a) { local.insert(map(a)); });
#pragma omp critical(mingens_breen_merge)
    merged.merge(local);
  }
  return merged;
}

}  // namespace

bool is_breen_form(const BoolMat& a) {
  if (!is_reduced(a)) return false;
  const int n = a.dim();
  auto cols = columns(a.rows(), n);
  if (!zeros_first_then_increasing(a.rows()) || !zeros_first_then_increasing(cols)) return false;
  auto first_nonzero = [](std::span<const Word> v) -> Word {
    for (Word w : v)
      if (w) return w;
    return 0;
  };
  Word fr = first_nonzero(a.rows());
  if (fr == 0) return true;
  Word fc = first_nonzero(cols);
  if (!is_right_justified(fr) || !is_right_justified(fc)) return false;
  for (Word r : a.rows())
    if (r && std::popcount(r) < std::popcount(fr)) return false;
  return true;
}

bool is_reflexive_breen_form(const BoolMat& a) {
  if (!is_reflexive(a)) return false;
  const int n = a.dim();
  Word r0 = a.row(0);
  // ones of the first row on the left
  if (r0 != (low_mask(n) & ~low_mask(n - std::popcount(r0)))) return false;
  Word seen = 0;
  for (int i = 0; i < n; ++i) {
    Word r = a.row(i);
    if (std::popcount(r) < std::popcount(r0)) return false;
    seen |= r;
    int last = n - 1 - std::countr_zero(r);
    Word need = low_mask(n) & ~low_mask(n - 1 - last);
    if (!is_subset(need, seen)) return false;
  }
  return true;
}

void for_each_trim_breen(int n, const MatrixVisitor& visit) { for_each_variant(n, Variant::trim, visit); }

std::vector<BoolMat> trim_breen(int n, Exec exec) {
  auto s = collect<BoolMat>(n, Variant::trim, exec, [](const BoolMat& a) { return a; });
  return {s.begin(), s.end()};
}

void for_each_breen(int n, const MatrixVisitor& visit) { for_each_variant(n, Variant::all, visit); }

std::uint64_t count_breen(int n, Exec exec) {
  check_enum_dim(n);
  auto rs = roots(n);
  std::uint64_t total = 1;  // zero matrix
  if (exec == Exec::serial) {
    BreenSearch s(n, Variant::all);
    for (auto [m, k] : rs) s.run(m, k, [&](const BoolMat&) { ++total; });
    return total;
  }
#pragma omp parallel reduction(+ : total)
  {
    BreenSearch s(n, Variant::all);
#pragma omp for schedule(dynamic, 1)
    for (std::size_t r = 0; r < rs.size(); ++r) s.run(rs[r].first, rs[r].second, [&](const BoolMat&) { ++total; });
  }
  return total;
}

std::vector<BoolMat> canonical_superset(int n, Exec exec) {
  auto s = collect<BoolMat>(n, Variant::trim, exec, [](const BoolMat& a) { return canonical_similarity(a); });
  return {s.begin(), s.end()};
}

std::vector<BoolMat> filter_input(const std::vector<BoolMat>& superset) {
  std::vector<BoolMat> out;
  for (const auto& a : superset)
    if (!is_permutation(a)) out.push_back(a);
  return out;
}

std::uint64_t count_jclasses(int n, Exec exec) {
  return collect<BoolMat>(n, Variant::all, exec, [](const BoolMat& a) { return canonical_similarity(a); }).size();
}

namespace {

class ReflexiveSearch {
 public:
  explicit ReflexiveSearch(int n) : n_(n) {}

  // Rows 0..depth-1 fixed by the caller.
  void run(std::span<const Word> prefix, const MatrixVisitor& visit) {
    std::copy(prefix.begin(), prefix.end(), rows_.begin());
    descend(static_cast<int>(prefix.size()), visit);
  }

  // Candidates for row d given rows 0..d-1.
  bool accept(int d, Word x) const {
    const int n = n_;
    if (!((x >> (n - 1 - d)) & 1U)) return false;
    if (d == 0) {
      Word lead = low_mask(n) & ~low_mask(n - std::popcount(x));
      return x == lead;
    }
    if (std::popcount(x) < std::popcount(rows_[0])) return false;
    Word seen = x;
    for (int l = 0; l < d; ++l) {
      Word r = rows_[static_cast<std::size_t>(l)];
      if (is_subset(r, x) || is_subset(x, r)) return false;
      seen |= r;
    }
    int last = n - 1 - std::countr_zero(x);
    Word need = low_mask(n) & ~low_mask(n - 1 - last);
    return is_subset(need, seen);
  }

  void set_row(int d, Word x) { rows_[static_cast<std::size_t>(d)] = x; }

 private:
  void descend(int d, const MatrixVisitor& visit) {
    if (d == n_) {
      std::span<const Word> rows(rows_.data(), static_cast<std::size_t>(n_));
      if (rows_trim(columns(rows, n_))) visit(BoolMat(n_, rows));
      return;
    }
    for (Word x = 1; x <= low_mask(n_); ++x) {
      if (!accept(d, x)) continue;
      rows_[static_cast<std::size_t>(d)] = x;
      descend(d + 1, visit);
    }
  }

  int n_;
  std::array<Word, kMaxEnumDim> rows_{};
};

// All valid two-row prefixes (or one-row when n == 1): the parallel work units.
std::vector<std::vector<Word>> reflexive_prefixes(int n) {
  ReflexiveSearch s(n);
  std::vector<std::vector<Word>> out;
  for (Word x = 1; x <= low_mask(n); ++x) {
    if (!s.accept(0, x)) continue;
    if (n == 1) {
      out.push_back({x});
      continue;
    }
    s.set_row(0, x);
    for (Word y = 1; y <= low_mask(n); ++y)
      if (s.accept(1, y)) out.push_back({x, y});
  }
  return out;
}

}  // namespace

void for_each_reflexive_breen(int n, const MatrixVisitor& visit) {
  check_enum_dim(n);
  ReflexiveSearch s(n);
  for (const auto& p : reflexive_prefixes(n)) s.run(p, visit);
}

std::vector<BoolMat> reflexive_representatives(int n, Exec exec) {
  check_enum_dim(n);
  auto prefixes = reflexive_prefixes(n);
  std::set<BoolMat> merged;
  if (exec == Exec::serial) {
    ReflexiveSearch s(n);
    for (const auto& p : prefixes) s.run(p, [&](const BoolMat& a) { merged.insert(canonical_conjugation(a)); });
    return {merged.begin(), merged.end()};
  }
#pragma omp parallel
  {
    std::set<BoolMat> local;
    ReflexiveSearch s(n);
#pragma omp for schedule(dynamic, 1) nowait
    for (std::size_t r = 0; r < prefixes.size(); ++r)
      s.run(prefixes[r], [&](const BoolMat& a) { local.insert(canonical_conjugation(a)); });
#pragma omp critical(mingens_reflexive_merge)
    merged.merge(local);
  }
  return {merged.begin(), merged.end()};
}

}  // namespace mingens
