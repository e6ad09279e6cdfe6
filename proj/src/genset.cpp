#include "mingens/genset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mingens/breen.hpp"

namespace mingens {

namespace named {

BoolMat T(int n) {
  if (n < 2) throw std::invalid_argument("T needs n >= 2");
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[0], p[1]);
  return permutation_matrix(p);
}

BoolMat U(int n) {
  if (n < 1) throw std::invalid_argument("U needs n >= 1");
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (i + 1) % n;
  return permutation_matrix(p);
}

BoolMat E(int n) {
  if (n < 2) throw std::invalid_argument("E needs n >= 2");
  return elementary(n, 1, 0);
}

BoolMat F(int n) {
  if (n < 1) throw std::invalid_argument("F needs n >= 1");
  BoolMat f = BoolMat::identity(n);
  f.set(0, 0, false);
  return f;
}

}  // namespace named

MonoidTag monoid_from_string(const std::string& s) {
  if (s == "full") return MonoidTag::full;
  if (s == "reflexive") return MonoidTag::reflexive;
  if (s == "hall") return MonoidTag::hall;
  if (s == "ut") return MonoidTag::ut;
  if (s == "lt") return MonoidTag::lt;
  if (s == "gossip") return MonoidTag::gossip;
  throw std::invalid_argument("unknown monoid: " + s);
}

std::string to_string(MonoidTag t) {
  switch (t) {
    case MonoidTag::full:
      return "full";
    case MonoidTag::reflexive:
      return "reflexive";
    case MonoidTag::hall:
      return "hall";
    case MonoidTag::ut:
      return "ut";
    case MonoidTag::lt:
      return "lt";
    case MonoidTag::gossip:
      return "gossip";
  }
  return "?";
}

namespace {

bool upper_triangular(const BoolMat& a) {
  for (int i = 1; i < a.dim(); ++i)
    if (a.row(i) >> (a.dim() - i)) return false;
  return true;
}

std::uint64_t count_hall(int n) {
  const Word total = Word{1} << (n * n);
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (Word b = 0; b < total; ++b)
    if (is_hall(unpack(b, n))) ++count;
  return count;
}

void check_n(int n, int lo) {
  if (n < lo) throw std::invalid_argument("n must be at least " + std::to_string(lo));
  if (n > kMaxDim) throw std::invalid_argument("n too large");
}

}  // namespace

std::optional<bool> in_monoid(MonoidTag t, const BoolMat& a) {
  switch (t) {
    case MonoidTag::full:
      return true;
    case MonoidTag::reflexive:
      return is_reflexive(a);
    case MonoidTag::hall:
      return is_hall(a);
    case MonoidTag::ut:
      return upper_triangular(a);
    case MonoidTag::lt:
      return upper_triangular(a.transpose());
    case MonoidTag::gossip:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> monoid_size(MonoidTag t, int n) {
  auto pow2 = [](int e) -> std::optional<std::uint64_t> {
    if (e < 0 || e > 63) return std::nullopt;
    return std::uint64_t{1} << e;
  };
  switch (t) {
    case MonoidTag::full:
      return pow2(n * n);
    case MonoidTag::reflexive:
      return pow2(n * n - n);
    case MonoidTag::ut:
    case MonoidTag::lt:
      return pow2(n * (n + 1) / 2);
    case MonoidTag::hall:
      if (n >= 1 && n <= 5) return count_hall(n);
      return std::nullopt;
    case MonoidTag::gossip:
      return std::nullopt;
  }
  return std::nullopt;
}

GenSetReport devadze_generators(int n, const PrimeOptions& opt) {
  check_n(n, 1);
  GenSetReport r;
  r.monoid = MonoidTag::full;
  r.n = n;
  if (n == 1) {
    r.generators = {BoolMat(1, {0}), BoolMat(1, {1})};
    r.notes.push_back("n=1: {0, 1}");
  } else if (n == 2) {
    r.generators = {named::T(2), named::E(2), named::F(2)};
    r.notes.push_back("n=2: T = U, so {T, E, F}");
  } else {
    r.generators = {named::T(n), named::U(n), named::E(n), named::F(n)};
    FilterStats stats;
    auto primes = prime_representatives(n, opt, &stats);
    r.generators.insert(r.generators.end(), primes.begin(), primes.end());
    r.notes.push_back(std::to_string(primes.size()) + " prime J-class representatives (" + to_string(opt.kind) +
                      " filter)");
  }
  r.rank = r.generators.size();
  return r;
}

GenSetReport hall_generators(int n, const PrimeOptions& opt) {
  check_n(n, 1);
  GenSetReport r;
  if (n == 1) {
    r.generators = {BoolMat::identity(1)};
  } else if (n == 2) {
    r.generators = {named::T(2), named::E(2)};
  } else {
    r = devadze_generators(n, opt);
    const BoolMat f = named::F(n);
    std::erase(r.generators, f);
    r.notes.push_back("Devadze set without F");
  }
  r.monoid = MonoidTag::hall;
  r.n = n;
  r.rank = r.generators.size();
  return r;
}

GenSetReport ut_generators(int n) {
  check_n(n, 1);
  GenSetReport r;
  r.monoid = MonoidTag::ut;
  r.n = n;
  if (n == 1) {
    r.generators = {BoolMat(1, {0}), BoolMat(1, {1})};
    r.notes.push_back("n=1: UT_1 = {0, 1}");
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) r.generators.push_back(elementary(n, i, j));
    for (int k = 0; k < n; ++k) {
      BoolMat d = BoolMat::identity(n);
      d.set(k, k, false);
      r.generators.push_back(d);
    }
    r.generators.push_back(BoolMat::identity(n));
    r.notes.push_back("semigroup rank; the identity is a generator");
  }
  r.rank = r.generators.size();
  return r;
}

GenSetReport lt_generators(int n) {
  GenSetReport r = ut_generators(n);
  r.monoid = MonoidTag::lt;
  for (auto& g : r.generators) g = g.transpose();
  return r;
}

GenSetReport gossip_generators(int n) {
  check_n(n, 2);
  GenSetReport r;
  r.monoid = MonoidTag::gossip;
  r.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      BoolMat c = BoolMat::identity(n);
      c.set(i, j, true);
      c.set(j, i, true);
      r.generators.push_back(c);
    }
  r.rank = r.generators.size();
  return r;
}

namespace {

class DecompositionSearch {
 public:
  DecompositionSearch(const BoolMat& a, std::size_t budget) : a_(a), n_(a.dim()), budget_(budget) {
    const auto un = static_cast<std::size_t>(n_);
    cand_.resize(un);
    const bool trim = is_trim(a);
    for (int i = 0; i < n_; ++i) {
      const Word bit = Word{1} << (n_ - 1 - i);
      if (!trim) {
        // the intersection shortcut needs a trim matrix; otherwise take every
        // reflexive row below row i of a
        auto& c = cand_[static_cast<std::size_t>(i)];
        const Word free = a.row(i) & ~bit;
        for (Word s = free;; s = (s - 1) & free) {
          c.push_back(s | bit);
          if (s == 0) break;
        }
        std::stable_sort(c.begin(), c.end(), [](Word x, Word y) { return std::popcount(x) > std::popcount(y); });
        continue;
      }
      std::vector<Word> others;
      for (int j = 0; j < n_; ++j)
        if (j != i && (a.row(j) & bit)) others.push_back(a.row(j));
      std::set<Word> seen;
      const std::size_t subsets = std::size_t{1} << others.size();
      for (std::size_t s = 0; s < subsets; ++s) {
        Word x = a.row(i);
        for (std::size_t k = 0; k < others.size(); ++k)
          if ((s >> k) & 1U) x &= others[k];
        seen.insert(x);
      }
      // larger rows first: they finish coverage sooner
      auto& c = cand_[static_cast<std::size_t>(i)];
      c.assign(seen.begin(), seen.end());
      std::stable_sort(c.begin(), c.end(), [](Word x, Word y) { return std::popcount(x) > std::popcount(y); });
    }
    potential_.assign(un * un, 0);
    for (std::size_t j = 0; j < un; ++j)
      for (int k = 0; k < n_; ++k) {
        Word u = 0;
        for (Word x : cand_[j])
          if (is_subset(x, a.row(k))) u |= x;
        potential_[j * un + static_cast<std::size_t>(k)] = u;
      }
    c_.assign(un, 0);
  }

  DecompositionResult run() {
    DecompositionResult r;
    if (dfs(0)) {
      r.status = Decomposition::decomposable;
      r.left = left_;
      r.right = right_;
    } else {
      r.status = exhausted_ ? Decomposition::budget_exhausted : Decomposition::indecomposable;
    }
    r.nodes = nodes_;
    return r;
  }

 private:
  bool feasible(int assigned) const {
    const auto un = static_cast<std::size_t>(n_);
    for (int k = 0; k < n_; ++k) {
      const Word target = a_.row(k);
      Word u = 0;
      for (int j = 0; j < n_; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        if (j <= assigned) {
          if (is_subset(c_[uj], target)) u |= c_[uj];
        } else {
          u |= potential_[uj * un + static_cast<std::size_t>(k)];
        }
      }
      if (u != target) return false;
    }
    return true;
  }

  bool leaf() {
    const BoolMat c(n_, std::span<const Word>(c_));
    const BoolMat id = BoolMat::identity(n_);
    if (c == id || c == a_) return false;
    BoolMat b = greedy_left_multiplier(a_, c);
    if (b * c != a_ || b == id) return false;
    if (b == a_) {
      // any working left factor lies below the greedy one, so dropping a
      // single off-diagonal entry is enough to find one that differs from a
      bool found = false;
      for (int i = 0; i < n_ && !found; ++i)
        for (int j = 0; j < n_ && !found; ++j) {
          if (i == j || !b.get(i, j)) continue;
          BoolMat t = b;
          t.set(i, j, false);
          if (t * c == a_ && t != id) {
            b = t;
            found = true;
          }
        }
      if (!found) return false;
    }
    left_ = b;
    right_ = c;
    return true;
  }

  bool dfs(int i) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (i == n_) return leaf();
    for (Word x : cand_[static_cast<std::size_t>(i)]) {
      c_[static_cast<std::size_t>(i)] = x;
      if (!feasible(i)) continue;
      if (dfs(i + 1)) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  const BoolMat& a_;
  int n_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::vector<Word>> cand_;
  std::vector<Word> potential_;  // [j][k]: union of candidates for row j inside row k of a
  std::vector<Word> c_;
  BoolMat left_, right_;
};

void check_reflexive_input(const BoolMat& a) {
  if (!is_reflexive(a)) throw std::invalid_argument("decomposition test needs a reflexive matrix");
  if (a.dim() > kMaxEnumDim) throw std::invalid_argument("decomposition test needs n <= 8");
}

std::vector<BoolMat> reflexive_elementaries(int n) {
  std::vector<BoolMat> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.push_back(elementary(n, i, j));
  return out;
}

}  // namespace

DecompositionResult decompose_reflexive(const BoolMat& a, std::size_t node_budget) {
  check_reflexive_input(a);
  return DecompositionSearch(a, node_budget).run();
}

bool decomposable_by_conjugates(const BoolMat& a, const std::vector<BoolMat>& right_factors) {
  check_reflexive_input(a);
  const int n = a.dim();
  const BoolMat id = BoolMat::identity(n);
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    const BoolMat x = conjugate(a, p);
    for (const auto& c : right_factors) {
      if (c.dim() != n || c == id || c == x || !contains(x, c)) continue;
      const BoolMat b = greedy_left_multiplier(x, c);
      if (b * c != x || b == id) continue;
      if (b != x) return true;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j || !b.get(i, j)) continue;
          BoolMat t = b;
          t.set(i, j, false);
          if (t * c == x && t != id) return true;
        }
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

bool is_decomposable_reflexive(const BoolMat& a, std::size_t node_budget) {
  auto r = decompose_reflexive(a, node_budget);
  if (r.status != Decomposition::budget_exhausted) return r.status == Decomposition::decomposable;
  auto factors = reflexive_elementaries(a.dim());
  auto reps = reflexive_representatives(a.dim());
  factors.insert(factors.end(), reps.begin(), reps.end());
  return decomposable_by_conjugates(a, factors);
}

GenSetReport reflexive_generators(int n, const ReflexiveOptions& opt, ReflexiveStats* stats) {
  check_n(n, 1);
  GenSetReport r;
  r.monoid = MonoidTag::reflexive;
  r.n = n;
  ReflexiveStats st;
  if (n == 1) {
    r.generators = {BoolMat::identity(1)};
  } else if (n == 2) {
    r.generators = reflexive_elementaries(2);
    r.monoid_generators = true;
    r.notes.push_back("n=2: rank taken as a monoid (identity not counted)");
  } else {
    const BoolMat id = BoolMat::identity(n);
    auto reps = reflexive_representatives(n, opt.exec);
    std::erase(reps, id);
    st.representatives = reps.size();
    std::vector<char> status(reps.size(), 0);  // 0 indecomposable, 1 decomposable, 2 needs fallback
    const auto count = static_cast<std::ptrdiff_t>(reps.size());
    if (opt.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        auto d = decompose_reflexive(reps[static_cast<std::size_t>(i)], opt.node_budget);
        status[static_cast<std::size_t>(i)] = static_cast<char>(d.status == Decomposition::decomposable     ? 1
                                                                 : d.status == Decomposition::indecomposable ? 0
                                                                                                             : 2);
      }
    } else {
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        auto d = decompose_reflexive(reps[static_cast<std::size_t>(i)], opt.node_budget);
        status[static_cast<std::size_t>(i)] = static_cast<char>(d.status == Decomposition::decomposable     ? 1
                                                                 : d.status == Decomposition::indecomposable ? 0
                                                                                                             : 2);
      }
    }
    auto factors = reflexive_elementaries(n);
    factors.insert(factors.end(), reps.begin(), reps.end());
    r.generators = reflexive_elementaries(n);
    std::set<BoolMat> orbit_members;
    std::vector<int> p(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (status[i] == 2) {
        ++st.fallback_used;
        status[i] = decomposable_by_conjugates(reps[i], factors) ? 1 : 0;
      }
      if (status[i] == 1) continue;
      ++st.indecomposable;
      std::iota(p.begin(), p.end(), 0);
      do {
        orbit_members.insert(conjugate(reps[i], p));
      } while (std::next_permutation(p.begin(), p.end()));
    }
    r.generators.insert(r.generators.end(), orbit_members.begin(), orbit_members.end());
    r.generators.push_back(id);
    r.notes.push_back(std::to_string(st.indecomposable) + " indecomposable trim classes, " +
                      std::to_string(orbit_members.size()) + " matrices");
    if (st.fallback_used)
      r.notes.push_back(std::to_string(st.fallback_used) + " candidates settled by the conjugate search");
  }
  r.rank = r.generators.size();
  if (stats) *stats = st;
  return r;
}

GenSetReport generators_for(MonoidTag t, int n) {
  switch (t) {
    case MonoidTag::full:
      return devadze_generators(n);
    case MonoidTag::reflexive:
      return reflexive_generators(n);
    case MonoidTag::hall:
      return hall_generators(n);
    case MonoidTag::ut:
      return ut_generators(n);
    case MonoidTag::lt:
      return lt_generators(n);
    case MonoidTag::gossip:
      return gossip_generators(n);
  }
  throw std::invalid_argument("unknown monoid");
}

void certify(GenSetReport& report, const ClosureOptions& opt, bool check_irredundant) {
  const auto& gens = report.generators;
  if (gens.empty()) throw std::invalid_argument("empty generating set");
  std::vector<BoolMat> base = gens;
  const BoolMat id = BoolMat::identity(report.n);
  if (report.monoid_generators && std::find(base.begin(), base.end(), id) == base.end()) base.push_back(id);

  ClosureOptions copt = opt;
  copt.track_words = false;
  auto cl = closure<BoolMat>(std::span<const BoolMat>(base), copt);
  auto& c = report.certified;
  c.closure_size = cl.size();
  c.target_size = monoid_size(report.monoid, report.n);
  bool inside = true;
  for (const auto& x : cl.elements) {
    auto m = in_monoid(report.monoid, x);
    if (m && !*m) {
      inside = false;
      break;
    }
  }
  if (c.target_size) c.generates = inside && c.closure_size == *c.target_size;

  if (!check_irredundant) return;
  c.irredundant = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<BoolMat> rest;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (report.monoid_generators && gens[i] != id) rest.push_back(id);
    if (rest.empty()) continue;
    if (closure<BoolMat>(std::span<const BoolMat>(rest), copt).contains(gens[i])) {
      c.irredundant = false;
      c.redundant_witness = i;
      return;
    }
  }
}

}  // namespace mingens
