#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "catch_amalgamated.hpp"
#include "mingens/canonical.hpp"
#include "mingens/prime_filter.hpp"
#include "oracles.hpp"

using namespace mingens;

namespace {

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

BoolMat permute_rows(const BoolMat& a, const std::vector<int>& p) {
  BoolMat b(a.dim());
  for (int i = 0; i < a.dim(); ++i) b.set_row(i, a.row(p[i]));
  return b;
}

// minimum of the row-major string over P a Q, by listing every pair
BoolMat brute_similarity(const BoolMat& a) {
  BoolMat best = a;
  for (const auto& p : all_perms(a.dim()))
    for (const auto& q : all_perms(a.dim())) {
      auto b = permute_columns(permute_rows(a, p), q);
      if (b < best) best = b;
    }
  return best;
}

BoolMat brute_conjugation(const BoolMat& a) {
  BoolMat best = a;
  for (const auto& p : all_perms(a.dim())) {
    auto b = conjugate(a, p);
    if (b < best) best = b;
  }
  return best;
}

BoolMat random_mat(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<Word> d(0, low_mask(n));
  BoolMat a(n);
  for (int i = 0; i < n; ++i) a.set_row(i, d(rng));
  return a;
}

}  // namespace

TEST_CASE("canonical similarity is the brute-force minimum") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& a : oracle::all_matrices(n)) {
      if (!is_reduced(a)) continue;
      REQUIRE(canonical_similarity(a) == brute_similarity(a));
    }
  std::mt19937_64 rng(21);
  int tested = 0;
  while (tested < 60) {
    auto a = random_mat(rng, 4);
    if (!is_reduced(a)) continue;
    ++tested;
    REQUIRE(canonical_similarity(a) == brute_similarity(a));
  }
  CHECK_THROWS(canonical_similarity(BoolMat(2, {0b11, 0b11})));
}

TEST_CASE("canonical conjugation is the brute-force minimum") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_mat(rng, 1 + trial % 5);
    REQUIRE(canonical_conjugation(a) == brute_conjugation(a));
  }
}

TEST_CASE("canonical forms are class invariants") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    auto a = random_mat(rng, n);
    std::vector<int> p(n), q(n);
    std::iota(p.begin(), p.end(), 0);
    std::iota(q.begin(), q.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::shuffle(q.begin(), q.end(), rng);
    REQUIRE(canonical_conjugation(conjugate(a, p)) == canonical_conjugation(a));
    if (is_reduced(a))
      REQUIRE(canonical_similarity(permute_columns(permute_rows(a, p), q)) == canonical_similarity(a));
  }
}

// For reduced matrices the J-class is the similarity class; both sides of
// that are computed independently here.
TEST_CASE("similarity classes of reduced matrices are J-classes on M_3") {
  auto all = oracle::all_matrices(3);
  std::vector<BoolMat> reduced;
  for (const auto& a : all)
    if (is_reduced(a)) reduced.push_back(a);
  std::map<BoolMat, std::size_t> ideal_size;
  std::vector<std::unordered_set<BoolMat>> ideals;
  for (const auto& a : reduced) ideals.push_back(oracle::ideal(a, all));
  for (std::size_t i = 0; i < reduced.size(); ++i)
    for (std::size_t j = i; j < reduced.size(); ++j) {
      const bool same_j = ideals[i] == ideals[j];
      REQUIRE(same_j == (canonical_similarity(reduced[i]) == canonical_similarity(reduced[j])));
    }
}

TEST_CASE("j_leq is ideal containment on M_2 and M_3 samples") {
  for (int n = 2; n <= 3; ++n) {
    auto all = oracle::all_matrices(n);
    std::mt19937_64 rng(24);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    const std::size_t trials = n == 2 ? all.size() * all.size() : 400;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& a = n == 2 ? all[t / all.size()] : all[pick(rng)];
      const auto& b = n == 2 ? all[t % all.size()] : all[pick(rng)];
      const bool expect = oracle::ideal(b, all).count(a) > 0;
      REQUIRE(j_leq(a, b) == expect);
    }
  }
}

TEST_CASE("keys and graphs") {
  auto a = BoolMat::from_bits("110011001");
  auto k = CanonicalKey::of(a);
  CHECK(k.n == 3);
  CHECK(k.hex() == "cc80");  // 110011001 padded to two bytes
  CHECK(CanonicalKey::of(BoolMat::from_bits("000000001")) < k);

  auto g = bipartite_graph(a);
  CHECK(g.vertex_count == 6);
  CHECK(g.edge_count() == static_cast<std::size_t>(a.popcount()));
  CHECK(g.edge(0, 3));
  CHECK_FALSE(g.edge(0, 5));
  CHECK(std::count(g.colors.begin(), g.colors.end(), 1) == 3);

  auto t = tripartite_graph(a);
  CHECK(t.vertex_count == 9);
  CHECK(t.edge_count() == static_cast<std::size_t>(a.popcount()) + 6);
  CHECK(t.edge(6, 0));
  CHECK(t.edge(6, 3));
}
