#include <random>

#include "catch_amalgamated.hpp"
#include "mingens/boolmat.hpp"
#include "oracles.hpp"

using namespace mingens;

namespace {

BoolMat random_mat(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<Word> d(0, low_mask(n));
  BoolMat a(n);
  for (int i = 0; i < n; ++i) a.set_row(i, d(rng));
  return a;
}

BoolMat named_f3() { return BoolMat(3, {0, 0b010, 0b001}); }

}  // namespace

TEST_CASE("vectors read left to right as binary numbers") {
  BoolVec v = BoolVec::vec(6, 4);
  CHECK(v.to_string() == "0110");
  CHECK(v.num() == 6);
  CHECK_FALSE(v[0]);
  CHECK(v[1]);
  CHECK_THROWS(BoolVec::vec(16, 4));
  CHECK(BoolVec::vec(2, 4).contained_in(v));
  CHECK_FALSE(BoolVec::vec(1, 4).contained_in(v));
}

TEST_CASE("text formats round trip") {
  auto a = BoolMat::from_bits("110011001");
  CHECK(a.dim() == 3);
  CHECK(a.row(0) == 0b110);
  CHECK(a.to_string() == "110011001");
  std::vector<std::string> lines{"10", "11"};
  CHECK(BoolMat::from_lines(lines) == BoolMat(2, {0b10, 0b11}));
  CHECK(a.to_pretty() == "110\n011\n001\n");
  CHECK_THROWS(BoolMat::from_bits("10101"));
  CHECK_THROWS(BoolMat::from_bits("1021"));
  std::vector<std::string> ragged{"10", "1"};
  CHECK_THROWS(BoolMat::from_lines(ragged));
  CHECK_THROWS(BoolMat(2, {0b100, 0}));
}

TEST_CASE("columns are numbers with the top row most significant") {
  BoolMat a(3, {0b100, 0b110, 0b011});
  CHECK(a.col(0) == 0b110);
  CHECK(a.col(1) == 0b011);
  CHECK(a.col(2) == 0b001);
  CHECK(a.transpose().row(0) == a.col(0));
}

TEST_CASE("order follows the row-major bit string") {
  auto a = BoolMat::from_bits("0110");
  auto b = BoolMat::from_bits("1000");
  CHECK(a < b);
  CHECK((a.to_string() < b.to_string()));
}

TEST_CASE("product agrees with the textbook definition") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_mat(rng, n), b = random_mat(rng, n);
      REQUIRE(a * b == oracle::multiply(a, b));
    }
  CHECK_THROWS(BoolMat(2) * BoolMat(3));
}

TEST_CASE("identity is neutral and the product is associative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 8;
    auto a = random_mat(rng, n), b = random_mat(rng, n), c = random_mat(rng, n);
    REQUIRE(BoolMat::identity(n) * a == a);
    REQUIRE(a * BoolMat::identity(n) == a);
    REQUIRE((a * b) * c == a * (b * c));
  }
}

TEST_CASE("row space and basis") {
  BoolMat a(3, {0b110, 0b011, 0b111});
  RowSpace rs(a);
  CHECK(rs.size() == 4);  // 000 011 110 111
  CHECK(rs.contains(0b111));
  CHECK_FALSE(rs.contains(0b010));
  CHECK(std::vector<Word>(rs.basis().begin(), rs.basis().end()) == std::vector<Word>{0b011, 0b110});
  auto basis = row_basis(a);
  REQUIRE(basis.size() == 2);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    auto m = random_mat(rng, n);
    auto expect = oracle::row_space(m);
    RowSpace got(m);
    REQUIRE(got.size() == expect.size());
    REQUIRE(small_row_space(m).size() == expect.size());
    // the basis generates the space and no element of it is a union of others
    std::vector<Word> b(got.basis().begin(), got.basis().end());
    REQUIRE(RowSpace(std::span<const Word>(b), n) == got);
    for (std::size_t i = 0; i < b.size(); ++i) {
      Word u = 0;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (j != i && is_subset(b[j], b[i])) u |= b[j];
      REQUIRE(u != b[i]);
    }
  }
}

TEST_CASE("trim and reduced predicates match the oracle on all 3x3 matrices") {
  for (const auto& a : oracle::all_matrices(3)) {
    REQUIRE(is_trim(a) == oracle::is_trim(a));
    REQUIRE(is_reduced(a) == oracle::is_reduced(a));
  }
}

TEST_CASE("greedy multipliers") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + trial % 6;
    auto a = random_mat(rng, n), b = random_mat(rng, n);
    if (trial % 3 == 0) a = random_mat(rng, n) * b;  // make the containment case common
    auto c = greedy_left_multiplier(a, b);
    REQUIRE(((c * b) == a) == RowSpace(a).subset_of(RowSpace(b)));
    auto d = greedy_right_multiplier(a, b);
    REQUIRE((b * d == a) == RowSpace(a.transpose()).subset_of(RowSpace(b.transpose())));
  }
}

TEST_CASE("greedy left multiplier is the largest solution") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 4;
    auto b = random_mat(rng, n);
    auto a = random_mat(rng, n) * b;
    auto c = greedy_left_multiplier(a, b);
    REQUIRE(c * b == a);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (c.get(i, j)) continue;
        auto bigger = c;
        bigger.set(i, j, true);
        REQUIRE(bigger * b != a);
      }
  }
}

TEST_CASE("hall matrices") {
  for (const auto& a : oracle::all_matrices(3)) REQUIRE(is_hall(a) == oracle::is_hall(a));
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_mat(rng, 5);
    REQUIRE(is_hall(a) == oracle::is_hall(a));
  }
}

TEST_CASE("deficiency") {
  // rows 11000, 11000 would not be trim; use three rows inside two columns
  BoolMat a(4, {0b1100, 0b0110, 0b1010, 0b0001});
  CHECK(core(a).size() == 3);
  CHECK(deficiency(a) == 0);
  BoolMat id = BoolMat::identity(4);
  CHECK(core(id).empty());
  CHECK(deficiency(id) == 0);
  CHECK(deficiency(BoolMat(3, {0b110, 0b101, 0b011})) == 0);
  CHECK(deficiency(named_f3()) == 0);
  // five 2-subsets of four columns
  BoolMat d(5, {0b11000, 0b10100, 0b10010, 0b01100, 0b01010});
  CHECK(deficiency(d) == 5);
  BoolMat not_trim(2, {0b11, 0b10});
  CHECK_THROWS(deficiency(not_trim));
}

TEST_CASE("deficiency agrees with subset enumeration") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_mat(rng, 5);
    if (!is_row_trim(a)) continue;
    std::vector<Word> rows;
    for (Word r : a.rows())
      if (std::popcount(r) >= 2) rows.push_back(r);
    int best = 0;
    for (std::uint32_t s = 1; s < (1U << rows.size()); ++s) {
      Word u = 0;
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (s >> i & 1) u |= rows[i];
      if (std::popcount(u) < std::popcount(s)) best = std::max(best, std::popcount(s));
    }
    REQUIRE(deficiency(a) == best);
    if (is_hall(a)) REQUIRE(best == 0);
  }
}

TEST_CASE("permutations, elementaries and conjugation") {
  std::vector<int> p{2, 0, 1};
  auto m = permutation_matrix(p);
  CHECK(is_permutation(m));
  CHECK(m.get(0, 2));
  CHECK(m.get(1, 0));
  auto e = elementary(3, 1, 0);
  CHECK(e == BoolMat(3, {0b100, 0b110, 0b001}));
  CHECK(e.popcount() == 4);
  CHECK(is_reflexive(e));
  CHECK_THROWS(elementary(3, 1, 1));

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_mat(rng, 3);
    auto pm = permutation_matrix(p);
    // conjugate(a, p) = P^T a P with P the matrix of p
    REQUIRE(conjugate(a, p) == pm.transpose() * a * pm);
    REQUIRE(permute_columns(a, p) == a * pm);
  }
}

TEST_CASE("pack and unpack") {
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 8; ++n) {
    auto a = random_mat(rng, n);
    REQUIRE(unpack(pack(a), n) == a);
  }
}
