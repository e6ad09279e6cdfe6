#include <numeric>
#include <random>
#include <unordered_set>

#include "catch_amalgamated.hpp"
#include "mingens/monoid.hpp"
#include "mingens/zn.hpp"
#include "oracles.hpp"

using namespace mingens;

namespace {

ZnMat random_zn(std::mt19937_64& rng, int k, Residue n) {
  std::uniform_int_distribution<Residue> d(0, n - 1);
  std::vector<Residue> e(static_cast<std::size_t>(k * k));
  for (auto& x : e) x = d(rng);
  return {k, n, e};
}

// units by searching for a two-sided inverse
std::size_t brute_unit_count(Residue n, int k) {
  auto all = all_zn_matrices(n, k);
  const auto id = ZnMat::identity(k, n);
  std::size_t c = 0;
  for (const auto& a : all)
    for (const auto& b : all)
      if (a * b == id) {
        ++c;
        break;
      }
  return c;
}

const std::vector<std::pair<int, Residue>> kCases{{2, 2}, {2, 3}, {2, 4}, {2, 6}, {3, 2}};

}  // namespace

TEST_CASE("coprime scaler") {
  for (Residue n = 2; n <= 60; ++n)
    for (Residue a = 0; a < n; ++a) {
      Residue b = coprime_scaler(a, n);
      REQUIRE(std::gcd(b, n) == 1);
      REQUIRE(mod(a * b, n) == mod(std::gcd(a, n), n));
    }
  CHECK(mod(4 * coprime_scaler(4, 6), 6) == 2);
  CHECK_THROWS(coprime_scaler(1, 1));
  CHECK(mod(-7, 5) == 3);
}

TEST_CASE("unit groups") {
  CHECK(enumerate_units(2, 2).size() == 6);
  CHECK(enumerate_units(6, 2).size() == 288);
  CHECK(enumerate_units(2, 3).size() == 168);
  for (auto [k, n] : kCases) {
    if (k == 3) continue;
    auto u = enumerate_units(n, k);
    REQUIRE(u.size() == brute_unit_count(n, k));
    REQUIRE(enumerate_units(n, k, 20'000'000, Exec::serial) == u);
    for (const auto& x : u) REQUIRE(is_unit_matrix(x));
  }
  CHECK_THROWS(enumerate_units(10, 3, 1000));
}

TEST_CASE("determinant") {
  ZnMat a(3, 7, {1, 2, 3, 0, 1, 4, 5, 6, 0});
  CHECK(determinant(a) == 1);  // 1*(0-24) - 2*(0-20) + 3*(0-5) = 1
  CHECK(determinant(ZnMat::identity(4, 9)) == 1);
  CHECK(determinant(ZnMat::diagonal(6, {2, 3})) == 0);
}

TEST_CASE("standard diagonal form examples") {
  CHECK(standard_diagonal_form(ZnMat::diagonal(6, {2, 4})).diag == ZnMat::diagonal(6, {2, 2}));
  auto id = standard_diagonal_form(ZnMat::identity(3, 5));
  CHECK(id.diag == ZnMat::identity(3, 5));
  CHECK(id.left_unit == ZnMat::identity(3, 5));
  // not a complete invariant: diag(3, 2) is J-related to diag(0, 1) over Z_6
  auto d = standard_diagonal_form(ZnMat::diagonal(6, {2, 3}));
  CHECK(is_standard_diagonal(d.diag));
  CHECK(is_standard_diagonal(ZnMat::diagonal(6, {0, 1})));
  auto e = standard_diagonal_form(ZnMat(2, 12, {4, 6, 6, 4}));
  CHECK(is_standard_diagonal(e.diag));
  CHECK(e.left_unit * e.diag * e.right_unit == ZnMat(2, 12, {4, 6, 6, 4}));
  CHECK(standard_diagonal_form(ZnMat(2, 8)).diag == ZnMat(2, 8));
  CHECK(is_standard_diagonal(ZnMat::diagonal(12, {0, 6, 2})));
  CHECK_FALSE(is_standard_diagonal(ZnMat::diagonal(12, {2, 6})));
  CHECK_FALSE(is_standard_diagonal(ZnMat::diagonal(12, {5, 1})));
}

TEST_CASE("diagonal form reconstruction on random matrices") {
  std::mt19937_64 rng(41);
  const Residue moduli[] = {2, 4, 6, 8, 9, 12, 30, 36, 97, 360};
  for (int trial = 0; trial < 2000; ++trial) {
    const Residue n = moduli[trial % 10];
    const int k = 1 + trial % 4;
    auto a = random_zn(rng, k, n);
    auto f = standard_diagonal_form(a);
    REQUIRE(f.left_unit * f.diag * f.right_unit == a);
    REQUIRE(is_unit_matrix(f.left_unit));
    REQUIRE(is_unit_matrix(f.right_unit));
    REQUIRE(is_standard_diagonal(f.diag));
  }
}

// Each X_p is the only standard diagonal matrix in its J-class.
TEST_CASE("every element of J(X_p) reduces to X_p over Z_6") {
  auto units = enumerate_units(6, 2);
  auto xp = xp_generators(6, 2);
  std::vector<ZnMat> gens = units;
  gens.insert(gens.end(), xp.begin(), xp.end());
  auto m = closure<ZnMat>(std::span<const ZnMat>(gens));
  REQUIRE(m.size() == 1296);
  auto j = greens_classes(m, std::span<const ZnMat>(gens), Green::J);
  for (const auto& x : xp) {
    const auto cls = j.class_of[*m.find(x)];
    std::size_t members = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (j.class_of[i] != cls) continue;
      ++members;
      REQUIRE(standard_diagonal_form(m.elements[i]).diag == x);
    }
    CHECK(members > 1);
  }
  CHECK(j.class_of[*m.find(xp[0])] != j.class_of[*m.find(xp[1])]);
}

TEST_CASE("relative rank is the number of prime divisors") {
  auto omega = oracle::omega_table(1000);
  for (Residue n = 2; n <= 1000; ++n) {
    REQUIRE(relative_rank(n) == omega[static_cast<std::size_t>(n)]);
    REQUIRE(prime_divisors(n).size() == static_cast<std::size_t>(omega[static_cast<std::size_t>(n)]));
    for (auto p : prime_divisors(n)) REQUIRE(oracle::is_prime_number(p));
  }
}

TEST_CASE("units with the X_p matrices generate everything") {
  for (auto [k, n] : kCases) {
    auto units = enumerate_units(n, k);
    auto xp = xp_generators(n, k);
    REQUIRE(xp.size() == prime_divisors(n).size());
    std::vector<ZnMat> gens = units;
    gens.insert(gens.end(), xp.begin(), xp.end());
    std::size_t total = 1;
    for (int i = 0; i < k * k; ++i) total *= static_cast<std::size_t>(n);
    REQUIRE(closure<ZnMat>(std::span<const ZnMat>(gens)).size() == total);
    for (std::size_t drop = 0; drop < xp.size(); ++drop) {
      std::vector<ZnMat> rest = units;
      for (std::size_t j = 0; j < xp.size(); ++j)
        if (j != drop) rest.push_back(xp[j]);
      REQUIRE_FALSE(closure<ZnMat>(std::span<const ZnMat>(rest)).contains(xp[drop]));
    }
  }
}
