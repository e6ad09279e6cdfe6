#include <algorithm>
#include <set>

#include "catch_amalgamated.hpp"
#include "mingens/breen.hpp"
#include "mingens/canonical.hpp"
#include "oracles.hpp"

using namespace mingens;

namespace {

std::vector<BoolMat> visited(int n, void (*each)(int, const MatrixVisitor&)) {
  std::vector<BoolMat> out;
  each(n, [&](const BoolMat& a) { out.push_back(a); });
  return out;
}

}  // namespace

TEST_CASE("both 5x5 example matrices are in Breen form and similar") {
  auto a = BoolMat::from_lines(std::vector<std::string>{"00011", "00101", "01100", "10010", "11001"});
  auto b = BoolMat::from_lines(std::vector<std::string>{"00011", "00101", "01010", "10100", "11001"});
  CHECK(is_breen_form(a));
  CHECK(is_breen_form(b));
  CHECK(canonical_similarity(a) == canonical_similarity(b));
  auto all = trim_breen(5, Exec::serial);
  CHECK(std::binary_search(all.begin(), all.end(), a));
  CHECK(std::binary_search(all.begin(), all.end(), b));
}

TEST_CASE("enumerators agree with filtering every matrix") {
  for (int n = 1; n <= 4; ++n) {
    std::set<BoolMat> breen, trim;
    for (const auto& a : oracle::all_matrices(n))
      if (is_breen_form(a)) {
        breen.insert(a);
        if (oracle::is_trim(a)) trim.insert(a);
      }
    auto got_all = visited(n, for_each_breen);
    auto got_trim = visited(n, for_each_trim_breen);
    // no duplicates
    REQUIRE(std::set<BoolMat>(got_all.begin(), got_all.end()).size() == got_all.size());
    REQUIRE(std::set<BoolMat>(got_trim.begin(), got_trim.end()).size() == got_trim.size());
    REQUIRE(std::set<BoolMat>(got_all.begin(), got_all.end()) == breen);
    REQUIRE(std::set<BoolMat>(got_trim.begin(), got_trim.end()) == trim);
    REQUIRE(got_trim.front() == BoolMat::zero(n));
    REQUIRE(count_breen(n) == breen.size());
  }
}

// Every trim J-class has a trim Breen representative.
TEST_CASE("canonical superset covers every trim matrix") {
  for (int n = 1; n <= 4; ++n) {
    std::set<BoolMat> expect;
    for (const auto& a : oracle::all_matrices(n))
      if (oracle::is_trim(a)) expect.insert(canonical_similarity(a));
    auto got = canonical_superset(n);
    REQUIRE(std::set<BoolMat>(got.begin(), got.end()) == expect);
    REQUIRE(std::is_sorted(got.begin(), got.end()));
  }
  CHECK(canonical_superset(5).size() == 32);
}

TEST_CASE("filter input drops the permutation class only") {
  auto s = canonical_superset(4);
  auto f = filter_input(s);
  CHECK(f.size() + 1 == s.size());
  CHECK(std::none_of(f.begin(), f.end(), [](const BoolMat& a) { return is_permutation(a); }));
  CHECK(std::binary_search(f.begin(), f.end(), BoolMat::zero(4)));
}

TEST_CASE("J-class counts match ideal equality") {
  for (int n = 1; n <= 3; ++n) {
    auto all = oracle::all_matrices(n);
    std::set<std::vector<BoolMat>> classes;
    for (const auto& a : all) {
      auto id = oracle::ideal(a, all);
      std::vector<BoolMat> v(id.begin(), id.end());
      std::sort(v.begin(), v.end());
      classes.insert(v);
    }
    REQUIRE(count_jclasses(n) == classes.size());
  }
  CHECK(count_jclasses(4) == 60);
}

TEST_CASE("reflexive representatives are the trim reflexive conjugacy classes") {
  for (int n = 1; n <= 4; ++n) {
    std::set<BoolMat> expect;
    for (const auto& a : oracle::all_matrices(n))
      if (is_reflexive(a) && oracle::is_trim(a)) expect.insert(canonical_conjugation(a));
    auto got = reflexive_representatives(n);
    REQUIRE(std::set<BoolMat>(got.begin(), got.end()) == expect);
  }
  for_each_reflexive_breen(4, [](const BoolMat& a) { REQUIRE(is_reflexive_breen_form(a)); });
}

TEST_CASE("serial and parallel enumerations agree") {
  for (int n = 1; n <= 5; ++n) {
    REQUIRE(trim_breen(n, Exec::serial) == trim_breen(n, Exec::parallel));
    REQUIRE(canonical_superset(n, Exec::serial) == canonical_superset(n, Exec::parallel));
    REQUIRE(count_breen(n, Exec::serial) == count_breen(n, Exec::parallel));
    REQUIRE(count_jclasses(n, Exec::serial) == count_jclasses(n, Exec::parallel));
    REQUIRE(reflexive_representatives(n, Exec::serial) == reflexive_representatives(n, Exec::parallel));
  }
  CHECK_THROWS(trim_breen(0));
  CHECK_THROWS(trim_breen(9));
}
