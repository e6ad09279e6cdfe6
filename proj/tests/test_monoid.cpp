#include <map>
#include <set>

#include "catch_amalgamated.hpp"
#include "mingens/genset.hpp"
#include "mingens/monoid.hpp"
#include "oracles.hpp"

using namespace mingens;

namespace {

std::vector<BoolMat> devadze(int n) { return devadze_generators(n).generators; }

// Counts classes of the relation "same key" over all elements.
template <class F>
std::size_t count_by(const std::vector<BoolMat>& xs, F key) {
  std::set<decltype(key(xs.front()))> s;
  for (const auto& x : xs) s.insert(key(x));
  return s.size();
}

}  // namespace

TEST_CASE("closure sizes, serial and parallel") {
  for (int n = 1; n <= 3; ++n) {
    auto g = devadze(n);
    ClosureOptions s;
    s.exec = Exec::serial;
    auto a = closure<BoolMat>(std::span<const BoolMat>(g), s);
    auto b = closure<BoolMat>(std::span<const BoolMat>(g));
    REQUIRE(a.elements == b.elements);
    REQUIRE(a.size() == oracle::closure(g).size());
  }
  std::vector<BoolMat> none;
  CHECK_THROWS(closure<BoolMat>(std::span<const BoolMat>(none)));
}

TEST_CASE("words evaluate to their elements") {
  auto g = devadze(3);
  ClosureOptions o;
  o.track_words = true;
  auto m = closure<BoolMat>(std::span<const BoolMat>(g), o);
  REQUIRE(m.words.size() == m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    BoolMat x = g[m.words[i].front()];
    for (std::size_t k = 1; k < m.words[i].size(); ++k) x = x * g[m.words[i][k]];
    REQUIRE(x == m.elements[i]);
  }
}

TEST_CASE("cap is enforced") {
  auto g = devadze(3);
  ClosureOptions o;
  o.cap = 100;
  CHECK_THROWS_AS(closure<BoolMat>(std::span<const BoolMat>(g), o), CapExceeded);
}

TEST_CASE("Green's classes agree with row and column spaces") {
  for (int n = 2; n <= 3; ++n) {
    auto g = devadze(n);
    auto m = closure<BoolMat>(std::span<const BoolMat>(g));
    auto rows = [](const BoolMat& a) { return oracle::row_space(a); };
    auto cols = [](const BoolMat& a) { return oracle::row_space(a.transpose()); };
    auto both = [&](const BoolMat& a) { return std::make_pair(rows(a), cols(a)); };
    const auto span = std::span<const BoolMat>(g);
    REQUIRE(greens_classes(m, span, Green::L).count == count_by(m.elements, rows));
    REQUIRE(greens_classes(m, span, Green::R).count == count_by(m.elements, cols));
    REQUIRE(greens_classes(m, span, Green::H).count == count_by(m.elements, both));
    std::set<std::set<BoolMat>> ideals;
    for (const auto& a : m.elements) {
      auto id = oracle::ideal(a, m.elements);
      ideals.emplace(id.begin(), id.end());
    }
    REQUIRE(greens_classes(m, span, Green::J).count == ideals.size());
  }
  auto m2 = closure<BoolMat>(std::span<const BoolMat>(devadze(2)));
  CHECK(greens_classes(m2, std::span<const BoolMat>(devadze(2)), Green::L).count == 7);
  CHECK(greens_classes(m2, std::span<const BoolMat>(devadze(2)), Green::J).count == 4);
}

TEST_CASE("L-class counts") {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::set<oracle::Vec>> spaces;
    for (const auto& a : oracle::all_matrices(n)) spaces.insert(oracle::row_space(a));
    REQUIRE(count_lclasses(n) == spaces.size());
  }
  CHECK(count_lclasses(4) == 1324);
  CHECK(count_lclasses(4, Exec::serial) == count_lclasses(4, Exec::parallel));
  CHECK_THROWS(count_lclasses(6));
}

TEST_CASE("irredundancy witness") {
  auto g = devadze(3);
  CHECK(is_irredundant<BoolMat>(std::span<const BoolMat>(g)).irredundant);
  g.push_back(g[0] * g[1]);
  auto r = is_irredundant<BoolMat>(std::span<const BoolMat>(g));
  CHECK_FALSE(r.irredundant);
  REQUIRE(r.witness.has_value());
}

TEST_CASE("strongly connected components") {
  // 0 <-> 1 -> 2 <-> 3, 4 alone
  std::vector<std::vector<std::uint32_t>> adj{{1}, {0, 2}, {3}, {2}, {}};
  auto p = strongly_connected(adj);
  CHECK(p.count == 3);
  CHECK(p.class_of[0] == p.class_of[1]);
  CHECK(p.class_of[2] == p.class_of[3]);
  CHECK(p.class_of[0] != p.class_of[2]);
  auto q = intersect(p, Partition{{0, 0, 0, 1, 1}, 2});
  CHECK(q.count == 4);
  CHECK(green_from_string("J") == Green::J);
  CHECK(to_string(Green::H) == "H");
}
