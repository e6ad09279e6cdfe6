#include <set>

#include "catch_amalgamated.hpp"
#include "mingens/boolmat.hpp"
#include "mingens/monoid.hpp"
#include "mingens/tropical.hpp"

using namespace mingens;

namespace {

std::vector<TropValue> values(int t) {
  std::vector<TropValue> v{kBottom};
  for (int i = 0; i <= t; ++i) v.push_back(i);
  return v;
}

std::vector<TropRow> all_rows(int t) {
  std::vector<TropRow> out;
  for (auto a : values(t))
    for (auto b : values(t)) out.push_back({a, b});
  return out;
}

// max of arbitrary scalar multiples of the given rows
std::set<TropRow> span(const std::vector<TropRow>& rows, int t) {
  std::set<TropRow> s{TropRow(2, kBottom)};
  for (const auto& r : rows) {
    std::set<TropRow> next = s;
    for (const auto& x : s)
      for (auto a : values(t)) {
        TropRow y(2);
        for (int c = 0; c < 2; ++c) y[c] = trop_add(Flavor::max_plus, x[c], trop_mul(t, a, r[c]));
        next.insert(y);
      }
    s.swap(next);
  }
  return s;
}

BoolMat to_bool(const TropMat& a) {
  BoolMat b(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) b.set(i, j, a.at(i, j) != kBottom);
  return b;
}

}  // namespace

TEST_CASE("semiring laws for thresholds up to 3") {
  for (Flavor f : {Flavor::min_plus, Flavor::max_plus})
    for (int t = 0; t <= 3; ++t) {
      auto vs = values(t);
      for (auto a : vs) {
        REQUIRE(trop_add(f, a, kBottom) == a);
        REQUIRE(trop_mul(t, a, 0) == a);
        REQUIRE(trop_mul(t, a, kBottom) == kBottom);
        REQUIRE(trop_add(f, a, a) == a);
        for (auto b : vs) {
          REQUIRE(trop_add(f, a, b) == trop_add(f, b, a));
          REQUIRE(trop_mul(t, a, b) == trop_mul(t, b, a));
          for (auto c : vs) {
            REQUIRE(trop_add(f, trop_add(f, a, b), c) == trop_add(f, a, trop_add(f, b, c)));
            REQUIRE(trop_mul(t, trop_mul(t, a, b), c) == trop_mul(t, a, trop_mul(t, b, c)));
            REQUIRE(trop_mul(t, a, trop_add(f, b, c)) == trop_add(f, trop_mul(t, a, b), trop_mul(t, a, c)));
          }
        }
      }
    }
  CHECK(trop_mul(3, 2, 2) == 3);
}

TEST_CASE("text round trip") {
  CHECK(format_value(Flavor::min_plus, kBottom) == "inf");
  CHECK(format_value(Flavor::max_plus, kBottom) == "-inf");
  CHECK(parse_value(Flavor::max_plus, 2, "-inf") == kBottom);
  CHECK(parse_value(Flavor::min_plus, 2, "2") == 2);
  CHECK_THROWS(parse_value(Flavor::min_plus, 2, "3"));
  CHECK_THROWS(parse_value(Flavor::min_plus, 2, "-inf"));
  CHECK_THROWS(parse_value(Flavor::min_plus, 2, "1x"));
  TropMat a(Flavor::min_plus, 2, {kBottom, 0, 2, 1});
  CHECK(a.to_string() == "inf 0 2 1");
  CHECK_THROWS(TropMat(Flavor::min_plus, 2, {3, 0, 0, 0}));
  CHECK_THROWS(a * TropMat::identity(Flavor::min_plus, 3));
  CHECK_THROWS(a * TropMat::identity(Flavor::max_plus, 2));
  CHECK(flavor_from_string("max-plus") == Flavor::max_plus);
}

TEST_CASE("matrix product is associative with identity") {
  for (Flavor f : {Flavor::min_plus, Flavor::max_plus}) {
    auto all = all_trop_matrices(f, 1);
    REQUIRE(all.size() == 81);
    const auto id = TropMat::identity(f, 1);
    for (std::size_t i = 0; i < all.size(); i += 3)
      for (std::size_t j = 0; j < all.size(); j += 5)
        for (std::size_t k = 0; k < all.size(); k += 7) {
          REQUIRE((all[i] * all[j]) * all[k] == all[i] * (all[j] * all[k]));
          REQUIRE(id * all[i] == all[i]);
        }
  }
}

TEST_CASE("threshold zero is the boolean semiring") {
  for (Flavor f : {Flavor::min_plus, Flavor::max_plus}) {
    auto all = all_trop_matrices(f, 0);
    REQUIRE(all.size() == 16);
    for (const auto& a : all)
      for (const auto& b : all) REQUIRE(to_bool(a * b) == to_bool(a) * to_bool(b));
  }
}

TEST_CASE("generating sets for thresholds 1 to 3") {
  for (int t = 1; t <= 3; ++t) {
    const std::size_t total = static_cast<std::size_t>((t + 2) * (t + 2) * (t + 2) * (t + 2));
    auto mn = minplus_generators(t);
    auto mx = maxplus_generators(t);
    REQUIRE(mn.size() == static_cast<std::size_t>(t + 4));
    REQUIRE(mn.size() == minplus_generator_count(t));
    REQUIRE(mx.size() == static_cast<std::size_t>((t * t + 3 * t + 8) / 2));
    REQUIRE(mx.size() == maxplus_generator_count(t));
    REQUIRE(closure<TropMat>(std::span<const TropMat>(mn)).size() == total);
    REQUIRE(closure<TropMat>(std::span<const TropMat>(mx)).size() == total);
    REQUIRE(is_irredundant<TropMat>(std::span<const TropMat>(mn)).irredundant);
    REQUIRE(is_irredundant<TropMat>(std::span<const TropMat>(mx)).irredundant);
  }
  CHECK_THROWS(minplus_generators(0));
  CHECK_THROWS(maxplus_generator_count(0));
}

// Distinct generators of the max-plus set lie in distinct J-classes for small t.
TEST_CASE("max-plus generators are pairwise not J-related") {
  for (int t = 1; t <= 2; ++t) {
    auto g = maxplus_generators(t);
    auto m = closure<TropMat>(std::span<const TropMat>(g));
    auto j = greens_classes(m, std::span<const TropMat>(g), Green::J);
    std::set<std::uint32_t> cls;
    for (const auto& x : g) cls.insert(j.class_of[*m.find(x)]);
    CHECK(cls.size() == g.size());
  }
}

TEST_CASE("row bases against spans") {
  for (int t = 1; t <= 3; ++t) {
    auto rows = all_rows(t);
    for (const auto& r1 : rows)
      for (const auto& r2 : rows) {
        std::vector<TropRow> input{r1, r2};
        auto basis = maxplus_row_basis(input, t);
        REQUIRE(span(basis, t) == span(input, t));
        for (std::size_t i = 0; i < basis.size(); ++i) {
          std::vector<TropRow> rest;
          for (std::size_t k = 0; k < basis.size(); ++k)
            if (k != i) rest.push_back(basis[k]);
          REQUIRE_FALSE(span(rest, t).count(basis[i]));
        }
      }
  }
  CHECK(scalar_multiple_count({0, 1}, 2) == 4);  // (-inf -inf), (0 1), (1 2), (2 2)
  CHECK_THROWS(maxplus_row_basis(TropMat::identity(Flavor::min_plus, 1)));
}
